use super::MultiGraph;
use std::collections::VecDeque;

/// Fewest edges whose removal separates every vertex of `a` from every vertex of `b`,
/// or `None` when the sets intersect. Unit capacities, counted with multiplicity.
pub fn min_edge_cut(g: &MultiGraph, a: &[usize], b: &[usize]) -> Option<u32> {
    if a.iter().any(|v| b.contains(v)) {
        return None;
    }
    let n = g.vertex_count();
    let (s, t) = (n, n + 1);
    let big = g.edge_count() as u32 + 1;
    let mut cap = vec![vec![0u32; n + 2]; n + 2];
    for (u, row) in g.multiplicities().into_iter().enumerate() {
        for (v, m) in row.into_iter().enumerate() {
            cap[u][v] += m;
        }
    }
    for &v in a {
        cap[s][v] = big;
    }
    for &v in b {
        cap[v][t] = big;
    }
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n + 2];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for v in 0..n + 2 {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[t] == usize::MAX {
            return Some(flow);
        }
        let mut v = t;
        let mut bottleneck = u32::MAX;
        while v != s {
            bottleneck = bottleneck.min(cap[prev[v]][v]);
            v = prev[v];
        }
        let mut v = t;
        while v != s {
            let u = prev[v];
            cap[u][v] -= bottleneck;
            cap[v][u] += bottleneck;
            v = u;
        }
        flow += bottleneck;
    }
}
