use super::Triangulation;
use crate::graph::MultiGraph;

/// One vertex per triangle and one edge per interior edge of the triangulation.
pub fn dual_graph(t: &Triangulation) -> MultiGraph {
    let edges = t
        .subdivision()
        .edge_map()
        .into_values()
        .filter(|users| users.len() == 2)
        .map(|users| (users[0], users[1]))
        .collect();
    MultiGraph::new(t.len(), edges).expect("cell indices are in range")
}

/// Deletes leaves until none remain, then smooths over 2-valent vertices. Each edge of
/// the result carries the number of original edges it replaces.
pub fn skeleton_with_lengths(g: &MultiGraph) -> (MultiGraph, Vec<u32>) {
    let n = g.vertex_count();
    let mut edges: Vec<Option<(usize, usize, u32)>> = g.edges().iter().map(|&(u, v)| Some((u, v, 1))).collect();
    let mut alive = vec![true; n];
    let incident = |edges: &[Option<(usize, usize, u32)>], v: usize| -> Vec<usize> {
        let mut out = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            if let Some((a, b, _)) = *e {
                if a == v {
                    out.push(i);
                }
                if b == v {
                    out.push(i);
                }
            }
        }
        out
    };
    loop {
        let live = alive.iter().filter(|&&a| a).count();
        let leaf = (0..n).find(|&v| alive[v] && live > 1 && incident(&edges, v).len() <= 1);
        match leaf {
            Some(v) => {
                for i in incident(&edges, v) {
                    edges[i] = None;
                }
                alive[v] = false;
            }
            None => break,
        }
    }
    loop {
        let smooth = (0..n).find(|&v| {
            let inc = incident(&edges, v);
            alive[v] && inc.len() == 2 && inc[0] != inc[1]
        });
        let Some(v) = smooth else { break };
        let inc = incident(&edges, v);
        let other = |i: usize| {
            let (a, b, _) = edges[i].unwrap();
            if a == v {
                b
            } else {
                a
            }
        };
        let (a, b) = (other(inc[0]), other(inc[1]));
        let len = edges[inc[0]].unwrap().2 + edges[inc[1]].unwrap().2;
        edges[inc[0]] = Some((a.min(b), a.max(b), len));
        edges[inc[1]] = None;
        alive[v] = false;
    }
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if alive[v] {
            label[v] = next;
            next += 1;
        }
    }
    let kept: Vec<(usize, usize, u32)> = edges.into_iter().flatten().collect();
    let graph = MultiGraph::new(next, kept.iter().map(|&(a, b, _)| (label[a], label[b])).collect())
        .expect("labels are in range");
    (graph, kept.iter().map(|e| e.2).collect())
}

pub fn skeleton(g: &MultiGraph) -> MultiGraph {
    skeleton_with_lengths(g).0
}
