use super::{min_edge_cut, MultiGraph};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A family of connected vertex sets ("eggs"). JSON form: `{"eggs": [[v, ...], ...]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scramble {
    pub eggs: Vec<Vec<usize>>,
}

impl Scramble {
    pub fn new(eggs: Vec<Vec<usize>>) -> Self {
        Scramble { eggs }
    }

    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        for (i, egg) in self.eggs.iter().enumerate() {
            if !g.induces_connected(egg) {
                return Err(Error::BadEgg(i));
            }
        }
        Ok(())
    }
}

/// Size of a smallest vertex set meeting every egg.
pub fn hitting_number(n: usize, eggs: &[Vec<usize>]) -> usize {
    let masks: Vec<Vec<bool>> = eggs
        .iter()
        .map(|e| {
            let mut m = vec![false; n];
            for &v in e {
                m[v] = true;
            }
            m
        })
        .collect();
    let mut best = eggs.len().min(n);
    let mut chosen = vec![false; n];
    branch(&masks, &mut chosen, 0, &mut best);
    best
}

fn branch(masks: &[Vec<bool>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let unhit = masks.iter().find(|m| !m.iter().zip(chosen.iter()).any(|(&a, &b)| a && b));
    let Some(egg) = unhit else {
        *best = size;
        return;
    };
    let egg = egg.clone();
    for v in 0..egg.len() {
        if egg[v] {
            chosen[v] = true;
            branch(masks, chosen, size + 1, best);
            chosen[v] = false;
        }
    }
}

/// Least egg-cut size over pairs of disjoint eggs; `None` stands for +∞.
pub fn egg_cut_number(g: &MultiGraph, eggs: &[Vec<usize>]) -> Option<u32> {
    let mut best: Option<u32> = None;
    for (i, a) in eggs.iter().enumerate() {
        for b in &eggs[i + 1..] {
            if let Some(c) = min_edge_cut(g, a, b) {
                best = Some(best.map_or(c, |x| x.min(c)));
            }
        }
    }
    best
}

/// `min(hitting number, egg-cut number)`.
pub fn scramble_order(g: &MultiGraph, s: &Scramble) -> Result<usize> {
    s.validate(g)?;
    if s.eggs.is_empty() {
        return Ok(0);
    }
    let h = hitting_number(g.vertex_count(), &s.eggs);
    Ok(match egg_cut_number(g, &s.eggs) {
        Some(e) => h.min(e as usize),
        None => h,
    })
}

fn connected_subsets(g: &MultiGraph, max_size: usize) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| vec![v]).collect();
    for size in 1..=max_size {
        let mut next = Vec::new();
        for set in frontier {
            if !seen.insert(set.clone()) {
                continue;
            }
            out.push(set.clone());
            if size == max_size {
                continue;
            }
            for &v in &set {
                for &w in &adj[v] {
                    if !set.contains(&w) {
                        let mut bigger = set.clone();
                        bigger.push(w);
                        bigger.sort_unstable();
                        next.push(bigger);
                    }
                }
            }
        }
        frontier = next;
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Work budget for the clique phase of [`search_scramble`].
const CLIQUE_BUDGET: usize = 2_000_000;
const SEARCH_VERTEX_CAP: usize = 40;

/// Exhaustively looks for a scramble of order at least `target` whose eggs are
/// connected sets of at most `max_egg_size` vertices.
///
/// Eggs are compatible when they meet or are separated by at least `target` edges,
/// so valid scrambles are cliques of the compatibility graph; since adding eggs never
/// lowers the hitting number, only maximal cliques need checking.
pub fn search_scramble(g: &MultiGraph, target: usize, max_egg_size: usize) -> Result<Option<Scramble>> {
    let n = g.vertex_count();
    if n > SEARCH_VERTEX_CAP {
        return Err(Error::CapExceeded(format!("{n} vertices exceeds the scramble search cap")));
    }
    if target == 0 {
        return Ok(Some(Scramble::default()));
    }
    let eggs = connected_subsets(g, max_egg_size.max(1));
    let k = eggs.len();
    let mut compatible = vec![vec![false; k]; k];
    let mut disjoint_ok = vec![vec![false; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let ok = match min_edge_cut(g, &eggs[i], &eggs[j]) {
                None => (true, false),
                Some(c) => {
                    let far = c as usize >= target;
                    (far, far)
                }
            };
            compatible[i][j] = ok.0;
            compatible[j][i] = ok.0;
            disjoint_ok[i][j] = ok.1;
            disjoint_ok[j][i] = ok.1;
        }
    }
    // Phase 1: `target` pairwise disjoint, well-separated eggs.
    let mut pick = Vec::new();
    if disjoint_clique(&disjoint_ok, target, 0, &mut pick) {
        return Ok(Some(Scramble::new(pick.iter().map(|&i| eggs[i].clone()).collect())));
    }
    // Phase 2: maximal cliques of the compatibility graph.
    let mut budget = CLIQUE_BUDGET;
    let mut found = None;
    let all: Vec<usize> = (0..k).collect();
    bron_kerbosch(&compatible, &mut Vec::new(), all, Vec::new(), &mut budget, &mut |clique| {
        let chosen: Vec<Vec<usize>> = clique.iter().map(|&i| eggs[i].clone()).collect();
        if hitting_number(n, &chosen) >= target {
            found = Some(Scramble::new(chosen));
            true
        } else {
            false
        }
    });
    if found.is_none() && budget == 0 {
        return Err(Error::CapExceeded("scramble search budget exhausted".into()));
    }
    Ok(found)
}

fn disjoint_clique(ok: &[Vec<bool>], target: usize, start: usize, pick: &mut Vec<usize>) -> bool {
    if pick.len() == target {
        return true;
    }
    for i in start..ok.len() {
        if pick.iter().all(|&j| ok[i][j]) {
            pick.push(i);
            if disjoint_clique(ok, target, i + 1, pick) {
                return true;
            }
            pick.pop();
        }
    }
    false
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    budget: &mut usize,
    report: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    if p.is_empty() && x.is_empty() {
        return report(r);
    }
    let pivot = p.iter().chain(x.iter()).copied().max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count());
    let pivot = pivot.expect("p or x is non-empty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        r.push(v);
        let np = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let nx = x.iter().copied().filter(|&u| adj[v][u]).collect();
        if bron_kerbosch(adj, r, np, nx, budget, report) {
            return true;
        }
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
    false
}
