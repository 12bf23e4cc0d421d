use super::MultiGraph;
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};

/// Integer chip counts on vertices; absent vertices carry zero chips.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divisor {
    pub chips: BTreeMap<usize, i64>,
}

impl Divisor {
    pub fn from_dense(chips: &[i64]) -> Self {
        Divisor {
            chips: chips.iter().enumerate().filter(|(_, &c)| c != 0).map(|(v, &c)| (v, c)).collect(),
        }
    }

    pub fn from_vertices(vs: &[usize]) -> Self {
        let mut chips = BTreeMap::new();
        for &v in vs {
            *chips.entry(v).or_insert(0) += 1;
        }
        Divisor { chips }
    }

    pub fn degree(&self) -> i64 {
        self.chips.values().sum()
    }

    pub fn at(&self, v: usize) -> i64 {
        self.chips.get(&v).copied().unwrap_or(0)
    }

    pub fn to_dense(&self, n: usize) -> Result<Vec<i64>> {
        let mut out = vec![0; n];
        for (&v, &c) in &self.chips {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            out[v] = c;
        }
        Ok(out)
    }
}

fn bfs_layers(adj: &[Vec<usize>], q: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[q] = 0;
    let mut queue = VecDeque::from([q]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// The unique `q`-reduced divisor equivalent to `d` under chip-firing.
pub fn reduce_divisor(g: &MultiGraph, d: &Divisor, q: usize) -> Result<Divisor> {
    let n = g.vertex_count();
    if q >= n {
        return Err(Error::VertexOutOfRange { vertex: q, n });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut chips = d.to_dense(n)?;
    reduce_dense(&g.adjacency(), &mut chips, q);
    Ok(Divisor::from_dense(&chips))
}

pub(crate) fn reduce_dense(adj: &[Vec<usize>], chips: &mut [i64], q: usize) {
    let n = adj.len();
    let dist = bfs_layers(adj, q);
    let depth = dist.iter().copied().max().unwrap_or(0);
    // Clear debt layer by layer, farthest first: firing the ball of radius k-1
    // only moves chips from layer k-1 into layer k.
    for k in (1..=depth).rev() {
        let mut times = 0i64;
        for v in 0..n {
            if dist[v] == k && chips[v] < 0 {
                let inward = adj[v].iter().filter(|&&w| dist[w] < k).count() as i64;
                times = times.max((-chips[v] + inward - 1) / inward);
            }
        }
        if times > 0 {
            for u in 0..n {
                if dist[u] < k {
                    for &w in &adj[u] {
                        if dist[w] >= k {
                            chips[u] -= times;
                            chips[w] += times;
                        }
                    }
                }
            }
        }
    }
    // Dhar's burning algorithm, firing the unburnt set as many times as it stays legal.
    loop {
        let mut burnt = vec![false; n];
        burnt[q] = true;
        let mut into_burnt = vec![0i64; n];
        let mut queue = VecDeque::from([q]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !burnt[w] {
                    into_burnt[w] += 1;
                    if into_burnt[w] > chips[w] {
                        burnt[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        if burnt.iter().all(|&b| b) {
            return;
        }
        let times = (0..n)
            .filter(|&v| !burnt[v] && into_burnt[v] > 0)
            .map(|v| chips[v] / into_burnt[v])
            .min()
            .expect("connected graph has a boundary edge");
        for v in 0..n {
            if !burnt[v] {
                for &w in &adj[v] {
                    if burnt[w] {
                        chips[v] -= times;
                        chips[w] += times;
                    }
                }
            }
        }
    }
}

/// Whether `d - v` is equivalent to an effective divisor for every vertex `v`.
pub fn has_positive_rank(g: &MultiGraph, d: &Divisor) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let chips = d.to_dense(g.vertex_count())?;
    Ok(positive_rank_dense(&g.adjacency(), &chips))
}

fn positive_rank_dense(adj: &[Vec<usize>], chips: &[i64]) -> bool {
    if chips.iter().sum::<i64>() < 1 {
        return false;
    }
    let mut work = chips.to_vec();
    (0..adj.len()).all(|q| {
        work.copy_from_slice(chips);
        reduce_dense(adj, &mut work, q);
        work[q] >= 1
    })
}

/// Limits for exhaustive gonality computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GonalityCap {
    pub max_vertices: usize,
    pub max_degree: usize,
}

impl Default for GonalityCap {
    fn default() -> Self {
        GonalityCap { max_vertices: 14, max_degree: 6 }
    }
}

pub fn gonality(g: &MultiGraph) -> Result<usize> {
    gonality_with_cap(g, GonalityCap::default())
}

fn next_multiset(v: &mut [usize], n: usize) -> bool {
    // Non-decreasing sequences over 0..n in lexicographic order.
    for i in (0..v.len()).rev() {
        if v[i] + 1 < n {
            let x = v[i] + 1;
            for slot in &mut v[i..] {
                *slot = x;
            }
            return true;
        }
    }
    false
}

/// Least degree of a positive-rank effective divisor, by exhaustion.
///
/// Any positive-rank divisor is equivalent to an effective one with a chip on
/// vertex 0, so only those are tried; the search is split by the second chip.
pub fn gonality_with_cap(g: &MultiGraph, cap: GonalityCap) -> Result<usize> {
    let g = g.without_loops();
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n > cap.max_vertices {
        return Err(Error::CapExceeded(format!("{n} vertices exceeds the cap of {}", cap.max_vertices)));
    }
    let adj = g.adjacency();
    for k in 1..=cap.max_degree {
        let found = if k == 1 {
            let mut chips = vec![0; n];
            chips[0] = 1;
            positive_rank_dense(&adj, &chips)
        } else {
            (0..n).into_par_iter().any(|second| {
                let mut rest = vec![second; k - 2];
                loop {
                    let mut chips = vec![0i64; n];
                    chips[0] += 1;
                    chips[second] += 1;
                    for &v in &rest {
                        chips[v] += 1;
                    }
                    if positive_rank_dense(&adj, &chips) {
                        return true;
                    }
                    if !next_multiset(&mut rest, n) {
                        return false;
                    }
                }
            })
        };
        if found {
            return Ok(k);
        }
    }
    Err(Error::CapExceeded(format!("gonality exceeds the degree cap of {}", cap.max_degree)))
}
