//! Finite multigraphs, chip-firing and scrambles.

mod certificate;
mod divisor;
mod flow;
mod scramble;

pub use certificate::{
    crystal_scramble, gonality_certificate, gonality_certificate_with, CertificateOptions, Conclusion, GonalityCertificate,
    LowerWitness,
};
pub use divisor::{gonality, gonality_with_cap, has_positive_rank, reduce_divisor, Divisor, GonalityCap};
pub use flow::min_edge_cut;
pub use scramble::{egg_cut_number, hitting_number, scramble_order, search_scramble, Scramble};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt::Write as _;

/// Undirected multigraph on vertices `0..n`; loops and parallel edges are allowed.
/// JSON form: `{"n": k, "edges": [[u, v], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for MultiGraph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Self> {
        MultiGraph::new(j.n, j.edges.into_iter().map(|[u, v]| (u, v)).collect())
    }
}

impl From<MultiGraph> for GraphJson {
    fn from(g: MultiGraph) -> Self {
        GraphJson { n: g.n, edges: g.edges.into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
        }
        Ok(MultiGraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// First Betti number `E - V + 1` (for connected graphs).
    pub fn betti(&self) -> i64 {
        self.edges.len() as i64 - self.n as i64 + 1
    }

    /// Degree with each loop counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Neighbor lists with multiplicity, loops omitted.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        adj
    }

    /// Symmetric edge-multiplicity matrix, loops omitted.
    pub fn multiplicities(&self) -> Vec<Vec<u32>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for &(u, v) in &self.edges {
            if u != v {
                m[u][v] += 1;
                m[v][u] += 1;
            }
        }
        m
    }

    /// Whether the vertices in `mask` induce a connected subgraph (false when empty).
    pub fn induces_connected(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else { return false };
        let mut inside = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return false;
            }
            inside[v] = true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        let distinct = inside.iter().filter(|&&b| b).count();
        count == distinct
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.induces_connected(&(0..self.n).collect::<Vec<_>>())
    }

    /// The graph with all loops removed; chip-firing does not see loops.
    pub fn without_loops(&self) -> MultiGraph {
        MultiGraph { n: self.n, edges: self.edges.iter().copied().filter(|(u, v)| u != v).collect() }
    }

    /// Replaces every loop at `v` by a new vertex joined to `v` by two parallel edges.
    pub fn loopless_model(&self) -> MultiGraph {
        let mut n = self.n;
        let mut edges = Vec::with_capacity(self.edges.len() + 4);
        for &(u, v) in &self.edges {
            if u == v {
                edges.push((u, n));
                edges.push((u, n));
                n += 1;
            } else {
                edges.push((u, v));
            }
        }
        MultiGraph { n, edges }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.n {
            let _ = writeln!(s, "  {v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }

    pub fn path(n: usize) -> MultiGraph {
        MultiGraph { n, edges: (1..n).map(|i| (i - 1, i)).collect() }
    }

    pub fn cycle(n: usize) -> MultiGraph {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        MultiGraph { n, edges }
    }

    /// The 3-cube with vertices `0..8` labelled by bit strings.
    pub fn cube() -> MultiGraph {
        let mut edges = Vec::new();
        for v in 0..8usize {
            for bit in [1, 2, 4] {
                if v & bit == 0 {
                    edges.push((v, v | bit));
                }
            }
        }
        MultiGraph { n: 8, edges }
    }
}

#[cfg(test)]
mod tests;
