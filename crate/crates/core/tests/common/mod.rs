#![allow(dead_code)]

use rand::Rng;
use tropgon_core::graph::MultiGraph;
use tropgon_core::lattice::{apply_map, canonical_form, lattice_width};
use tropgon_core::moduli::{strip_normalize, truncated_rectangle, Corner};
use tropgon_core::{AffineMap, LatticePoint, LatticePolygon};

/// A random unimodular map with matrix entries in [-5, 5] and a small translation.
pub fn random_unimodular(rng: &mut impl Rng) -> AffineMap {
    loop {
        let m: [[i64; 2]; 2] = [[rng.gen_range(-5..=5), rng.gen_range(-5..=5)], [rng.gen_range(-5..=5), rng.gen_range(-5..=5)]];
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det.abs() == 1 {
            let t = LatticePoint::new(rng.gen_range(-9..=9), rng.gen_range(-9..=9));
            return AffineMap::new(m, t).unwrap();
        }
    }
}

/// Maximal polygons of lattice width 3 and genus at least 27, built as 3-high rectangles
/// with corner cuts of size at most 2, one per equivalence class.
pub fn width_three_family(count: usize) -> Vec<LatticePolygon> {
    let mut out: Vec<LatticePolygon> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    'outer: for w in 15..40 {
        for nw in 0..=2 {
            for ne in 0..=2 {
                for se in 0..=2 {
                    for sw in 0..=2 {
                        let cuts = [(Corner::NW, nw), (Corner::NE, ne), (Corner::SE, se), (Corner::SW, sw)];
                        let p = truncated_rectangle(w, 3, &cuts);
                        if p.genus() < 27 || lattice_width(&p).width != 3 || p.is_hyperelliptic() || !p.is_maximal() {
                            continue;
                        }
                        if seen.insert(canonical_form(&p)) {
                            out.push(p);
                            if out.len() == count {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Moves `p` by a random unimodular map and brings it back to the strip `R x [0, d]`.
pub fn scrambled_strip(p: &LatticePolygon, rng: &mut impl Rng) -> LatticePolygon {
    let moved = apply_map(p, &random_unimodular(rng));
    strip_normalize(&moved).unwrap().polygon
}

/// Simple graph isomorphism by backtracking over vertex orders.
pub fn isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let ma = a.multiplicities();
    let mb = b.multiplicities();
    fn rec(k: usize, perm: &mut Vec<usize>, ma: &[Vec<u32>], mb: &[Vec<u32>]) -> bool {
        if k == perm.len() {
            return true;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if (0..=k).all(|j| ma[perm[j]][perm[k]] == mb[j][k]) && rec(k + 1, perm, ma, mb) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    rec(0, &mut (0..n).collect(), &ma, &mb)
}
