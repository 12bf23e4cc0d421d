use super::truncation::points_in_row;
use crate::lattice::{pt, shear, LatticePolygon};

/// Leftmost `x0` such that every column `x0..=x0+d` contains the interior points
/// `(x, 1), ..., (x, d-1)`. Expects a polygon in the strip `R x [0, d]`.
pub fn find_crystal(p: &LatticePolygon, d: i64) -> Option<i64> {
    if p.dimension() < 2 || d < 2 {
        return None;
    }
    let (x0, x1, _, _) = p.bounding_box();
    let full = |x: i64| (1..d).all(|y| p.strictly_contains(pt(x, y)));
    let mut run = 0;
    for x in x0..=x1 {
        if full(x) {
            run += 1;
            if run == d + 1 {
                return Some(x - d);
            }
        } else {
            run = 0;
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalShear {
    pub polygon: LatticePolygon,
    pub shear: i64,
    pub start: i64,
}

/// Searches shears `(x, y) -> (x + l y, y)` in the order `0, -1, 1, -2, 2, ...` up to the
/// horizontal extent for one that produces a crystal. Requires rows `1` and `d - 1`
/// to carry at least `2d - 2` interior points each.
pub fn shear_to_crystal(p: &LatticePolygon, d: i64) -> Option<CrystalShear> {
    if p.dimension() < 2 || d < 2 {
        return None;
    }
    let need = (2 * d - 2) as usize;
    if points_in_row(p, 1).count() < need || points_in_row(p, d - 1).count() < need {
        return None;
    }
    let (x0, x1, _, _) = p.bounding_box();
    let extent = (x1 - x0).max(1);
    for k in 0..=extent {
        for l in if k == 0 { vec![0] } else { vec![-k, k] } {
            let q = shear(p, l);
            if let Some(start) = find_crystal(&q, d) {
                return Some(CrystalShear { polygon: q, shear: l, start });
            }
        }
    }
    None
}

/// Up to `count` inequivalent maximal polygons of lattice width `d` and genus at least
/// `min_genus`, each a `d`-high rectangle with isosceles corner cuts of size below `d`.
/// Widths are tried in increasing order up to `min_genus + 4 d`.
pub fn width_family(d: i64, min_genus: usize, count: usize) -> Vec<LatticePolygon> {
    use super::truncation::{truncated_rectangle, Corner};
    use crate::lattice::{canonical_form, lattice_width};
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let sizes: Vec<i64> = (0..d).collect();
    let w0 = (min_genus as i64 / (d - 1).max(1)).max(d);
    for w in w0..=min_genus as i64 + 4 * d {
        for &nw in &sizes {
            for &ne in &sizes {
                for &se in &sizes {
                    for &sw in &sizes {
                        let cuts = [(Corner::NW, nw), (Corner::NE, ne), (Corner::SE, se), (Corner::SW, sw)];
                        let p = truncated_rectangle(w, d, &cuts);
                        if out.len() == count {
                            return out;
                        }
                        if p.genus() < min_genus
                            || lattice_width(&p).width != d
                            || p.is_hyperelliptic()
                            || !p.is_maximal()
                        {
                            continue;
                        }
                        if seen.insert(canonical_form(&p)) {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}
