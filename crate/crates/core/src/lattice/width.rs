use super::point::{gcd, LatticePoint};
use super::polygon::LatticePolygon;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeWidth {
    pub width: i64,
    /// Primitive linear functional achieving the width, normalized so the first
    /// nonzero coordinate is positive.
    pub direction: LatticePoint,
}

/// Spread of `a x + b y` over the vertices.
pub fn width_in_direction(p: &LatticePolygon, dir: LatticePoint) -> i64 {
    let vals = p.vertices().iter().map(|&v| dir.dot(v));
    vals.clone().max().unwrap() - vals.min().unwrap()
}

fn normalize(mut d: LatticePoint) -> LatticePoint {
    let g = gcd(d.x, d.y);
    d = LatticePoint::new(d.x / g, d.y / g);
    if d.x < 0 || (d.x == 0 && d.y < 0) {
        -d
    } else {
        d
    }
}

/// Minimal width over primitive directions `(a, b)` with `0 <= a <= bound`, `|b| <= bound`;
/// ties go to the lexicographically least direction.
pub fn lattice_width_with_bound(p: &LatticePolygon, bound: i64) -> LatticeWidth {
    let mut best: Option<LatticeWidth> = None;
    for a in 0..=bound {
        for b in -bound..=bound {
            if gcd(a, b) != 1 || (a == 0 && b != 1) {
                continue;
            }
            let dir = LatticePoint::new(a, b);
            let w = width_in_direction(p, dir);
            if best.is_none_or(|cur| w < cur.width) {
                best = Some(LatticeWidth { width: w, direction: dir });
            }
        }
    }
    best.expect("direction (0,1) is always a candidate")
}

pub fn lattice_width(p: &LatticePolygon) -> LatticeWidth {
    match p.dimension() {
        0 => LatticeWidth { width: 0, direction: LatticePoint::new(0, 1) },
        1 => {
            let e = p.vertices()[1] - p.vertices()[0];
            LatticeWidth { width: 0, direction: normalize(LatticePoint::new(e.y, -e.x)) }
        }
        _ => {
            let (x0, x1, y0, y1) = p.bounding_box();
            lattice_width_with_bound(p, (x1 - x0).max(y1 - y0))
        }
    }
}
