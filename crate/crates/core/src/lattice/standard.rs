//! Named polygons that recur in tests and constructions.

use super::polygon::LatticePolygon;

/// `conv{(0,0), (d,0), (0,d)}`.
pub fn simplex(d: i64) -> LatticePolygon {
    LatticePolygon::from_coords(&[(0, 0), (d, 0), (0, d)]).unwrap()
}

/// `conv{(-d,-d), (d,0), (0,d)}`.
pub fn upsilon(d: i64) -> LatticePolygon {
    LatticePolygon::from_coords(&[(-d, -d), (d, 0), (0, d)]).unwrap()
}

pub fn two_upsilon() -> LatticePolygon {
    upsilon(2)
}

/// `[0, w] x [0, h]`.
pub fn rectangle(w: i64, h: i64) -> LatticePolygon {
    LatticePolygon::from_coords(&[(0, 0), (w, 0), (w, h), (0, h)]).unwrap()
}
