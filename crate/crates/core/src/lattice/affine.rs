use super::point::LatticePoint;
use super::polygon::{convex_hull, LatticePolygon};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// `p -> A p + b` with `A` an integer matrix of determinant ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap {
    matrix: [[i64; 2]; 2],
    translation: LatticePoint,
}

impl AffineMap {
    pub fn new(matrix: [[i64; 2]; 2], translation: LatticePoint) -> Result<Self> {
        let det = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(AffineMap { matrix, translation })
    }

    pub fn identity() -> Self {
        AffineMap { matrix: [[1, 0], [0, 1]], translation: LatticePoint::default() }
    }

    pub fn shear(l: i64) -> Self {
        AffineMap { matrix: [[1, l], [0, 1]], translation: LatticePoint::default() }
    }

    pub fn translation(v: LatticePoint) -> Self {
        AffineMap { matrix: [[1, 0], [0, 1]], translation: v }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.matrix
    }

    pub fn offset(&self) -> LatticePoint {
        self.translation
    }

    pub fn det(&self) -> i64 {
        self.matrix[0][0] * self.matrix[1][1] - self.matrix[0][1] * self.matrix[1][0]
    }

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        let m = &self.matrix;
        LatticePoint::new(
            m[0][0] * p.x + m[0][1] * p.y + self.translation.x,
            m[1][0] * p.x + m[1][1] * p.y + self.translation.y,
        )
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let a = &self.matrix;
        let b = &other.matrix;
        let matrix = [
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ];
        let t = self.apply(other.translation);
        AffineMap { matrix, translation: t }
    }

    pub fn inverse(&self) -> AffineMap {
        let m = &self.matrix;
        let det = self.det();
        let matrix = [[m[1][1] * det, -m[0][1] * det], [-m[1][0] * det, m[0][0] * det]];
        let lin = AffineMap { matrix, translation: LatticePoint::default() };
        let t = lin.apply(self.translation);
        AffineMap { matrix, translation: -t }
    }
}

pub fn apply_map(p: &LatticePolygon, m: &AffineMap) -> LatticePolygon {
    let pts: Vec<LatticePoint> = p.vertices().iter().map(|&v| m.apply(v)).collect();
    convex_hull(&pts).expect("non-empty")
}

/// Image under `(x, y) -> (x + l y, y)`.
pub fn shear(p: &LatticePolygon, l: i64) -> LatticePolygon {
    apply_map(p, &AffineMap::shear(l))
}

/// A unimodular matrix sending the primitive vector `e` to `(1, 0)`.
pub fn align_to_x_axis(e: LatticePoint) -> [[i64; 2]; 2] {
    // Bezout: e.x * q - e.y * p = 1, so [[e.x, p], [e.y, q]] has determinant 1.
    let (g, s, t) = ext_gcd(e.x, -e.y);
    debug_assert_eq!(g.abs(), 1);
    let (q, p) = (s * g, t * g);
    [[q, -p], [-e.y, e.x]]
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::point::pt;

    #[test]
    fn rejects_non_unimodular() {
        assert_eq!(AffineMap::new([[2, 0], [0, 1]], pt(0, 0)), Err(Error::NotUnimodular(2)));
        assert!(AffineMap::new([[2, 1], [1, 1]], pt(3, 4)).is_ok());
    }

    #[test]
    fn inverse_round_trip() {
        let m = AffineMap::new([[2, 1], [-3, -1]], pt(5, -7)).unwrap();
        for p in [pt(0, 0), pt(3, -2), pt(-4, 9)] {
            assert_eq!(m.inverse().apply(m.apply(p)), p);
            assert_eq!(m.compose(&m.inverse()).apply(p), p);
        }
    }

    #[test]
    fn alignment_sends_direction_to_x_axis() {
        for e in [pt(1, 0), pt(0, 1), pt(-1, 0), pt(3, 5), pt(-2, 7), pt(4, -3), pt(0, -1)] {
            let m = AffineMap::new(align_to_x_axis(e), pt(0, 0)).unwrap();
            assert_eq!(m.apply(e), pt(1, 0), "{e}");
            assert_eq!(m.det(), 1);
        }
    }

    #[test]
    fn shear_by_zero_is_identity() {
        let rect = LatticePolygon::from_coords(&[(0, 0), (5, 0), (5, 3), (0, 3)]).unwrap();
        assert_eq!(shear(&rect, 0), rect);
    }
}
