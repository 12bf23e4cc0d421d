use super::zigzag::{doubly_connected, zigzag_steps};
use super::{complete_to_unimodular, refine, regular_subdivision, HeightFunction, PointSet, Triangulation};
use crate::error::{Error, Result};
use crate::lattice::{lattice_width, LatticePoint, LatticePolygon};
use crate::rational::Rational;
use std::sync::Arc;

/// One on the boundary of `p`, zero at interior points.
pub fn h0(p: &LatticePolygon, ps: &PointSet) -> HeightFunction {
    HeightFunction::from_fn(ps, |v| Rational::integer(if p.strictly_contains(v) { 0 } else { 1 }))
}

/// One at the vertices of `p`, zero elsewhere.
pub fn h0_prime(p: &LatticePolygon, ps: &PointSet) -> HeightFunction {
    HeightFunction::from_fn(ps, |v| Rational::integer(if p.vertices().contains(&v) { 1 } else { 0 }))
}

/// The separable quadratic `(x - x_left)(x - x_right) + (y - 1)(y - (d - 1))`. Its lower
/// hull over a block of grid points is the unit square grid.
pub fn omega(x_left: i64, x_right: i64, d: i64, v: LatticePoint) -> i64 {
    (v.x - x_left) * (v.x - x_right) + (v.y - 1) * (v.y - (d - 1))
}

/// An edge `tau` of the interior polygon and the lattice points of the boundary of the
/// polygon on the line one step outward, both listed in the counterclockwise direction
/// of the edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCell {
    pub tau: Vec<LatticePoint>,
    pub relaxed: Vec<LatticePoint>,
}

impl BoundaryCell {
    /// The number of points of `tau` that a beehive joins to two or more relaxed points.
    pub fn target(&self) -> usize {
        self.tau.len().min(self.relaxed.len().saturating_sub(1))
    }

    /// For a maximal non-hyperelliptic polygon, one cell per edge of the interior polygon.
    pub fn of(p: &LatticePolygon) -> Result<Vec<BoundaryCell>> {
        let q = p.interior_polygon().filter(|q| q.dimension() == 2).ok_or(Error::Hyperelliptic)?;
        let all = p.lattice_points();
        let cells = q
            .edges()
            .zip(q.half_planes())
            .map(|((a, b), hp)| {
                let e = b - a;
                let g = crate::lattice::gcd(e.x, e.y);
                let step = LatticePoint::new(e.x / g, e.y / g);
                let tau = (0..=g).map(|t| a + LatticePoint::new(step.x * t, step.y * t)).collect();
                let mut relaxed: Vec<LatticePoint> =
                    all.iter().copied().filter(|&v| hp.value(v) == hp.offset + 1).collect();
                relaxed.sort_by_key(|v| v.dot(step));
                BoundaryCell { tau, relaxed }
            })
            .collect();
        Ok(cells)
    }
}

/// Slopes for the far-side segments strictly inside a boundary cell, chosen so that the
/// lower hull over the cell is the zigzag fixed by `zigzag_steps`.
fn relaxed_heights(cell: &BoundaryCell, near: &[i64]) -> Vec<Rational> {
    let n = cell.tau.len();
    let m = cell.relaxed.len();
    let sigma: Vec<i64> = near.windows(2).map(|w| w[1] - w[0]).collect();
    let steps = zigzag_steps(n, m);
    let mut owner = Vec::new();
    for (k, &s) in steps.iter().enumerate() {
        owner.extend(std::iter::repeat_n(k, s));
    }
    // Segments 0 and m - 2 are cut off as corner triangles by the vertex heights.
    let inner: Vec<usize> = (1..m.saturating_sub(2)).collect();
    let mut slopes = Vec::new();
    for &j in &inner {
        let k = owner[j];
        let same: Vec<usize> = inner.iter().copied().filter(|&i| owner[i] == k).collect();
        let r = same.iter().position(|&i| i == j).unwrap() as i64;
        let cnt = same.len() as i64;
        let slope = if n == 1 {
            Rational::integer(r)
        } else if k == 0 {
            Rational::integer(sigma[0] - (cnt - r))
        } else if k == n - 1 {
            Rational::integer(sigma[n - 2] + r + 1)
        } else {
            let lo = sigma[k - 1];
            let hi = sigma[k];
            Rational::integer(lo) + Rational::new(r + 1, cnt + 1) * Rational::integer(hi - lo)
        };
        slopes.push(slope);
    }
    let mut heights = vec![Rational::zero()];
    for s in slopes {
        let last = *heights.last().unwrap();
        heights.push(last + s);
    }
    heights
}

/// Beehive triangulation of a maximal non-hyperelliptic polygon. The boundary cells and
/// the interior polygon come from the height that is one on the boundary; the vertex
/// height cuts off corner triangles; the interior polygon is lifted by `omega` and
/// every boundary cell by heights inducing its zigzag. Remaining cells are completed
/// deterministically.
pub fn build_beehive(p: &LatticePolygon) -> Result<Triangulation> {
    if p.is_hyperelliptic() {
        return Err(Error::Hyperelliptic);
    }
    if !p.is_maximal() {
        return Err(Error::NotMaximal);
    }
    let ps = Arc::new(PointSet::of_polygon(p));
    let s = regular_subdivision(ps.clone(), &h0(p, &ps))?;
    let s = refine(&s, &h0_prime(p, &ps))?;

    let q = p.interior_polygon().unwrap();
    let (xl, xr, _, _) = q.bounding_box();
    let d = lattice_width(p).width;
    let mut h = vec![Rational::zero(); ps.len()];
    for v in q.lattice_points() {
        h[ps.index_of(v).unwrap()] = Rational::integer(omega(xl, xr, d, v));
    }
    for cell in BoundaryCell::of(p)? {
        if cell.relaxed.len() < 3 {
            continue;
        }
        let near: Vec<i64> = cell.tau.iter().map(|&v| omega(xl, xr, d, v)).collect();
        let far = relaxed_heights(&cell, &near);
        for (v, hv) in cell.relaxed[1..cell.relaxed.len() - 1].iter().zip(far) {
            h[ps.index_of(*v).unwrap()] = hv;
        }
    }
    let tilde = refine(&s, &HeightFunction::new(&ps, h)?)?;
    complete_to_unimodular(&tilde)
}

/// Checks the beehive conditions: every primitive boundary segment of the interior
/// polygon is an edge, every interior vertex is joined to the polygon vertex beyond it,
/// and every boundary cell has the maximal number of near points joined to two far ones.
pub fn is_beehive(t: &Triangulation, p: &LatticePolygon) -> bool {
    let Ok(cells) = BoundaryCell::of(p) else {
        return false;
    };
    if t.points().points() != p.lattice_points().as_slice() {
        return false;
    }
    cells.iter().all(|c| {
        c.tau.windows(2).all(|w| t.has_edge(w[0], w[1]))
            && t.has_edge(*c.tau.last().unwrap(), *c.relaxed.last().unwrap())
            && doubly_connected(t, &c.tau, &c.relaxed) == c.target()
    })
}
