//! Regular subdivisions of lattice point sets, unimodular completion, beehive
//! triangulations and the dual graph of a triangulation.

mod beehive;
mod skeleton;
mod zigzag;

pub use beehive::{build_beehive, h0, h0_prime, is_beehive, omega, BoundaryCell};
pub use skeleton::{dual_graph, skeleton, skeleton_with_lengths};
pub use zigzag::{doubly_connected, zigzag, zigzag_steps};

use crate::error::{Error, Result};
use crate::lattice::{convex_hull, lattice_width, orient, LatticePoint, LatticePolygon};
use crate::rational::Rational;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// Distinct lattice points, sorted lexicographically, with an index lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<LatticePoint>,
    index: HashMap<LatticePoint, usize>,
}

impl PointSet {
    pub fn new(mut points: Vec<LatticePoint>) -> Result<Self> {
        points.sort();
        let before = points.len();
        points.dedup();
        if points.len() != before {
            return Err(Error::InvalidArgument("repeated point".into()));
        }
        let index = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        Ok(PointSet { points, index })
    }

    /// All lattice points of `p`.
    pub fn of_polygon(p: &LatticePolygon) -> Self {
        PointSet::new(p.lattice_points()).expect("lattice points are distinct")
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> LatticePoint {
        self.points[i]
    }

    pub fn index_of(&self, p: LatticePoint) -> Option<usize> {
        self.index.get(&p).copied()
    }

    pub fn hull(&self) -> Result<LatticePolygon> {
        convex_hull(&self.points)
    }

    /// Indices of the points inside the polygon spanned by `cell`.
    fn inside(&self, cell: &[usize]) -> Vec<usize> {
        let poly = LatticePolygon::new(&cell.iter().map(|&i| self.points[i]).collect::<Vec<_>>())
            .expect("cells are non-empty");
        let (x0, x1, y0, y1) = poly.bounding_box();
        let mut out: Vec<usize> = (x0..=x1)
            .flat_map(|x| (y0..=y1).map(move |y| LatticePoint::new(x, y)))
            .filter(|&p| poly.contains(p))
            .filter_map(|p| self.index_of(p))
            .collect();
        out.sort_unstable();
        out
    }
}

/// A height for every point of a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightFunction {
    values: Vec<Rational>,
}

impl HeightFunction {
    pub fn new(ps: &PointSet, values: Vec<Rational>) -> Result<Self> {
        if values.len() != ps.len() {
            return Err(Error::InvalidArgument(format!(
                "{} heights for {} points",
                values.len(),
                ps.len()
            )));
        }
        Ok(HeightFunction { values })
    }

    pub fn from_fn(ps: &PointSet, f: impl Fn(LatticePoint) -> Rational) -> Self {
        HeightFunction { values: ps.points().iter().map(|&p| f(p)).collect() }
    }

    pub fn constant(ps: &PointSet, c: Rational) -> Self {
        HeightFunction { values: vec![c; ps.len()] }
    }

    pub fn value(&self, i: usize) -> Rational {
        self.values[i]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Cells are counterclockwise vertex index lists starting at the lexicographically
/// least vertex, kept in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    points: Arc<PointSet>,
    cells: Vec<Vec<usize>>,
}

impl Subdivision {
    fn from_cells(points: Arc<PointSet>, mut cells: Vec<Vec<usize>>) -> Self {
        cells.sort();
        Subdivision { points, cells }
    }

    /// The single cell spanned by the whole point set.
    pub fn trivial(points: Arc<PointSet>) -> Result<Self> {
        let hull = points.hull()?;
        if hull.dimension() < 2 {
            return Err(Error::Degenerate);
        }
        let cell = hull.vertices().iter().map(|&v| points.index_of(v).unwrap()).collect();
        Ok(Subdivision::from_cells(points, vec![cell]))
    }

    pub fn points(&self) -> &Arc<PointSet> {
        &self.points
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_polygon(&self, i: usize) -> LatticePolygon {
        polygon_of(&self.points, &self.cells[i])
    }

    /// Sum of doubled cell areas.
    pub fn area_doubled(&self) -> i64 {
        (0..self.cells.len()).map(|i| self.cell_polygon(i).area_doubled()).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.cells.len() == 1
    }

    /// Undirected cell edges, each as a sorted index pair, with the cells using it.
    pub fn edge_map(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (c, cell) in self.cells.iter().enumerate() {
            for k in 0..cell.len() {
                let (a, b) = (cell[k], cell[(k + 1) % cell.len()]);
                map.entry((a.min(b), a.max(b))).or_default().push(c);
            }
        }
        map
    }
}

fn polygon_of(ps: &PointSet, cell: &[usize]) -> LatticePolygon {
    LatticePolygon::new(&cell.iter().map(|&i| ps.point(i)).collect::<Vec<_>>()).expect("non-empty cell")
}

/// Heights scaled to integers by the common denominator.
fn integer_heights(h: &[Rational]) -> Vec<i128> {
    let l = h.iter().fold(1i128, |acc, r| acc.lcm(&(r.den() as i128)));
    h.iter().map(|r| r.num() as i128 * (l / r.den() as i128)).collect()
}

/// Cells of the lower hull of the lifted points, as local index lists.
fn lower_cells(pts: &[LatticePoint], h: &[i128]) -> Vec<Vec<usize>> {
    let n = pts.len();
    let mut faces: Vec<Vec<bool>> = Vec::new();
    let mut cells = Vec::new();
    let lifted_det = |a: usize, b: usize, c: usize, p: usize| -> i128 {
        let u = (
            (pts[b].x - pts[a].x) as i128,
            (pts[b].y - pts[a].y) as i128,
            h[b] - h[a],
        );
        let v = (
            (pts[c].x - pts[a].x) as i128,
            (pts[c].y - pts[a].y) as i128,
            h[c] - h[a],
        );
        let w = (
            (pts[p].x - pts[a].x) as i128,
            (pts[p].y - pts[a].y) as i128,
            h[p] - h[a],
        );
        u.0 * (v.1 * w.2 - v.2 * w.1) - u.1 * (v.0 * w.2 - v.2 * w.0) + u.2 * (v.0 * w.1 - v.1 * w.0)
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let o = orient(pts[i], pts[j], pts[k]);
                if o == 0 || faces.iter().any(|f| f[i] && f[j] && f[k]) {
                    continue;
                }
                let (a, b, c) = if o > 0 { (i, j, k) } else { (i, k, j) };
                // A point far above the plane has a positive determinant.
                let mut on = vec![false; n];
                let mut lower = true;
                for (p, slot) in on.iter_mut().enumerate() {
                    let s = lifted_det(a, b, c, p);
                    if s < 0 {
                        lower = false;
                        break;
                    }
                    *slot = s == 0;
                }
                if !lower {
                    continue;
                }
                let members: Vec<LatticePoint> = (0..n).filter(|&p| on[p]).map(|p| pts[p]).collect();
                let hull = convex_hull(&members).expect("three non-collinear points");
                cells.push(
                    hull.vertices()
                        .iter()
                        .map(|v| pts.iter().position(|p| p == v).unwrap())
                        .collect::<Vec<_>>(),
                );
                faces.push(on);
            }
        }
    }
    cells
}

/// Projection of the lower facets of `{(x, y, h(x, y))}`. Affine heights give the
/// trivial subdivision.
pub fn regular_subdivision(ps: Arc<PointSet>, h: &HeightFunction) -> Result<Subdivision> {
    let s = Subdivision::trivial(ps)?;
    refine(&s, h)
}

/// Subdivides every cell by the lower hull of `h` restricted to the cell's points.
pub fn refine(s: &Subdivision, h: &HeightFunction) -> Result<Subdivision> {
    if h.values.len() != s.points.len() {
        return Err(Error::InvalidArgument("height function on a different point set".into()));
    }
    let mut cells = Vec::new();
    for cell in &s.cells {
        let idx = s.points.inside(cell);
        if idx.len() == 3 {
            cells.push(cell.clone());
            continue;
        }
        let pts: Vec<LatticePoint> = idx.iter().map(|&i| s.points.point(i)).collect();
        let heights = integer_heights(&idx.iter().map(|&i| h.values[i]).collect::<Vec<_>>());
        for local in lower_cells(&pts, &heights) {
            cells.push(local.into_iter().map(|i| idx[i]).collect());
        }
    }
    Ok(Subdivision::from_cells(s.points.clone(), cells))
}

pub fn is_unimodular(s: &Subdivision) -> bool {
    s.cells.iter().all(|c| c.len() == 3 && polygon_of(&s.points, c).area_doubled() == 1)
}

/// A subdivision all of whose cells are unimodular triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    sub: Subdivision,
}

impl Triangulation {
    /// Checks unimodularity and that the cells tile the hull of the points.
    pub fn new(sub: Subdivision) -> Result<Self> {
        for (i, c) in sub.cells.iter().enumerate() {
            if c.len() != 3 {
                return Err(Error::InvalidArgument(format!("cell {i} is not a triangle")));
            }
            let a = sub.cell_polygon(i).area_doubled();
            if a != 1 {
                return Err(Error::NotUnimodular(a));
            }
        }
        let hull = sub.points.hull()?;
        if sub.area_doubled() != hull.area_doubled() {
            return Err(Error::InvalidArgument("cells do not cover the hull".into()));
        }
        for ((a, b), users) in sub.edge_map() {
            let boundary = hull.edges().any(|(u, v)| {
                let (p, q) = (sub.points.point(a), sub.points.point(b));
                orient(u, v, p) == 0 && orient(u, v, q) == 0
            });
            let expected = if boundary { 1 } else { 2 };
            if users.len() != expected {
                return Err(Error::InvalidArgument(format!("edge ({a},{b}) is used by {} cells", users.len())));
            }
        }
        Ok(Triangulation { sub })
    }

    pub fn from_triangles(points: Arc<PointSet>, cells: Vec<[usize; 3]>) -> Result<Self> {
        let cells = cells
            .into_iter()
            .map(|c| {
                if c.iter().any(|&i| i >= points.len()) {
                    return Err(Error::InvalidArgument(format!("cell {c:?} out of range")));
                }
                Ok(ccw_triangle(&points, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Triangulation::new(Subdivision::from_cells(points, cells))
    }

    pub fn subdivision(&self) -> &Subdivision {
        &self.sub
    }

    pub fn points(&self) -> &Arc<PointSet> {
        &self.sub.points
    }

    pub fn triangles(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        self.sub.cells.iter().map(|c| [c[0], c[1], c[2]])
    }

    pub fn len(&self) -> usize {
        self.sub.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sub.cells.is_empty()
    }

    /// True when the segment between the two points is an edge of some triangle.
    pub fn has_edge(&self, a: LatticePoint, b: LatticePoint) -> bool {
        match (self.sub.points.index_of(a), self.sub.points.index_of(b)) {
            (Some(i), Some(j)) => self.sub.cells.iter().any(|c| c.contains(&i) && c.contains(&j) && i != j),
            _ => false,
        }
    }

    /// Neighbours of each point along triangle edges.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.sub.points.len()];
        for (a, b) in self.sub.edge_map().into_keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// Orders a triangle counterclockwise starting at its least index, which is also its
/// lexicographically least vertex.
fn ccw_triangle(ps: &PointSet, c: [usize; 3]) -> Vec<usize> {
    let mut c = c;
    c.sort_unstable();
    if orient(ps.point(c[0]), ps.point(c[1]), ps.point(c[2])) < 0 {
        c.swap(1, 2);
    }
    c.to_vec()
}

#[derive(Serialize, Deserialize)]
struct TriangulationJson {
    points: Vec<LatticePoint>,
    cells: Vec<[usize; 3]>,
}

impl Serialize for Triangulation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TriangulationJson { points: self.sub.points.points.clone(), cells: self.triangles().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Triangulation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TriangulationJson::deserialize(d)?;
        let sorted = PointSet::new(raw.points.clone()).map_err(serde::de::Error::custom)?;
        // Cells refer to the input order; translate to the sorted order.
        let remap: Vec<usize> = raw.points.iter().map(|&p| sorted.index_of(p).unwrap()).collect();
        let cells = raw
            .cells
            .into_iter()
            .map(|c| {
                if c.iter().any(|&i| i >= remap.len()) {
                    Err(serde::de::Error::custom(format!("cell {c:?} out of range")))
                } else {
                    Ok([remap[c[0]], remap[c[1]], remap[c[2]]])
                }
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        Triangulation::from_triangles(Arc::new(sorted), cells).map_err(serde::de::Error::custom)
    }
}

/// Refines every cell to unimodular triangles. Empty unit parallelograms are cut by the
/// diagonal at their lexicographically least vertex, width-1 cells by the zigzag starting
/// there, and any other cell is pulled at its lexicographically least non-vertex point.
pub fn complete_to_unimodular(s: &Subdivision) -> Result<Triangulation> {
    let mut out = Vec::new();
    for cell in &s.cells {
        complete_cell(&s.points, cell, &mut out)?;
    }
    Triangulation::from_triangles(s.points.clone(), out)
}

fn complete_cell(ps: &PointSet, cell: &[usize], out: &mut Vec<[usize; 3]>) -> Result<()> {
    let inside = ps.inside(cell);
    if cell.len() == 3 && inside.len() == 3 {
        out.push([cell[0], cell[1], cell[2]]);
        return Ok(());
    }
    if cell.len() == 4 && inside.len() == 4 {
        out.push([cell[0], cell[1], cell[2]]);
        out.push([cell[0], cell[2], cell[3]]);
        return Ok(());
    }
    let poly = polygon_of(ps, cell);
    let w = lattice_width(&poly);
    if w.width == 1 {
        let level = |i: usize| w.direction.dot(ps.point(i));
        let first = level(cell[0]);
        let (tau, tau_prime): (Vec<usize>, Vec<usize>) = inside.iter().partition(|&&i| level(i) == first);
        let pts = |v: &[usize]| v.iter().map(|&i| ps.point(i)).collect::<Vec<_>>();
        for t in zigzag::zigzag_triangles(&pts(&tau), &pts(&tau_prime))? {
            out.push(t.map(|p| ps.index_of(p).unwrap()));
        }
        return Ok(());
    }
    let p = *inside.iter().find(|i| !cell.contains(i)).ok_or(Error::Internal("empty cell with extra area".into()))?;
    let apex = ps.point(p);
    for k in 0..cell.len() {
        let (a, b) = (ps.point(cell[k]), ps.point(cell[(k + 1) % cell.len()]));
        if orient(a, b, apex) == 0 {
            continue;
        }
        let e = b - a;
        let g = crate::lattice::gcd(e.x, e.y);
        let step = LatticePoint::new(e.x / g, e.y / g);
        for t in 0..g {
            let u = a + LatticePoint::new(step.x * t, step.y * t);
            let v = u + step;
            let tri = ccw_triangle(ps, [p, ps.index_of(u).unwrap(), ps.index_of(v).unwrap()]);
            complete_cell(ps, &tri, out)?;
        }
    }
    Ok(())
}
