use super::point::{gcd, orient, LatticePoint};
use crate::error::{Error, Result};
use crate::rational::Rational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Convex hull of finitely many lattice points, stored as its counterclockwise
/// vertex cycle starting at the lexicographically least vertex.
///
/// Points and segments are valid polygons of dimension 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PolygonJson", into = "PolygonJson")]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

#[derive(Serialize, Deserialize)]
struct PolygonJson {
    vertices: Vec<LatticePoint>,
}

impl TryFrom<PolygonJson> for LatticePolygon {
    type Error = Error;
    fn try_from(j: PolygonJson) -> Result<Self> {
        convex_hull(&j.vertices)
    }
}

impl From<LatticePolygon> for PolygonJson {
    fn from(p: LatticePolygon) -> Self {
        PolygonJson { vertices: p.vertices }
    }
}

/// The closed half-plane `normal · p <= offset`; `normal` is primitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfPlane {
    pub normal: LatticePoint,
    pub offset: i64,
}

impl HalfPlane {
    pub fn value(&self, p: LatticePoint) -> i64 {
        self.normal.dot(p)
    }

    /// How far beyond the boundary line `p` lies, in lattice distance.
    pub fn excess(&self, p: LatticePoint) -> i64 {
        self.value(p) - self.offset
    }
}

/// Result of relaxing every edge of a polygon outward by lattice distance one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relaxation {
    Lattice(LatticePolygon),
    /// The relaxed region has a vertex off the lattice; its vertices are listed.
    NonLattice(Vec<(Rational, Rational)>),
}

impl Relaxation {
    pub fn lattice(self) -> Option<LatticePolygon> {
        match self {
            Relaxation::Lattice(p) => Some(p),
            Relaxation::NonLattice(_) => None,
        }
    }
}

pub fn convex_hull(points: &[LatticePoint]) -> Result<LatticePolygon> {
    if points.is_empty() {
        return Err(Error::NoPoints);
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() == 1 {
        return Ok(LatticePolygon { vertices: pts });
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(LatticePolygon { vertices: lower })
}

impl LatticePolygon {
    /// Hull of the given points; any order and duplicates are accepted.
    pub fn new(points: &[LatticePoint]) -> Result<Self> {
        convex_hull(points)
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        let pts: Vec<LatticePoint> = coords.iter().map(|&c| c.into()).collect();
        convex_hull(&pts)
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// 0 for a point, 1 for a segment, 2 otherwise.
    pub fn dimension(&self) -> usize {
        self.vertices.len().min(3) - 1
    }

    /// Directed edges in counterclockwise order. Empty unless two-dimensional.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        let count = if n >= 3 { n } else { 0 };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn bounding_box(&self) -> (i64, i64, i64, i64) {
        let xs = self.vertices.iter().map(|p| p.x);
        let ys = self.vertices.iter().map(|p| p.y);
        (
            xs.clone().min().unwrap(),
            xs.max().unwrap(),
            ys.clone().min().unwrap(),
            ys.max().unwrap(),
        )
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        match self.dimension() {
            0 => p == self.vertices[0],
            1 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                orient(a, b, p) == 0 && (p - a).dot(b - a) >= 0 && (p - b).dot(a - b) >= 0
            }
            _ => self.edges().all(|(a, b)| orient(a, b, p) >= 0),
        }
    }

    pub fn strictly_contains(&self, p: LatticePoint) -> bool {
        self.dimension() == 2 && self.edges().all(|(a, b)| orient(a, b, p) > 0)
    }

    /// All lattice points, sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        self.scan(|p| self.contains(p))
    }

    /// Lattice points in the topological interior, sorted lexicographically.
    pub fn interior_points(&self) -> Vec<LatticePoint> {
        if self.dimension() < 2 {
            return Vec::new();
        }
        self.scan(|p| self.strictly_contains(p))
    }

    fn scan(&self, keep: impl Fn(LatticePoint) -> bool) -> Vec<LatticePoint> {
        let (x0, x1, y0, y1) = self.bounding_box();
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                let p = LatticePoint::new(x, y);
                if keep(p) {
                    out.push(p);
                }
            }
        }
        out
    }

    pub fn genus(&self) -> usize {
        self.interior_points().len()
    }

    pub fn boundary_points(&self) -> usize {
        match self.dimension() {
            0 => 1,
            1 => {
                let d = self.vertices[1] - self.vertices[0];
                gcd(d.x, d.y) as usize + 1
            }
            _ => self
                .edges()
                .map(|(a, b)| gcd(b.x - a.x, b.y - a.y) as usize)
                .sum(),
        }
    }

    /// Twice the Euclidean area.
    pub fn area_doubled(&self) -> i64 {
        self.edges().map(|(a, b)| a.cross(b)).sum()
    }

    /// Hull of the interior lattice points, or `None` when there are none.
    pub fn interior_polygon(&self) -> Option<LatticePolygon> {
        let pts = self.interior_points();
        if pts.is_empty() {
            None
        } else {
            convex_hull(&pts).ok()
        }
    }

    /// True when the interior lattice points are collinear (or absent).
    pub fn is_hyperelliptic(&self) -> bool {
        self.interior_polygon().is_none_or(|q| q.dimension() < 2)
    }

    /// One primitive outward half-plane per edge, in edge order.
    pub fn half_planes(&self) -> Vec<HalfPlane> {
        self.edges()
            .map(|(a, b)| {
                let e = b - a;
                let g = gcd(e.x, e.y);
                let normal = LatticePoint::new(e.y / g, -e.x / g);
                HalfPlane { normal, offset: normal.dot(a) }
            })
            .collect()
    }

    fn relaxed_vertices(&self) -> Result<Vec<(Rational, Rational)>> {
        if self.dimension() < 2 {
            return Err(Error::RelaxationUndefined(self.dimension()));
        }
        let planes: Vec<HalfPlane> = self
            .half_planes()
            .into_iter()
            .map(|h| HalfPlane { normal: h.normal, offset: h.offset + 1 })
            .collect();
        let mut found: BTreeSet<(Rational, Rational)> = BTreeSet::new();
        for (i, h1) in planes.iter().enumerate() {
            for h2 in &planes[i + 1..] {
                let (a1, b1, c1) = (h1.normal.x as i128, h1.normal.y as i128, h1.offset as i128);
                let (a2, b2, c2) = (h2.normal.x as i128, h2.normal.y as i128, h2.offset as i128);
                let mut det = a1 * b2 - a2 * b1;
                if det == 0 {
                    continue;
                }
                let mut xn = c1 * b2 - c2 * b1;
                let mut yn = a1 * c2 - a2 * c1;
                if det < 0 {
                    det = -det;
                    xn = -xn;
                    yn = -yn;
                }
                let feasible = planes.iter().all(|h| {
                    h.normal.x as i128 * xn + h.normal.y as i128 * yn <= h.offset as i128 * det
                });
                if feasible {
                    found.insert((
                        Rational::new(xn as i64, det as i64),
                        Rational::new(yn as i64, det as i64),
                    ));
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    /// Moves every edge outward by lattice distance one.
    pub fn relax(&self) -> Result<Relaxation> {
        let verts = self.relaxed_vertices()?;
        if verts.iter().all(|(x, y)| x.is_integer() && y.is_integer()) {
            let pts: Vec<LatticePoint> =
                verts.iter().map(|(x, y)| LatticePoint::new(x.num(), y.num())).collect();
            Ok(Relaxation::Lattice(convex_hull(&pts)?))
        } else {
            Ok(Relaxation::NonLattice(verts))
        }
    }

    /// Lattice points of the relaxed region, whether or not its vertices are integral.
    pub fn relaxed_lattice_points(&self) -> Result<Vec<LatticePoint>> {
        let verts = self.relaxed_vertices()?;
        let x0 = verts.iter().map(|v| v.0.floor()).min().unwrap();
        let x1 = verts.iter().map(|v| v.0.ceil()).max().unwrap();
        let y0 = verts.iter().map(|v| v.1.floor()).min().unwrap();
        let y1 = verts.iter().map(|v| v.1.ceil()).max().unwrap();
        let planes = self.half_planes();
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                let p = LatticePoint::new(x, y);
                if planes.iter().all(|h| h.excess(p) <= 1) {
                    out.push(p);
                }
            }
        }
        Ok(out)
    }

    /// A polygon is maximal when no strictly larger lattice polygon has the same
    /// interior lattice points.
    pub fn is_maximal(&self) -> bool {
        if self.dimension() < 2 {
            return false;
        }
        if let Some(q) = self.interior_polygon().filter(|q| q.dimension() == 2) {
            return q.relax().ok().and_then(Relaxation::lattice).as_ref() == Some(self);
        }
        // Any lattice point whose addition keeps the genus can be pushed back
        // to one at distance at most one beyond every edge, so this scan is complete.
        let genus = self.genus();
        let Ok(candidates) = self.relaxed_lattice_points() else {
            return false;
        };
        let mut pts = self.vertices.clone();
        candidates.into_iter().filter(|&c| !self.contains(c)).all(|c| {
            pts.truncate(self.vertices.len());
            pts.push(c);
            convex_hull(&pts).map(|h| h.genus() > genus).unwrap_or(false)
        })
    }

    /// Nonzero vectors `v` such that `v + s` stays in the polygon for every lattice point `s`
    /// off some edge. Sorted, without duplicates.
    pub fn column_vectors(&self) -> Vec<LatticePoint> {
        if self.dimension() < 2 {
            return Vec::new();
        }
        let pts = self.lattice_points();
        let mut found = BTreeSet::new();
        for h in self.half_planes() {
            let off: Vec<LatticePoint> = pts.iter().copied().filter(|&p| h.excess(p) < 0).collect();
            let Some(&s0) = off.first() else { continue };
            for &p in &pts {
                let v = p - s0;
                if v == LatticePoint::default() || found.contains(&v) {
                    continue;
                }
                if off.iter().all(|&s| self.contains(s + v)) {
                    found.insert(v);
                }
            }
        }
        found.into_iter().collect()
    }

    pub fn column_count(&self) -> usize {
        self.column_vectors().len()
    }

    pub fn translate(&self, v: LatticePoint) -> LatticePolygon {
        let pts: Vec<LatticePoint> = self.vertices.iter().map(|&p| p + v).collect();
        convex_hull(&pts).expect("non-empty")
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
