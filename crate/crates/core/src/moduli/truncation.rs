use crate::error::{Error, Result};
use crate::lattice::{align_to_x_axis, apply_map, gcd, lattice_width, pt, AffineMap, LatticePoint, LatticePolygon};
use crate::rational::Rational;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A polygon moved by a unimodular map into the strip `R x [0, d]`, `d` its lattice width,
/// with leftmost point at `x = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripNormalization {
    pub polygon: LatticePolygon,
    pub map: AffineMap,
    pub height: i64,
}

fn row_min_x(p: &LatticePolygon, y: i64) -> i64 {
    p.vertices().iter().filter(|v| v.y == y).map(|v| v.x).min().expect("row is attained at a vertex")
}

/// Normalizes along the lexicographically least width direction. The shear is
/// fixed by requiring `0 <= x_min(top row) - x_min(bottom row) < d`.
pub fn strip_normalize(p: &LatticePolygon) -> Result<StripNormalization> {
    if p.dimension() < 2 {
        return Err(Error::Degenerate);
    }
    let w = lattice_width(p);
    let (a, b) = (w.direction.x, w.direction.y);
    let rot = AffineMap::new(align_to_x_axis(pt(b, -a)), pt(0, 0))?;
    let q = apply_map(p, &rot);
    let (_, _, y0, y1) = q.bounding_box();
    if y1 - y0 != w.width {
        return Err(Error::Internal("width direction does not produce the expected strip".into()));
    }
    let m = AffineMap::translation(pt(0, -y0)).compose(&rot);
    let q = apply_map(p, &m);
    let d = w.width;
    let l = -(row_min_x(&q, d) - row_min_x(&q, 0)).div_euclid(d);
    let m = AffineMap::shear(l).compose(&m);
    let q = apply_map(p, &m);
    let (x0, _, _, _) = q.bounding_box();
    let m = AffineMap::translation(pt(-x0, 0)).compose(&m);
    Ok(StripNormalization { polygon: apply_map(p, &m), map: m, height: d })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Corner {
    NW,
    NE,
    SE,
    SW,
}

/// A corner triangle with horizontal leg `x` and vertical leg `y`; `(0, 0)` means no cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    pub x: i64,
    pub y: i64,
    pub corner: Corner,
}

impl Cut {
    pub fn is_cut(&self) -> bool {
        self.x != 0
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({},{})", self.corner, self.x, self.y)
    }
}

/// The bounding rectangle of a strip-normalized polygon minus four corner triangles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    pub strip_height: i64,
    pub rect_left: i64,
    pub rect_right: i64,
    /// Lattice length of the top edge (`y = d`).
    pub a: i64,
    /// Lattice length of the bottom edge (`y = 0`).
    pub b: i64,
    /// In the order NW, NE, SE, SW.
    pub cuts: [Cut; 4],
}

impl Truncation {
    /// Hull of the truncated rectangle.
    pub fn polygon(&self) -> LatticePolygon {
        let (l, r, d) = (self.rect_left, self.rect_right, self.strip_height);
        let [nw, ne, se, sw] = self.cuts;
        LatticePolygon::new(&[
            pt(l + sw.x, 0),
            pt(r - se.x, 0),
            pt(r, se.y),
            pt(r, d - ne.y),
            pt(r - ne.x, d),
            pt(l + nw.x, d),
            pt(l, d - nw.y),
            pt(l, sw.y),
        ])
        .expect("non-empty")
    }

    /// Twice the area via the corner-cut formula.
    pub fn area_doubled(&self) -> i64 {
        let xs: i64 = self.cuts.iter().map(|c| c.x).sum();
        (xs + self.a + self.b) * self.strip_height - self.cuts.iter().map(|c| c.x * c.y).sum::<i64>()
    }

    pub fn penalties(&self) -> Vec<(Cut, Rational)> {
        self.cuts
            .iter()
            .filter(|c| c.is_cut())
            .map(|&c| (c, cut_penalty(c.x, c.y, self.strip_height).expect("cut legs are positive")))
            .collect()
    }

    /// `2g/(d-1) + 2 + sum of cut penalties`, an upper bound for `a + b`.
    pub fn ab_bound(&self, genus: i64) -> Rational {
        let d = self.strip_height;
        Rational::new(2 * genus, d - 1)
            + Rational::integer(2)
            + self.penalties().into_iter().map(|(_, x)| x).sum()
    }
}

fn vertical_extent(p: &LatticePolygon, x: i64) -> (i64, i64) {
    let ys = p.vertices().iter().filter(|v| v.x == x).map(|v| v.y);
    (ys.clone().min().unwrap(), ys.max().unwrap())
}

fn horizontal_extent(p: &LatticePolygon, y: i64) -> (i64, i64) {
    let xs = p.vertices().iter().filter(|v| v.y == y).map(|v| v.x);
    (xs.clone().min().unwrap(), xs.max().unwrap())
}

/// Truncation of a polygon already lying in `R x [0, d]` with both lines `y = 0`, `y = d` touched.
pub fn truncate_normalized(p: &LatticePolygon, d: i64) -> Truncation {
    let (l, r, _, _) = p.bounding_box();
    let (b0, b1) = horizontal_extent(p, 0);
    let (t0, t1) = horizontal_extent(p, d);
    let (l0, l1) = vertical_extent(p, l);
    let (r0, r1) = vertical_extent(p, r);
    Truncation {
        strip_height: d,
        rect_left: l,
        rect_right: r,
        a: t1 - t0,
        b: b1 - b0,
        cuts: [
            Cut { x: t0 - l, y: d - l1, corner: Corner::NW },
            Cut { x: r - t1, y: d - r1, corner: Corner::NE },
            Cut { x: r - b1, y: r0, corner: Corner::SE },
            Cut { x: b0 - l, y: l0, corner: Corner::SW },
        ],
    }
}

pub fn truncate(p: &LatticePolygon) -> Result<Truncation> {
    let s = strip_normalize(p)?;
    Ok(truncate_normalized(&s.polygon, s.height))
}

/// `(x (y - d) - (y - gcd(x, y))) / (d - 1)` for a corner cut with legs `x, y >= 1`.
pub fn cut_penalty(x: i64, y: i64, d: i64) -> Result<Rational> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("strip height {d} must be at least 2")));
    }
    if x < 1 || y < 1 {
        return Err(Error::InvalidArgument(format!("({x},{y}) is not a cut")));
    }
    Ok(Rational::new(x * (y - d) - (y - gcd(x, y)), d - 1))
}

/// Helper for the witness constructions: `[0, w] x [0, d]` with isosceles corner cuts.
pub fn truncated_rectangle(w: i64, d: i64, cuts: &[(Corner, i64)]) -> LatticePolygon {
    let size = |c: Corner| cuts.iter().find(|(k, _)| *k == c).map_or(0, |&(_, s)| s);
    let t = Truncation {
        strip_height: d,
        rect_left: 0,
        rect_right: w,
        a: w - size(Corner::NW) - size(Corner::NE),
        b: w - size(Corner::SW) - size(Corner::SE),
        cuts: [Corner::NW, Corner::NE, Corner::SE, Corner::SW]
            .map(|c| Cut { x: size(c), y: size(c), corner: c }),
    };
    t.polygon()
}

pub(crate) fn points_in_row(p: &LatticePolygon, y: i64) -> impl Iterator<Item = LatticePoint> + '_ {
    let (x0, x1, _, _) = p.bounding_box();
    (x0..=x1).map(move |x| pt(x, y)).filter(move |&q| p.strictly_contains(q))
}
