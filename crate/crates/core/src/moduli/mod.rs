//! Dimension counts for families of curves with a fixed Newton polygon and the
//! bounds that control them.

mod crystal;
mod truncation;
mod witness;

pub use crystal::{find_crystal, shear_to_crystal, width_family, CrystalShear};
pub use truncation::{
    cut_penalty, strip_normalize, truncate, truncate_normalized, truncated_rectangle, Corner, Cut,
    StripNormalization, Truncation,
};
pub use witness::{witness_d4, witness_d5};

use crate::error::{Error, Result};
use crate::lattice::{expected_gonality, lattice_width, LatticePolygon};
use crate::rational::Rational;
use serde::{Deserialize, Serialize};

/// `g + r - 3 - c` for a maximal non-hyperelliptic polygon.
pub fn moduli_dim(p: &LatticePolygon) -> Result<i64> {
    if p.is_hyperelliptic() {
        return Err(Error::Hyperelliptic);
    }
    if !p.is_maximal() {
        return Err(Error::NotMaximal);
    }
    Ok(dim_formula(p))
}

fn dim_formula(p: &LatticePolygon) -> i64 {
    p.genus() as i64 + p.boundary_points() as i64 - 3 - p.column_count() as i64
}

/// `U(g, d) = g + 2g/(d-1) + 2d - 3`.
pub fn upper_bound_u(g: i64, d: i64) -> Result<Rational> {
    if d <= 1 {
        return Err(Error::InvalidArgument(format!("d = {d} must be at least 2")));
    }
    if g < 1 {
        return Err(Error::InvalidArgument(format!("g = {g} must be at least 1")));
    }
    Ok(Rational::integer(g) + Rational::new(2 * g, d - 1) + Rational::integer(2 * d - 3))
}

/// Closed form for truncated rectangles with isosceles cuts:
/// `U(g, d) + 2 + sum x(x - d)/(d - 1) - c`.
pub fn isosceles_truncation_dim(p: &LatticePolygon) -> Result<Rational> {
    let s = strip_normalize(p)?;
    let t = truncate_normalized(&s.polygon, s.height);
    if t.polygon() != s.polygon {
        return Err(Error::InvalidArgument(format!("{p} is not a truncated rectangle")));
    }
    let d = t.strip_height;
    if t.cuts.iter().any(|c| c.x != c.y) {
        return Err(Error::InvalidArgument("cuts are not isosceles".into()));
    }
    let cuts: Rational = t.cuts.iter().map(|c| Rational::new(c.x * (c.x - d), d - 1)).sum();
    Ok(upper_bound_u(p.genus() as i64, d)? + Rational::integer(2) + cuts
        - Rational::integer(p.column_count() as i64))
}

pub fn hyperelliptic_locus_dim(g: i64) -> Result<i64> {
    if g < 2 {
        return Err(Error::InvalidArgument(format!("genus {g} must be at least 2")));
    }
    Ok(2 * g - 1)
}

/// Valid from genus 4 on; in genus 3 the trigonal locus is all of the moduli space.
pub fn trigonal_locus_dim(g: i64) -> Result<i64> {
    if g < 4 {
        return Err(Error::InvalidArgument(format!("genus {g} must be at least 4")));
    }
    Ok(2 * g + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub genus: i64,
    pub boundary: i64,
    pub columns: i64,
    pub dim: i64,
    pub upper_bound: Rational,
    pub egon: i64,
    pub witnesses: Vec<String>,
}

/// Computes the dimension and checks it against `floor(U(g, egon))`.
pub fn check_dim_bound(p: &LatticePolygon) -> Result<DimReport> {
    let dim = moduli_dim(p)?;
    let egon = expected_gonality(p);
    let genus = p.genus() as i64;
    let upper_bound = upper_bound_u(genus, egon)?;
    let t = truncate(p)?;
    let mut witnesses = vec![format!("strip height {} with a = {}, b = {}", t.strip_height, t.a, t.b)];
    for (c, x) in t.penalties() {
        witnesses.push(format!("cut {c} has penalty {x}"));
    }
    let report = DimReport {
        genus,
        boundary: p.boundary_points() as i64,
        columns: p.column_count() as i64,
        dim,
        upper_bound,
        egon,
        witnesses,
    };
    if dim > upper_bound.floor() {
        return Err(Error::Falsified(format!(
            "{}: dimension {dim} exceeds floor of {upper_bound}",
            crate::lattice::canonical_form(p)
        )));
    }
    Ok(report)
}

/// `lw(P) <= 2 sqrt(g + 2)`, compared after squaring.
pub fn width_bound_holds(p: &LatticePolygon) -> bool {
    let w = lattice_width(p).width;
    w * w <= 4 * (p.genus() as i64 + 2)
}

/// Sign-exact comparison of `U(g, 2 sqrt(g+2))` against `U(g, d+1)`.
///
/// The difference has the sign of `(s - 1 - d)(d(s - 1) - g)` with `s = 2 sqrt(g + 2)`,
/// and both factors are decided by squaring.
pub fn width_extremal_bound_holds(g: i64, d: i64) -> bool {
    let s2 = 4 * (g + 2) as i128;
    let (g, d) = (g as i128, d as i128);
    let first = (s2 - (d + 1) * (d + 1)).signum();
    let second = (4 * d * d * (g + 2) - (g + d) * (g + d)).signum();
    first * second <= 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UPropertiesReport {
    pub d: i64,
    pub checked: Vec<i64>,
    pub failures: Vec<i64>,
}

/// Checks the width-extremal comparison for every `g` in range with `g >= max(d³, 32)`.
pub fn verify_u_properties(d: i64, g_range: std::ops::RangeInclusive<i64>) -> Result<UPropertiesReport> {
    if d < 3 {
        return Err(Error::InvalidArgument(format!("d = {d} must be at least 3")));
    }
    let start = (*g_range.start()).max(d * d * d).max(32);
    let checked: Vec<i64> = (start..=*g_range.end()).collect();
    let failures = checked.iter().copied().filter(|&g| !width_extremal_bound_holds(g, d)).collect();
    Ok(UPropertiesReport { d, checked, failures })
}
