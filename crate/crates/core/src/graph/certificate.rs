use super::{gonality_with_cap, scramble_order, search_scramble, GonalityCap, MultiGraph, Scramble};
use crate::error::{Error, Result};
use crate::lattice::{expected_gonality, lattice_width, pt, LatticePolygon};
use crate::moduli::find_crystal;
use crate::triangulation::{dual_graph, skeleton, Triangulation};
use serde::{Deserialize, Serialize};

/// The crystal scramble: egg `i` holds the triangles inside the column
/// `[x0 + i - 1, x0 + i] x [1, d - 1]` together with the triangle just below its bottom
/// edge and the one just above its top edge. Vertices are triangle indices, matching
/// [`dual_graph`].
pub fn crystal_scramble(t: &Triangulation, x0: i64, d: i64) -> Result<Scramble> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("crystal length {d}")));
    }
    let ps = t.points();
    let tris: Vec<[usize; 3]> = t.triangles().collect();
    let mut eggs = Vec::new();
    for i in 1..=d {
        let (l, r) = (x0 + i - 1, x0 + i);
        let mut egg = Vec::new();
        for (k, tri) in tris.iter().enumerate() {
            let pts = tri.map(|v| ps.point(v));
            let inside = pts.iter().all(|p| (l..=r).contains(&p.x) && (1..=d - 1).contains(&p.y));
            let cap = |y: i64, beyond: &dyn Fn(i64) -> bool| {
                pts.contains(&pt(l, y)) && pts.contains(&pt(r, y)) && pts.iter().any(|p| beyond(p.y))
            };
            if inside || cap(1, &|y| y < 1) || cap(d - 1, &|y| y > d - 1) {
                egg.push(k);
            }
        }
        // Both caps and at least one square's worth of triangles.
        if egg.len() < 2 * (d as usize - 2) + 2 {
            return Err(Error::NoCrystal(x0));
        }
        eggs.push(egg);
    }
    let s = Scramble::new(eggs);
    s.validate(&dual_graph(t)).map_err(|_| Error::NoCrystal(x0))?;
    Ok(s)
}

/// Where a lower bound comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LowerWitness {
    /// Every graph has gonality at least one.
    Trivial,
    /// A crystal scramble on the dual graph, with the crystal's first column.
    Crystal { x0: i64, scramble: Scramble },
    /// A scramble found by search on the loopless model of the skeleton.
    Search { scramble: Scramble },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Conclusion {
    Exact { gonality: usize },
    Between { lower: usize, upper: usize },
}

/// Scramble number below, expected gonality above. `graph` is the graph carrying the
/// lower witness. `model_gonality` is the divisorial gonality of the skeleton with unit
/// edge lengths when it is small enough to compute; it is reported but not used as a
/// bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GonalityCertificate {
    pub lower: usize,
    pub lower_witness: LowerWitness,
    pub graph: MultiGraph,
    pub upper: usize,
    pub expected_gonality: usize,
    pub model_gonality: Option<usize>,
    pub conclusion: Conclusion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertificateOptions {
    pub max_egg_size: usize,
    pub gonality_cap: GonalityCap,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        CertificateOptions { max_egg_size: 3, gonality_cap: GonalityCap::default() }
    }
}

pub fn gonality_certificate(p: &LatticePolygon, t: &Triangulation) -> Result<GonalityCertificate> {
    gonality_certificate_with(p, t, CertificateOptions::default())
}

fn crystal_lower(p: &LatticePolygon, t: &Triangulation, dual: &MultiGraph, egon: usize) -> Option<(usize, LowerWitness)> {
    let d = lattice_width(p).width;
    let (_, _, y0, y1) = p.bounding_box();
    if d < 3 || egon as i64 != d || y0 != 0 || y1 != d {
        return None;
    }
    let x0 = find_crystal(p, d)?;
    let s = crystal_scramble(t, x0, d).ok()?;
    let order = scramble_order(dual, &s).ok()?;
    Some((order, LowerWitness::Crystal { x0, scramble: s }))
}

pub fn gonality_certificate_with(
    p: &LatticePolygon,
    t: &Triangulation,
    opts: CertificateOptions,
) -> Result<GonalityCertificate> {
    if t.points().points() != p.lattice_points().as_slice() {
        return Err(Error::InvalidArgument("triangulation does not use the polygon's lattice points".into()));
    }
    let egon = expected_gonality(p) as usize;
    let dual = dual_graph(t);
    let sk = skeleton(&dual);
    let model = sk.loopless_model();
    let mut lower = (1, LowerWitness::Trivial, model.clone());
    if let Some((order, w)) = crystal_lower(p, t, &dual, egon) {
        lower = (order, w, dual.clone());
    } else if p.genus() > 0 {
        for target in (2..=egon).rev() {
            if let Ok(Some(s)) = search_scramble(&model, target, opts.max_egg_size) {
                let order = scramble_order(&model, &s)?;
                lower = (order, LowerWitness::Search { scramble: s }, model.clone());
                break;
            }
        }
    }
    let (lo, witness, graph) = lower;
    if lo > egon {
        return Err(Error::Falsified(format!(
            "scramble of order {lo} exceeds the expected gonality {egon} of {p}"
        )));
    }
    let model_gonality = gonality_with_cap(&sk, opts.gonality_cap).ok();
    let conclusion = if lo == egon {
        Conclusion::Exact { gonality: lo }
    } else {
        Conclusion::Between { lower: lo, upper: egon }
    };
    Ok(GonalityCertificate {
        lower: lo,
        lower_witness: witness,
        graph,
        upper: egon,
        expected_gonality: egon,
        model_gonality,
        conclusion,
    })
}

impl GonalityCertificate {
    pub fn exact(&self) -> Option<usize> {
        match self.conclusion {
            Conclusion::Exact { gonality } => Some(gonality),
            Conclusion::Between { .. } => None,
        }
    }

    /// Recomputes the lower bound from the stored witness.
    pub fn recheck(&self) -> Result<bool> {
        let order = match &self.lower_witness {
            LowerWitness::Trivial => 1,
            LowerWitness::Crystal { scramble, .. } | LowerWitness::Search { scramble } => {
                scramble_order(&self.graph, scramble)?
            }
        };
        Ok(order >= self.lower && self.lower <= self.upper)
    }
}
