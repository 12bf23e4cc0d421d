//! Classification of maximal non-hyperelliptic polygons of small genus.

use crate::error::{Error, Result};
use crate::lattice::{canonical_form, convex_hull, expected_gonality, pt, LatticePolygon, PolygonInvariants};
use crate::moduli::{hyperelliptic_locus_dim, moduli_dim};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Largest genus accepted by default.
pub const DEFAULT_GENUS_CAP: usize = 8;

/// Every two-dimensional convex lattice polygon with exactly `n` lattice points,
/// one canonical representative per equivalence class, sorted.
///
/// Grown one point at a time: removing a suitable vertex from such a polygon leaves a
/// two-dimensional one with `n - 1` points, and the removed vertex lies within lattice
/// distance one beyond every edge of what remains.
pub fn enumerate_interior_candidates(n: usize) -> Result<Vec<LatticePolygon>> {
    enumerate_with_cap(n, DEFAULT_GENUS_CAP)
}

pub fn enumerate_with_cap(n: usize, cap: usize) -> Result<Vec<LatticePolygon>> {
    if n > cap {
        return Err(Error::CapExceeded(format!("genus {n} is above the cap {cap}")));
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut level: BTreeSet<LatticePolygon> = BTreeSet::new();
    level.insert(convex_hull(&[pt(0, 0), pt(1, 0), pt(0, 1)])?);
    for k in 3..n {
        let next: Vec<Vec<LatticePolygon>> = level
            .par_iter()
            .map(|r| {
                let mut out = Vec::new();
                let Ok(cands) = r.relaxed_lattice_points() else { return out };
                for q in cands.into_iter().filter(|&q| !r.contains(q)) {
                    let mut v = r.vertices().to_vec();
                    v.push(q);
                    let h = convex_hull(&v).expect("non-empty");
                    if h.lattice_points().len() == k + 1 {
                        out.push(canonical_form(&h));
                    }
                }
                out
            })
            .collect();
        level = next.into_iter().flatten().collect();
    }
    Ok(level.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonRecord {
    pub polygon: LatticePolygon,
    pub invariants: PolygonInvariants,
    pub moduli_dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub genus: usize,
    pub polygons: Vec<LatticePolygon>,
    /// Expected gonality to positions in `polygons`.
    pub by_egon: BTreeMap<i64, Vec<usize>>,
    pub dims: Vec<i64>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }

    pub fn egons(&self) -> Vec<i64> {
        let mut out = vec![0; self.len()];
        for (&e, idx) in &self.by_egon {
            for &i in idx {
                out[i] = e;
            }
        }
        out
    }

    pub fn records(&self) -> Vec<PolygonRecord> {
        self.polygons
            .par_iter()
            .zip(self.dims.par_iter())
            .map(|(p, &d)| PolygonRecord { polygon: p.clone(), invariants: PolygonInvariants::of(p), moduli_dim: d })
            .collect()
    }
}

/// Maximal non-hyperelliptic polygons of genus `g`, as relaxations of the interior candidates.
pub fn enumerate_maximal(g: usize) -> Result<Corpus> {
    enumerate_maximal_with_cap(g, DEFAULT_GENUS_CAP)
}

pub fn enumerate_maximal_with_cap(g: usize, cap: usize) -> Result<Corpus> {
    if g < 1 {
        return Err(Error::InvalidArgument("genus must be at least 1".into()));
    }
    let candidates = enumerate_with_cap(g, cap)?;
    let found: BTreeSet<LatticePolygon> = candidates
        .par_iter()
        .filter_map(|q| {
            let p = q.relax().ok()?.lattice()?;
            (p.interior_points() == q.lattice_points()).then(|| canonical_form(&p))
        })
        .collect();
    let polygons: Vec<LatticePolygon> = found.into_iter().collect();
    let dims = polygons.par_iter().map(moduli_dim).collect::<Result<Vec<i64>>>()?;
    let mut by_egon: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, p) in polygons.iter().enumerate() {
        by_egon.entry(expected_gonality(p)).or_default().push(i);
    }
    Ok(Corpus { genus: g, polygons, by_egon, dims })
}

/// Largest locus dimension for each gonality: `2g - 1` in the hyperelliptic case,
/// otherwise the maximum over corpus polygons with that expected gonality.
pub fn table_row(g: usize) -> Result<BTreeMap<i64, i64>> {
    if !(2..=DEFAULT_GENUS_CAP).contains(&g) {
        return Err(Error::InvalidArgument(format!("genus {g} is outside 2..={DEFAULT_GENUS_CAP}")));
    }
    Ok(table_row_from(&enumerate_maximal(g)?))
}

pub fn table_row_from(corpus: &Corpus) -> BTreeMap<i64, i64> {
    let mut row = BTreeMap::new();
    if let Ok(d) = hyperelliptic_locus_dim(corpus.genus as i64) {
        row.insert(2, d);
    }
    for (&e, idx) in &corpus.by_egon {
        if e >= 3 {
            row.insert(e, idx.iter().map(|&i| corpus.dims[i]).max().unwrap());
        }
    }
    row
}
