//! Reading polygons, graphs, scrambles and triangulations from a path or inline JSON.

use crate::Failure;
use serde::de::DeserializeOwned;
use tropgon_core::graph::{MultiGraph, Scramble};
use tropgon_core::lattice::convex_hull;
use tropgon_core::triangulation::Triangulation;
use tropgon_core::{LatticePoint, LatticePolygon};

/// Inline JSON starts with a brace or bracket; anything else is a path.
fn load(what: &str, arg: &str) -> Result<(String, String), Failure> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok((arg.to_string(), format!("inline {what}")));
    }
    let text = std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{what} {arg}: {e}")))?;
    Ok((text, format!("{what} {arg}")))
}

fn parse<T: DeserializeOwned>(text: &str, source: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("{source}: {e}")))
}

/// Accepts `{"vertices": [[x, y], ...]}` or a bare point list.
pub fn polygon(arg: &str) -> Result<LatticePolygon, Failure> {
    let (text, source) = load("polygon", arg)?;
    if text.trim_start().starts_with('[') {
        let pts: Vec<LatticePoint> = parse(&text, &source)?;
        return convex_hull(&pts).map_err(|e| Failure::Usage(format!("{source}: {e}")));
    }
    parse(&text, &source)
}

pub fn graph(arg: &str) -> Result<MultiGraph, Failure> {
    let (text, source) = load("graph", arg)?;
    parse(&text, &source)
}

pub fn scramble(arg: &str) -> Result<Scramble, Failure> {
    let (text, source) = load("scramble", arg)?;
    parse(&text, &source)
}

pub fn triangulation(arg: &str) -> Result<Triangulation, Failure> {
    let (text, source) = load("triangulation", arg)?;
    parse(&text, &source)
}
