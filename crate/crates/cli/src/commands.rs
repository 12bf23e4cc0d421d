//! One function per verb. Each returns the full output so printing stays in one place.

use crate::{Failure, Format, Settings};
use serde::Serialize;
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use tropgon_core::enumeration::{enumerate_maximal, table_row_from, Corpus};
use tropgon_core::graph::{
    gonality_certificate_with, gonality_with_cap, scramble_order, CertificateOptions, Conclusion, LowerWitness,
    MultiGraph, Scramble,
};
use tropgon_core::lattice::{canonical_form, Relaxation};
use tropgon_core::moduli::{check_dim_bound, moduli_dim};
use tropgon_core::triangulation::{build_beehive, dual_graph, skeleton_with_lengths, Triangulation};
use tropgon_core::{LatticePolygon, PolygonInvariants};

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_dot(verb: &str) -> Failure {
    Failure::Usage(format!("{verb} has no dot output; use text or json"))
}

/// Text or JSON only.
fn emit<T: Serialize>(s: &Settings, verb: &str, text: String, value: &T) -> Result<String, Failure> {
    match s.format {
        Format::Text => Ok(text),
        Format::Json => Ok(to_json(value)),
        Format::Dot => Err(no_dot(verb)),
    }
}

pub fn analyze(s: &Settings, p: &LatticePolygon) -> Result<String, Failure> {
    let inv = PolygonInvariants::of(p);
    let dim = (inv.maximal && !inv.hyperelliptic && p.dimension() == 2).then(|| moduli_dim(p)).transpose()?;
    let canonical = canonical_form(p);
    let mut t = String::new();
    let _ = writeln!(t, "polygon        {p}");
    let _ = writeln!(t, "canonical      {canonical}");
    let _ = writeln!(t, "genus          {}", inv.genus);
    let _ = writeln!(t, "boundary       {}", inv.boundary_points);
    let _ = writeln!(t, "area (doubled) {}", inv.area_doubled);
    let _ = writeln!(t, "lattice width  {} along {}", inv.lattice_width, inv.width_direction);
    let _ = writeln!(t, "columns        {}", inv.column_count);
    let _ = writeln!(t, "egon           {}", inv.expected_gonality);
    let _ = writeln!(t, "hyperelliptic  {}", inv.hyperelliptic);
    let _ = writeln!(t, "maximal        {}", inv.maximal);
    if let Some(d) = dim {
        let _ = writeln!(t, "moduli dim     {d}");
    }
    emit(s, "analyze", t, &json!({ "polygon": p, "canonical": canonical, "invariants": inv, "moduli_dim": dim }))
}

pub fn dim(s: &Settings, p: &LatticePolygon) -> Result<String, Failure> {
    let r = check_dim_bound(p)?;
    let mut t = String::new();
    let _ = writeln!(t, "genus {}, boundary {}, columns {}", r.genus, r.boundary, r.columns);
    let _ = writeln!(t, "dim = {} <= floor(U({}, {})) = {} (U = {})", r.dim, r.genus, r.egon, r.upper_bound.floor(), r.upper_bound);
    for w in &r.witnesses {
        let _ = writeln!(t, "  {w}");
    }
    emit(s, "dim", t, &r)
}

pub fn relax(s: &Settings, p: &LatticePolygon) -> Result<String, Failure> {
    match p.relax()? {
        Relaxation::Lattice(q) => emit(s, "relax", format!("{q}\n"), &json!({ "lattice": true, "polygon": q })),
        Relaxation::NonLattice(vs) => {
            let shown: Vec<String> = vs.iter().map(|(x, y)| format!("({x},{y})")).collect();
            let t = format!("not a lattice polygon: vertices {}\n", shown.join(","));
            emit(s, "relax", t, &json!({ "lattice": false, "vertices": vs.iter().map(|(x, y)| [x, y]).collect::<Vec<_>>() }))
        }
    }
}

fn corpora(genera: RangeInclusive<usize>) -> Result<Vec<Corpus>, Failure> {
    Ok(genera.map(enumerate_maximal).collect::<Result<Vec<_>, _>>()?)
}

pub fn enumerate(s: &Settings, genera: RangeInclusive<usize>) -> Result<String, Failure> {
    let cs = corpora(genera)?;
    let mut t = String::new();
    for c in &cs {
        let _ = writeln!(t, "genus {}: {} polygons", c.genus, c.len());
        for r in c.records() {
            let _ = writeln!(t, "  egon {} dim {:>3}  {}", r.invariants.expected_gonality, r.moduli_dim, r.polygon);
        }
    }
    let value: Vec<_> = cs.iter().map(|c| json!({ "genus": c.genus, "polygons": c.records() })).collect();
    emit(s, "enumerate", t, &value)
}

fn braces(row: &BTreeMap<i64, i64>) -> String {
    let parts: Vec<String> = row.iter().map(|(d, v)| format!("{d}:{v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn table(s: &Settings, single: Option<usize>, genera: RangeInclusive<usize>) -> Result<String, Failure> {
    if *genera.start() < 2 {
        return Err(Failure::Usage("table rows start at genus 2".into()));
    }
    let rows: BTreeMap<usize, BTreeMap<i64, i64>> =
        corpora(genera)?.iter().map(|c| (c.genus, table_row_from(c))).collect();
    if single.is_some() {
        let row = rows.into_values().next().unwrap_or_default();
        return emit(s, "table", format!("{}\n", braces(&row)), &row);
    }
    let mut t = String::new();
    for (g, row) in &rows {
        let _ = writeln!(t, "g={g} {}", braces(row));
    }
    emit(s, "table", t, &rows)
}

fn triangulation_dot(t: &Triangulation) -> String {
    let ps = t.points();
    let mut out = String::from("graph beehive {\n  node [shape=point];\n");
    for (i, p) in ps.points().iter().enumerate() {
        let _ = writeln!(out, "  {i} [pos=\"{},{}!\"];", p.x, p.y);
    }
    let mut edges = std::collections::BTreeSet::new();
    for [a, b, c] in t.triangles() {
        for (u, v) in [(a, b), (b, c), (a, c)] {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    for (u, v) in edges {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub fn beehive(s: &Settings, p: &LatticePolygon) -> Result<String, Failure> {
    let t = build_beehive(p)?;
    match s.format {
        Format::Dot => Ok(triangulation_dot(&t)),
        Format::Json => Ok(to_json(&t)),
        Format::Text => {
            let ps = t.points();
            let mut out = format!("{} triangles on {} points\n", t.len(), ps.len());
            for tri in t.triangles() {
                let [a, b, c] = tri.map(|i| ps.point(i));
                let _ = writeln!(out, "  {a} {b} {c}");
            }
            Ok(out)
        }
    }
}

pub fn skeleton(s: &Settings, t: &Triangulation) -> Result<String, Failure> {
    let (g, lengths) = skeleton_with_lengths(&dual_graph(t));
    match s.format {
        Format::Json => Ok(to_json(&json!({ "graph": g, "lengths": lengths }))),
        Format::Dot => {
            let mut out = String::from("graph skeleton {\n");
            for v in 0..g.vertex_count() {
                let _ = writeln!(out, "  {v};");
            }
            for (&(u, v), len) in g.edges().iter().zip(&lengths) {
                let _ = writeln!(out, "  {u} -- {v} [label={len}];");
            }
            out.push_str("}\n");
            Ok(out)
        }
        Format::Text => {
            let mut out = format!("{} vertices, {} edges, first Betti number {}\n", g.vertex_count(), g.edge_count(), g.betti());
            for (&(u, v), len) in g.edges().iter().zip(&lengths) {
                let _ = writeln!(out, "  {u} -- {v}  length {len}");
            }
            Ok(out)
        }
    }
}

pub fn gonality(s: &Settings, g: &MultiGraph, sc: Option<&Scramble>) -> Result<String, Failure> {
    let gon = gonality_with_cap(g, s.cap)?;
    let order = sc.map(|sc| scramble_order(g, sc)).transpose()?;
    if let Some(o) = order.filter(|&o| o > gon) {
        return Err(Failure::Falsified(format!("falsified: scramble order {o} exceeds gonality {gon}\n")));
    }
    let mut t = format!("gon = {gon}\n");
    if let Some(o) = order {
        let _ = writeln!(t, "scramble order = {o}");
    }
    match s.format {
        Format::Dot => Ok(g.to_dot("G")),
        _ => emit(s, "gonality", t, &json!({ "gonality": gon, "scramble_order": order })),
    }
}

pub fn certify(s: &Settings, p: &LatticePolygon, t: Option<Triangulation>) -> Result<String, Failure> {
    let t = match t {
        Some(t) => t,
        None => build_beehive(p)?,
    };
    let opts = CertificateOptions { gonality_cap: s.cap, ..CertificateOptions::default() };
    let cert = gonality_certificate_with(p, &t, opts)?;
    if !cert.recheck()? {
        return Err(Failure::Falsified(format!("falsified: certificate for {} does not recheck\n", canonical_form(p))));
    }
    let mut out = match cert.conclusion {
        Conclusion::Exact { gonality } => format!("gon = {gonality}\n"),
        Conclusion::Between { lower, upper } => format!("{lower} <= gon <= {upper}\n"),
    };
    let why = match &cert.lower_witness {
        LowerWitness::Trivial => "every graph".to_string(),
        LowerWitness::Crystal { x0, scramble } => {
            format!("crystal scramble with {} eggs from column {x0} on the dual graph", scramble.eggs.len())
        }
        LowerWitness::Search { scramble } => format!("scramble with {} eggs on the skeleton", scramble.eggs.len()),
    };
    let _ = writeln!(out, "lower {}: {why}", cert.lower);
    let _ = writeln!(out, "upper {}: expected gonality", cert.upper);
    emit(s, "certify", out, &cert)
}
