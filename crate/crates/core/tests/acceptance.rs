//! Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

mod common;

use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};
use tropgon_core::enumeration::{enumerate_maximal, table_row, Corpus};
use tropgon_core::graph::{
    gonality, gonality_certificate, min_edge_cut, reduce_divisor, scramble_order, Divisor, LowerWitness, MultiGraph,
    Scramble,
};
use tropgon_core::lattice::{apply_map, canonical_form, expected_gonality, lattice_width};
use tropgon_core::moduli::{
    cut_penalty, find_crystal, isosceles_truncation_dim, moduli_dim, shear_to_crystal, witness_d4, witness_d5,
};
use tropgon_core::triangulation::{build_beehive, doubly_connected, zigzag};
use tropgon_core::{LatticePoint, LatticePolygon, PolygonInvariants, Rational};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn corpora() -> &'static BTreeMap<usize, Corpus> {
    static CELL: std::sync::OnceLock<BTreeMap<usize, Corpus>> = std::sync::OnceLock::new();
    CELL.get_or_init(|| (2..=8).map(|g| (g, enumerate_maximal(g).unwrap())).collect())
}

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v
}

/// `g + 2g/(d-1) + 2d - 3`, floored, computed independently of the library.
fn floor_u(g: i64, d: i64) -> i64 {
    let num = g * (d - 1) + 2 * g + (2 * d - 3) * (d - 1);
    num.div_euclid(d - 1)
}

/// Lattice width by scanning every primitive direction in a box twice the naive bound.
fn width_oracle(p: &LatticePolygon) -> i64 {
    let (x0, x1, y0, y1) = p.bounding_box();
    let m = (x1 - x0).max(y1 - y0);
    let mut best = i64::MAX;
    for a in -2 * m..=2 * m {
        for b in -2 * m..=2 * m {
            if num_gcd(a, b) != 1 {
                continue;
            }
            let vals: Vec<i64> = p.vertices().iter().map(|v| a * v.x + b * v.y).collect();
            best = best.min(vals.iter().max().unwrap() - vals.iter().min().unwrap());
        }
    }
    best
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        num_gcd(b, a % b)
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let expected = [(3, 1), (4, 3), (5, 4), (6, 5), (8, 10)];
    let counts: Vec<(usize, usize)> = expected.iter().map(|&(g, _)| (g, enumerate_maximal(g).unwrap().len())).collect();
    let elapsed = start.elapsed();
    let bad: Vec<String> = expected
        .iter()
        .zip(&counts)
        .filter(|((_, want), (_, got))| want != got)
        .map(|((g, want), (_, got))| format!("g={g}: expected {want}, found {got}"))
        .collect();
    let detail = format!("counts {counts:?} in {elapsed:.2?}");
    if bad.is_empty() && elapsed < Duration::from_secs(60) {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", bad.join("; ")))
    }
}

fn criterion_2() -> Outcome {
    let table: [(usize, &[(i64, i64)]); 6] = [
        (2, &[(2, 3)]),
        (3, &[(2, 5), (3, 6)]),
        (4, &[(2, 7), (3, 9)]),
        (5, &[(2, 9), (3, 11), (4, 10)]),
        (6, &[(2, 11), (3, 13), (4, 13)]),
        (8, &[(2, 15), (3, 17), (4, 16)]),
    ];
    let mut bad = Vec::new();
    for (g, entries) in table {
        let row = table_row(g).map_err(|e| e.to_string())?;
        for &(d, want) in entries {
            match row.get(&d) {
                Some(&got) if got == want => {}
                got => bad.push(format!("g={g} d={d}: expected {want}, got {got:?}")),
            }
        }
    }
    if bad.is_empty() {
        Ok("all 15 entries match".into())
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_3() -> Outcome {
    let expected: [(usize, Vec<i64>); 3] = [
        (5, vec![11, 10, 10, 9]),
        (6, vec![13, 12, 12, 13, 12]),
        (8, vec![16, 15, 15, 17, 15, 11, 17, 14, 15, 14]),
    ];
    let mut bad = Vec::new();
    for (g, want) in expected {
        let got: Vec<i64> = corpora()[&g].polygons.iter().map(|p| moduli_dim(p).unwrap()).collect();
        if sorted(got.clone()) != sorted(want.clone()) {
            bad.push(format!("g={g}: expected {:?}, got {:?}", sorted(want), sorted(got)));
        }
    }
    if bad.is_empty() {
        Ok("genus 5, 6 and 8 multisets match".into())
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut check = |p: &LatticePolygon| {
        let g = p.genus() as i64;
        let d = expected_gonality(p);
        let dim = moduli_dim(p).unwrap();
        checked += 1;
        if dim > floor_u(g, d) {
            bad.push(format!("{} has dim {dim} > {}", canonical_form(p), floor_u(g, d)));
        }
    };
    for c in corpora().values() {
        c.polygons.iter().for_each(&mut check);
    }
    for g in (7..=49).step_by(3) {
        check(&witness_d4(g).unwrap());
    }
    for g in 12..=40 {
        check(&witness_d5(g).unwrap());
    }
    if bad.is_empty() {
        Ok(format!("{checked} polygons within the bound"))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    let cases = (7..=49)
        .step_by(3)
        .map(|g| (witness_d4(g).unwrap(), g, 4, 0))
        .chain((12..=40).map(|g| (witness_d5(g).unwrap(), g, 5, 1)));
    for (p, g, d, deficit) in cases {
        checked += 1;
        let dim = moduli_dim(&p).unwrap();
        if dim != floor_u(g, d) - deficit {
            bad.push(format!("d={d} g={g}: dim {dim}, expected {}", floor_u(g, d) - deficit));
        }
        match isosceles_truncation_dim(&p) {
            Ok(closed) if closed == Rational::integer(dim) => {}
            other => bad.push(format!("d={d} g={g}: closed form {other:?} vs {dim}")),
        }
    }
    if bad.is_empty() {
        Ok(format!("{checked} witnesses attain their targets"))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    for d in 3..=12i64 {
        for x in 1..=12i64 {
            for y in 1..=(d - 1).min(12) {
                // Independent evaluation of the penalty.
                let g = num_gcd(x, y);
                let oracle = Rational::new(x * (y - d) - (y - g), d - 1);
                let got = cut_penalty(x, y, d).unwrap();
                if got != oracle || got > Rational::integer(-1) {
                    bad.push(format!("({x},{y},{d}) -> {got}"));
                }
            }
        }
    }
    for (x, y) in [(2, 2), (3, 3)] {
        let got = cut_penalty(x, y, 5).unwrap();
        if got != Rational::new(-3, 2) {
            bad.push(format!("({x},{y},5) -> {got}, expected -3/2"));
        }
    }
    if bad.is_empty() {
        Ok("all short cuts cost at least 1; -3/2 at (2,2,5) and (3,3,5)".into())
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let trees = [
        MultiGraph::path(7),
        MultiGraph::new(6, vec![(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap(),
    ];
    for t in &trees {
        if gonality(t).unwrap() != 1 {
            bad.push(format!("tree {t:?} has gonality != 1"));
        }
    }
    for n in 2..=10 {
        let g = gonality(&MultiGraph::cycle(n)).unwrap();
        if g != 2 {
            bad.push(format!("C_{n} has gonality {g}"));
        }
    }
    let cube = MultiGraph::cube();
    let gc = gonality(&cube).unwrap();
    if gc != 4 {
        bad.push(format!("cube gonality {gc}"));
    }
    // Four eggs, the edges of one parallel class joining the two 4-cycles.
    let spokes = Scramble::new((0..4).map(|v| vec![v, v | 4]).collect());
    let order = scramble_order(&cube, &spokes).unwrap();
    if order != 4 {
        bad.push(format!("cube scramble order {order}"));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(5) {
        bad.push(format!("took {elapsed:.2?}"));
    }
    if bad.is_empty() {
        Ok(format!("trees 1, cycles 2, cube 4, scramble 4 in {elapsed:.2?}"))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut small = 0;
    for c in corpora().values() {
        for p in &c.polygons {
            if expected_gonality(p) > 3 {
                continue;
            }
            small += 1;
            let t = build_beehive(p).unwrap();
            let cert = gonality_certificate(p, &t).unwrap();
            if cert.exact() != Some(expected_gonality(p) as usize) || !cert.recheck().unwrap() {
                bad.push(format!("{}: {:?}", canonical_form(p), cert.conclusion));
            }
        }
    }
    let named = |g: usize, dim: i64| -> Vec<LatticePolygon> {
        corpora()[&g]
            .polygons
            .iter()
            .filter(|p| expected_gonality(p) == 4 && moduli_dim(p).unwrap() == dim)
            .cloned()
            .collect()
    };
    let fours: Vec<LatticePolygon> = [named(5, 10), named(6, 13), named(8, 17)].concat();
    if fours.len() != 4 {
        bad.push(format!("expected 4 named polygons, found {}", fours.len()));
    }
    for p in &fours {
        let t = build_beehive(p).unwrap();
        let cert = gonality_certificate(p, &t).unwrap();
        if cert.exact() != Some(4) || !cert.recheck().unwrap() {
            bad.push(format!("{}: {:?}", canonical_form(p), cert.conclusion));
        }
    }
    let crystal = common::width_three_family(1).remove(0);
    let t = build_beehive(&crystal).unwrap();
    let cert = gonality_certificate(&crystal, &t).unwrap();
    let from_crystal = matches!(cert.lower_witness, LowerWitness::Crystal { .. });
    if crystal.genus() < 27 || cert.exact() != Some(3) || !from_crystal || !cert.recheck().unwrap() {
        bad.push(format!("crystal {crystal}: {:?}", cert.conclusion));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(600) {
        bad.push(format!("took {elapsed:.2?}"));
    }
    if bad.is_empty() {
        Ok(format!(
            "{small} polygons with egon <= 3, {} named egon-4 beehives, crystal genus {} in {elapsed:.2?}",
            fours.len(),
            crystal.genus()
        ))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_9() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(9);
    let family = common::width_three_family(20);
    if family.len() != 20 {
        return Err(format!("only {} sample polygons", family.len()));
    }
    let mut bad = Vec::new();
    for p in &family {
        let q = common::scrambled_strip(p, &mut rng);
        let ok = width_oracle(&q) == 3
            && q.genus() >= 27
            && shear_to_crystal(&q, 3).is_some_and(|c| find_crystal(&c.polygon, 3) == Some(c.start));
        if !ok {
            bad.push(q.to_string());
        }
    }
    if bad.is_empty() {
        Ok("20 width-3 polygons of genus >= 27 contain a crystal after shearing".into())
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_10() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for c in corpora().values() {
        for p in &c.polygons {
            checked += 1;
            let w = width_oracle(p);
            if w != lattice_width(p).width {
                bad.push(format!("{p}: width {} vs oracle {w}", lattice_width(p).width));
            }
            if w * w > 4 * (p.genus() as i64 + 2) {
                bad.push(format!("{p}: width {w} too large"));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{checked} corpus polygons"))
    } else {
        Err(bad.join("; "))
    }
}

fn random_polygon(rng: &mut impl Rng) -> LatticePolygon {
    loop {
        let pts: Vec<LatticePoint> =
            (0..rng.gen_range(3..9)).map(|_| LatticePoint::new(rng.gen_range(-6..=6), rng.gen_range(-6..=6))).collect();
        if let Ok(p) = tropgon_core::lattice::convex_hull(&pts) {
            if p.dimension() == 2 {
                return p;
            }
        }
    }
}

/// Interior and boundary counts by testing every box point against the edges.
fn count_points(p: &LatticePolygon) -> (i64, i64) {
    let (x0, x1, y0, y1) = p.bounding_box();
    let vs = p.vertices();
    let (mut inner, mut boundary) = (0, 0);
    for x in x0..=x1 {
        for y in y0..=y1 {
            let signs: Vec<i64> = (0..vs.len())
                .map(|i| {
                    let (a, b) = (vs[i], vs[(i + 1) % vs.len()]);
                    (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x)
                })
                .collect();
            if signs.iter().all(|&s| s > 0) {
                inner += 1;
            } else if signs.iter().all(|&s| s >= 0) {
                boundary += 1;
            }
        }
    }
    (inner, boundary)
}

fn random_graph(rng: &mut impl Rng, n: usize) -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for _ in 0..rng.gen_range(0..2 * n) {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    MultiGraph::new(n, edges).unwrap()
}

fn bipartition_cut(g: &MultiGraph, a: &[usize], b: &[usize]) -> u32 {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|m| a.iter().all(|&v| m >> v & 1 == 1) && b.iter().all(|&v| m >> v & 1 == 0))
        .map(|m| g.edges().iter().filter(|&&(u, v)| (m >> u & 1) != (m >> v & 1)).count() as u32)
        .min()
        .unwrap()
}

fn best_interleaving(n: usize, m: usize) -> usize {
    let total = n + m - 2;
    (0u32..1 << total)
        .filter(|mask| mask.count_ones() as usize == m - 1)
        .map(|mask| {
            let mut far = vec![1usize; n];
            let mut k = 0;
            for b in 0..total {
                if mask >> b & 1 == 1 {
                    far[k] += 1;
                } else {
                    k += 1;
                }
            }
            far.iter().filter(|&&c| c >= 2).count()
        })
        .max()
        .unwrap()
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let mut bad = Vec::new();
    for _ in 0..200 {
        let p = random_polygon(&mut rng);
        let (i, b) = count_points(&p);
        if p.area_doubled() != 2 * i + b - 2 || p.genus() as i64 != i || p.boundary_points() as i64 != b {
            bad.push(format!("Pick fails on {p}"));
        }
    }
    for _ in 0..100 {
        let p = random_polygon(&mut rng);
        let q = apply_map(&p, &common::random_unimodular(&mut rng));
        let (a, b) = (PolygonInvariants::of(&p), PolygonInvariants::of(&q));
        let same = a.genus == b.genus
            && a.boundary_points == b.boundary_points
            && a.area_doubled == b.area_doubled
            && a.lattice_width == b.lattice_width
            && a.column_count == b.column_count
            && a.expected_gonality == b.expected_gonality
            && a.hyperelliptic == b.hyperelliptic
            && a.maximal == b.maximal
            && canonical_form(&p) == canonical_form(&q);
        if !same {
            bad.push(format!("invariants move under a map: {p} -> {q}"));
        }
    }
    for _ in 0..200 {
        let n = rng.gen_range(2..9);
        let g = random_graph(&mut rng, n);
        let chips: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        let q = rng.gen_range(0..n);
        let d = Divisor::from_dense(&chips);
        let r = reduce_divisor(&g, &d, q).unwrap();
        if r.degree() != d.degree() || reduce_divisor(&g, &r, q).unwrap() != r {
            bad.push(format!("reduction of {chips:?} at {q} on {g:?}"));
        }
    }
    for _ in 0..200 {
        let n = rng.gen_range(3..=12);
        let g = random_graph(&mut rng, n);
        let a = vec![rng.gen_range(0..n)];
        let b = vec![rng.gen_range(0..n)];
        let want = if a == b { None } else { Some(bipartition_cut(&g, &a, &b)) };
        if min_edge_cut(&g, &a, &b) != want {
            bad.push(format!("cut between {a:?} and {b:?} on {g:?}"));
        }
    }
    for n in 2..=6usize {
        for m in 2..=6usize {
            let tau: Vec<LatticePoint> = (0..n as i64).map(|x| LatticePoint::new(x, 0)).collect();
            let far: Vec<LatticePoint> = (0..m as i64).map(|x| LatticePoint::new(x + 2, 1)).collect();
            let t = zigzag(&tau, &far).unwrap();
            let got = doubly_connected(&t, &tau, &far);
            if got != n.min(m - 1) || got != best_interleaving(n, m) {
                bad.push(format!("zigzag n={n} m={m}: {got}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        bad.push(format!("took {elapsed:.2?}"));
    }
    if bad.is_empty() {
        Ok(format!("Pick, invariance, reduction, egg-cut and zigzag suites in {elapsed:.2?}"))
    } else {
        Err(bad.join("; "))
    }
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "corpus counts", criterion_1),
        (2, "dimension table", criterion_2),
        (3, "corpus dimensions", criterion_3),
        (4, "upper bound", criterion_4),
        (5, "witness equalities", criterion_5),
        (6, "cut penalty", criterion_6),
        (7, "gonality fixtures", criterion_7),
        (8, "sandwich certificates", criterion_8),
        (9, "crystal spot check", criterion_9),
        (10, "width bound", criterion_10),
        (11, "property suites", criterion_11),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {id} ({name}): PASS  {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id} ({name}): FAIL  {detail}");
            }
        }
    }
    println!("{} of 11 criteria pass", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
