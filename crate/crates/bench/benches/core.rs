use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use std::sync::Arc;
use tropgon_core::enumeration::enumerate_maximal;
use tropgon_core::graph::{gonality, gonality_certificate, reduce_divisor, search_scramble, Divisor, MultiGraph};
use tropgon_core::lattice::{canonical_form, lattice_width};
use tropgon_core::moduli::{moduli_dim, width_family};
use tropgon_core::triangulation::{build_beehive, regular_subdivision, HeightFunction, PointSet};
use tropgon_core::{LatticePolygon, Rational};

fn kite() -> LatticePolygon {
    LatticePolygon::from_coords(&[(-2, 2), (0, 0), (2, 0), (0, 4)]).unwrap()
}

fn polygons(c: &mut Criterion) {
    let long = width_family(3, 27, 1).remove(0);
    c.bench_function("lattice_width/genus 28", |b| b.iter(|| lattice_width(black_box(&long))));
    c.bench_function("canonical_form/genus 28", |b| b.iter(|| canonical_form(black_box(&long))));
    c.bench_function("moduli_dim/genus 28", |b| b.iter(|| moduli_dim(black_box(&long))));
    let mut g = c.benchmark_group("enumerate_maximal");
    g.sample_size(10);
    for genus in [5, 8] {
        g.bench_function(format!("genus {genus}"), |b| b.iter(|| enumerate_maximal(black_box(genus))));
    }
    g.finish();
}

fn triangulations(c: &mut Criterion) {
    let p = kite();
    let ps = Arc::new(PointSet::of_polygon(&p));
    let h = HeightFunction::from_fn(&ps, |v| Rational::integer(v.x * v.x + v.y * v.y));
    c.bench_function("regular_subdivision/kite", |b| b.iter(|| regular_subdivision(ps.clone(), black_box(&h))));
    c.bench_function("build_beehive/kite", |b| b.iter(|| build_beehive(black_box(&p))));
    let long = width_family(3, 27, 1).remove(0);
    let mut g = c.benchmark_group("build_beehive");
    g.sample_size(10);
    g.bench_function("genus 28", |b| b.iter(|| build_beehive(black_box(&long))));
    g.finish();
}

fn graphs(c: &mut Criterion) {
    let cube = MultiGraph::cube();
    c.bench_function("gonality/cube", |b| b.iter(|| gonality(black_box(&cube))));
    let d = Divisor::from_dense(&[3, -1, 0, 2, -2, 1, 0, 1]);
    c.bench_function("reduce_divisor/cube", |b| b.iter(|| reduce_divisor(&cube, black_box(&d), 0)));
    c.bench_function("search_scramble/cube", |b| b.iter(|| search_scramble(black_box(&cube), 4, 2)));
    let p = kite();
    let t = build_beehive(&p).unwrap();
    c.bench_function("gonality_certificate/kite", |b| b.iter(|| gonality_certificate(&p, black_box(&t))));
}

criterion_group!(benches, polygons, triangulations, graphs);
criterion_main!(benches);
