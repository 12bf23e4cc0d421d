use super::*;

// Definition of q-reduced: effective away from q, and firing any non-empty set
// avoiding q drives some vertex of the set negative.
fn is_reduced(g: &MultiGraph, chips: &[i64], q: usize) -> bool {
    let n = g.vertex_count();
    let m = g.multiplicities();
    if (0..n).any(|v| v != q && chips[v] < 0) {
        return false;
    }
    let others: Vec<usize> = (0..n).filter(|&v| v != q).collect();
    for mask in 1u32..(1 << others.len()) {
        let set: Vec<usize> = (0..others.len()).filter(|i| mask >> i & 1 == 1).map(|i| others[i]).collect();
        let legal = set.iter().all(|&v| {
            let out: u32 = (0..n).filter(|w| !set.contains(w)).map(|w| m[v][w]).sum();
            chips[v] >= out as i64
        });
        if legal {
            return false;
        }
    }
    true
}

// Solve the reduced Laplacian system exactly; d and r are equivalent iff the
// firing vector with zero at q is integral.
fn equivalent_by_solve(g: &MultiGraph, d: &[i64], r: &[i64], q: usize) -> bool {
    use num_rational::Ratio;
    let n = g.vertex_count();
    let m = g.multiplicities();
    let free: Vec<usize> = (0..n).filter(|&v| v != q).collect();
    let k = free.len();
    let mut a: Vec<Vec<Ratio<i64>>> = free
        .iter()
        .map(|&v| {
            let deg: i64 = (0..n).filter(|&w| w != v).map(|w| m[v][w] as i64).sum();
            let mut row: Vec<Ratio<i64>> = free
                .iter()
                .map(|&w| Ratio::from_integer(if w == v { deg } else { -(m[v][w] as i64) }))
                .collect();
            row.push(Ratio::from_integer(d[v] - r[v]));
            row
        })
        .collect();
    for c in 0..k {
        let p = (c..k).find(|&i| a[i][c] != Ratio::from_integer(0)).unwrap();
        a.swap(c, p);
        let pivot = a[c][c];
        for x in &mut a[c][c..=k] {
            *x /= pivot;
        }
        for i in 0..k {
            if i != c {
                let f = a[i][c];
                let src = a[c].clone();
                for (x, &y) in a[i][c..=k].iter_mut().zip(&src[c..=k]) {
                    *x -= y * f;
                }
            }
        }
    }
    let sum_d: i64 = d.iter().sum();
    let sum_r: i64 = r.iter().sum();
    sum_d == sum_r && a.iter().all(|row| row[k].is_integer())
}

#[test]
fn triangle_reduction_keeps_degree() {
    let g = MultiGraph::cycle(3);
    let d = Divisor::from_dense(&[2, 0, 0]);
    let r = reduce_divisor(&g, &d, 1).unwrap();
    assert_eq!(r.degree(), 2);
    assert!(is_reduced(&g, &r.to_dense(3).unwrap(), 1));
}

#[test]
fn reduction_matches_oracles_on_small_graphs() {
    let graphs = vec![
        MultiGraph::cycle(4),
        MultiGraph::path(4),
        MultiGraph::new(4, vec![(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap(),
        MultiGraph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (0, 4)]).unwrap(),
    ];
    let divisors: Vec<Vec<i64>> = vec![
        vec![3, -1, 0, 1, 0],
        vec![-2, 2, 1, 0, 1],
        vec![0, 0, 0, 2, -1],
        vec![1, 1, 1, 1, 1],
        vec![-1, -1, 3, 0, 0],
    ];
    for g in &graphs {
        let n = g.vertex_count();
        for d in &divisors {
            let d = &d[..n];
            for q in 0..n {
                let r = reduce_divisor(g, &Divisor::from_dense(d), q).unwrap().to_dense(n).unwrap();
                assert!(is_reduced(g, &r, q), "{d:?} at {q} gave {r:?}");
                assert!(equivalent_by_solve(g, d, &r, q), "{d:?} at {q} gave {r:?}");
            }
        }
    }
}

#[test]
fn reduce_rejects_disconnected() {
    let g = MultiGraph::new(3, vec![(0, 1)]).unwrap();
    assert_eq!(reduce_divisor(&g, &Divisor::default(), 0), Err(Error::Disconnected));
}

#[test]
fn rank_examples() {
    let cube = MultiGraph::cube();
    // One colour class of the bipartition: pairwise non-adjacent vertices.
    let even = Divisor::from_vertices(&[0, 3, 5, 6]);
    assert!(has_positive_rank(&cube, &even).unwrap());
    assert!(!has_positive_rank(&cube, &Divisor::default()).unwrap());
    assert!(!has_positive_rank(&MultiGraph::cycle(5), &Divisor::from_vertices(&[0])).unwrap());
    assert!(has_positive_rank(&MultiGraph::cycle(5), &Divisor::from_vertices(&[0, 2])).unwrap());
    assert!(has_positive_rank(&MultiGraph::path(5), &Divisor::from_vertices(&[4])).unwrap());
}

#[test]
fn gonality_examples() {
    assert_eq!(gonality(&MultiGraph::path(6)).unwrap(), 1);
    let star = MultiGraph::new(5, vec![(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
    assert_eq!(gonality(&star).unwrap(), 1);
    for n in 2..=10 {
        assert_eq!(gonality(&MultiGraph::cycle(n)).unwrap(), 2, "C_{n}");
    }
    assert_eq!(gonality(&MultiGraph::cube()).unwrap(), 4);
    let k4 = MultiGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert_eq!(gonality(&k4).unwrap(), 3);
    assert!(matches!(gonality(&MultiGraph::cycle(15)), Err(Error::CapExceeded(_))));
}

fn spokes() -> Scramble {
    // The four edges in the direction of bit 4 pair the outer and inner squares.
    Scramble::new(vec![vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]])
}

#[test]
fn cube_scramble_has_order_four() {
    let cube = MultiGraph::cube();
    assert_eq!(scramble_order(&cube, &spokes()).unwrap(), 4);
    let bad = Scramble::new(vec![vec![0, 7]]);
    assert_eq!(scramble_order(&cube, &bad), Err(Error::BadEgg(0)));
    let whole = Scramble::new(vec![(0..8).collect()]);
    assert_eq!(scramble_order(&cube, &whole).unwrap(), 1);
    assert_eq!(egg_cut_number(&cube, &whole.eggs), None);
}

#[test]
fn search_examples() {
    assert_eq!(search_scramble(&MultiGraph::path(5), 2, 5).unwrap(), None);
    let s = search_scramble(&MultiGraph::cube(), 4, 2).unwrap().unwrap();
    assert!(scramble_order(&MultiGraph::cube(), &s).unwrap() >= 4);
    assert_eq!(search_scramble(&MultiGraph::cube(), 5, 3).unwrap(), None);
}

#[test]
fn loopless_model_subdivides_loops() {
    let g = MultiGraph::new(2, vec![(0, 1), (1, 1)]).unwrap();
    let m = g.loopless_model();
    assert_eq!(m.vertex_count(), 3);
    assert_eq!(m.edges(), &[(0, 1), (1, 2), (1, 2)]);
    assert_eq!(m.betti(), g.betti());
}

#[test]
fn graph_json_round_trip() {
    let g: MultiGraph = serde_json::from_str(r#"{"n":3,"edges":[[0,1],[1,2],[2,2]]}"#).unwrap();
    assert_eq!(g.edge_count(), 3);
    assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"n":3,"edges":[[0,1],[1,2],[2,2]]}"#);
    assert!(serde_json::from_str::<MultiGraph>(r#"{"n":2,"edges":[[0,5]]}"#).is_err());
    let s: Scramble = serde_json::from_str(r#"{"eggs":[[0,1],[2]]}"#).unwrap();
    assert_eq!(s.eggs.len(), 2);
}

fn random_connected(rng: &mut impl rand::Rng, n: usize, extra: usize) -> MultiGraph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u.min(v), u.max(v)));
        }
    }
    MultiGraph::new(n, edges).unwrap()
}

// Minimum over all vertex bipartitions separating a from b of the crossing edge count.
fn cut_by_bipartitions(g: &MultiGraph, a: &[usize], b: &[usize]) -> u32 {
    let n = g.vertex_count();
    let mut best = u32::MAX;
    for mask in 0u32..(1 << n) {
        let side = |v: usize| mask >> v & 1 == 1;
        if a.iter().all(|&v| side(v)) && b.iter().all(|&v| !side(v)) {
            let c = g.edges().iter().filter(|&&(u, v)| side(u) != side(v)).count() as u32;
            best = best.min(c);
        }
    }
    best
}

#[test]
fn min_cut_matches_bipartition_oracle() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(3..=12);
        let extra = rng.gen_range(0..2 * n);
        let g = random_connected(&mut rng, n, extra);
        let a = vec![rng.gen_range(0..n)];
        let mut b = vec![rng.gen_range(0..n)];
        if rng.gen_bool(0.5) {
            b.push(rng.gen_range(0..n));
        }
        let flow = min_edge_cut(&g, &a, &b);
        if b.contains(&a[0]) {
            assert_eq!(flow, None);
        } else {
            assert_eq!(flow, Some(cut_by_bipartitions(&g, &a, &b)), "{g:?} {a:?} {b:?}");
        }
    }
}

#[test]
fn scramble_number_bounded_by_gonality() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for _ in 0..30 {
        let n = rng.gen_range(3..=7);
        let extra = rng.gen_range(0..n);
        let g = random_connected(&mut rng, n, extra);
        let gon = gonality(&g).unwrap();
        if let Some(s) = search_scramble(&g, gon + 1, n).unwrap() {
            panic!("{g:?} has gonality {gon} but scramble {s:?}");
        }
    }
}
