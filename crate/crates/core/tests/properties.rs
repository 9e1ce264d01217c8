use mlt_core::graph::{chromatic_number, clique_number, is_chordal, parse_graph, treewidth_upper};
use mlt_core::linalg::{ff_rank, real_rank, solve_dense, FieldMatrix, Prime, RealMatrix, DEFAULT_RANK_TOL};
use mlt_core::rigidity::{edge_split, rank_of_graph, vertex_addition};
use mlt_core::splitting::{birank_check, n_core, n_core_with_priority};
use mlt_core::{BipartiteGraph, Graph, RandomSource, Settings};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn int_matrix(max_dim: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| prop::collection::vec(prop::collection::vec(-range..=range, c), r))
}

fn graph_strategy(max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_m).prop_flat_map(|m| {
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
        let n = pairs.len();
        prop::collection::vec(any::<bool>(), n).prop_map(move |keep| {
            Graph::new(m, pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e)).unwrap()
        })
    })
}

/// Rank by exact elimination over the rationals.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone() / pivot.clone();
                let pivot_row = a[rank].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row).skip(c) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ff_rank_matches_rational_oracle(rows in int_matrix(12, 4)) {
        let m = FieldMatrix::from_i64_rows(Prime::P61.modulus(), &rows);
        prop_assert_eq!(ff_rank(&m), rational_rank(&rows));
    }

    #[test]
    fn ff_rank_transpose_shuffle_scale(rows in int_matrix(8, 1000), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::Rng;
        let p = Prime::P61.modulus();
        let m = FieldMatrix::from_i64_rows(p, &rows);
        let r = ff_rank(&m);
        prop_assert_eq!(r, ff_rank(&m.transpose()));
        let mut rng = RandomSource::new(seed).rng();
        let mut shuffled = rows.clone();
        shuffled.shuffle(&mut rng);
        for row in &mut shuffled {
            let s: i64 = rng.random_range(1..1000) * if rng.random_bool(0.5) { 1 } else { -1 };
            row.iter_mut().for_each(|x| *x *= s);
        }
        prop_assert_eq!(r, ff_rank(&FieldMatrix::from_i64_rows(p, &shuffled)));
        prop_assert_eq!(r, ff_rank(&FieldMatrix::from_i64_rows(Prime::P62.modulus(), &rows)));
    }

    #[test]
    fn real_rank_agrees_on_integer_matrices(rows in int_matrix(6, 3)) {
        let real: Vec<Vec<f64>> = rows.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        let m = RealMatrix::from_rows(&real).unwrap();
        prop_assert_eq!(real_rank(&m, DEFAULT_RANK_TOL).unwrap(), rational_rank(&rows));
    }

    #[test]
    fn solver_residual_on_well_conditioned_systems(n in 1usize..12, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = RandomSource::new(seed).rng();
        let mut a = RealMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] = rng.random_range(-1.0..1.0);
            }
            a[(i, i)] += if rng.random_bool(0.5) { 2.0 * n as f64 } else { -2.0 * n as f64 };
        }
        let b: Vec<f64> = (0..n).map(|_| rng.random_range(-10.0..10.0)).collect();
        let bmax = b.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let sol = solve_dense(&a, &b).unwrap();
        prop_assert!(sol.residual <= 1e-8 * bmax.max(1.0));
    }

    #[test]
    fn n_core_is_order_independent(g in graph_strategy(10), n in 0usize..5, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut priority: Vec<usize> = g.vertices().collect();
        priority.shuffle(&mut RandomSource::new(seed).rng());
        prop_assert_eq!(n_core(&g, n).remaining, n_core_with_priority(&g, n, &priority).remaining);
    }

    #[test]
    fn henneberg_moves_keep_rank(g in graph_strategy(7), picks in prop::collection::vec(any::<prop::sample::Index>(), 4)) {
        let s = Settings::default();
        let r = rank_of_graph(&g, &s);
        let m = g.vertex_count();
        let mut nb: Vec<usize> = picks.iter().take(r.saturating_sub(1)).map(|i| i.index(m)).collect();
        nb.sort_unstable();
        nb.dedup();
        let added = vertex_addition(&g, r, &nb).unwrap();
        prop_assert!(rank_of_graph(&added, &s) <= r);
        if let Some(&(u, v)) = g.edges().first() {
            let mut extra: Vec<usize> = picks.iter().map(|i| i.index(m)).filter(|&w| w != u && w != v).collect();
            extra.sort_unstable();
            extra.dedup();
            extra.truncate(r.saturating_sub(2));
            let split = edge_split(&g, r, (u, v), &extra).unwrap();
            prop_assert!(rank_of_graph(&split, &s) <= r);
        }
    }

    #[test]
    fn deleting_an_edge_never_raises_rank(g in graph_strategy(7), pick in any::<prop::sample::Index>()) {
        let s = Settings::default();
        if let Some(&(u, v)) = g.edges().get(pick.index(g.edge_count().max(1))) {
            prop_assert!(rank_of_graph(&g.without_edge(u, v).unwrap(), &s) <= rank_of_graph(&g, &s));
        }
    }

    #[test]
    fn birank_vertex_addition(
        m1 in 1usize..4, m2 in 1usize..5, r1 in 1usize..3, r2 in 1usize..3,
        bits in prop::collection::vec(any::<bool>(), 16), new_nb in prop::collection::vec(any::<prop::sample::Index>(), 3),
        seed in any::<u64>(),
    ) {
        let left: Vec<usize> = (0..m1).collect();
        let right: Vec<usize> = (m1..m1 + m2).collect();
        let edges: Vec<(usize, usize)> = left.iter().flat_map(|&i| right.iter().map(move |&j| (i, j)))
            .zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e).collect();
        let b = BipartiteGraph::new(&left, &right, &edges).unwrap();
        let rng = RandomSource::new(seed);
        if birank_check(&b, r1, r2, 3, Prime::P61, &rng).member {
            let v = m1 + m2;
            let mut nb: Vec<usize> = new_nb.iter().take(r2).map(|i| right[i.index(m2)]).collect();
            nb.sort_unstable();
            nb.dedup();
            let mut left2 = left.clone();
            left2.push(v);
            let mut edges2 = edges.clone();
            edges2.extend(nb.iter().map(|&j| (v, j)));
            let b2 = BipartiteGraph::new(&left2, &right, &edges2).unwrap();
            prop_assert!(birank_check(&b2, r1, r2, 3, Prime::P61, &rng.child(1)).member);
        }
    }

    #[test]
    fn render_parse_round_trip(g in graph_strategy(9)) {
        prop_assert_eq!(parse_graph(&g.render()).unwrap(), g);
    }

    #[test]
    fn classical_invariant_relations(g in graph_strategy(9)) {
        let omega = clique_number(&g, 64).size;
        let tw = treewidth_upper(&g);
        prop_assert!(omega <= tw.width + 1);
        if is_chordal(&g) {
            prop_assert_eq!(omega, tw.width + 1);
        }
        prop_assert!(chromatic_number(&g, 32).colors >= omega);
        let all: Vec<usize> = g.vertices().collect();
        prop_assert_eq!(g.induced_subgraph(&all).unwrap().0, g);
    }
}

#[test]
fn rational_oracle_sanity() {
    assert_eq!(rational_rank(&[vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(rational_rank(&[vec![0, 0], vec![0, 0]]), 0);
    assert!(BigRational::one() > BigRational::zero());
}
