mod common;

use std::collections::HashSet;

use bcolor::bcol::bcoloring_on;
use bcolor::decomposition::{
    best_decomposition, linear_decomposition, DecompositionAnalysis, Effort,
};
use bcolor::fall::{build_fall_table, fallcoloring_on};
use bcolor::graph::Coloring;
use bcolor::oracle::{partial_fall_signatures, Oracle};
use bcolor::vc::min_vertex_cover;
use bcolor::{is_b_coloring, is_fall_coloring, solve_bcoloring_vc, Graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn is_cover(g: &Graph, s: &[usize]) -> bool {
    g.edges().all(|(u, v)| s.contains(&u) || s.contains(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dp_matches_oracle(g in arb_graph(7)) {
        let a = DecompositionAnalysis::new(&g, &best_decomposition(&g, Effort::Heuristic).unwrap()).unwrap();
        let oracle = Oracle::default();
        for k in 1..=g.vertex_count() {
            let out = bcoloring_on(&g, &a, k, true).unwrap();
            prop_assert_eq!(out.answer, oracle.bcoloring(&g, k).unwrap().is_some(), "k={}", k);
            if let Some(w) = out.witness {
                prop_assert!(is_b_coloring(&g, &w.coloring));
            }
            let fall = fallcoloring_on(&g, &a, k, true).unwrap();
            prop_assert_eq!(fall.answer, oracle.fallcoloring(&g, k).unwrap().is_some(), "fall k={}", k);
            if let Some(w) = fall.witness {
                prop_assert!(is_fall_coloring(&g, &w));
            }
        }
    }

    #[test]
    fn vc_matches_oracle(g in arb_graph(8)) {
        let oracle = Oracle::default();
        for k in 1..=g.vertex_count() {
            let vc = solve_bcoloring_vc(&g, k).unwrap();
            prop_assert_eq!(vc.is_some(), oracle.bcoloring(&g, k).unwrap().is_some(), "k={}", k);
            if let Some(w) = vc {
                prop_assert!(is_b_coloring(&g, &w.coloring));
                prop_assert_eq!(w.b_vertices.len(), k);
            }
        }
    }

    #[test]
    fn vc_matches_dp(g in arb_graph(8)) {
        let a = DecompositionAnalysis::new(&g, &best_decomposition(&g, Effort::Heuristic).unwrap()).unwrap();
        for k in 1..=g.vertex_count() {
            prop_assert_eq!(
                solve_bcoloring_vc(&g, k).unwrap().is_some(),
                bcoloring_on(&g, &a, k, false).unwrap().answer,
                "k={}", k
            );
        }
    }

    #[test]
    fn min_cover_is_minimum(g in arb_graph(10)) {
        let s = min_vertex_cover(&g);
        prop_assert!(is_cover(&g, &s));
        let n = g.vertex_count();
        for mask in 0u32..(1 << n) {
            if (mask.count_ones() as usize) < s.len() {
                let sub: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                prop_assert!(!is_cover(&g, &sub));
            }
        }
    }

    #[test]
    fn answers_do_not_depend_on_the_decomposition(g in arb_graph(6), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = g.vertex_count();
        let d1 = common::random_tree(&mut rng, n);
        let d2 = linear_decomposition(&g, &common::random_order(&mut rng, n)).unwrap();
        let a1 = DecompositionAnalysis::new(&g, &d1).unwrap();
        let a2 = DecompositionAnalysis::new(&g, &d2).unwrap();
        for k in 1..=n {
            prop_assert_eq!(bcoloring_on(&g, &a1, k, false).unwrap().answer, bcoloring_on(&g, &a2, k, false).unwrap().answer);
            prop_assert_eq!(fallcoloring_on(&g, &a1, k, false).unwrap().answer, fallcoloring_on(&g, &a2, k, false).unwrap().answer);
        }
    }

    #[test]
    fn chi_b_at_most_max_degree_plus_one(g in arb_graph(7)) {
        prop_assert!(Oracle::default().chi_b(&g).unwrap() <= g.max_degree() + 1);
    }

    #[test]
    fn checkers_ignore_color_names(g in arb_graph(6), seed in any::<u64>()) {
        let oracle = Oracle::default();
        let n = g.vertex_count();
        let k = 1 + (seed as usize) % n;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rename = common::random_order(&mut rng, k);
        for found in [oracle.bcoloring(&g, k).unwrap(), oracle.fallcoloring(&g, k).unwrap()].into_iter().flatten() {
            let renamed = Coloring::new(found.colors().iter().map(|&c| rename[c - 1] + 1).collect(), k).unwrap();
            prop_assert_eq!(is_b_coloring(&g, &found), is_b_coloring(&g, &renamed));
            prop_assert_eq!(is_fall_coloring(&g, &found), is_fall_coloring(&g, &renamed));
        }
    }
}

#[test]
fn fall_tables_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..80 {
        let n = 1 + i % 5;
        let g = common::random_graph(&mut rng, n);
        let d = common::random_tree(&mut rng, n);
        let a = DecompositionAnalysis::new(&g, &d).unwrap();
        for k in 1..=4 {
            let table = build_fall_table(&a, k, false).unwrap();
            for t in 0..a.node_count() {
                let dp: HashSet<_> = table.signatures(t).iter().cloned().collect();
                let bf = partial_fall_signatures(&g, &a, t, k).unwrap();
                assert_eq!(dp, bf, "{g:?} node {t} k={k}");
            }
        }
    }
}

#[test]
fn vertex_cover_examples_from_corpus() {
    for g in common::corpus() {
        let s = min_vertex_cover(&g);
        assert!(is_cover(&g, &s));
        // Too many colors for the cover size is always a no.
        assert!(solve_bcoloring_vc(&g, s.len() + 2).unwrap().is_none());
    }
}
