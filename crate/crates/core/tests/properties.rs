//! Randomized properties checked against the brute-force oracles.

mod common;

use proptest::prelude::*;
use reachkit::graph::{parse_graph, serialize_graph, Format};
use reachkit::independence::{critical_difference, independence_number};
use reachkit::matching::maximum_matching;
use reachkit::spectral::adjacency_determinant;
use reachkit::structure::{gallai_edmonds, is_konig_egervary};
use reachkit::{Caps, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn sparse_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), 1.0..3.5f64)
        .prop_map(|(n, seed, deg)| common::random_graph(&mut common::rng(seed), n, n, deg))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = serialize_graph(&g, Format::Graph6);
        prop_assert_eq!(parse_graph(&text, Format::Graph6).unwrap(), g.clone());
        let text = serialize_graph(&g, Format::EdgeList);
        prop_assert_eq!(parse_graph(&text, Format::EdgeList).unwrap(), g);
    }

    #[test]
    fn matching_and_alpha_match_oracles(g in graph(11)) {
        prop_assert_eq!(maximum_matching(&g).size(), common::mu(&g));
        prop_assert_eq!(independence_number(&g, &Caps::default()).unwrap(), common::alpha(&g));
    }

    #[test]
    fn saturated_d_vertices_reach_unsaturated(g in sparse_graph(12)) {
        let d = gallai_edmonds(&g).d;
        prop_assert_eq!(common::to_set(&d), common::gallai_edmonds(&g).0);
        for m in common::max_matchings(&g) {
            for &x in d.iter() {
                let saturated = m.iter().any(|&(u, v)| u == x || v == x);
                prop_assert!(!saturated || common::has_mn_path_to_unsaturated(&g, &m, x), "vertex {} of {}", x, serialize_graph(&g, Format::Graph6));
            }
        }
    }

    #[test]
    fn d_over_independent_sets_equals_d_over_all_sets(g in graph(12)) {
        let d = critical_difference(&g, &Caps::default()).unwrap().d;
        prop_assert_eq!(d, common::d_all_subsets(&g));
        prop_assert_eq!(d, common::critical_independent_sets(&g).0);
    }

    #[test]
    fn determinant_matches_expansion(g in graph(8)) {
        prop_assert_eq!(adjacency_determinant(&g), common::det_by_permutations(&g).into());
    }

    #[test]
    fn ke_verdict_matches_alpha_plus_mu(g in sparse_graph(11)) {
        let caps = Caps { mis_vertices: 0, ..Caps::default() };
        let v = is_konig_egervary(&g, &caps).unwrap();
        prop_assert_eq!(v.konig_egervary, common::alpha(&g) + common::mu(&g) == g.order());
    }
}
