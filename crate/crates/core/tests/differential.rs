//! Solver against brute force, and structural properties of the helpers.

use proptest::prelude::*;

use ifvs::forest::{binarize, root_forest, Color};
use ifvs::generate::generate;
use ifvs::graph::{Graph, VertexSet};
use ifvs::oracle::{brute_min_fvs, brute_min_ifvs, brute_min_ifvs_extension, check_ifvs};
use ifvs::{decide_prefix_chain, min_ifvs_given_fvs, solve_ifvs, subdivide, Decision, SolverOptions};

/// `(n, m, seed)` for a uniform graph with at most `max_n` vertices.
fn graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(move |n| (Just(n), 0..=max_m.min(n * (n - 1) / 2), any::<u64>()))
        .prop_map(|(n, m, seed)| generate(n, m, seed).unwrap())
}

/// A graph with a minimum FVS padded by the vertices picked in `extra`.
fn graph_with_fvs(max_n: usize, max_m: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    (graph(max_n, max_m), prop::collection::vec(any::<prop::sample::Index>(), 0..3)).prop_map(|(g, extra)| {
        let mut f = brute_min_fvs(&g).unwrap();
        for i in extra {
            f.insert(i.index(g.n()));
        }
        (g, f)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn extension_matches_oracle((g, f) in graph_with_fvs(10, 20)) {
        let out = min_ifvs_given_fvs(&g, &f, false).unwrap();
        let truth = brute_min_ifvs_extension(&g, &f).unwrap();
        prop_assert_eq!(out.size(), truth.map(|t| t.len()));
        if let Some(c) = out.certificate {
            prop_assert!(check_ifvs(&g, &c.to_vec()));
        }
    }

    #[test]
    fn prefix_chain_matches_oracle_and_never_shrinks(g in graph(9, 16)) {
        let opts = SolverOptions::default();
        let chain = decide_prefix_chain(&g, g.n(), &opts);
        let steps = solve_ifvs(&g, g.n(), &opts).steps;
        prop_assert_eq!(chain.len(), steps.len());
        let mut previous = Some(0);
        for (&size, step) in chain.iter().zip(&steps) {
            let prefix = VertexSet::from_iter_in(g.n(), 0..step.vertices);
            let (sub, _) = g.induced_subgraph(&prefix);
            prop_assert_eq!(size, brute_min_ifvs(&sub).unwrap().map(|c| c.len()), "prefix {}", step.vertices);
            match (previous, size) {
                (Some(p), Some(s)) => prop_assert!(p <= s),
                (None, s) => prop_assert_eq!(s, None),
                (Some(_), None) => {}
            }
            previous = size;
        }
    }

    #[test]
    fn driver_agrees_for_every_budget(g in graph(9, 16), seed in prop::option::of(any::<u64>())) {
        let truth = brute_min_ifvs(&g).unwrap().map(|c| c.len());
        let opts = SolverOptions { shuffle_seed: seed, ..Default::default() };
        for k in 0..=g.n() {
            let out = solve_ifvs(&g, k, &opts);
            match out.decision {
                Decision::Yes => {
                    let cert = out.certificate.unwrap().to_vec();
                    prop_assert!(cert.len() <= k && check_ifvs(&g, &cert));
                    prop_assert!(truth.is_some_and(|t| t <= k));
                }
                Decision::NoWithinK => prop_assert!(truth.is_none_or(|t| t > k)),
                Decision::Absent => prop_assert_eq!(truth, None),
            }
        }
        if let Some(t) = truth {
            prop_assert_eq!(solve_ifvs(&g, t, &opts).certificate.map(|c| c.len()), Some(t));
        }
    }

    #[test]
    fn larger_fvs_keeps_the_optimum(g in graph(10, 18), pick in any::<prop::sample::Index>()) {
        if let Some(c) = brute_min_ifvs(&g).unwrap() {
            let mut f = c.clone();
            f.insert(pick.index(g.n()));
            let out = min_ifvs_given_fvs(&g, &f, false).unwrap();
            prop_assert_eq!(out.size(), Some(c.len()));
        }
    }

    #[test]
    fn reduction_identity(g in graph(7, 10)) {
        let (sub, _) = subdivide(&g);
        let ifvs = brute_min_ifvs(&sub).unwrap().map(|c| c.len());
        prop_assert_eq!(ifvs, Some(brute_min_fvs(&g).unwrap().len()));
    }

    #[test]
    fn binarize_shape((g, f) in graph_with_fvs(14, 20)) {
        let rooted = root_forest(&g, &f).unwrap();
        let h = binarize(&rooted);
        prop_assert_eq!(h.contract(g.n()), rooted.clone());
        let rest = g.n() - f.len();
        prop_assert_eq!(h.black_count(), rest);
        prop_assert!(h.white_count() <= 2 * rest && h.len() <= 3 * rest);
        for node in h.nodes() {
            prop_assert!(node.children.len() <= 2);
            if node.color == Color::White {
                prop_assert_eq!(node.children.len(), 2);
            }
        }
        // Leaves of H are exactly the leaves of the rooted forest.
        let leaves: Vec<usize> = h
            .nodes()
            .iter()
            .filter(|n| n.children.is_empty())
            .map(|n| n.equal_to)
            .collect();
        let expected: Vec<usize> = rooted.members().iter().filter(|&v| rooted.children(v).is_empty()).collect();
        prop_assert_eq!(leaves, expected);
    }

    #[test]
    fn components_partition_vertices(g in graph(14, 20)) {
        let comps = g.connected_components();
        let mut seen = VertexSet::new(g.n());
        for c in &comps {
            prop_assert!(!c.is_empty());
            prop_assert!(seen.intersection(c).is_empty());
            seen = seen.union(c);
        }
        prop_assert_eq!(seen, g.vertices());
        prop_assert_eq!(g.is_acyclic(), g.m() + comps.len() == g.n());
    }

    #[test]
    fn induced_on_everything_is_identity(g in graph(14, 30)) {
        let (sub, map) = g.induced_subgraph(&g.vertices());
        prop_assert_eq!(&sub, &g);
        prop_assert_eq!(map, (0..g.n()).collect::<Vec<_>>());
    }
}

#[test]
fn acyclicity_matches_edge_count_on_many_graphs() {
    for seed in 0..1000u64 {
        let n = 1 + seed as usize % 12;
        let m = (seed as usize * 5 % 17).min(n * (n - 1) / 2);
        let g = generate(n, m, seed).unwrap();
        assert_eq!(g.is_acyclic(), g.m() + g.connected_components().len() == g.n(), "{g:?}");
        assert_eq!(g.is_acyclic(), brute_min_fvs(&g).unwrap().is_empty(), "{g:?}");
    }
}

#[test]
fn dense_small_graphs_with_fallbacks_agree() {
    // Dense graphs exercise the exact search: many candidates fail the gate.
    let mut fallbacks = 0;
    for seed in 0..200u64 {
        let n = 6 + seed as usize % 5;
        let g = generate(n, 2 * n, seed).unwrap();
        let f = brute_min_fvs(&g).unwrap();
        let out = min_ifvs_given_fvs(&g, &f, false).unwrap();
        fallbacks += out.stats.fallbacks;
        assert_eq!(out.size(), brute_min_ifvs(&g).unwrap().map(|c| c.len()), "seed {seed}");
    }
    assert!(fallbacks > 0);
}
