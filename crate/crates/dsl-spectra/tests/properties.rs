//! Property tests for structural invariants.

mod common;

use common::{random_connected, random_graph, rng};
use dsl_spectra::{
    bipartite_double_cover, dsl_matrix, encode_graph6, eta, fractional_matching_number_brute,
    fractional_matching_number_fast, max_deficiency_brute, optimal_fractional_matching,
    parse_edgelist, parse_graph6, quotient_matrix, Graph, Partition, VertexSet,
};
use proptest::prelude::*;

/// Arbitrary graph on up to 10 vertices from an explicit edge bitmap.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10)
        .prop_flat_map(|n| {
            let pairs = n * (n.saturating_sub(1)) / 2;
            (Just(n), prop::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("in-range edges")
        })
}

/// Connected graph on 2..=10 vertices via a seeded generator.
fn arb_connected() -> impl Strategy<Value = Graph> {
    (2usize..=10, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, seed, p)| {
        let mut r = rng(seed);
        random_connected(&mut r, n, p)
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph()) {
        let back = g.complement().complement();
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn complement_edge_counts_sum(g in arb_graph()) {
        let n = g.vertex_count();
        let total = n * (n - 1) / 2;
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), total);
    }

    #[test]
    fn join_edge_count(a in arb_graph(), b in arb_graph()) {
        let j = a.join(&b);
        prop_assert_eq!(
            j.edge_count(),
            a.edge_count() + b.edge_count() + a.vertex_count() * b.vertex_count()
        );
        prop_assert!(j.is_connected());
    }

    #[test]
    fn distances_satisfy_triangle_inequality(g in arb_connected()) {
        let d = dsl_spectra::distance_matrix(&g).expect("connected");
        let n = d.order();
        for i in 0..n {
            prop_assert_eq!(d.get(i, i), 0);
            for j in 0..n {
                prop_assert_eq!(d.get(i, j), d.get(j, i));
                for k in 0..n {
                    prop_assert!(d.get(i, j) <= d.get(i, k) + d.get(k, j));
                }
            }
        }
    }

    #[test]
    fn graph6_roundtrip(g in arb_graph()) {
        let s = encode_graph6(&g).expect("order fits short form");
        let back = parse_graph6(&s).expect("own encoding parses");
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn edgelist_roundtrip(g in arb_graph()) {
        let text = dsl_spectra::format_edgelist(&g);
        let back = parse_edgelist(&text).expect("own encoding parses");
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn eta_row_sum_sandwich(g in arb_connected()) {
        let q = dsl_matrix(&g).expect("connected");
        let n = q.order();
        let min = (0..n).map(|i| q.row_sum(i)).min().expect("nonempty") as f64;
        let max = (0..n).map(|i| q.row_sum(i)).max().expect("nonempty") as f64;
        let e = eta(&g).expect("connected");
        prop_assert!(min - 1e-7 <= e && e <= max + 1e-7, "eta {e} outside [{min}, {max}]");
    }

    #[test]
    fn eta_strictly_decreases_when_an_edge_is_added(g in arb_connected()) {
        let n = g.vertex_count();
        let missing = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .find(|&(u, v)| !g.has_edge(u, v));
        if let Some((u, v)) = missing {
            let denser = g.with_edge(u, v).expect("valid pair");
            prop_assert!(eta(&denser).unwrap() < eta(&g).unwrap());
        }
    }

    #[test]
    fn eta_is_invariant_under_relabeling(g in arb_connected(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng(seed));
        let edges: Vec<(usize, usize)> =
            g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(n, &edges).expect("permuted edges are valid");
        prop_assert!((eta(&g).unwrap() - eta(&h).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn singleton_partition_reproduces_the_matrix(g in arb_connected()) {
        let n = g.vertex_count();
        let blocks: Vec<VertexSet> = (0..n).map(|v| VertexSet::new(vec![v])).collect();
        let p = Partition::new(blocks).expect("disjoint singletons");
        let m = dsl_matrix(&g).expect("connected");
        let q = quotient_matrix(&m, &p).expect("covers all vertices");
        prop_assert!(q.equitable());
        for i in 0..n {
            for j in 0..n {
                prop_assert!((q.get(i, j) - m.get(i, j) as f64).abs() < 1e-12);
            }
        }
        prop_assert!((q.largest_eigenvalue() - eta(&g).unwrap()).abs() < 1e-7);
    }

    #[test]
    fn matching_number_is_half_integral_and_bounded(g in arb_graph()) {
        let mu = fractional_matching_number_fast(&g);
        let n = g.vertex_count() as i64;
        prop_assert!(0 <= mu.halves() && mu.halves() <= n);
        let brute = fractional_matching_number_brute(&g, 24).expect("within cap");
        prop_assert_eq!(mu, brute);
    }

    #[test]
    fn matching_number_is_monotone_under_edge_addition(g in arb_graph()) {
        let n = g.vertex_count();
        let missing = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .find(|&(u, v)| !g.has_edge(u, v));
        if let Some((u, v)) = missing {
            let denser = g.with_edge(u, v).expect("valid pair");
            prop_assert!(
                fractional_matching_number_fast(&denser) >= fractional_matching_number_fast(&g)
            );
        }
    }

    #[test]
    fn optimal_matching_is_valid_and_achieves_the_number(g in arb_graph()) {
        let m = optimal_fractional_matching(&g);
        prop_assert!(m.is_valid_for(&g));
        prop_assert_eq!(m.value, fractional_matching_number_fast(&g));
    }

    #[test]
    fn deficiency_witness_is_self_consistent(g in arb_graph()) {
        let w = max_deficiency_brute(&g, 24).expect("within cap");
        let again = dsl_spectra::DeficiencyWitness::evaluate(&g, &w.set).expect("set in range");
        prop_assert_eq!(w.deficiency, again.deficiency);
        let n = g.vertex_count() as i64;
        let mu = fractional_matching_number_brute(&g, 24).expect("within cap");
        prop_assert_eq!(mu.halves(), n - w.deficiency);
    }

    #[test]
    fn double_cover_doubles_everything(g in arb_graph()) {
        let cover = bipartite_double_cover(&g);
        prop_assert_eq!(cover.vertex_count(), 2 * g.vertex_count());
        prop_assert_eq!(cover.edge_count(), 2 * g.edge_count());
    }
}

// seeded loops for cases proptest strategies reach rarely

#[test]
fn matching_agreement_on_denser_orders() {
    let mut r = rng(0xD5_1CE);
    for trial in 0..120 {
        let n = 3 + (trial % 10);
        let g = random_connected(&mut r, n, 0.35);
        let fast = fractional_matching_number_fast(&g);
        let brute = fractional_matching_number_brute(&g, 24).expect("within cap");
        assert_eq!(fast, brute, "disagreement on {g:?}");
    }
}

#[test]
fn eta_monotone_chain_under_densification() {
    // add edges one at a time to a path until complete; eta must strictly fall
    let mut r = rng(7);
    let mut g = random_connected(&mut r, 8, 0.0);
    let mut last = eta(&g).expect("connected");
    loop {
        let n = g.vertex_count();
        let missing = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .find(|&(u, v)| !g.has_edge(u, v));
        let Some((u, v)) = missing else { break };
        g = g.with_edge(u, v).expect("valid pair");
        let next = eta(&g).expect("connected");
        assert!(next < last, "eta did not fall: {next} vs {last}");
        last = next;
    }
    assert!((last - 14.0).abs() < 1e-9, "complete graph radius");
}

#[test]
fn disconnected_graphs_still_match() {
    let mut r = rng(0xBEEF);
    for _ in 0..60 {
        let g = random_graph(&mut r, 9, 0.25);
        let fast = fractional_matching_number_fast(&g);
        let brute = fractional_matching_number_brute(&g, 24).expect("within cap");
        assert_eq!(fast, brute, "disagreement on {g:?}");
    }
}
