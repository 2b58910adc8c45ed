mod common;

use proptest::prelude::*;

use starkit::exactla::rat;
use starkit::graphio::{from_graph6, to_graph6, Graph, VertexSet};
use starkit::invariants::{aleph, aleph_via_delta1, report};
use starkit::isocheck::{certificate, compare, small_iso, CompareOptions, IsoStatus};
use starkit::spectral::{cospectral, eigen_data, main_eigenvalue_count, multiplicity, rational_spectrum};
use starkit::starsets::{
    build_tableau, check_star_set, classify, default_cap, eigenvalue_is_main_via_tableau, enumerate_from,
    enumerate_star_sets, is_dominating, is_location_dominating, mainness_transfer_check, pivot, star_partition,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
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
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 160, max_global_rejects: 50_000, ..ProptestConfig::default() })]

    #[test]
    fn multiplicities_match_the_oracle(g in graph(8)) {
        let n = g.order() as i64;
        for l in -n..=n {
            prop_assert_eq!(multiplicity(&g, &rat(l)), common::mult(&g, l, 1));
        }
        let s = rational_spectrum(&g);
        let total: usize = s.entries.iter().map(|e| e.multiplicity).sum();
        prop_assert_eq!(total + s.residual_degree, g.order());
    }

    #[test]
    fn star_set_tests_agree(g in graph(7), mask in any::<u8>()) {
        let x = VertexSet::new((0..g.order()).filter(|v| mask >> v & 1 == 1));
        for e in rational_spectrum(&g).entries {
            let c = check_star_set(&g, &e.lambda, &x).unwrap();
            prop_assert_eq!(c.by_complement(), c.by_reconstruction());
        }
    }

    #[test]
    fn enumeration_matches_brute_force(g in graph(7)) {
        for (l, _) in common::integer_eigenvalues(&g) {
            let lambda = rat(l);
            let c = enumerate_star_sets(&g, &lambda, default_cap(&g, &lambda)).unwrap();
            prop_assert!(c.complete);
            prop_assert_eq!(c.star_sets(), common::brute_force_star_sets(&g, l, 1));
            for x in c.star_sets() {
                let again = enumerate_from(&g, &lambda, &x, default_cap(&g, &lambda)).unwrap();
                prop_assert_eq!(&again, &c);
            }
        }
    }

    #[test]
    fn tableau_classification_is_consistent(g in graph(7)) {
        for e in rational_spectrum(&g).entries {
            let c = enumerate_star_sets(&g, &e.lambda, default_cap(&g, &e.lambda)).unwrap();
            for x in c.star_sets() {
                let t = build_tableau(&g, &e.lambda, &x).unwrap();
                prop_assert_eq!(eigenvalue_is_main_via_tableau(&t), e.is_main);
                for (u, v) in t.legal_pivots() {
                    let p = pivot(&t, u, v).unwrap();
                    prop_assert_eq!(&pivot(&p, v, u).unwrap(), &t);
                    prop_assert_eq!(p.canonical(), build_tableau(&g, &e.lambda, &p.star_set()).unwrap());
                    prop_assert!(mainness_transfer_check(&t, u, v).unwrap());
                }
                // a star vertex is main iff λ is main in the one-vertex extension
                let co = x.complement(g.order());
                for v in x.iter() {
                    let ext = g.induced_subgraph(&co.with(v)).unwrap();
                    let main_ext = eigen_data(&ext, &e.lambda).map(|d| d.is_main).unwrap_or(false);
                    prop_assert_eq!(classify(&t).main_vertices.contains(v), main_ext);
                }
            }
            prop_assert_eq!(aleph(&c).unwrap(), aleph_via_delta1(&g, &c).unwrap());
        }
    }

    #[test]
    fn co_star_sets_dominate(g in graph(7)) {
        prop_assume!(!g.has_isolated_vertices());
        for e in rational_spectrum(&g).entries {
            let c = enumerate_star_sets(&g, &e.lambda, default_cap(&g, &e.lambda)).unwrap();
            for x in c.star_sets() {
                let co = x.complement(g.order());
                prop_assert!(is_dominating(&g, &co));
                if e.lambda != rat(0) && e.lambda != rat(-1) {
                    prop_assert!(is_location_dominating(&g, &co));
                }
            }
            // no vertex lies in every star set
            let r = report(&c, &g).unwrap();
            for v in 0..g.order() {
                prop_assert!(r.degree_table.d_plus[v] + r.degree_table.d_minus[v] < r.ss_count);
            }
        }
    }

    #[test]
    fn star_partitions_cover_the_graph(g in graph(7)) {
        match star_partition(&g) {
            Ok(blocks) => {
                let mut all: Vec<usize> = blocks.iter().flat_map(|(_, x)| x.iter()).collect();
                all.sort();
                prop_assert_eq!(all, (0..g.order()).collect::<Vec<_>>());
                for (l, x) in &blocks {
                    prop_assert!(check_star_set(&g, l, x).unwrap().by_complement());
                }
            }
            Err(_) => prop_assert!(rational_spectrum(&g).residual_degree > 0),
        }
    }

    #[test]
    fn invariants_survive_relabelling((g, perm) in graph_and_perm(7)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert!(cospectral(&g, &h));
        prop_assert_eq!(main_eigenvalue_count(&g), main_eigenvalue_count(&h));
        prop_assert_eq!(certificate(&g), certificate(&h));
        prop_assert!(small_iso(&g, &h).unwrap());
        let v = compare(&g, &h, &CompareOptions::default()).unwrap();
        prop_assert_eq!(v.status, IsoStatus::Inconclusive);
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        let back = from_graph6(&to_graph6(&g)).unwrap();
        prop_assert!(back.same_adjacency(&g));
    }

    #[test]
    fn largest_eigenvalue_of_connected_graphs(g in graph(8)) {
        prop_assume!(g.is_connected() && g.order() > 1);
        let s = rational_spectrum(&g);
        // with a fully rational spectrum the index is the first entry
        prop_assume!(s.residual_degree == 0);
        let top = &s.entries[0];
        prop_assert_eq!(top.multiplicity, 1);
        prop_assert!(top.is_main);
        let c = enumerate_star_sets(&g, &top.lambda, default_cap(&g, &top.lambda)).unwrap();
        prop_assert_eq!(c.len(), g.order());
        prop_assert!(c.items.iter().all(|i| i.main_vertices == i.star_set.star));
    }
}
