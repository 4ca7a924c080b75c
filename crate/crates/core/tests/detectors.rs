mod common;

use common::{edge_list, random_graph, rng, shape};
use proptest::prelude::*;
use rcx_core::detect::{contains, max_clique, max_matching, verify_witness};
use rcx_core::{Graph, Pattern};

const PATTERNS: [Pattern; 14] = [
    Pattern::Star(1),
    Pattern::Star(2),
    Pattern::Star(3),
    Pattern::Star(4),
    Pattern::Matching(2),
    Pattern::Matching(3),
    Pattern::Clique(3),
    Pattern::Clique(4),
    Pattern::Path(3),
    Pattern::Path(5),
    Pattern::Cycle(3),
    Pattern::Cycle(5),
    Pattern::UnionCliques(2, 2),
    Pattern::UnionCliques(2, 3),
];

#[test]
fn detectors_agree_with_brute_force() {
    let mut r = rng(0xde7ec7);
    for round in 0..600 {
        let n = 2 + round % 7;
        let g = random_graph(&mut r, n, [0.2, 0.45, 0.7][round % 3]);
        let edges = edge_list(&g);
        for p in PATTERNS {
            let found = contains(&g, p);
            assert_eq!(
                found.is_some(),
                rcx_oracle::contains(n, &edges, &shape(p)),
                "{p} in {g:?}"
            );
            if let Some(w) = found {
                assert!(verify_witness(&g, &w), "bad witness for {p} in {g:?}");
            }
        }
    }
}

#[test]
fn matching_and_clique_numbers() {
    let mut r = rng(7);
    for _ in 0..200 {
        let g = random_graph(&mut r, 7, 0.4);
        let edges = edge_list(&g);
        let nu = (1..=3)
            .rev()
            .find(|&m| rcx_oracle::contains(7, &edges, &rcx_oracle::Shape::matching(m)))
            .unwrap_or(0);
        assert_eq!(max_matching(&g), nu);
        let omega = (2..=7)
            .rev()
            .find(|&m| rcx_oracle::contains(7, &edges, &rcx_oracle::Shape::clique(m)))
            .unwrap_or(1);
        assert_eq!(max_clique(&g), omega.min(g.n()));
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..10).prop_flat_map(|n| {
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

proptest! {
    #[test]
    fn containment_is_monotone_under_edge_addition(g in arb_graph(), extra in any::<u64>()) {
        let n = g.n();
        let mut edges = edge_list(&g);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if extra >> (k % 64) & 1 == 1 && !g.has_edge(u, v) {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        let bigger = Graph::from_edges(n, edges).unwrap();
        for p in PATTERNS {
            if contains(&g, p).is_some() {
                prop_assert!(contains(&bigger, p).is_some());
            }
        }
    }

    #[test]
    fn containment_is_invariant_under_relabeling(g in arb_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert!(g.is_isomorphic(&h));
        prop_assert_eq!(g.degree_sequence(), h.degree_sequence());
        for p in PATTERNS {
            prop_assert_eq!(contains(&g, p).is_some(), contains(&h, p).is_some());
        }
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph()) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }
}
