mod common;

use common::{edge_list, random_graph, rng, shape, SMALL_PATTERNS};
use proptest::prelude::*;
use rcx_core::arrow::{EdgeOrder, Pruning};
use rcx_core::{arrows, verify_free, DeletionClass, Graph, Pattern, SearchOptions, Verdict};

fn pruning_variants() -> Vec<Pruning> {
    let mut out = vec![Pruning::all(), Pruning::none()];
    for mask in 1..15u8 {
        out.push(Pruning {
            color_swap: mask & 1 != 0,
            orbit_breaking: mask & 2 != 0,
            hints: mask & 4 != 0,
            anchored_checks: mask & 8 != 0,
        });
    }
    out
}

fn decide(g: &Graph, f: Pattern, h: Pattern, opts: &SearchOptions) -> bool {
    let res = arrows(g, f, h, opts).unwrap();
    if let Some(w) = &res.witness {
        assert_eq!(w.host(), g);
        assert!(verify_free(w, f, h).unwrap().is_free());
    }
    res.verdict == Verdict::Arrows
}

#[test]
fn random_hosts_agree_with_brute_force() {
    let mut r = rng(0xa770);
    let opts = SearchOptions::default();
    for round in 0..150 {
        let n = 3 + round % 4;
        let g = random_graph(&mut r, n, 0.6);
        if g.edge_count() > 12 {
            continue;
        }
        let edges = edge_list(&g);
        for (i, f) in SMALL_PATTERNS.iter().enumerate() {
            let h = SMALL_PATTERNS[(i + round) % SMALL_PATTERNS.len()];
            let expected = rcx_oracle::arrows(n, &edges, &shape(*f), &shape(h));
            assert_eq!(decide(&g, *f, h, &opts), expected, "{g:?} -> ({f}, {h})");
        }
    }
}

#[test]
fn every_pruning_combination_agrees() {
    let hosts = [
        Graph::complete(5).unwrap(),
        Graph::complete(5)
            .unwrap()
            .delete_class_member(DeletionClass::Matching, 2)
            .unwrap(),
        Graph::complete(6)
            .unwrap()
            .delete_class_member(DeletionClass::Star, 2)
            .unwrap(),
        Graph::complete(6)
            .unwrap()
            .delete_class_member(DeletionClass::Complete, 2)
            .unwrap(),
        Graph::book_join(4, 2).unwrap(),
    ];
    let pairs = [
        (Pattern::Matching(2), Pattern::Matching(2)),
        (Pattern::Star(2), Pattern::Star(3)),
        (Pattern::Clique(3), Pattern::Clique(3)),
        (Pattern::Star(3), Pattern::Matching(2)),
        (Pattern::Path(3), Pattern::Clique(3)),
    ];
    for g in &hosts {
        for &(f, h) in &pairs {
            let expected = rcx_oracle::arrows(g.n(), &edge_list(g), &shape(f), &shape(h));
            for p in pruning_variants() {
                for order in [EdgeOrder::Lexicographic, EdgeOrder::DegreeDescending] {
                    let mut opts = SearchOptions::default().with_pruning(p);
                    opts.edge_order = order;
                    assert_eq!(
                        decide(g, f, h, &opts),
                        expected,
                        "{g:?} ({f},{h}) {p:?} {order:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn arrowing_is_symmetric_in_the_colors() {
    let mut r = rng(99);
    let opts = SearchOptions::default();
    for _ in 0..60 {
        let g = random_graph(&mut r, 6, 0.7);
        for f in SMALL_PATTERNS {
            for h in [Pattern::Star(2), Pattern::Matching(2), Pattern::Clique(3)] {
                let a = arrows(&g, f, h, &opts).unwrap();
                let b = arrows(&g, h, f, &opts).unwrap();
                assert_eq!(a.verdict, b.verdict);
                if let Some(w) = a.witness {
                    assert!(verify_free(&w.swap_colors(), h, f).unwrap().is_free());
                }
            }
        }
    }
}

#[test]
fn parallel_search_reproduces_the_sequential_witness() {
    let cases = [
        (
            Graph::complete(8)
                .unwrap()
                .delete_class_member(DeletionClass::Star, 1)
                .unwrap(),
            Pattern::UnionCliques(2, 3),
            Pattern::Clique(3),
        ),
        (
            Graph::complete(5).unwrap(),
            Pattern::Clique(3),
            Pattern::Clique(3),
        ),
        (
            Graph::complete(7).unwrap(),
            Pattern::Matching(3),
            Pattern::Star(3),
        ),
        (
            Graph::circulant(8, &[1, 2]).unwrap(),
            Pattern::Clique(3),
            Pattern::Star(3),
        ),
    ];
    for (g, f, h) in cases {
        let seq = arrows(&g, f, h, &SearchOptions::default()).unwrap();
        assert!(seq.canonical);
        assert_eq!(
            seq,
            arrows(&g, f, h, &SearchOptions::default())
                .unwrap()
                .with_same_stats(&seq)
        );
        for threads in [2, 4, 8] {
            let par = arrows(&g, f, h, &SearchOptions::default().with_threads(threads)).unwrap();
            assert_eq!(par.verdict, seq.verdict);
            assert_eq!(
                par.witness, seq.witness,
                "{g:?} ({f},{h}) threads {threads}"
            );
        }
    }
}

trait SameStats {
    fn with_same_stats(self, other: &Self) -> Self;
}

impl SameStats for rcx_core::ArrowResult {
    fn with_same_stats(mut self, other: &Self) -> Self {
        self.stats = other.stats;
        self
    }
}

#[test]
fn edge_cap_and_timeout_are_reported() {
    use rcx_core::ArrowError;
    use std::time::Duration;
    let k9 = Graph::complete(9).unwrap();
    assert!(matches!(
        arrows(
            &k9,
            Pattern::Star(1),
            Pattern::Star(1),
            &SearchOptions::default()
        ),
        Err(ArrowError::EdgeCap { edges: 36, cap: 30 })
    ));
    let k8 = Graph::complete(8).unwrap();
    let opts = SearchOptions::default().with_timeout(Duration::ZERO);
    assert!(matches!(
        arrows(&k8, Pattern::Matching(3), Pattern::Matching(3), &opts),
        Err(ArrowError::Timeout { .. })
    ));
    assert!(matches!(
        arrows(
            &k8,
            Pattern::Star(0),
            Pattern::Star(1),
            &SearchOptions::default()
        ),
        Err(ArrowError::Pattern(_))
    ));
}

fn arb_host() -> impl Strategy<Value = Graph> {
    (3usize..7).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.6), n * (n - 1) / 2).prop_map(
            move |bits| {
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
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arrowing_survives_adding_edges(g in arb_host(), fi in 0usize..10, hi in 0usize..10) {
        let (f, h) = (SMALL_PATTERNS[fi], SMALL_PATTERNS[hi]);
        let opts = SearchOptions::default();
        if decide(&g, f, h, &opts) {
            let complete = Graph::complete(g.n()).unwrap();
            prop_assert!(decide(&complete, f, h, &opts));
        } else {
            let mut edges = edge_list(&g);
            edges.pop();
            let smaller = Graph::from_edges(g.n(), edges).unwrap();
            prop_assert!(!decide(&smaller, f, h, &opts));
        }
    }

    #[test]
    fn search_matches_oracle(g in arb_host(), fi in 0usize..10, hi in 0usize..10) {
        let (f, h) = (SMALL_PATTERNS[fi], SMALL_PATTERNS[hi]);
        prop_assume!(g.edge_count() <= 12);
        let expected = rcx_oracle::arrows(g.n(), &edge_list(&g), &shape(f), &shape(h));
        prop_assert_eq!(decide(&g, f, h, &SearchOptions::default()), expected);
        prop_assert_eq!(decide(&g, f, h, &SearchOptions::default().with_pruning(Pruning::none())), expected);
    }
}
