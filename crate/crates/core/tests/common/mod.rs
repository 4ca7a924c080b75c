#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rcx_core::{Graph, Pattern};
use rcx_oracle::Shape;

pub fn shape(p: Pattern) -> Shape {
    match p {
        Pattern::Star(m) => Shape::star(m),
        Pattern::Matching(m) => Shape::matching(m),
        Pattern::Clique(m) => Shape::clique(m),
        Pattern::Path(m) => Shape::path(m),
        Pattern::Cycle(m) => Shape::cycle(m),
        Pattern::UnionCliques(t, s) => Shape::cliques(t, s),
    }
}

pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().map(|e| (e.u, e.v)).collect()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const SMALL_PATTERNS: [Pattern; 10] = [
    Pattern::Star(1),
    Pattern::Star(2),
    Pattern::Star(3),
    Pattern::Matching(2),
    Pattern::Matching(3),
    Pattern::Clique(3),
    Pattern::Path(3),
    Pattern::Path(4),
    Pattern::Cycle(4),
    Pattern::UnionCliques(2, 2),
];
