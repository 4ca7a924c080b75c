//! Slow reference answers on plain edge lists.
//!
//! Nothing here shares code with `rcx-core`: subgraph containment tries every
//! injective vertex map, and arrowing tries every one of the `2^e` colorings.

pub type Edges = Vec<(usize, usize)>;

/// A pattern as `(vertex count, edges)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub n: usize,
    pub edges: Edges,
}

impl Shape {
    pub fn star(m: usize) -> Shape {
        Shape {
            n: m + 1,
            edges: (1..=m).map(|i| (0, i)).collect(),
        }
    }

    pub fn matching(m: usize) -> Shape {
        Shape {
            n: 2 * m,
            edges: (0..m).map(|i| (2 * i, 2 * i + 1)).collect(),
        }
    }

    pub fn path(m: usize) -> Shape {
        Shape {
            n: m,
            edges: (1..m).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn cycle(m: usize) -> Shape {
        let mut s = Shape::path(m);
        s.edges.push((0, m - 1));
        s
    }

    pub fn clique(m: usize) -> Shape {
        Shape::cliques(1, m)
    }

    pub fn cliques(t: usize, s: usize) -> Shape {
        let mut edges = Vec::new();
        for c in 0..t {
            for a in 0..s {
                for b in a + 1..s {
                    edges.push((c * s + a, c * s + b));
                }
            }
        }
        Shape { n: t * s, edges }
    }
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    adj
}

/// Whether the graph on `n` vertices with `edges` has a subgraph isomorphic to `p`.
pub fn contains(n: usize, edges: &[(usize, usize)], p: &Shape) -> bool {
    if p.n > n {
        return false;
    }
    if p.edges.is_empty() {
        return true;
    }
    let adj = adjacency(n, edges);
    let mut image = vec![usize::MAX; p.n];
    let mut used = vec![false; n];
    extend(&adj, p, 0, &mut image, &mut used)
}

fn extend(
    adj: &[Vec<bool>],
    p: &Shape,
    next: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if next == p.n {
        return p.edges.iter().all(|&(a, b)| adj[image[a]][image[b]]);
    }
    for v in 0..adj.len() {
        if used[v] {
            continue;
        }
        image[next] = v;
        used[v] = true;
        let placed_ok = p
            .edges
            .iter()
            .filter(|&&(a, b)| a.max(b) == next)
            .all(|&(a, b)| adj[image[a]][image[b]]);
        if placed_ok && extend(adj, p, next + 1, image, used) {
            return true;
        }
        used[v] = false;
    }
    image[next] = usize::MAX;
    false
}

/// Red edge mask of the first coloring (in binary counting order) that has
/// no red `f` and no blue `h`, or `None` when the host arrows.
pub fn free_coloring(n: usize, host: &[(usize, usize)], f: &Shape, h: &Shape) -> Option<u64> {
    assert!(host.len() < 64, "oracle enumerates at most 2^63 colorings");
    (0..1u64 << host.len()).find(|&mask| {
        let (red, blue): (Edges, Edges) = {
            let mut red = Vec::new();
            let mut blue = Vec::new();
            for (i, &e) in host.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    red.push(e);
                } else {
                    blue.push(e);
                }
            }
            (red, blue)
        };
        !contains(n, &red, f) && !contains(n, &blue, h)
    })
}

pub fn arrows(n: usize, host: &[(usize, usize)], f: &Shape, h: &Shape) -> bool {
    free_coloring(n, host, f, h).is_none()
}

/// Least `r` with `K_r → (f, h)`, searching up to `max_r`.
pub fn ramsey_number(f: &Shape, h: &Shape, max_r: usize) -> Option<usize> {
    (1..=max_r).find(|&r| arrows(r, &Shape::clique(r).edges, f, h))
}
