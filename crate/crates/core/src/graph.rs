//! Small simple graphs stored as per-vertex neighbor bitsets.
//!
//! Every host and pattern used by the arrowing engine reduces to [`Graph`]:
//! at most 64 vertices labelled `0..n`, adjacency held in one `u64` per vertex.

use std::fmt;

use thiserror::Error;

/// Hard cap on the number of vertices of a [`Graph`].
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} outside 1..={MAX_VERTICES}")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("star join needs k <= r, got k={k}, r={r}")]
    JoinDegree { k: usize, r: usize },
    #[error("residue {residue} is not a valid difference modulo {modulus}")]
    Residue { residue: usize, modulus: usize },
    #[error("{class} index {index} is below the class minimum {min}")]
    IndexBelowMinimum {
        class: DeletionClass,
        index: usize,
        min: usize,
    },
    #[error("{class} member {index} does not embed in K{r}")]
    DoesNotEmbed {
        class: DeletionClass,
        index: usize,
        r: usize,
    },
    #[error("host is not a complete graph")]
    HostNotComplete,
    #[error("vertex map is not a permutation of 0..{0}")]
    BadPermutation(usize),
}

/// An edge `{u, v}` stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId {
    pub u: usize,
    pub v: usize,
}

impl EdgeId {
    /// Builds the edge between `a` and `b` in normal order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            EdgeId { u: a, v: b }
        } else {
            EdgeId { u: b, v: a }
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            g.adj[a] |= bit(b);
            g.adj[b] |= bit(a);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let g = Graph { adj };
        g.validate()?;
        Ok(g)
    }

    /// Unchecked constructor for masks produced by this crate.
    pub(crate) fn from_adj_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Graph { adj: adj.clone() }.validate().is_ok());
        Graph { adj }
    }

    /// Checks symmetry, loop-freeness and that no bit beyond `n-1` is set.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::VertexCount(n));
        }
        let mask = low_mask(n);
        for (v, &row) in self.adj.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    n,
                });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in bits(row) {
                if self.adj[u] & bit(v) == 0 {
                    return Err(GraphError::VertexOutOfRange { vertex: u, n });
                }
            }
        }
        Ok(())
    }

    /// The complete graph `K_r`.
    pub fn complete(r: usize) -> Result<Self, GraphError> {
        if r == 0 || r > MAX_VERTICES {
            return Err(GraphError::VertexCount(r));
        }
        let all = low_mask(r);
        Ok(Graph {
            adj: (0..r).map(|v| all & !bit(v)).collect(),
        })
    }

    /// The star `S_m = K_{1,m}` with center 0.
    pub fn star(m: usize) -> Result<Self, GraphError> {
        Graph::from_edges(m + 1, (1..=m).map(|leaf| (0, leaf)))
    }

    /// The matching `M_m = mK_2` on pairs `(0,1), (2,3), ...`.
    pub fn matching(m: usize) -> Result<Self, GraphError> {
        Graph::from_edges(2 * m, (0..m).map(|i| (2 * i, 2 * i + 1)))
    }

    /// The path `P_m` on `m` vertices `0-1-...-(m-1)`.
    pub fn path(m: usize) -> Result<Self, GraphError> {
        Graph::from_edges(m, (1..m).map(|i| (i - 1, i)))
    }

    /// The cycle `C_m`, `m >= 3`.
    pub fn cycle(m: usize) -> Result<Self, GraphError> {
        if m < 3 {
            return Err(GraphError::VertexCount(m));
        }
        Graph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m)))
    }

    /// `t` vertex-disjoint copies of `K_s`.
    pub fn union_of_cliques(t: usize, s: usize) -> Result<Self, GraphError> {
        let mut g = Graph::complete(s)?;
        for _ in 1..t {
            g = g.disjoint_union(&Graph::complete(s)?)?;
        }
        Ok(g)
    }

    /// `K_r ⊔ S_k`: `K_r` plus a vertex `r` adjacent to `0..k`.
    pub fn book_join(r: usize, k: usize) -> Result<Self, GraphError> {
        if k > r {
            return Err(GraphError::JoinDegree { k, r });
        }
        if r + 1 > MAX_VERTICES {
            return Err(GraphError::VertexCount(r + 1));
        }
        let mut adj = Graph::complete(r)?.adj;
        adj.push(low_mask(k));
        for row in adj.iter_mut().take(k) {
            *row |= bit(r);
        }
        Ok(Graph::from_adj_unchecked(adj))
    }

    /// Circulant graph on `Z_k`: `x ~ y` iff `x - y ≡ ±d (mod k)` for some `d` in `diffs`.
    ///
    /// Residues are given as positive representatives; `0` and anything `>= k`
    /// are rejected.
    pub fn circulant(k: usize, diffs: &[usize]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(k)?;
        for &d in diffs {
            if d == 0 || d >= k {
                return Err(GraphError::Residue {
                    residue: d,
                    modulus: k,
                });
            }
            for x in 0..k {
                let y = (x + d) % k;
                g.adj[x] |= bit(y);
                g.adj[y] |= bit(x);
            }
        }
        Ok(g)
    }

    /// Removes one canonical copy of the class member `G_index` from the complete host.
    ///
    /// Placement is on prefix vertices: star centered at 0 with leaves `1..=index`,
    /// matching on `(0,1), (2,3), ...`, path `0-1-...-(index-1)`, clique on `0..index`.
    /// Any embedding into `K_r` is equivalent to this one under a vertex permutation.
    pub fn delete_class_member(
        &self,
        class: DeletionClass,
        index: usize,
    ) -> Result<Self, GraphError> {
        if !self.is_complete() {
            return Err(GraphError::HostNotComplete);
        }
        let r = self.n();
        let member = class.member(index)?;
        if !class.embeds(index, r) {
            return Err(GraphError::DoesNotEmbed { class, index, r });
        }
        let mut adj = self.adj.clone();
        for (v, row) in member.adj.iter().enumerate() {
            adj[v] &= !row;
        }
        Ok(Graph::from_adj_unchecked(adj))
    }

    /// `self + other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Self, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let a = self.n();
        let left = low_mask(a);
        let right = low_mask(g.n()) & !left;
        for v in 0..a {
            g.adj[v] |= right;
        }
        for v in a..g.n() {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let a = self.n();
        let total = a + other.n();
        if total > MAX_VERTICES {
            return Err(GraphError::VertexCount(total));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| row << a));
        Ok(Graph::from_adj_unchecked(adj))
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n());
        Graph::from_adj_unchecked(
            self.adj
                .iter()
                .enumerate()
                .map(|(v, row)| all & !row & !bit(v))
                .collect(),
        )
    }

    /// Edges of `self` that are not edges of `other` (same vertex count required).
    pub fn minus(&self, other: &Graph) -> Graph {
        assert_eq!(self.n(), other.n(), "edge difference needs equal orders");
        Graph::from_adj_unchecked(
            self.adj
                .iter()
                .zip(&other.adj)
                .map(|(a, b)| a & !b)
                .collect(),
        )
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n();
        check_permutation(perm, n)?;
        let mut adj = vec![0u64; n];
        for e in self.edges() {
            adj[perm[e.u]] |= bit(perm[e.v]);
            adj[perm[e.v]] |= bit(perm[e.u]);
        }
        Ok(Graph::from_adj_unchecked(adj))
    }

    /// Subgraph induced on `keep`, relabelled to `0..|keep|` in increasing order.
    pub fn induced(&self, keep: u64) -> Result<Graph, GraphError> {
        let verts: Vec<usize> = bits(keep & low_mask(self.n())).collect();
        let mut g = Graph::empty(verts.len())?;
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate() {
                if self.has_edge(a, b) {
                    g.adj[i] |= bit(j);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn adj(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && b < self.n() && self.adj[a] & bit(b) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.n())
            .flat_map(move |u| bits(self.adj[u] & !low_mask(u + 1)).map(move |v| EdgeId { u, v }))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n() * (self.n() - 1) / 2
    }

    pub fn is_connected(&self) -> bool {
        let all = low_mask(self.n());
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Exact isomorphism test: degree refinement, then backtracking over bijections.
    ///
    /// Intended for graphs of a dozen or so vertices.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n() != other.n()
            || self.edge_count() != other.edge_count()
            || self.degree_sequence() != other.degree_sequence()
        {
            return false;
        }
        let sig_a = vertex_signatures(self);
        let sig_b = vertex_signatures(other);
        let mut a_sorted = sig_a.clone();
        let mut b_sorted = sig_b.clone();
        a_sorted.sort();
        b_sorted.sort();
        if a_sorted != b_sorted {
            return false;
        }
        // Map the most constrained vertices first.
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| {
            let class = sig_a.iter().filter(|s| **s == sig_a[v]).count();
            (class, std::cmp::Reverse(self.degree(v)))
        });
        let mut map = vec![usize::MAX; self.n()];
        extend_isomorphism(self, other, &sig_a, &sig_b, &order, 0, &mut map, 0)
    }
}

fn vertex_signatures(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = bits(g.neighbors(v)).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn extend_isomorphism(
    a: &Graph,
    b: &Graph,
    sig_a: &[(usize, Vec<usize>)],
    sig_b: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.n() {
        if used & bit(w) != 0 || sig_a[v] != sig_b[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&x| a.has_edge(v, x) == b.has_edge(w, map[x]));
        if consistent {
            map[v] = w;
            if extend_isomorphism(a, b, sig_a, sig_b, order, depth + 1, map, used | bit(w)) {
                return true;
            }
        }
    }
    map[v] = usize::MAX;
    false
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<(), GraphError> {
    if perm.len() != n {
        return Err(GraphError::BadPermutation(n));
    }
    let mut seen = 0u64;
    for &p in perm {
        if p >= n || seen & bit(p) != 0 {
            return Err(GraphError::BadPermutation(n));
        }
        seen |= bit(p);
    }
    Ok(())
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// A nested class of deletable graphs `G_k ⊂ G_{k+1} ⊂ ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeletionClass {
    Star,
    Matching,
    Path,
    Complete,
}

impl DeletionClass {
    pub const ALL: [DeletionClass; 4] = [
        DeletionClass::Star,
        DeletionClass::Matching,
        DeletionClass::Path,
        DeletionClass::Complete,
    ];

    /// Stars and matchings start at 1; paths and complete graphs at 2.
    pub fn min_index(self) -> usize {
        match self {
            DeletionClass::Star | DeletionClass::Matching => 1,
            DeletionClass::Path | DeletionClass::Complete => 2,
        }
    }

    /// Vertices needed to place `G_index`.
    pub fn member_order(self, index: usize) -> usize {
        match self {
            DeletionClass::Star => index + 1,
            DeletionClass::Matching => 2 * index,
            DeletionClass::Path | DeletionClass::Complete => index,
        }
    }

    pub fn member_size(self, index: usize) -> usize {
        match self {
            DeletionClass::Star | DeletionClass::Matching => index,
            DeletionClass::Path => index.saturating_sub(1),
            DeletionClass::Complete => index * index.saturating_sub(1) / 2,
        }
    }

    pub fn embeds(self, index: usize, r: usize) -> bool {
        index >= self.min_index() && self.member_order(index) <= r
    }

    /// The member `G_index` on its own vertex set, in canonical placement.
    pub fn member(self, index: usize) -> Result<Graph, GraphError> {
        if index < self.min_index() {
            return Err(GraphError::IndexBelowMinimum {
                class: self,
                index,
                min: self.min_index(),
            });
        }
        match self {
            DeletionClass::Star => Graph::star(index),
            DeletionClass::Matching => Graph::matching(index),
            DeletionClass::Path => Graph::path(index),
            DeletionClass::Complete => Graph::complete(index),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DeletionClass::Star => "star",
            DeletionClass::Matching => "matching",
            DeletionClass::Path => "path",
            DeletionClass::Complete => "complete",
        }
    }

    /// Letter used in host expressions such as `K7-S3`.
    pub fn letter(self) -> char {
        match self {
            DeletionClass::Star => 'S',
            DeletionClass::Matching => 'M',
            DeletionClass::Path => 'P',
            DeletionClass::Complete => 'K',
        }
    }
}

impl fmt::Display for DeletionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for DeletionClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "star" | "s" => Ok(DeletionClass::Star),
            "matching" | "m" => Ok(DeletionClass::Matching),
            "path" | "p" => Ok(DeletionClass::Path),
            "complete" | "clique" | "k" => Ok(DeletionClass::Complete),
            other => Err(format!("unknown deletion class `{other}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(r: usize) -> Graph {
        Graph::complete(r).unwrap()
    }

    fn empty(n: usize) -> Graph {
        Graph::empty(n).unwrap()
    }

    #[test]
    fn complete_graph_sizes() {
        assert_eq!((k(3).n(), k(3).edge_count()), (3, 3));
        assert_eq!((k(1).n(), k(1).edge_count()), (1, 0));
        assert_eq!(k(5).edge_count(), 10);
        assert_eq!(k(64).edge_count(), 64 * 63 / 2);
        assert!(Graph::complete(0).is_err());
        assert!(Graph::complete(65).is_err());
    }

    #[test]
    fn class_deletions() {
        let g = k(5)
            .delete_class_member(DeletionClass::Matching, 2)
            .unwrap();
        assert_eq!(g.edge_count(), 8);

        let g = k(5)
            .delete_class_member(DeletionClass::Complete, 3)
            .unwrap();
        assert_eq!(g.edge_count(), 7);
        assert!(g.is_isomorphic(&k(2).join(&empty(3)).unwrap()));

        // K3 minus a 2-edge star leaves K2 ∪ K1.
        let g = k(3).delete_class_member(DeletionClass::Star, 2).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_isomorphic(&k(2).disjoint_union(&k(1)).unwrap()));
    }

    #[test]
    fn deletion_errors() {
        assert!(matches!(
            k(5).delete_class_member(DeletionClass::Matching, 3),
            Err(GraphError::DoesNotEmbed { .. })
        ));
        assert!(matches!(
            k(5).delete_class_member(DeletionClass::Star, 5),
            Err(GraphError::DoesNotEmbed { .. })
        ));
        assert!(matches!(
            k(5).delete_class_member(DeletionClass::Path, 1),
            Err(GraphError::IndexBelowMinimum { .. })
        ));
        assert!(matches!(
            k(5).delete_class_member(DeletionClass::Star, 0),
            Err(GraphError::IndexBelowMinimum { .. })
        ));
        let not_complete = Graph::path(4).unwrap();
        assert_eq!(
            not_complete.delete_class_member(DeletionClass::Star, 1),
            Err(GraphError::HostNotComplete)
        );
        // Deleting all of K_r is allowed and leaves an edgeless graph.
        let g = k(4)
            .delete_class_member(DeletionClass::Complete, 4)
            .unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn deletion_edge_counts() {
        for r in 1..=9 {
            for class in DeletionClass::ALL {
                for idx in class.min_index()..=r {
                    if !class.embeds(idx, r) {
                        continue;
                    }
                    let g = k(r).delete_class_member(class, idx).unwrap();
                    assert_eq!(
                        g.edge_count(),
                        r * (r - 1) / 2 - class.member_size(idx),
                        "{class} {idx} in K{r}"
                    );
                    g.validate().unwrap();
                }
            }
        }
    }

    #[test]
    fn book_join_shapes() {
        let g = Graph::book_join(4, 2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 8));
        assert_eq!(Graph::book_join(4, 4).unwrap(), k(5));
        let g = Graph::book_join(6, 4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 19));
        assert_eq!(
            Graph::book_join(3, 4),
            Err(GraphError::JoinDegree { k: 4, r: 3 })
        );
    }

    #[test]
    fn circulants() {
        let g = Graph::circulant(8, &[1, 2]).unwrap();
        assert_eq!(g.edge_count(), 16);
        assert!((0..8).all(|v| g.degree(v) == 4));
        assert_eq!(g.neighbors(0), bit(1) | bit(2) | bit(6) | bit(7));

        assert_eq!(
            Graph::circulant(4, &[2]).unwrap(),
            Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap()
        );
        assert_eq!(Graph::circulant(2, &[]).unwrap().edge_count(), 0);
        assert!(Graph::circulant(5, &[0]).is_err());
        assert!(Graph::circulant(5, &[5]).is_err());
    }

    #[test]
    fn circulant_complement_is_circulant() {
        for n in 2..=12usize {
            let half: Vec<usize> = (1..=n / 2).collect();
            for mask in 0u32..(1 << half.len()) {
                let d: Vec<usize> = half
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &x)| x)
                    .collect();
                let rest: Vec<usize> = half.iter().copied().filter(|x| !d.contains(x)).collect();
                let g = Graph::circulant(n, &d).unwrap();
                let deg = g.degree(0);
                assert!((0..n).all(|v| g.degree(v) == deg));
                assert_eq!(g.complement(), Graph::circulant(n, &rest).unwrap());
            }
        }
    }

    #[test]
    fn join_and_union() {
        let s4 = k(1).join(&empty(4)).unwrap();
        assert_eq!(s4, Graph::star(4).unwrap());
        let g = k(2).join(&empty(3)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 7));
        assert_eq!(
            k(2).disjoint_union(&k(2)).unwrap(),
            Graph::matching(2).unwrap()
        );
        assert!(k(40).join(&k(30)).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let a = k(5)
            .delete_class_member(DeletionClass::Complete, 3)
            .unwrap();
        let b = k(2).join(&empty(3)).unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!Graph::path(4)
            .unwrap()
            .is_isomorphic(&Graph::star(3).unwrap()));
        assert!(Graph::cycle(5)
            .unwrap()
            .is_isomorphic(&Graph::circulant(5, &[2]).unwrap()));
        // Same degree sequence, different graphs: C6 vs two triangles.
        let c6 = Graph::cycle(6).unwrap();
        let two_k3 = Graph::union_of_cliques(2, 3).unwrap();
        assert!(!c6.is_isomorphic(&two_k3));
    }

    #[test]
    fn validate_rejects_bad_masks() {
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b01]).is_err());
        assert!(Graph::from_adjacency(vec![0b100, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
    }

    #[test]
    fn relabel_and_induced() {
        let p = Graph::path(4).unwrap();
        let q = p.relabel(&[3, 1, 0, 2]).unwrap();
        assert!(q.has_edge(3, 1) && q.has_edge(1, 0) && q.has_edge(0, 2));
        assert!(p.relabel(&[0, 0, 1, 2]).is_err());
        let tri = k(5).induced(0b10101).unwrap();
        assert_eq!(tri, k(3));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(5).unwrap().is_connected());
        assert!(!Graph::matching(2).unwrap().is_connected());
        assert!(k(1).is_connected());
    }
}
