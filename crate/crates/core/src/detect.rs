//! Exact detectors for the monochromatic target patterns.
//!
//! Every detector works on raw neighbor masks so the arrowing search can call
//! it on its in-place red/blue adjacency without building a [`Graph`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{bit, bits, low_mask, EdgeId, Graph, GraphError};

/// Symbolic target family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    /// `S_m = K_{1,m}`, `m >= 1`.
    Star(usize),
    /// `M_m = mK_2`, `m >= 1`.
    Matching(usize),
    /// `K_m`, `m >= 2`.
    Clique(usize),
    /// `P_m` on `m >= 2` vertices.
    Path(usize),
    /// `C_m`, `m >= 3`.
    Cycle(usize),
    /// `t` vertex-disjoint copies of `K_s` (`t >= 1`, `s >= 2`).
    UnionCliques(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern {0} has a parameter below its minimum")]
    Parameter(String),
    #[error("pattern {0} needs more than 64 vertices")]
    TooLarge(String),
    #[error("cannot parse pattern `{0}`")]
    Syntax(String),
}

impl Pattern {
    pub fn validate(self) -> Result<Self, PatternError> {
        let ok = match self {
            Pattern::Star(m) | Pattern::Matching(m) => m >= 1,
            Pattern::Clique(m) | Pattern::Path(m) => m >= 2,
            Pattern::Cycle(m) => m >= 3,
            Pattern::UnionCliques(t, s) => t >= 1 && s >= 2,
        };
        if !ok {
            return Err(PatternError::Parameter(self.to_string()));
        }
        if self.order() > crate::graph::MAX_VERTICES {
            return Err(PatternError::TooLarge(self.to_string()));
        }
        Ok(self)
    }

    /// Number of vertices `v(P)`.
    pub fn order(self) -> usize {
        match self {
            Pattern::Star(m) => m + 1,
            Pattern::Matching(m) => 2 * m,
            Pattern::Clique(m) | Pattern::Path(m) | Pattern::Cycle(m) => m,
            Pattern::UnionCliques(t, s) => t * s,
        }
    }

    /// Number of edges `e(P)`.
    pub fn size(self) -> usize {
        match self {
            Pattern::Star(m) | Pattern::Matching(m) | Pattern::Cycle(m) => m,
            Pattern::Clique(m) => m * (m - 1) / 2,
            Pattern::Path(m) => m - 1,
            Pattern::UnionCliques(t, s) => t * s * (s - 1) / 2,
        }
    }

    /// The pattern as a concrete graph.
    pub fn graph(self) -> Result<Graph, GraphError> {
        match self {
            Pattern::Star(m) => Graph::star(m),
            Pattern::Matching(m) => Graph::matching(m),
            Pattern::Clique(m) => Graph::complete(m),
            Pattern::Path(m) => Graph::path(m),
            Pattern::Cycle(m) => Graph::cycle(m),
            Pattern::UnionCliques(t, s) => Graph::union_of_cliques(t, s),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Pattern::Star(m) => write!(f, "S{m}"),
            Pattern::Matching(m) => write!(f, "M{m}"),
            Pattern::Clique(m) => write!(f, "K{m}"),
            Pattern::Path(m) => write!(f, "P{m}"),
            Pattern::Cycle(m) => write!(f, "C{m}"),
            Pattern::UnionCliques(t, s) => write!(f, "{t}K{s}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    /// Accepts `S<m>`, `M<m>`, `K<m>`, `P<m>`, `C<m>` and `<t>K<s>`.
    /// `<t>K2` is read as the matching `M<t>` and `1K<s>` as `K<s>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || PatternError::Syntax(s.to_string());
        let text = s.trim();
        let digits_end = text
            .find(|c: char| !c.is_ascii_digit())
            .ok_or_else(syntax)?;
        let (prefix, rest) = text.split_at(digits_end);
        let mut chars = rest.chars();
        let letter = chars.next().ok_or_else(syntax)?;
        let tail = chars.as_str();
        if tail.is_empty() || !tail.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax());
        }
        let param: usize = tail.parse().map_err(|_| syntax())?;
        let pattern = if prefix.is_empty() {
            match letter {
                'S' => Pattern::Star(param),
                'M' => Pattern::Matching(param),
                'K' => Pattern::Clique(param),
                'P' => Pattern::Path(param),
                'C' => Pattern::Cycle(param),
                _ => return Err(syntax()),
            }
        } else {
            let copies: usize = prefix.parse().map_err(|_| syntax())?;
            if letter != 'K' {
                return Err(syntax());
            }
            match (copies, param) {
                (t, 2) if t >= 1 => Pattern::Matching(t),
                (1, s) => Pattern::Clique(s),
                (t, s) => Pattern::UnionCliques(t, s),
            }
        };
        pattern.validate()
    }
}

/// One concrete occurrence of a pattern inside an inspected graph.
///
/// `vertices` is laid out by pattern: star center first then leaves; matching
/// pairs consecutively; path and cycle in traversal order; clique copies as
/// consecutive blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSubgraph {
    pub pattern: Pattern,
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeId>,
}

impl WitnessSubgraph {
    fn from_layout(pattern: Pattern, vertices: Vec<usize>) -> Self {
        let mut edges = layout_edges(pattern, &vertices);
        edges.sort_unstable();
        WitnessSubgraph {
            pattern,
            vertices,
            edges,
        }
    }
}

/// Edges implied by a vertex layout of the right length.
fn layout_edges(pattern: Pattern, v: &[usize]) -> Vec<EdgeId> {
    let mut out = Vec::new();
    match pattern {
        Pattern::Star(_) => {
            for &leaf in &v[1..] {
                out.push(EdgeId::new(v[0], leaf));
            }
        }
        Pattern::Matching(_) => {
            for pair in v.chunks(2) {
                out.push(EdgeId::new(pair[0], pair[1]));
            }
        }
        Pattern::Clique(_) => clique_edges(v, &mut out),
        Pattern::UnionCliques(_, s) => {
            for block in v.chunks(s) {
                clique_edges(block, &mut out);
            }
        }
        Pattern::Path(_) => {
            for w in v.windows(2) {
                out.push(EdgeId::new(w[0], w[1]));
            }
        }
        Pattern::Cycle(_) => {
            for w in v.windows(2) {
                out.push(EdgeId::new(w[0], w[1]));
            }
            out.push(EdgeId::new(v[v.len() - 1], v[0]));
        }
    }
    out
}

fn clique_edges(v: &[usize], out: &mut Vec<EdgeId>) {
    for (i, &a) in v.iter().enumerate() {
        for &b in &v[i + 1..] {
            out.push(EdgeId::new(a, b));
        }
    }
}

/// Checks a witness against `g` without trusting the detector that produced it:
/// layout has the pattern's shape, vertices are distinct, listed edges are
/// exactly the shape's edges and all are present in `g`.
pub fn verify_witness(g: &Graph, w: &WitnessSubgraph) -> bool {
    if w.pattern.validate().is_err() || w.vertices.len() != w.pattern.order() {
        return false;
    }
    let mut seen = 0u64;
    for &v in &w.vertices {
        if v >= g.n() || seen & bit(v) != 0 {
            return false;
        }
        seen |= bit(v);
    }
    let mut expected = layout_edges(w.pattern, &w.vertices);
    expected.sort_unstable();
    let mut listed = w.edges.clone();
    listed.sort_unstable();
    expected.len() == w.pattern.size()
        && expected == listed
        && listed.iter().all(|e| g.has_edge(e.u, e.v))
}

/// Finds an occurrence of `p` as a (not necessarily induced) subgraph of `g`.
pub fn contains(g: &Graph, p: Pattern) -> Option<WitnessSubgraph> {
    find_in(g.adj(), p)
}

/// [`contains`] on raw neighbor masks.
pub fn find_in(adj: &[u64], p: Pattern) -> Option<WitnessSubgraph> {
    let all = low_mask(adj.len());
    let layout = match p {
        Pattern::Star(m) => (0..adj.len())
            .find(|&v| adj[v].count_ones() as usize >= m)
            .map(|c| {
                let mut v = vec![c];
                v.extend(bits(adj[c]).take(m));
                v
            }),
        Pattern::Matching(m) => {
            let edges = matching_in(adj, all, m);
            (edges.len() >= m).then(|| edges.iter().flat_map(|e| [e.u, e.v]).collect())
        }
        Pattern::Clique(m) => {
            let mut cur = Vec::with_capacity(m);
            find_clique(adj, all, m, &mut cur).then_some(cur)
        }
        Pattern::Path(m) => {
            if adj.len() <= DENSE_DP_LIMIT {
                path_by_subset_dp(adj, m)
            } else {
                path_by_dfs(adj, m)
            }
        }
        Pattern::Cycle(m) => {
            if adj.len() <= DENSE_DP_LIMIT {
                cycle_by_subset_dp(adj, m)
            } else {
                cycle_by_dfs(adj, m)
            }
        }
        Pattern::UnionCliques(t, s) => {
            let mut chosen = Vec::with_capacity(t * s);
            pack_cliques(adj, all, t, s, &mut chosen).then_some(chosen)
        }
    }?;
    Some(WitnessSubgraph::from_layout(p, layout))
}

/// Size of a maximum matching.
pub fn max_matching(g: &Graph) -> usize {
    matching_in(g.adj(), low_mask(g.n()), g.n() / 2).len()
}

/// Clique number.
pub fn max_clique(g: &Graph) -> usize {
    let adj = g.adj();
    let all = low_mask(adj.len());
    let mut best = 1;
    let mut cur = Vec::new();
    while best < adj.len() && find_clique(adj, all, best + 1, &mut cur) {
        best += 1;
        cur.clear();
    }
    best
}

/// Cheap one-sided test used to short-circuit pruning in the search.
///
/// `true` means `p` certainly occurs in `g` (which already contains `new_edge`);
/// `false` only means the exact detector has to decide.
pub fn incremental_hint(p: Pattern, g: &Graph, new_edge: EdgeId) -> bool {
    hint_in(g.adj(), p, new_edge)
}

pub(crate) fn hint_in(adj: &[u64], p: Pattern, e: EdgeId) -> bool {
    let (a, b) = (e.u, e.v);
    let deg = |v: usize| adj[v].count_ones() as usize;
    match p {
        Pattern::Star(m) => deg(a) >= m || deg(b) >= m,
        Pattern::Matching(m) => greedy_matching(adj) >= m,
        Pattern::Clique(m) | Pattern::UnionCliques(1, m) => match m {
            2 => true,
            3 => adj[a] & adj[b] != 0,
            _ => false,
        },
        Pattern::Path(m) => match m {
            2 => true,
            3 => deg(a) >= 2 || deg(b) >= 2,
            4 => {
                let left = adj[a] & !bit(b);
                let right = adj[b] & !bit(a);
                left != 0 && right != 0 && (left | right).count_ones() >= 2
            }
            _ => false,
        },
        Pattern::Cycle(3) => adj[a] & adj[b] != 0,
        Pattern::Cycle(_) | Pattern::UnionCliques(..) => false,
    }
}

/// Exact test for an occurrence of `p` that uses the edge `e`.
///
/// If the graph without `e` was free of `p`, this decides whether adding `e`
/// created an occurrence.
pub(crate) fn occurs_through_edge(adj: &[u64], p: Pattern, e: EdgeId) -> bool {
    let (a, b) = (e.u, e.v);
    let all = low_mask(adj.len());
    match p {
        Pattern::Star(m) => adj[a].count_ones() as usize >= m || adj[b].count_ones() as usize >= m,
        Pattern::Matching(m) => {
            m == 1 || matching_in(adj, all & !bit(a) & !bit(b), m - 1).len() >= m - 1
        }
        Pattern::Clique(m) => {
            let mut cur = Vec::new();
            find_clique(adj, adj[a] & adj[b], m - 2, &mut cur)
        }
        Pattern::Path(m) => path_through(adj, a, b, m),
        Pattern::Cycle(m) => closes_cycle(adj, b, a, bit(a) | bit(b), 2, m),
        Pattern::UnionCliques(t, s) => {
            let mut found = false;
            let mut scratch = Vec::new();
            for_each_clique(adj, adj[a] & adj[b], s - 2, &mut scratch, &mut |clique| {
                let used = clique.iter().fold(bit(a) | bit(b), |acc, &v| acc | bit(v));
                let mut rest = Vec::new();
                found = pack_cliques(adj, all & !used, t - 1, s, &mut rest);
                found
            });
            found
        }
    }
}

const DENSE_DP_LIMIT: usize = 20;

/// Greedy matching size in lexicographic edge order.
fn greedy_matching(adj: &[u64]) -> usize {
    let mut used = 0u64;
    let mut size = 0;
    for (v, &row) in adj.iter().enumerate() {
        if used & bit(v) != 0 {
            continue;
        }
        let free = row & !used & !low_mask(v + 1);
        if free != 0 {
            used |= bit(v) | bit(free.trailing_zeros() as usize);
            size += 1;
        }
    }
    size
}

/// Maximum matching inside `avail`, stopping early once `target` edges are found.
///
/// Branches on the lowest live vertex: either it stays unmatched or it is
/// matched to one of its live neighbors.
fn matching_in(adj: &[u64], avail: u64, target: usize) -> Vec<EdgeId> {
    let mut best = Vec::new();
    let mut cur = Vec::new();
    matching_rec(adj, avail, target, &mut cur, &mut best);
    best
}

fn matching_rec(
    adj: &[u64],
    avail: u64,
    target: usize,
    cur: &mut Vec<EdgeId>,
    best: &mut Vec<EdgeId>,
) -> bool {
    if cur.len() > best.len() {
        best.clone_from(cur);
    }
    if best.len() >= target {
        return true;
    }
    let mut live = avail;
    for v in bits(avail) {
        if adj[v] & avail == 0 {
            live &= !bit(v);
        }
    }
    if cur.len() + (live.count_ones() as usize) / 2 <= best.len() || live == 0 {
        return false;
    }
    let v = live.trailing_zeros() as usize;
    for u in bits(adj[v] & live) {
        cur.push(EdgeId::new(v, u));
        let done = matching_rec(adj, live & !bit(v) & !bit(u), target, cur, best);
        cur.pop();
        if done {
            return true;
        }
    }
    matching_rec(adj, live & !bit(v), target, cur, best)
}

/// Looks for a `k`-clique inside `cand`, leaving it in `cur`.
fn find_clique(adj: &[u64], cand: u64, k: usize, cur: &mut Vec<usize>) -> bool {
    if k == 0 {
        return true;
    }
    let mut rest = cand;
    while rest.count_ones() as usize >= k {
        let v = rest.trailing_zeros() as usize;
        rest &= !bit(v);
        cur.push(v);
        if find_clique(adj, rest & adj[v], k - 1, cur) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Calls `visit` for every `k`-clique inside `cand` until it returns `true`.
fn for_each_clique(
    adj: &[u64],
    cand: u64,
    k: usize,
    cur: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if k == 0 {
        return visit(cur);
    }
    let mut rest = cand;
    while rest.count_ones() as usize >= k {
        let v = rest.trailing_zeros() as usize;
        rest &= !bit(v);
        cur.push(v);
        let stop = for_each_clique(adj, rest & adj[v], k - 1, cur, visit);
        cur.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Packs `t` vertex-disjoint `s`-cliques inside `avail`.
///
/// The lowest unused vertex is either placed in the next clique or discarded,
/// so each packing is generated once.
fn pack_cliques(adj: &[u64], avail: u64, t: usize, s: usize, chosen: &mut Vec<usize>) -> bool {
    if t == 0 {
        return true;
    }
    if (avail.count_ones() as usize) < t * s {
        return false;
    }
    let v = avail.trailing_zeros() as usize;
    let rest = avail & !bit(v);
    let base = chosen.len();
    chosen.push(v);
    let mut scratch = Vec::with_capacity(s);
    let mut tail = Vec::new();
    let placed = for_each_clique(adj, adj[v] & rest, s - 1, &mut scratch, &mut |clique| {
        let used = clique.iter().fold(0u64, |acc, &u| acc | bit(u));
        tail.clear();
        if pack_cliques(adj, rest & !used, t - 1, s, &mut tail) {
            tail.splice(0..0, clique.iter().copied());
            true
        } else {
            false
        }
    });
    if placed {
        chosen.append(&mut tail);
        return true;
    }
    chosen.truncate(base);
    pack_cliques(adj, rest, t, s, chosen)
}

/// `table[mask]` holds the endpoints of simple paths that visit exactly `mask`.
fn path_table(adj: &[u64], m: usize, start_filter: u64) -> Vec<u64> {
    let n = adj.len();
    let mut table = vec![0u64; 1 << n];
    for v in bits(start_filter) {
        table[1 << v] = bit(v);
    }
    for mask in 1usize..(1 << n) {
        let ends = table[mask];
        if ends == 0 || mask.count_ones() as usize >= m {
            continue;
        }
        for v in bits(ends) {
            for u in bits(adj[v] & !(mask as u64)) {
                table[mask | (1 << u)] |= bit(u);
            }
        }
    }
    table
}

/// Walks the table back from `(mask, end)` to recover the vertex order.
fn unwind_path(adj: &[u64], table: &[u64], mut mask: usize, mut end: usize) -> Vec<usize> {
    let mut order = vec![end];
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << end);
        let prev = (table[prev_mask] & adj[end]).trailing_zeros() as usize;
        order.push(prev);
        mask = prev_mask;
        end = prev;
    }
    order.reverse();
    order
}

fn path_by_subset_dp(adj: &[u64], m: usize) -> Option<Vec<usize>> {
    if m > adj.len() {
        return None;
    }
    let table = path_table(adj, m, low_mask(adj.len()));
    (1usize..table.len())
        .filter(|mask| mask.count_ones() as usize == m)
        .find(|&mask| table[mask] != 0)
        .map(|mask| {
            let end = table[mask].trailing_zeros() as usize;
            unwind_path(adj, &table, mask, end)
        })
}

/// Cycles are anchored at their lowest vertex `s`; the table is built over
/// vertices `>= s` with every path starting at `s`.
fn cycle_by_subset_dp(adj: &[u64], m: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if m > n {
        return None;
    }
    for s in 0..n {
        let allowed = low_mask(n) & !low_mask(s);
        if (allowed.count_ones() as usize) < m {
            break;
        }
        let restricted: Vec<u64> = adj.iter().map(|row| row & allowed).collect();
        let table = path_table(&restricted, m, bit(s));
        for mask in 1usize..table.len() {
            if mask.count_ones() as usize != m || mask & (1 << s) == 0 {
                continue;
            }
            let closing = table[mask] & adj[s];
            if closing != 0 {
                let end = closing.trailing_zeros() as usize;
                return Some(unwind_path(&restricted, &table, mask, end));
            }
        }
    }
    None
}

fn path_by_dfs(adj: &[u64], m: usize) -> Option<Vec<usize>> {
    fn grow(adj: &[u64], order: &mut Vec<usize>, used: u64, m: usize) -> bool {
        if order.len() == m {
            return true;
        }
        let end = *order.last().unwrap();
        for u in bits(adj[end] & !used) {
            order.push(u);
            if grow(adj, order, used | bit(u), m) {
                return true;
            }
            order.pop();
        }
        false
    }
    (0..adj.len()).find_map(|v| {
        let mut order = vec![v];
        grow(adj, &mut order, bit(v), m).then_some(order)
    })
}

fn cycle_by_dfs(adj: &[u64], m: usize) -> Option<Vec<usize>> {
    fn grow(adj: &[u64], order: &mut Vec<usize>, used: u64, allowed: u64, m: usize) -> bool {
        let end = *order.last().unwrap();
        if order.len() == m {
            return adj[end] & bit(order[0]) != 0;
        }
        for u in bits(adj[end] & allowed & !used) {
            order.push(u);
            if grow(adj, order, used | bit(u), allowed, m) {
                return true;
            }
            order.pop();
        }
        false
    }
    let n = adj.len();
    (0..n).find_map(|s| {
        let allowed = low_mask(n) & !low_mask(s);
        let mut order = vec![s];
        grow(adj, &mut order, bit(s), allowed, m).then_some(order)
    })
}

/// Is there a path on `m` vertices that uses the edge `a-b`?
fn path_through(adj: &[u64], a: usize, b: usize, m: usize) -> bool {
    fn extend(adj: &[u64], end: usize, used: u64, need: usize) -> bool {
        need == 0 || bits(adj[end] & !used).any(|u| extend(adj, u, used | bit(u), need - 1))
    }
    fn left(adj: &[u64], end: usize, used: u64, len: usize, b: usize, m: usize) -> bool {
        if extend(adj, b, used, m - len - 1) {
            return true;
        }
        len + 1 < m && bits(adj[end] & !used).any(|u| left(adj, u, used | bit(u), len + 1, b, m))
    }
    m <= adj.len() && left(adj, a, bit(a) | bit(b), 1, b, m)
}

/// Is there a path from `cur` back to `target` closing a cycle on `m` vertices?
/// `len` counts the vertices already on the path (including `target`).
fn closes_cycle(adj: &[u64], cur: usize, target: usize, used: u64, len: usize, m: usize) -> bool {
    if len == m {
        return adj[cur] & bit(target) != 0;
    }
    bits(adj[cur] & !used).any(|u| closes_cycle(adj, u, target, used | bit(u), len + 1, m))
}
