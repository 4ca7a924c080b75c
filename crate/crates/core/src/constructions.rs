//! Explicit extremal colorings for star and matching pairs.
//!
//! Each builder returns the coloring on the canonical host of the relevant
//! deletion class (so it can be compared directly with search results) and a
//! note describing the choices that the construction leaves open.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::arrow::{verify_free, FreeCheck};
use crate::coloring::{ColoringError, TwoColoring};
use crate::detect::{find_in, Pattern};
use crate::graph::{DeletionClass, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("parameters ({m}, {n}) violate: {rule}")]
    Parameters {
        m: usize,
        n: usize,
        rule: &'static str,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("construction ({m}, {n}) is not free of ({f}, {h})")]
    NotFree {
        m: usize,
        n: usize,
        f: Pattern,
        h: Pattern,
    },
}

/// A built coloring together with the pair it avoids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub coloring: TwoColoring,
    pub f: Pattern,
    pub h: Pattern,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    /// Star pair, both even, on `K_{m+n−2}`.
    StarEven,
    /// Star pair, both even, on `K_{m+n−1} \ S_1`.
    StarExtension,
    /// Star pair, both odd, on `K_{m+n} \ M_{(m+n)/2}`.
    StarOdd,
    /// Matching pair on `K_{2n+m−1} \ K_{n+1}`.
    MatchingJoin,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 4] = [
        ConstructionKind::StarEven,
        ConstructionKind::StarExtension,
        ConstructionKind::StarOdd,
        ConstructionKind::MatchingJoin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::StarEven => "star-even",
            ConstructionKind::StarExtension => "star-extension",
            ConstructionKind::StarOdd => "star-odd",
            ConstructionKind::MatchingJoin => "matching-join",
        }
    }

    /// Builds the construction and re-verifies it with the detectors.
    pub fn build(self, m: usize, n: usize) -> Result<Construction, ConstructionError> {
        let c = match self {
            ConstructionKind::StarEven => thm2_even(m, n)?,
            ConstructionKind::StarExtension => thm2_extension(m, n)?,
            ConstructionKind::StarOdd => thm3_odd(m, n)?,
            ConstructionKind::MatchingJoin => thm6_join(m, n)?,
        };
        match verify_free(&c.coloring, c.f, c.h)? {
            FreeCheck::Free => Ok(c),
            FreeCheck::Violated { .. } => Err(ConstructionError::NotFree {
                m,
                n,
                f: c.f,
                h: c.h,
            }),
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConstructionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = ConstructionKind::ALL.iter().map(|k| k.name()).collect();
                format!(
                    "unknown construction `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

fn require(ok: bool, m: usize, n: usize, rule: &'static str) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::Parameters { m, n, rule })
    }
}

fn check_even(m: usize, n: usize) -> Result<(), ConstructionError> {
    require(
        m >= 2 && n >= 2 && m.is_multiple_of(2) && n.is_multiple_of(2),
        m,
        n,
        "m and n must be even and positive",
    )?;
    require(
        m + n - 1 <= crate::graph::MAX_VERTICES,
        m,
        n,
        "host too large",
    )
}

fn format_pairs(pairs: &[(usize, usize)]) -> String {
    pairs
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect::<Vec<_>>()
        .join(",")
}

type EvenParts = (Graph, Graph, Vec<(usize, usize)>);

/// Red/blue split of `K_{m+n−2}` and the matching removed from the blue side.
fn star_even_parts(m: usize, n: usize) -> Result<EvenParts, GraphError> {
    let order = m + n - 2;
    let diffs: Vec<usize> = (1..=(m - 2) / 2).collect();
    let near = Graph::circulant(order, &diffs)?;
    let far = near.complement();
    let half = n / 2;
    let mut pairs: Vec<(usize, usize)> = (0..half).map(|i| (i, i + half)).collect();
    if !pairs.iter().all(|&(a, b)| far.has_edge(a, b)) {
        let w = find_in(far.adj(), Pattern::Matching(half))
            .expect("the complement of the circulant has a matching on n vertices");
        pairs = w.edges.iter().map(|e| (e.u, e.v)).collect();
    }
    let matching = Graph::from_edges(order, pairs.iter().copied())?;
    let red = Graph::from_edges(
        order,
        near.edges().chain(matching.edges()).map(|e| (e.u, e.v)),
    )?;
    let blue = far.minus(&matching);
    Ok((red, blue, pairs))
}

fn thm2_even(m: usize, n: usize) -> Result<Construction, ConstructionError> {
    check_even(m, n)?;
    let (red, blue, pairs) = star_even_parts(m, n)?;
    let host = Graph::complete(m + n - 2)?;
    Ok(Construction {
        coloring: TwoColoring::new(host, red, blue)?,
        f: Pattern::Star(m),
        h: Pattern::Star(n),
        note: format!(
            "star-even m={m} n={n}: red = circulant Z_{} differences 1..{} plus matching {}",
            m + n - 2,
            (m - 2) / 2,
            format_pairs(&pairs)
        ),
    })
}

/// `(S_m,S_n)`-free coloring of `K_{m+n−2}` with `m`, `n` even.
pub fn thm2_even_coloring(m: usize, n: usize) -> Result<TwoColoring, ConstructionError> {
    Ok(thm2_even(m, n)?.coloring)
}

fn thm2_extension(m: usize, n: usize) -> Result<Construction, ConstructionError> {
    check_even(m, n)?;
    let (red, blue, pairs) = star_even_parts(m, n)?;
    let old = m + n - 2;
    let v = old;
    let matched: u64 = pairs
        .iter()
        .fold(0, |acc, &(a, b)| acc | (1 << a) | (1 << b));
    let a1: Vec<usize> = (0..old).filter(|&x| matched & (1 << x) == 0).collect();
    let a2: Vec<usize> = (0..old).filter(|&x| matched & (1 << x) != 0).collect();
    let (joined, missing) = a2.split_at(n - 1);
    let missing = missing[0];

    let total = old + 1;
    let red_edges = red
        .edges()
        .map(|e| (e.u, e.v))
        .chain(a1.iter().map(|&x| (x, v)));
    let blue_edges = blue
        .edges()
        .map(|e| (e.u, e.v))
        .chain(joined.iter().map(|&x| (x, v)));
    let red = Graph::from_edges(total, red_edges)?;
    let blue = Graph::from_edges(total, blue_edges)?;
    let host = Graph::complete(total)?.minus(&Graph::from_edges(total, [(v, missing)])?);
    let coloring = TwoColoring::new(host, red, blue)?;

    // v becomes the star center 0 and its missing neighbor the leaf 1.
    let mut perm = vec![0; total];
    perm[v] = 0;
    perm[missing] = 1;
    let mut next = 2;
    for (x, slot) in perm.iter_mut().enumerate().take(old) {
        if x != missing {
            *slot = next;
            next += 1;
        }
    }
    Ok(Construction {
        coloring: coloring.relabel(&perm)?,
        f: Pattern::Star(m),
        h: Pattern::Star(n),
        note: format!(
            "star-extension m={m} n={n}: star-even coloring with matching {} plus a vertex red to the {} unmatched vertices and blue to all matched vertices but {missing}; relabeled so the new vertex is 0 and {missing} is 1",
            format_pairs(&pairs),
            m - 2
        ),
    })
}

/// `(S_m,S_n)`-free coloring of `K_{m+n−1} \ S_1` with `m`, `n` even.
pub fn thm2_extension_coloring(m: usize, n: usize) -> Result<TwoColoring, ConstructionError> {
    Ok(thm2_extension(m, n)?.coloring)
}

fn thm3_odd(m: usize, n: usize) -> Result<Construction, ConstructionError> {
    require(
        m >= 1 && n >= 1 && m % 2 == 1 && n % 2 == 1,
        m,
        n,
        "m and n must both be odd",
    )?;
    let order = m + n;
    require(order >= 4, m, n, "m + n must be at least 4")?;
    require(order <= crate::graph::MAX_VERTICES, m, n, "host too large")?;
    let half = order / 2;
    let red_diffs: Vec<usize> = (1..=(m - 1) / 2).collect();
    let blue_diffs: Vec<usize> = (m.div_ceil(2)..=(order - 2) / 2).collect();
    let red = Graph::circulant(order, &red_diffs)?;
    let blue = Graph::circulant(order, &blue_diffs)?;
    let host = Graph::complete(order)?.minus(&Graph::circulant(order, &[half])?);
    let coloring = TwoColoring::new(host, red, blue)?;

    let mut perm = vec![0; order];
    for i in 0..half {
        perm[i] = 2 * i;
        perm[i + half] = 2 * i + 1;
    }
    Ok(Construction {
        coloring: coloring.relabel(&perm)?,
        f: Pattern::Star(m),
        h: Pattern::Star(n),
        note: format!(
            "star-odd m={m} n={n}: Z_{order} with red differences 1..{} and blue differences {}..{}; the absent matching is difference {half} (inferred, the only unused difference); pair (i, i+{half}) relabeled to (2i, 2i+1)",
            (m - 1) / 2,
            m.div_ceil(2),
            (order - 2) / 2
        ),
    })
}

/// `(S_m,S_n)`-free coloring of `K_{m+n} \ M_{(m+n)/2}` with `m`, `n` odd.
pub fn thm3_odd_coloring(m: usize, n: usize) -> Result<TwoColoring, ConstructionError> {
    Ok(thm3_odd(m, n)?.coloring)
}

fn thm6_join(m: usize, n: usize) -> Result<Construction, ConstructionError> {
    require(
        m >= 1 && n >= m && n >= 2,
        m,
        n,
        "need n >= m >= 1 and n >= 2",
    )?;
    let order = 2 * n + m - 1;
    require(order <= crate::graph::MAX_VERTICES, m, n, "host too large")?;
    let host = Graph::complete(order)?.delete_class_member(DeletionClass::Complete, n + 1)?;
    let hubs = n + 1..n + m;
    let red_edges: Vec<(usize, usize)> = host
        .edges()
        .filter(|e| hubs.contains(&e.u) || hubs.contains(&e.v))
        .map(|e| (e.u, e.v))
        .collect();
    Ok(Construction {
        coloring: TwoColoring::from_red_edges(host, red_edges)?,
        f: Pattern::Matching(m),
        h: Pattern::Matching(n),
        note: format!(
            "matching-join m={m} n={n}: independent set 0..={n}; red = every edge at {}..{}",
            n + 1,
            n + m - 1
        ),
    })
}

/// `(M_m,M_n)`-free coloring of `K_{2n+m−1} \ K_{n+1}`.
pub fn thm6_join_coloring(m: usize, n: usize) -> Result<TwoColoring, ConstructionError> {
    Ok(thm6_join(m, n)?.coloring)
}
