//! Exact parameters used by the goodness and star-critical upper bounds:
//! chromatic number, chromatic surplus `s(F)` and the cross-class degree `τ(F)`.

use thiserror::Error;

use crate::detect::{max_clique, max_matching};
use crate::graph::{bit, bits, Graph};

/// Largest graph the coloring enumerations accept.
pub const MAX_PARAM_VERTICES: usize = 12;

/// How `τ(F)` is read: the minimum, over proper `χ(F)`-colorings whose class
/// `U_1` has size `s(F)`, over vertices `v ∈ U_1` and over every other class
/// `U_i`, of `|N(v) ∩ U_i|`.
pub const TAU_INTERPRETATION: &str =
    "min over chi-colorings with |U1|=s, over v in U1, over classes Ui (i>=2), of |N(v) & Ui|";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("graph has {0} vertices; coloring enumeration is limited to {MAX_PARAM_VERTICES}")]
    TooLarge(usize),
    #[error("graph must be connected")]
    Disconnected,
    #[error("graph needs chromatic number at least 2")]
    Edgeless,
    #[error("v(H) = {order} is below s(F) = {surplus}")]
    OrderBelowSurplus { order: usize, surplus: usize },
}

/// Color classes of one proper coloring, as vertex masks sorted by size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringClassProfile {
    pub classes: Vec<u64>,
}

impl ColoringClassProfile {
    fn from_assignment(colors: &[usize], k: usize) -> Self {
        let mut classes = vec![0u64; k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c] |= bit(v);
        }
        classes.sort_by_key(|c| (c.count_ones(), *c));
        ColoringClassProfile { classes }
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| c.count_ones() as usize)
            .collect()
    }

    /// Classes cover every vertex exactly once and contain no edge of `g`.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        let mut seen = 0u64;
        for &c in &self.classes {
            if c & seen != 0 || bits(c).any(|v| g.neighbors(v) & c != 0) {
                return false;
            }
            seen |= c;
        }
        seen.count_ones() as usize == g.n()
    }
}

fn check_size(g: &Graph) -> Result<(), ParamsError> {
    if g.n() > MAX_PARAM_VERTICES {
        Err(ParamsError::TooLarge(g.n()))
    } else {
        Ok(())
    }
}

/// Calls `visit` on every proper coloring using exactly `k` nonempty classes.
///
/// Colorings are canonical: vertex 0 gets class 0 and class `i+1` is only
/// opened after class `i`, so each partition is seen once.
fn for_each_coloring(g: &Graph, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(
        g: &Graph,
        k: usize,
        v: usize,
        used: usize,
        colors: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let n = g.n();
        if n - v < k - used {
            return;
        }
        if v == n {
            visit(colors);
            return;
        }
        for c in 0..(used + 1).min(k) {
            let clash = bits(g.neighbors(v) & ((1u64 << v) - 1)).any(|u| colors[u] == c);
            if !clash {
                colors.push(c);
                rec(g, k, v + 1, used.max(c + 1), colors, visit);
                colors.pop();
            }
        }
    }
    let mut colors = Vec::with_capacity(g.n());
    rec(g, k, 0, 0, &mut colors, visit);
}

fn is_colorable(g: &Graph, k: usize) -> bool {
    fn rec(g: &Graph, k: usize, v: usize, used: usize, colors: &mut [usize]) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..(used + 1).min(k) {
            if bits(g.neighbors(v) & ((1u64 << v) - 1)).all(|u| colors[u] != c) {
                colors[v] = c;
                if rec(g, k, v + 1, used.max(c + 1), colors) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![usize::MAX; g.n()];
    rec(g, k, 0, 0, &mut colors)
}

fn greedy_colors(g: &Graph) -> usize {
    let mut colors = vec![usize::MAX; g.n()];
    let mut max = 0;
    for v in 0..g.n() {
        let taken: Vec<usize> = bits(g.neighbors(v)).map(|u| colors[u]).collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        colors[v] = c;
        max = max.max(c + 1);
    }
    max
}

/// Exact `χ(f)`: clique lower bound, greedy upper bound, backtracking in between.
pub fn chromatic_number(f: &Graph) -> Result<usize, ParamsError> {
    check_size(f)?;
    let lower = max_clique(f);
    let upper = greedy_colors(f);
    Ok((lower..upper)
        .find(|&k| is_colorable(f, k))
        .unwrap_or(upper))
}

/// A `χ(f)`-coloring whose smallest class is as small as possible.
pub fn surplus_profile(f: &Graph) -> Result<ColoringClassProfile, ParamsError> {
    let chi = chromatic_number(f)?;
    let mut best: Option<(usize, ColoringClassProfile)> = None;
    for_each_coloring(f, chi, &mut |colors| {
        let profile = ColoringClassProfile::from_assignment(colors, chi);
        let smallest = profile.classes[0].count_ones() as usize;
        if best.as_ref().is_none_or(|(s, _)| smallest < *s) {
            best = Some((smallest, profile));
        }
    });
    Ok(best.expect("a chi-coloring exists").1)
}

/// `s(f)`: smallest class size minimized over all proper `χ(f)`-colorings.
pub fn chromatic_surplus(f: &Graph) -> Result<usize, ParamsError> {
    Ok(surplus_profile(f)?.sizes()[0])
}

/// `τ(f)` under [`TAU_INTERPRETATION`].
pub fn tau(f: &Graph) -> Result<usize, ParamsError> {
    let chi = chromatic_number(f)?;
    if chi < 2 {
        return Err(ParamsError::Edgeless);
    }
    let s = chromatic_surplus(f)?;
    let mut best = usize::MAX;
    for_each_coloring(f, chi, &mut |colors| {
        let profile = ColoringClassProfile::from_assignment(colors, chi);
        for (i, &first) in profile.classes.iter().enumerate() {
            if first.count_ones() as usize != s {
                continue;
            }
            for v in bits(first) {
                for (j, &other) in profile.classes.iter().enumerate() {
                    if i != j {
                        best = best.min((f.neighbors(v) & other).count_ones() as usize);
                    }
                }
            }
        }
    });
    Ok(best)
}

fn check_good_inputs(f: &Graph, h: &Graph) -> Result<(usize, usize), ParamsError> {
    if !h.is_connected() {
        return Err(ParamsError::Disconnected);
    }
    let chi = chromatic_number(f)?;
    let s = chromatic_surplus(f)?;
    if h.n() < s {
        return Err(ParamsError::OrderBelowSurplus {
            order: h.n(),
            surplus: s,
        });
    }
    Ok((chi, s))
}

/// The goodness value `(χ(F) − 1)(v(H) − 1) + s(F)`.
pub fn goodness_value(f: &Graph, h: &Graph) -> Result<usize, ParamsError> {
    let (chi, s) = check_good_inputs(f, h)?;
    Ok((chi - 1) * (h.n() - 1) + s)
}

/// Whether `h` is `f`-good given the verified Ramsey number `r = R(F,H)`.
pub fn is_good(f: &Graph, h: &Graph, r: usize) -> Result<bool, ParamsError> {
    Ok(goodness_value(f, h)? == r)
}

/// Upper bound on the star-critical number of an `F`-good `H`:
/// `max{s(F) − 2, v(H) + s(F) − δ(H) − τ(F) − 1}`.
pub fn lemma4_bound(f: &Graph, h: &Graph) -> Result<i64, ParamsError> {
    let (chi, s) = check_good_inputs(f, h)?;
    if chi < 2 {
        return Err(ParamsError::Edgeless);
    }
    let t = tau(f)? as i64;
    let s = s as i64;
    let n = h.n() as i64;
    let delta = h.min_degree() as i64;
    Ok((s - 2).max(n + s - delta - t - 1))
}

/// Everything the `params` command prints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphParams {
    pub order: usize,
    pub size: usize,
    pub min_degree: usize,
    pub matching_number: usize,
    pub clique_number: usize,
    pub chromatic_number: usize,
    pub chromatic_surplus: usize,
    /// `None` for edgeless graphs.
    pub tau: Option<usize>,
}

pub fn graph_params(g: &Graph) -> Result<GraphParams, ParamsError> {
    let chi = chromatic_number(g)?;
    Ok(GraphParams {
        order: g.n(),
        size: g.edge_count(),
        min_degree: g.min_degree(),
        matching_number: max_matching(g),
        clique_number: max_clique(g),
        chromatic_number: chi,
        chromatic_surplus: chromatic_surplus(g)?,
        tau: if chi >= 2 { Some(tau(g)?) } else { None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(r: usize) -> Graph {
        Graph::complete(r).unwrap()
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&k(4)).unwrap(), 4);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::path(4).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()).unwrap(), 1);
        assert_eq!(chromatic_number(&k(13)), Err(ParamsError::TooLarge(13)));
    }

    #[test]
    fn surpluses() {
        assert_eq!(chromatic_surplus(&k(3)).unwrap(), 1);
        assert_eq!(chromatic_surplus(&Graph::cycle(4).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_surplus(&Graph::star(3).unwrap()).unwrap(), 1);
        assert_eq!(chromatic_surplus(&Graph::path(4).unwrap()).unwrap(), 2);
        assert_eq!(chromatic_surplus(&Graph::path(5).unwrap()).unwrap(), 2);
        let p = surplus_profile(&Graph::cycle(5).unwrap()).unwrap();
        assert!(p.is_proper_for(&Graph::cycle(5).unwrap()));
        assert_eq!(p.sizes(), vec![1, 2, 2]);
    }

    #[test]
    fn taus() {
        for m in 2..=5 {
            assert_eq!(tau(&k(m)).unwrap(), 1, "K{m}");
        }
        assert_eq!(tau(&Graph::cycle(4).unwrap()).unwrap(), 2);
        assert_eq!(tau(&Graph::path(4).unwrap()).unwrap(), 1);
        assert_eq!(tau(&Graph::empty(2).unwrap()), Err(ParamsError::Edgeless));
    }

    #[test]
    fn goodness() {
        let k3 = k(3);
        assert!(is_good(&k3, &Graph::path(4).unwrap(), 7).unwrap());
        let s2 = Graph::star(2).unwrap();
        assert!(is_good(&s2, &s2, 3).unwrap());
        assert!(!is_good(&k3, &k3, 6).unwrap());
        assert!(is_good(&k(2), &k(2), 2).unwrap());
        assert_eq!(
            is_good(&k3, &Graph::matching(2).unwrap(), 5),
            Err(ParamsError::Disconnected)
        );
    }

    #[test]
    fn upper_bound_examples() {
        let k3 = k(3);
        assert_eq!(lemma4_bound(&k3, &Graph::path(4).unwrap()).unwrap(), 2);
        assert_eq!(lemma4_bound(&k3, &Graph::path(5).unwrap()).unwrap(), 3);
        assert_eq!(lemma4_bound(&k(2), &k(2)).unwrap(), 0);
    }

    #[test]
    fn chromatic_matches_exhaustive_class_count() {
        // Every graph on 5 vertices: compare with the least k admitting a
        // proper assignment from the full k^n space.
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let g = Graph::from_edges(
                5,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            let brute = (1..=5)
                .find(|&k: &usize| {
                    (0..k.pow(5)).any(|code| {
                        let col: Vec<usize> = (0..5).map(|v| code / k.pow(v as u32) % k).collect();
                        g.edges().all(|e| col[e.u] != col[e.v])
                    })
                })
                .unwrap();
            assert_eq!(chromatic_number(&g).unwrap(), brute);
        }
    }
}
