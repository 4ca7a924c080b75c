//! Ramsey numbers and critical Ramsey numbers computed from the arrowing search.
//!
//! For a class `G_k ⊂ G_{k+1} ⊂ ...` the critical number is the largest index
//! `n` with `K_r \ G_n → (F, H)`, `r = R(F, H)`, or 0 when no member works.
//! Because the members are nested, arrowing is monotone in `n` and an upward
//! scan that stops at the first failure finds it.

use std::collections::HashMap;
use std::sync::Mutex;

use thiserror::Error;

use crate::arrow::{arrows, ArrowError, SearchOptions, SearchStats, Verdict};
use crate::coloring::TwoColoring;
use crate::detect::Pattern;
use crate::graph::{DeletionClass, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalError {
    #[error(transparent)]
    Arrow(#[from] ArrowError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no K_r with r <= {max_r} arrows ({f}, {h})")]
    RamseyNotFound {
        f: Pattern,
        h: Pattern,
        max_r: usize,
    },
}

/// Where the Ramsey number comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamseyMode {
    /// Always found by search.
    Verify,
    /// Star-star and matching-matching pairs use their closed forms.
    ClosedForm,
}

/// `R(S_m, S_n)`: `m + n − 1` when both are even, `m + n` otherwise.
pub fn star_star_closed_form(m: usize, n: usize) -> usize {
    if m.is_multiple_of(2) && n.is_multiple_of(2) {
        m + n - 1
    } else {
        m + n
    }
}

/// `R(M_m, M_n) = 2n + m − 1` for `n >= m >= 1`.
pub fn matching_matching_closed_form(m: usize, n: usize) -> usize {
    let (small, large) = (m.min(n), m.max(n));
    2 * large + small - 1
}

/// Closed form for the pair, when one is known.
pub fn closed_form(f: Pattern, h: Pattern) -> Option<usize> {
    match (f, h) {
        (Pattern::Star(m), Pattern::Star(n)) => Some(star_star_closed_form(m, n)),
        (Pattern::Matching(m), Pattern::Matching(n)) => Some(matching_matching_closed_form(m, n)),
        _ => None,
    }
}

/// Published critical numbers for star and matching pairs, when they apply.
///
/// Values below the class's first index mean no member can be deleted, so
/// they are reported as 0.
pub fn critical_closed_form(class: DeletionClass, f: Pattern, h: Pattern) -> Option<usize> {
    let value = match (class, f, h) {
        (_, Pattern::Star(m), Pattern::Star(n)) if m % 2 == 0 && n % 2 == 0 => {
            if class == DeletionClass::Path {
                return None;
            }
            0
        }
        (DeletionClass::Star, Pattern::Star(m), Pattern::Star(n)) => m + n - 2,
        (DeletionClass::Matching, Pattern::Star(m), Pattern::Star(n)) => (m + n - 1) / 2,
        (DeletionClass::Complete, Pattern::Star(m), Pattern::Star(n)) => m + n - 1,
        (DeletionClass::Matching, Pattern::Matching(a), Pattern::Matching(b)) if a.max(b) >= 2 => {
            (2 * a.max(b) + a.min(b) - 1) / 2
        }
        (DeletionClass::Complete, Pattern::Matching(a), Pattern::Matching(b)) if a.max(b) >= 2 => {
            a.max(b)
        }
        _ => return None,
    };
    Some(if value < class.min_index() { 0 } else { value })
}

/// Published star-critical numbers `r_*(F, H)` for the families this crate
/// can express.
pub fn star_critical_closed_form(f: Pattern, h: Pattern) -> Option<usize> {
    use Pattern::*;
    match (f, h) {
        (Matching(n), Matching(m)) if n >= m => Some(m),
        (Path(n), Clique(m)) if n >= 2 && m >= 2 => Some((n - 1) * (m - 2) + 1),
        (Star(k), Clique(m)) if m >= 2 => Some(k * (m - 2) + 1),
        (Path(n), Cycle(4)) if n >= 3 => Some(3),
        (Cycle(n), Cycle(4)) if n >= 6 => Some(5),
        (Path(n), Path(m)) if n >= m && m >= 4 => Some(m.div_ceil(2)),
        (Clique(n), Matching(m)) if n >= 3 => Some(n + 2 * m - 3),
        _ => None,
    }
}

fn choose2(m: usize) -> usize {
    if m < 2 {
        0
    } else {
        m * (m - 1) / 2
    }
}

/// Confirmation that a host arrows, kept as the lower half of a bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowRecord {
    pub index: usize,
    pub host: Graph,
    pub stats: SearchStats,
}

/// The upper half of a bracket: why index `value + 1` is not achieved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// `K_r \ G_index` has this free coloring.
    Witness { index: usize, coloring: TwoColoring },
    /// `G_index` does not fit in `K_r`.
    ClassExhausted { index: usize },
}

impl Failure {
    pub fn index(&self) -> usize {
        match self {
            Failure::Witness { index, .. } | Failure::ClassExhausted { index } => *index,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalResult {
    pub class: DeletionClass,
    pub f: Pattern,
    pub h: Pattern,
    pub r: usize,
    /// 0 when no member of the class can be deleted.
    pub value: usize,
    /// Present iff `value > 0`.
    pub arrowing: Option<ArrowRecord>,
    pub failure: Failure,
}

/// The three quantities tied together by `R_S = R − 1 − r_*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarIdentity {
    pub r: usize,
    pub star_critical: usize,
    pub r_star: usize,
}

impl StarIdentity {
    pub fn holds(&self) -> bool {
        self.star_critical + 1 + self.r_star == self.r
    }
}

/// Runs the arrowing search for every quantity derived from it.
///
/// Ramsey numbers are cached per ordered pattern pair.
pub struct Calculator {
    pub search: SearchOptions,
    pub mode: RamseyMode,
    pub max_r: usize,
    cache: Mutex<HashMap<(Pattern, Pattern), usize>>,
}

impl Default for Calculator {
    fn default() -> Self {
        Calculator::new(SearchOptions::default())
    }
}

impl Calculator {
    pub fn new(search: SearchOptions) -> Self {
        Calculator {
            search,
            mode: RamseyMode::Verify,
            max_r: 10,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_mode(mut self, mode: RamseyMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_max_r(mut self, max_r: usize) -> Self {
        self.max_r = max_r;
        self
    }

    /// `R(f, h)`, scanning `K_r` upward from `max(v(f), v(h))`.
    ///
    /// An all-red `K_{v(F)−1}` has neither a red `F` nor any blue edge, so the
    /// scan cannot start too high.
    pub fn ramsey_number(&self, f: Pattern, h: Pattern) -> Result<usize, CriticalError> {
        if let Some(&r) = self.cache.lock().unwrap().get(&(f, h)) {
            return Ok(r);
        }
        if self.mode == RamseyMode::ClosedForm {
            if let Some(r) = closed_form(f, h) {
                return Ok(r);
            }
        }
        let start = f.order().max(h.order()).max(1);
        for r in start..=self.max_r {
            let res = arrows(&Graph::complete(r)?, f, h, &self.search)?;
            if res.verdict == Verdict::Arrows {
                self.cache.lock().unwrap().insert((f, h), r);
                return Ok(r);
            }
        }
        Err(CriticalError::RamseyNotFound {
            f,
            h,
            max_r: self.max_r,
        })
    }

    /// Largest class index whose deletion from `K_r` still arrows.
    pub fn critical_number(
        &self,
        class: DeletionClass,
        f: Pattern,
        h: Pattern,
    ) -> Result<CriticalResult, CriticalError> {
        let r = self.ramsey_number(f, h)?;
        let complete = Graph::complete(r)?;
        let mut arrowing = None;
        let mut index = class.min_index();
        let failure = loop {
            if !class.embeds(index, r) {
                break Failure::ClassExhausted { index };
            }
            let host = complete.delete_class_member(class, index)?;
            let res = arrows(&host, f, h, &self.search)?;
            match res.witness {
                Some(coloring) => break Failure::Witness { index, coloring },
                None => {
                    arrowing = Some(ArrowRecord {
                        index,
                        host,
                        stats: res.stats,
                    });
                    index += 1;
                }
            }
        };
        Ok(CriticalResult {
            class,
            f,
            h,
            r,
            value: arrowing.as_ref().map_or(0, |a| a.index),
            arrowing,
            failure,
        })
    }

    /// Least `k` with `K_{r−1} ⊔ S_k → (f, h)`.
    pub fn star_critical_hook(&self, f: Pattern, h: Pattern) -> Result<usize, CriticalError> {
        let r = self.ramsey_number(f, h)?;
        for k in 0..r {
            let host = Graph::book_join(r - 1, k)?;
            if arrows(&host, f, h, &self.search)?.verdict == Verdict::Arrows {
                return Ok(k);
            }
        }
        unreachable!("K_{{r-1}} joined fully is K_r, which arrows")
    }

    pub fn star_identity(&self, f: Pattern, h: Pattern) -> Result<StarIdentity, CriticalError> {
        Ok(StarIdentity {
            r: self.ramsey_number(f, h)?,
            star_critical: self.critical_number(DeletionClass::Star, f, h)?.value,
            r_star: self.star_critical_hook(f, h)?,
        })
    }

    /// Checks `R_S(F,H) = R(F,H) − 1 − r_*(F,H)`.
    pub fn check_identity_eq1(&self, f: Pattern, h: Pattern) -> Result<bool, CriticalError> {
        Ok(self.star_identity(f, h)?.holds())
    }

    /// Ramsey-full on the class: not even its smallest member can be deleted.
    pub fn is_ramsey_full(
        &self,
        class: DeletionClass,
        f: Pattern,
        h: Pattern,
    ) -> Result<bool, CriticalError> {
        Ok(self.critical_number(class, f, h)?.value == 0)
    }

    /// Size-Ramsey upper bound `C(r,2) − C(R_K,2)`.
    pub fn lemma7_size_ramsey_bound(&self, f: Pattern, h: Pattern) -> Result<usize, CriticalError> {
        let r = self.ramsey_number(f, h)?;
        let rk = self.critical_number(DeletionClass::Complete, f, h)?.value;
        Ok(choose2(r) - choose2(rk))
    }
}
