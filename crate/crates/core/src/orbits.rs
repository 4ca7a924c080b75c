//! Edge orbits for the host shapes whose automorphisms are known in closed form.
//!
//! Only complete graphs, complete graphs with one canonical class member
//! deleted, and `K_r ⊔ S_k` are recognized. Orbits are closures of the edge
//! under an explicit generating set, so they are never larger than the true
//! automorphism orbit.

use std::collections::BTreeSet;

use crate::graph::{DeletionClass, EdgeId, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HostForm {
    Complete {
        r: usize,
    },
    Minus {
        r: usize,
        class: DeletionClass,
        index: usize,
    },
    BookJoin {
        r: usize,
        k: usize,
    },
}

impl HostForm {
    pub fn graph(&self) -> Graph {
        match *self {
            HostForm::Complete { r } => Graph::complete(r).expect("recognized order"),
            HostForm::Minus { r, class, index } => Graph::complete(r)
                .and_then(|k| k.delete_class_member(class, index))
                .expect("recognized deletion"),
            HostForm::BookJoin { r, k } => Graph::book_join(r, k).expect("recognized join"),
        }
    }

    /// Matches `g` exactly against the canonical builds of every known form.
    pub fn recognize(g: &Graph) -> Option<HostForm> {
        let n = g.n();
        if g.is_complete() {
            return Some(HostForm::Complete { r: n });
        }
        let complete = Graph::complete(n).ok()?;
        for class in DeletionClass::ALL {
            let missing = complete.edge_count() - g.edge_count();
            for index in class.min_index()..=n {
                if !class.embeds(index, n) || class.member_size(index) != missing {
                    continue;
                }
                if complete.delete_class_member(class, index).ok().as_ref() == Some(g) {
                    return Some(HostForm::Minus { r: n, class, index });
                }
            }
        }
        if n >= 2 {
            let r = n - 1;
            let k = g.degree(r);
            if k <= r && Graph::book_join(r, k).ok().as_ref() == Some(g) {
                return Some(HostForm::BookJoin { r, k });
            }
        }
        None
    }

    fn order(&self) -> usize {
        match *self {
            HostForm::Complete { r } | HostForm::Minus { r, .. } => r,
            HostForm::BookJoin { r, .. } => r + 1,
        }
    }

    /// Vertex permutations generating a subgroup of the automorphism group.
    pub fn generators(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut gens = Vec::new();
        let sym = |range: std::ops::Range<usize>, gens: &mut Vec<Vec<usize>>| {
            for a in range.start..range.end.saturating_sub(1) {
                gens.push(transposition(n, &[(a, a + 1)]));
            }
        };
        match *self {
            HostForm::Complete { r } => sym(0..r, &mut gens),
            HostForm::Minus { r, class, index } => match class {
                DeletionClass::Star => {
                    sym(1..index + 1, &mut gens);
                    sym(index + 1..r, &mut gens);
                }
                DeletionClass::Matching => {
                    for i in 0..index {
                        gens.push(transposition(n, &[(2 * i, 2 * i + 1)]));
                    }
                    for i in 0..index.saturating_sub(1) {
                        gens.push(transposition(
                            n,
                            &[(2 * i, 2 * i + 2), (2 * i + 1, 2 * i + 3)],
                        ));
                    }
                    sym(2 * index..r, &mut gens);
                }
                DeletionClass::Path => {
                    let pairs: Vec<(usize, usize)> =
                        (0..index / 2).map(|i| (i, index - 1 - i)).collect();
                    gens.push(transposition(n, &pairs));
                    sym(index..r, &mut gens);
                }
                DeletionClass::Complete => {
                    sym(0..index, &mut gens);
                    sym(index..r, &mut gens);
                }
            },
            HostForm::BookJoin { r, k } => {
                sym(0..k, &mut gens);
                sym(k..r, &mut gens);
            }
        }
        gens
    }

    /// Edges reachable from `e` under the generators, sorted.
    pub fn edge_orbit(&self, e: EdgeId) -> Vec<EdgeId> {
        let gens = self.generators();
        let mut seen = BTreeSet::from([e]);
        let mut stack = vec![e];
        while let Some(x) = stack.pop() {
            for g in &gens {
                let y = EdgeId::new(g[x.u], g[x.v]);
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }
}

fn transposition(n: usize, swaps: &[(usize, usize)]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for &(a, b) in swaps {
        p.swap(a, b);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_forms(n: usize) -> Vec<HostForm> {
        let mut out = vec![HostForm::Complete { r: n }];
        for class in DeletionClass::ALL {
            for index in class.min_index()..=n {
                if class.embeds(index, n) {
                    out.push(HostForm::Minus { r: n, class, index });
                }
            }
        }
        for k in 0..n {
            out.push(HostForm::BookJoin { r: n, k });
        }
        out
    }

    #[test]
    fn generators_are_automorphisms() {
        for n in 2..=9 {
            for form in all_forms(n) {
                let g = form.graph();
                for p in form.generators() {
                    assert_eq!(g.relabel(&p).unwrap(), g, "{form:?} {p:?}");
                }
            }
        }
    }

    #[test]
    fn recognition_round_trips_up_to_equal_graphs() {
        for n in 2..=9 {
            for form in all_forms(n) {
                let g = form.graph();
                let found = HostForm::recognize(&g).expect("recognized");
                assert_eq!(found.graph(), g);
            }
        }
        assert_eq!(HostForm::recognize(&Graph::cycle(5).unwrap()), None);
    }

    #[test]
    fn orbits_of_known_hosts() {
        let k5 = HostForm::Complete { r: 5 };
        assert_eq!(k5.edge_orbit(EdgeId::new(0, 1)).len(), 10);

        // K6 minus the star 0-{1,2}: leaf-leaf, leaf-rest, rest-rest, center-rest.
        let g = HostForm::Minus {
            r: 6,
            class: DeletionClass::Star,
            index: 2,
        };
        assert_eq!(g.edge_orbit(EdgeId::new(1, 2)), vec![EdgeId::new(1, 2)]);
        assert_eq!(g.edge_orbit(EdgeId::new(1, 3)).len(), 6);
        assert_eq!(g.edge_orbit(EdgeId::new(3, 4)).len(), 3);
        assert_eq!(g.edge_orbit(EdgeId::new(0, 3)).len(), 3);

        // K5 minus M2 = complement of 2K2 ∪ K1.
        let g = HostForm::Minus {
            r: 5,
            class: DeletionClass::Matching,
            index: 2,
        };
        assert_eq!(g.edge_orbit(EdgeId::new(0, 2)).len(), 4);
        assert_eq!(g.edge_orbit(EdgeId::new(0, 4)).len(), 4);
    }
}
