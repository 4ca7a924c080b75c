//! Red/blue edge colorings of a host graph.

use std::fmt;

use thiserror::Error;

use crate::graph::{check_permutation, EdgeId, Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("color classes and host have different vertex counts")]
    OrderMismatch,
    #[error("edge {0} is both red and blue")]
    Overlap(EdgeId),
    #[error("host edge {0} has no color")]
    Uncovered(EdgeId),
    #[error("colored edge {0} is not a host edge")]
    NotInHost(EdgeId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A host graph whose edge set is split into a red and a blue class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    host: Graph,
    red: Graph,
    blue: Graph,
}

impl TwoColoring {
    /// Checks that `red` and `blue` partition the host's edges exactly.
    pub fn new(host: Graph, red: Graph, blue: Graph) -> Result<Self, ColoringError> {
        let c = TwoColoring { host, red, blue };
        c.check()?;
        Ok(c)
    }

    /// Red edges as given, every other host edge blue.
    pub fn from_red_edges<I>(host: Graph, red_edges: I) -> Result<Self, ColoringError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let red = Graph::from_edges(host.n(), red_edges)?;
        if let Some(e) = red.edges().find(|e| !host.has_edge(e.u, e.v)) {
            return Err(ColoringError::NotInHost(e));
        }
        let blue = host.minus(&red);
        Ok(TwoColoring { host, red, blue })
    }

    pub fn check(&self) -> Result<(), ColoringError> {
        let n = self.host.n();
        if self.red.n() != n || self.blue.n() != n {
            return Err(ColoringError::OrderMismatch);
        }
        for e in self.red.edges() {
            if self.blue.has_edge(e.u, e.v) {
                return Err(ColoringError::Overlap(e));
            }
        }
        for e in self.red.edges().chain(self.blue.edges()) {
            if !self.host.has_edge(e.u, e.v) {
                return Err(ColoringError::NotInHost(e));
            }
        }
        for e in self.host.edges() {
            if !self.red.has_edge(e.u, e.v) && !self.blue.has_edge(e.u, e.v) {
                return Err(ColoringError::Uncovered(e));
            }
        }
        Ok(())
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> &Graph {
        &self.blue
    }

    pub fn class(&self, color: Color) -> &Graph {
        match color {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        }
    }

    pub fn color_of(&self, e: EdgeId) -> Option<Color> {
        if self.red.has_edge(e.u, e.v) {
            Some(Color::Red)
        } else if self.blue.has_edge(e.u, e.v) {
            Some(Color::Blue)
        } else {
            None
        }
    }

    pub fn swap_colors(&self) -> TwoColoring {
        TwoColoring {
            host: self.host.clone(),
            red: self.blue.clone(),
            blue: self.red.clone(),
        }
    }

    /// Moves vertex `v` to `perm[v]` in host and both classes.
    pub fn relabel(&self, perm: &[usize]) -> Result<TwoColoring, ColoringError> {
        check_permutation(perm, self.host.n())?;
        Ok(TwoColoring {
            host: self.host.relabel(perm)?,
            red: self.red.relabel(perm)?,
            blue: self.blue.relabel(perm)?,
        })
    }

    /// Per-vertex `(red degree, blue degree)`.
    pub fn degree_profile(&self) -> Vec<(usize, usize)> {
        (0..self.host.n())
            .map(|v| (self.red.degree(v), self.blue.degree(v)))
            .collect()
    }
}
