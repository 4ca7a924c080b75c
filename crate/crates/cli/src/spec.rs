//! The host-graph mini-language.
//!
//! ```text
//! K<r>                 complete graph
//! K<r>-S<n>            K_r minus the canonical star (likewise -M, -P, -K)
//! K<r>+S<k>            K_r plus a vertex joined to k of its vertices
//! circ(<k>;<d1>,...)   circulant on Z_k
//! file:<path>          host of an rcx-cert file
//! S3, M2, P4, C5, 2K3  any pattern, as a graph
//! ```

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rcx_core::cert::Certificate;
use rcx_core::graph::MAX_VERTICES;
use rcx_core::{DeletionClass, Graph, Pattern};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Complete(usize),
    Minus(usize, DeletionClass, usize),
    BookJoin(usize, usize),
    Circulant(usize, Vec<usize>),
    File(PathBuf),
    Pattern(Pattern),
}

/// Parse or build failure; `column` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for SpecError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T, SpecError> {
        Err(SpecError {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    fn number(&mut self) -> Result<usize, SpecError> {
        let digits = self.text[self.pos..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return self.error("expected a number");
        }
        match self.text[self.pos..self.pos + digits].parse() {
            Ok(v) => {
                self.pos += digits;
                Ok(v)
            }
            Err(_) => self.error("number too large"),
        }
    }

    fn finish(&self) -> Result<(), SpecError> {
        if self.pos == self.text.len() {
            Ok(())
        } else {
            self.error("unexpected trailing text")
        }
    }
}

impl FromStr for GraphSpec {
    type Err = SpecError;

    fn from_str(text: &str) -> Result<Self, SpecError> {
        if let Some(path) = text.strip_prefix("file:") {
            if path.is_empty() {
                return Err(SpecError {
                    column: 6,
                    message: "expected a path".into(),
                });
            }
            return Ok(GraphSpec::File(PathBuf::from(path)));
        }
        let mut c = Cursor { text, pos: 0 };
        if text.starts_with("circ") {
            c.pos = 4;
            c.expect('(')?;
            let k = c.number()?;
            c.expect(';')?;
            let mut diffs = Vec::new();
            if !c.eat(')') {
                loop {
                    diffs.push(c.number()?);
                    if c.eat(')') {
                        break;
                    }
                    c.expect(',')?;
                }
            }
            c.finish()?;
            return Ok(GraphSpec::Circulant(k, diffs));
        }
        if !text.starts_with('K') {
            return match text.parse::<Pattern>() {
                Ok(p) => Ok(GraphSpec::Pattern(p)),
                Err(_) => c.error("expected `K<r>`, `circ(`, `file:` or a pattern"),
            };
        }
        c.pos = 1;
        let r = c.number()?;
        let spec = match c.peek() {
            None => GraphSpec::Complete(r),
            Some(op @ ('-' | '+')) => {
                c.pos += 1;
                let letter = c.peek();
                let class = match letter {
                    Some('S') => DeletionClass::Star,
                    Some('M') if op == '-' => DeletionClass::Matching,
                    Some('P') if op == '-' => DeletionClass::Path,
                    Some('K') if op == '-' => DeletionClass::Complete,
                    _ if op == '+' => return c.error("expected `S<k>` after `+`"),
                    _ => return c.error("expected one of S, M, P, K after `-`"),
                };
                c.pos += 1;
                let index = c.number()?;
                c.finish()?;
                if op == '+' {
                    GraphSpec::BookJoin(r, index)
                } else {
                    GraphSpec::Minus(r, class, index)
                }
            }
            Some(_) => return c.error("expected `-`, `+` or end of input"),
        };
        Ok(spec)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete(r) => write!(f, "K{r}"),
            GraphSpec::Minus(r, class, i) => write!(f, "K{r}-{}{i}", class.letter()),
            GraphSpec::BookJoin(r, k) => write!(f, "K{r}+S{k}"),
            GraphSpec::Circulant(k, d) => {
                let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                write!(f, "circ({k};{})", d.join(","))
            }
            GraphSpec::File(p) => write!(f, "file:{}", p.display()),
            GraphSpec::Pattern(p) => write!(f, "{p}"),
        }
    }
}

impl GraphSpec {
    /// Builds the graph. Errors point at column 1 since they concern the
    /// whole expression.
    pub fn build(&self) -> Result<Graph, SpecError> {
        let fail = |message: String| SpecError { column: 1, message };
        let order = match self {
            GraphSpec::Complete(r) | GraphSpec::Minus(r, _, _) => *r,
            GraphSpec::BookJoin(r, _) => r + 1,
            GraphSpec::Circulant(k, _) => *k,
            GraphSpec::File(_) => 1,
            GraphSpec::Pattern(p) => p.order(),
        };
        if order == 0 || order > MAX_VERTICES {
            return Err(fail(format!(
                "{self} has {order} vertices; supported range is 1..={MAX_VERTICES}"
            )));
        }
        let built = match self {
            GraphSpec::Complete(r) => Graph::complete(*r),
            GraphSpec::Minus(r, class, i) => {
                Graph::complete(*r).and_then(|k| k.delete_class_member(*class, *i))
            }
            GraphSpec::BookJoin(r, k) => Graph::book_join(*r, *k),
            GraphSpec::Circulant(k, d) => Graph::circulant(*k, d),
            GraphSpec::Pattern(p) => p.validate().map_err(|e| fail(e.to_string()))?.graph(),
            GraphSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| fail(format!("{}: {e}", path.display())))?;
                let cert = Certificate::parse(&text)
                    .map_err(|e| fail(format!("{}: {e}", path.display())))?;
                return Ok(cert.coloring.host().clone());
            }
        };
        built.map_err(|e| fail(e.to_string()))
    }
}

/// Parses and builds in one step.
pub fn parse_graph(text: &str) -> Result<Graph, SpecError> {
    text.parse::<GraphSpec>()?.build()
}
