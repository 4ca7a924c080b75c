//! The `rcx-cert 1` text format for colorings and the claims made about them.
//!
//! ```text
//! rcx-cert 1
//! n 3
//! 0 1 red
//! 0 2 blue
//! 1 2 absent
//! claim free S2 S2
//! note free text on one line
//! ```
//!
//! Every vertex pair appears exactly once, in lexicographic order. Lines are
//! ASCII with single spaces and end in a line feed. Checking never trusts the
//! stored claim: the detectors are run again on the parsed coloring.

use std::fmt;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::coloring::{Color, TwoColoring};
use crate::detect::{contains, Pattern, WitnessSubgraph};
use crate::graph::{Graph, MAX_VERTICES};

pub const HEADER: &str = "rcx-cert 1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// No red `f` and no blue `h`.
    Free {
        f: Pattern,
        h: Pattern,
    },
    ContainsRed(Pattern),
    ContainsBlue(Pattern),
}

impl fmt::Display for Claim {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Free { f, h } => write!(out, "free {f} {h}"),
            Claim::ContainsRed(p) => write!(out, "contains-red {p}"),
            Claim::ContainsBlue(p) => write!(out, "contains-blue {p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("claim `{claim}` is false: {}", describe(*.color, .witness))]
    ClaimViolated {
        claim: Claim,
        color: Color,
        witness: WitnessSubgraph,
    },
    #[error("claim `{claim}` is false: no {color} {pattern} exists")]
    ClaimUnmet {
        claim: Claim,
        color: Color,
        pattern: Pattern,
    },
}

fn describe(color: Color, w: &WitnessSubgraph) -> String {
    let verts: Vec<String> = w.vertices.iter().map(|v| v.to_string()).collect();
    format!("{color} {} on vertices {}", w.pattern, verts.join(" "))
}

/// What a successful check established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verified {
    Free {
        f: Pattern,
        h: Pattern,
    },
    Contains {
        color: Color,
        witness: WitnessSubgraph,
    },
}

impl fmt::Display for Verified {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verified::Free { f, h } => write!(out, "free of ({f}, {h})"),
            Verified::Contains { color, witness } => out.write_str(&describe(*color, witness)),
        }
    }
}

/// Re-runs the detectors for `claim` on `c`.
pub fn verify_claim(c: &TwoColoring, claim: Claim) -> Result<Verified, CertError> {
    let need = |color: Color, pattern: Pattern| match contains(c.class(color), pattern) {
        Some(witness) => Ok(Verified::Contains { color, witness }),
        None => Err(CertError::ClaimUnmet {
            claim,
            color,
            pattern,
        }),
    };
    match claim {
        Claim::Free { f, h } => {
            for (color, p) in [(Color::Red, f), (Color::Blue, h)] {
                if let Some(witness) = contains(c.class(color), p) {
                    return Err(CertError::ClaimViolated {
                        claim,
                        color,
                        witness,
                    });
                }
            }
            Ok(Verified::Free { f, h })
        }
        Claim::ContainsRed(p) => need(Color::Red, p),
        Claim::ContainsBlue(p) => need(Color::Blue, p),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub coloring: TwoColoring,
    pub claim: Claim,
    /// Single line; newlines are replaced by spaces on write.
    pub note: String,
}

impl Certificate {
    /// Builds a certificate, refusing claims the coloring does not satisfy.
    pub fn new(coloring: TwoColoring, claim: Claim, note: &str) -> Result<Self, CertError> {
        verify_claim(&coloring, claim)?;
        Ok(Certificate {
            coloring,
            claim,
            note: sanitize(note),
        })
    }

    pub fn check(&self) -> Result<Verified, CertError> {
        verify_claim(&self.coloring, self.claim)
    }

    pub fn to_text(&self) -> String {
        let c = &self.coloring;
        let n = c.host().n();
        let mut out = format!("{HEADER}\nn {n}\n");
        for u in 0..n {
            for v in u + 1..n {
                let tag = if c.red().has_edge(u, v) {
                    "red"
                } else if c.blue().has_edge(u, v) {
                    "blue"
                } else {
                    "absent"
                };
                out.push_str(&format!("{u} {v} {tag}\n"));
            }
        }
        out.push_str(&format!("claim {}\n", self.claim));
        let note = sanitize(&self.note);
        if note.is_empty() {
            out.push_str("note\n");
        } else {
            out.push_str(&format!("note {note}\n"));
        }
        out
    }

    /// Parses the text form without checking the claim.
    pub fn parse(text: &str) -> Result<Self, CertError> {
        let err = |line: usize, message: String| CertError::Parse { line, message };
        if !text.is_ascii() {
            let line = text
                .lines()
                .position(|l| !l.is_ascii())
                .map_or(1, |i| i + 1);
            return Err(err(line, "non-ASCII text".into()));
        }
        if !text.ends_with('\n') {
            return Err(err(
                text.lines().count().max(1),
                "missing final line feed".into(),
            ));
        }
        let lines: Vec<&str> = text[..text.len() - 1].split('\n').collect();
        let mut at = 0;
        let mut next = |what: &str| -> Result<(usize, &str), CertError> {
            let line = at + 1;
            let s = lines
                .get(at)
                .copied()
                .ok_or_else(|| err(line, format!("expected {what}, found end of file")))?;
            at += 1;
            if s.contains('\r') || s.contains('\t') {
                return Err(err(
                    line,
                    "carriage returns and tabs are not allowed".into(),
                ));
            }
            Ok((line, s))
        };

        let (line, s) = next("header")?;
        if s != HEADER {
            return Err(err(line, format!("expected `{HEADER}`")));
        }
        let (line, s) = next("vertex count")?;
        let n: usize = s
            .strip_prefix("n ")
            .and_then(parse_number)
            .ok_or_else(|| err(line, "expected `n <count>`".into()))?;
        if n == 0 || n > MAX_VERTICES {
            return Err(err(
                line,
                format!("vertex count must be in 1..={MAX_VERTICES}"),
            ));
        }

        let mut red = Vec::new();
        let mut blue = Vec::new();
        let mut absent = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let (line, s) = next(&format!("pair {u} {v}"))?;
                let fields: Vec<&str> = s.split(' ').collect();
                let pair_ok = fields.len() == 3
                    && parse_number(fields[0]) == Some(u)
                    && parse_number(fields[1]) == Some(v);
                if !pair_ok {
                    return Err(err(line, format!("expected `{u} {v} red|blue|absent`")));
                }
                match fields[2] {
                    "red" => red.push((u, v)),
                    "blue" => blue.push((u, v)),
                    "absent" => absent.push((u, v)),
                    other => return Err(err(line, format!("unknown tag `{other}`"))),
                }
            }
        }

        let (line, s) = next("claim")?;
        let claim = parse_claim(s).ok_or_else(|| err(line, format!("malformed claim `{s}`")))?;
        let (line, s) = next("note")?;
        let note = if s == "note" {
            String::new()
        } else {
            s.strip_prefix("note ")
                .ok_or_else(|| err(line, "expected `note <text>`".into()))?
                .to_string()
        };
        if at < lines.len() {
            return Err(err(at + 1, "unexpected text after the note".into()));
        }

        let build = |edges: &[(usize, usize)]| {
            Graph::from_edges(n, edges.iter().copied()).expect("pairs are in range")
        };
        let host = Graph::complete(n).expect("checked").minus(&build(&absent));
        let coloring = TwoColoring::new(host, build(&red), build(&blue))
            .expect("every pair carries exactly one tag");
        Ok(Certificate {
            coloring,
            claim,
            note,
        })
    }
}

fn parse_number(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0'))
    {
        return None;
    }
    s.parse().ok()
}

fn parse_claim(s: &str) -> Option<Claim> {
    let fields: Vec<&str> = s.split(' ').collect();
    let pattern = |t: &str| {
        let p: Pattern = t.parse().ok()?;
        // Only the normal spelling is accepted so files stay byte-stable.
        (p.to_string() == t).then_some(p)
    };
    match fields.as_slice() {
        ["claim", "free", f, h] => Some(Claim::Free {
            f: pattern(f)?,
            h: pattern(h)?,
        }),
        ["claim", "contains-red", p] => Some(Claim::ContainsRed(pattern(p)?)),
        ["claim", "contains-blue", p] => Some(Claim::ContainsBlue(pattern(p)?)),
        _ => None,
    }
}

fn sanitize(note: &str) -> String {
    let flat: String = note
        .chars()
        .map(|c| {
            if c.is_ascii() && !c.is_ascii_control() {
                c
            } else {
                ' '
            }
        })
        .collect();
    flat.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Verifies `claim` on `c` and writes the certificate to `path`.
pub fn write_certificate(
    c: &TwoColoring,
    claim: Claim,
    note: &str,
    path: &Path,
) -> Result<Certificate, CertError> {
    let cert = Certificate::new(c.clone(), claim, note)?;
    fs::write(path, cert.to_text()).map_err(|e| CertError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(cert)
}

/// Reads, parses and re-verifies a certificate file.
pub fn check_certificate(path: &Path) -> Result<(Certificate, Verified), CertError> {
    let text = fs::read_to_string(path).map_err(|e| CertError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let cert = Certificate::parse(&text)?;
    let verified = cert.check()?;
    Ok((cert, verified))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::thm6_join_coloring;
    use proptest::prelude::*;

    fn m2_free() -> Certificate {
        let c = thm6_join_coloring(2, 2).unwrap();
        let claim = Claim::Free {
            f: Pattern::Matching(2),
            h: Pattern::Matching(2),
        };
        Certificate::new(c, claim, "matching join\n(2,2)").unwrap()
    }

    #[test]
    fn text_form_is_normal() {
        let cert = m2_free();
        let text = cert.to_text();
        assert!(text.starts_with("rcx-cert 1\nn 5\n0 1 absent\n"));
        assert!(text.ends_with("claim free M2 M2\nnote matching join (2,2)\n"));
        assert_eq!(text.lines().count(), 2 + 10 + 2);
        let back = Certificate::parse(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_text(), text);
        assert!(matches!(back.check(), Ok(Verified::Free { .. })));
    }

    #[test]
    fn tampering_is_caught() {
        let text = m2_free().to_text();
        // Turn the first blue edge red.
        let tampered = text.replacen(" blue\n", " red\n", 1);
        let cert = Certificate::parse(&tampered).unwrap();
        match cert.check() {
            Err(CertError::ClaimViolated { color, witness, .. }) => {
                assert_eq!(color, Color::Red);
                assert!(crate::detect::verify_witness(cert.coloring.red(), &witness));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn single_vertex_certificate() {
        let text = "rcx-cert 1\nn 1\nclaim free S1 S1\nnote\n";
        let cert = Certificate::parse(text).unwrap();
        assert!(cert.check().is_ok());
        assert_eq!(cert.to_text(), text);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let good = m2_free().to_text();
        let cases = [
            (good.replace("rcx-cert 1", "rcx-cert 2"), 1),
            (good.replace("n 5", "n five"), 2),
            (good.replace("0 2 absent", "0 2 green"), 4),
            (good.replace("0 2 absent", "0 3 absent"), 4),
            (good.replace("claim free M2 M2", "claim free M2"), 13),
            (good.replace("claim free M2 M2", "claim free 2K2 M2"), 13),
            (good.replace("note ", "nota "), 14),
            (format!("{good}extra\n"), 15),
            (good.replace('\n', "\r\n"), 1),
            (good.trim_end().to_string(), 14),
        ];
        for (text, want) in cases {
            match Certificate::parse(&text) {
                Err(CertError::Parse { line, .. }) => assert_eq!(line, want, "{text}"),
                other => panic!("expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn contains_claims() {
        let c = thm6_join_coloring(2, 2).unwrap();
        let cert = Certificate::new(c.clone(), Claim::ContainsRed(Pattern::Star(4)), "").unwrap();
        assert!(matches!(
            cert.check(),
            Ok(Verified::Contains {
                color: Color::Red,
                ..
            })
        ));
        assert!(matches!(
            Certificate::new(c, Claim::ContainsBlue(Pattern::Matching(2)), ""),
            Err(CertError::ClaimUnmet { .. })
        ));
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("w.cert");
        let cert = m2_free();
        write_certificate(&cert.coloring, cert.claim, &cert.note, &path).unwrap();
        let first = fs::read(&path).unwrap();
        write_certificate(&cert.coloring, cert.claim, &cert.note, &path).unwrap();
        assert_eq!(fs::read(&path).unwrap(), first);
        let (back, verified) = check_certificate(&path).unwrap();
        assert_eq!(back, cert);
        assert_eq!(verified.to_string(), "free of (M2, M2)");
        assert!(matches!(
            check_certificate(&dir.path().join("missing")),
            Err(CertError::Io { .. })
        ));
    }

    proptest! {
        #[test]
        fn random_colorings_round_trip(n in 1usize..9, seed in any::<u64>(), note in "[ -~]{0,20}") {
            let mut state = seed;
            let mut red = Vec::new();
            let mut blue = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    match state >> 62 {
                        0 => {}
                        1 => blue.push((u, v)),
                        _ => red.push((u, v)),
                    }
                }
            }
            let r = Graph::from_edges(n, red).unwrap();
            let b = Graph::from_edges(n, blue).unwrap();
            let host = Graph::from_edges(n, r.edges().chain(b.edges()).map(|e| (e.u, e.v))).unwrap();
            let c = TwoColoring::new(host, r, b).unwrap();
            let cert = Certificate {
                coloring: c,
                claim: Claim::ContainsBlue(Pattern::Star(1)),
                note: sanitize(&note),
            };
            let text = cert.to_text();
            let back = Certificate::parse(&text).unwrap();
            prop_assert_eq!(&back, &cert);
            prop_assert_eq!(back.to_text(), text);
        }
    }
}
