//! The DECOMP text format.
//!
//! ```text
//! # comment
//! n 4
//! factor 0 1 2 3
//! chord 0 2
//! chord 1 3
//! ```
//!
//! `n` must be the first non-comment line and appear once. Each `factor`
//! line lists one 2-factor cycle (consecutive vertices and last-to-first are
//! factor edges); each `chord` line one chord. Blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use super::{DecomposedGraph, InvalidDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompFormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `n` line")]
    MissingOrder,
    #[error(transparent)]
    Invalid(#[from] InvalidDecomposition),
}

fn syntax(line: usize, message: impl Into<String>) -> DecompFormatError {
    DecompFormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses and validates a DECOMP document.
pub fn parse_decomp(text: &str) -> Result<DecomposedGraph, DecompFormatError> {
    let mut n = None;
    let mut cycles = Vec::new();
    let mut chords = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().unwrap_or_default();
        let numbers = tokens
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| syntax(line, format!("`{t}` is not a vertex number")))
            })
            .collect::<Result<Vec<_>, _>>()?;

        match (keyword, n) {
            ("n", None) => match numbers.as_slice() {
                [value] => n = Some(*value),
                _ => return Err(syntax(line, "`n` takes exactly one integer")),
            },
            ("n", Some(_)) => return Err(syntax(line, "`n` given more than once")),
            (_, None) => return Err(syntax(line, "the first line must be `n <int>`")),
            ("factor", Some(_)) => cycles.push(numbers),
            ("chord", Some(_)) => match numbers.as_slice() {
                [a, b] => chords.push((*a, *b)),
                _ => return Err(syntax(line, "`chord` takes exactly two vertices")),
            },
            (other, Some(_)) => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
    }

    let n = n.ok_or(DecompFormatError::MissingOrder)?;
    Ok(DecomposedGraph::new(n, cycles, chords)?)
}

/// Writes `dg` as DECOMP; [`parse_decomp`] inverts it exactly.
pub fn serialize_decomp(dg: &DecomposedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", dg.n()).unwrap();
    for cycle in dg.factor_cycles() {
        out.push_str("factor");
        for v in cycle {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    for e in dg.chords() {
        writeln!(out, "chord {} {}", e.0, e.1).unwrap();
    }
    out
}
