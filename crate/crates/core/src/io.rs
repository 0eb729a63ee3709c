//! Plain-text game files.
//!
//! ```text
//! # comment
//! 3
//! 011
//! 100
//! ```
//!
//! The first non-comment line is the number of players `n`; each further
//! line is one coalition as `n` characters over `{0, 1}`, player `n` first.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a game file; rows keep their order. Line numbers in errors are
/// 1-based and count comment lines.
pub fn parse(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or_else(|| parse_error(0, "missing header"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_error(header_line, format!("header {header:?} is not a player count")))?;
    if n > MAX_PLAYERS {
        return Err(Error::GroundSetTooLarge { n, limit: MAX_PLAYERS });
    }
    let mut seen: HashMap<u64, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (line, row) in lines {
        if row.len() != n {
            return Err(parse_error(line, format!("row {row:?} has {} characters, expected {n}", row.len())));
        }
        let x: Coalition = row.parse().map_err(|_| parse_error(line, format!("row {row:?} is not over {{0,1}}")))?;
        if let Some(first) = seen.insert(x.bits(), line) {
            return Err(parse_error(line, format!("row {row} repeats line {first}")));
        }
        edges.push(x);
    }
    Hypergraph::new(n, edges)
}

/// Header and rows, no comments.
pub fn serialize(h: &Hypergraph) -> String {
    let mut out = format!("{}\n", h.n());
    for x in h {
        writeln!(out, "{x}").expect("writing to a String");
    }
    out
}

/// [`serialize`] with leading `#` comment lines.
pub fn serialize_with_comments(h: &Hypergraph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").expect("writing to a String");
    }
    out + &serialize(h)
}
