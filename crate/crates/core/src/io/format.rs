//! hMETIS-style instance files.
//!
//! ```text
//! % comment lines start with '%'
//! m n [fmt]
//! [cost] v v v ...      (m lines, vertices 1-indexed)
//! ```
//!
//! `fmt = 1` means every hyperedge line starts with its integer cost;
//! absent or `0` means unit costs. Vertices are `1..=n` on disk and
//! `0..n` in memory. Hyperedge `i` (0-indexed) is the `i`-th hyperedge line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn parse_error<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

fn number(token: &str, line: usize, what: &str) -> Result<u64> {
    token
        .parse::<u64>()
        .or_else(|_| parse_error(line, format!("{what} '{token}' is not a non-negative integer")))
}

/// Parses an instance file. Every violation is reported with its 1-based
/// line number.
pub fn parse_instance(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('%'));

    let Some((header_line, header)) = lines.next() else {
        return parse_error(1, "missing header line 'm n [fmt]'");
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if !(2..=3).contains(&fields.len()) {
        return parse_error(header_line, format!("header needs 2 or 3 fields, found {}", fields.len()));
    }
    let m = number(fields[0], header_line, "hyperedge count")? as usize;
    let n = number(fields[1], header_line, "vertex count")? as usize;
    let weighted = match fields.get(2).copied() {
        None | Some("0") => false,
        Some("1") => true,
        Some(other) => {
            return parse_error(header_line, format!("unsupported fmt '{other}', expected 0 or 1"));
        }
    };

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        if edges.len() == m {
            return parse_error(line, format!("more hyperedge lines than the declared {m}"));
        }
        let mut tokens = body.split_whitespace();
        let cost = if weighted {
            let token = tokens.next().expect("non-empty line has a token");
            let cost = number(token, line, "cost")?;
            if cost == 0 {
                return parse_error(line, "cost must be at least 1");
            }
            cost
        } else {
            1
        };
        let mut vertices = Vec::new();
        for token in tokens {
            let v = number(token, line, "vertex")? as usize;
            if v == 0 || v > n {
                return parse_error(line, format!("vertex {v} outside 1..={n}"));
            }
            if vertices.contains(&(v - 1)) {
                return parse_error(line, format!("vertex {v} repeated"));
            }
            vertices.push(v - 1);
        }
        if vertices.len() < 2 {
            return parse_error(line, format!("hyperedge has {} vertices, at least 2 required", vertices.len()));
        }
        edges.push((vertices, cost));
    }
    if edges.len() != m {
        return parse_error(
            last_line,
            format!("declared {m} hyperedges but found {}", edges.len()),
        );
    }
    Hypergraph::new(n, edges).map_err(|e| Error::Parse {
        line: header_line,
        message: e.to_string(),
    })
}

/// Writes `graph` in the instance format; costs are written (`fmt = 1`)
/// only when some hyperedge cost differs from 1.
pub fn emit_instance(graph: &Hypergraph) -> String {
    let weighted = graph.edges().iter().any(|e| e.cost() != 1);
    let mut out = String::new();
    if weighted {
        writeln!(out, "{} {} 1", graph.num_edges(), graph.num_vertices()).unwrap();
    } else {
        writeln!(out, "{} {}", graph.num_edges(), graph.num_vertices()).unwrap();
    }
    for e in graph.edges() {
        let mut fields: Vec<String> = Vec::with_capacity(e.len() + 1);
        if weighted {
            fields.push(e.cost().to_string());
        }
        fields.extend(e.vertices().iter().map(|v| (v + 1).to_string()));
        writeln!(out, "{}", fields.join(" ")).unwrap();
    }
    out
}
