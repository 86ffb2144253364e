//! Line-oriented text format for graphs.
//!
//! ```text
//! # comment
//! vertex a          # isolated vertex
//! a -> b x2         # two parallel edges
//! a -> c xinf       # infinitely many (also `x inf`)
//! ```
//!
//! An edge line without a multiplicity declares a single edge.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{
    is_valid_vertex_name, EdgeRejection, GraphBuilder, Multiplicity, WeightedGraph,
};

/// Largest finite multiplicity accepted in text.
pub const MAX_FINITE_MULTIPLICITY: u64 = u32::MAX as u64;

pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let mut b = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "vertex" {
            if tokens.len() != 2 {
                return Err(Error::MalformedLine {
                    line,
                    reason: "expected `vertex <id>`".into(),
                });
            }
            let id = check_id(line, tokens[1])?;
            b.add_vertex(id).expect("validated name");
            continue;
        }
        if tokens.len() < 3 || tokens[1] != "->" {
            if tokens.len() >= 2 && tokens[1] != "->" && is_valid_vertex_name(tokens[0]) {
                return Err(Error::UnknownToken {
                    line,
                    token: tokens[1].to_string(),
                });
            }
            if !is_valid_vertex_name(tokens[0]) {
                return Err(Error::UnknownToken {
                    line,
                    token: tokens[0].to_string(),
                });
            }
            return Err(Error::MalformedLine {
                line,
                reason: "expected `<id> -> <id> x<k>`".into(),
            });
        }
        let source = check_id(line, tokens[0])?;
        let range = check_id(line, tokens[2])?;
        let m = match &tokens[3..] {
            [] => Multiplicity::ONE,
            [tok] => parse_multiplicity(
                line,
                tok.strip_prefix('x').ok_or_else(|| Error::UnknownToken {
                    line,
                    token: tok.to_string(),
                })?,
            )?,
            ["x", value] => parse_multiplicity(line, value)?,
            _ => {
                return Err(Error::MalformedLine {
                    line,
                    reason: "trailing tokens after multiplicity".into(),
                })
            }
        };
        match b.add_edge(source, range, m) {
            Ok(()) => {}
            Err(EdgeRejection::Zero) => return Err(Error::ZeroMultiplicity { line }),
            Err(EdgeRejection::Duplicate) => {
                return Err(Error::DuplicateEdge {
                    line,
                    source_vertex: source.to_string(),
                    range: range.to_string(),
                })
            }
            Err(EdgeRejection::InvalidName) => unreachable!("names checked above"),
        }
    }
    b.build()
}

fn check_id(line: usize, token: &str) -> Result<&str> {
    if is_valid_vertex_name(token) {
        Ok(token)
    } else {
        Err(Error::UnknownToken {
            line,
            token: token.to_string(),
        })
    }
}

fn parse_multiplicity(line: usize, value: &str) -> Result<Multiplicity> {
    if value == "inf" {
        return Ok(Multiplicity::Infinite);
    }
    let bad = || Error::UnknownToken {
        line,
        token: format!("x{value}"),
    };
    if value.is_empty() || !value.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    match value.parse::<u64>() {
        Ok(0) => Err(Error::ZeroMultiplicity { line }),
        Ok(k) if k <= MAX_FINITE_MULTIPLICITY => Ok(Multiplicity::Finite(k)),
        _ => Err(bad()),
    }
}

/// Canonical text: `vertex` lines for vertices without incident edges, then
/// every edge, both in sorted order.
pub fn render_graph(g: &WeightedGraph) -> String {
    let mut touched = vec![false; g.vertex_count()];
    for (v, w, _) in g.edges() {
        touched[v] = true;
        touched[w] = true;
    }
    let mut out = String::new();
    for (v, t) in touched.iter().enumerate() {
        if !t {
            writeln!(out, "vertex {}", g.name(v)).unwrap();
        }
    }
    for (v, w, m) in g.edges() {
        writeln!(out, "{} -> {} x{}", g.name(v), g.name(w), m).unwrap();
    }
    out
}
