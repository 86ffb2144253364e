//! Graphviz rendering.

use std::fmt::Write;

use crate::graph::{Multiplicity, WeightedGraph};
use crate::tails::MaximalTail;

const SINGLE_TAIL_COLOR: &str = "lightblue";
const SHARED_TAIL_COLOR: &str = "orange";

/// DOT digraph of `g`. With `tails`, vertices are filled by how many of the
/// given tails contain them: one tail in light blue, several in orange with
/// the count as an external label.
pub fn export_dot(g: &WeightedGraph, tails: Option<&[MaximalTail]>) -> String {
    let mut out = String::from("digraph E {\n");
    for v in 0..g.vertex_count() {
        let name = g.name(v);
        let count = tails.map_or(0, |ts| ts.iter().filter(|t| t.vertices.contains(v)).count());
        match count {
            0 => writeln!(out, "  \"{name}\";"),
            1 => writeln!(
                out,
                "  \"{name}\" [style=filled, fillcolor={SINGLE_TAIL_COLOR}];"
            ),
            k => writeln!(
                out,
                "  \"{name}\" [style=filled, fillcolor={SHARED_TAIL_COLOR}, xlabel=\"{k} tails\"];"
            ),
        }
        .unwrap();
    }
    for (s, r, m) in g.edges() {
        let (s, r) = (g.name(s), g.name(r));
        match m {
            Multiplicity::Finite(1) => writeln!(out, "  \"{s}\" -> \"{r}\";"),
            Multiplicity::Finite(k) => writeln!(out, "  \"{s}\" -> \"{r}\" [label=\"{k}\"];"),
            Multiplicity::Infinite => writeln!(out, "  \"{s}\" -> \"{r}\" [label=\"∞\"];"),
        }
        .unwrap();
    }
    out.push_str("}\n");
    out
}
