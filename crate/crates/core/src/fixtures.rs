//! The named example graphs shipped in `fixtures/`.

use crate::dsl::parse_graph;
use crate::graph::WeightedGraph;

macro_rules! fixtures {
    ($($fn_name:ident => $label:literal, $file:literal;)*) => {
        $(
            pub fn $fn_name() -> WeightedGraph {
                parse_graph(include_str!(concat!("../fixtures/", $file)))
                    .expect("shipped fixture parses")
            }
        )*

        /// Fixture source text by label, in the order they are listed.
        pub const SOURCES: &[(&str, &str)] = &[
            $(($label, include_str!(concat!("../fixtures/", $file))),)*
        ];
    };
}

fixtures! {
    point => "FX_POINT", "point.graph";
    loop1 => "FX_LOOP1", "loop1.graph";
    loop2 => "FX_LOOP2", "loop2.graph";
    line => "FX_LINE", "line.graph";
    fork => "FX_FORK", "fork.graph";
    infsink => "FX_INFSINK", "infsink.graph";
    bv => "FX_BV", "bv.graph";
    tau => "FX_TAU", "tau.graph";
    two_tau => "FX_2TAU", "2tau.graph";
    mixed => "FX_MIXED", "mixed.graph";
    ladder3 => "FX_LADDER3", "ladder3.graph";
}

/// All named fixtures as `(label, graph)`.
pub fn all() -> Vec<(&'static str, WeightedGraph)> {
    SOURCES
        .iter()
        .map(|(label, text)| (*label, parse_graph(text).expect("shipped fixture parses")))
        .collect()
}

pub fn by_label(label: &str) -> Option<WeightedGraph> {
    SOURCES
        .iter()
        .find(|(l, _)| l.eq_ignore_ascii_case(label))
        .map(|(_, text)| parse_graph(text).expect("shipped fixture parses"))
}
