//! Primitive ideal spaces of graph C*-algebras, computed combinatorially
//! from finite graphs with (possibly infinite) edge multiplicities.

pub mod circle;
pub mod classify;
pub mod dot;
pub mod dsl;
pub mod error;
pub mod exmclass;
pub mod fixtures;
pub mod graph;
pub mod json;
pub mod lattice;
pub mod prim;
pub mod t1;
pub mod tails;
pub mod vset;

pub use circle::{Angle, CircleSet};
pub use dsl::{parse_graph, render_graph};
pub use error::{Error, Result};
pub use graph::{GraphBuilder, LoopClass, Multiplicity, WeightedGraph};
pub use lattice::{GaugeInvariantIdeal, DEFAULT_MAX_VERTICES};
pub use prim::{PrimPoint, PrimSpace, PrimSubset};
pub use tails::{MaximalTail, TailKind};
pub use vset::VertexSet;
