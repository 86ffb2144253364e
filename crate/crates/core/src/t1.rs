//! Three independent deciders for the T1 property of the primitive ideal
//! space: tail-pair conditions, the gauge-invariant ideal lattice, and
//! closure of one-point sets.

use crate::circle::Angle;
use crate::error::Result;
use crate::graph::WeightedGraph;
use crate::lattice::{
    breaking_vertices, empty_inf, enumerate_ideals, is_maximal_among, omega, tail_ideal,
};
use crate::prim::{PrimPoint, PrimSpace, PrimSubset};
use crate::tails::maximal_tails;
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailPairReason {
    /// `Ω(M)^∅_∞` is empty.
    EmptyOmegaInf,
    /// `Ω(M)^∅_∞` emits infinitely many edges into `N`.
    InfiniteEdgeCount,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum T1Witness {
    BreakingVertex(usize),
    /// `smaller ⊊ larger` are maximal tails violating the separation
    /// condition.
    TailPair {
        smaller: VertexSet,
        larger: VertexSet,
        reason: TailPairReason,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T1Verdict {
    pub t1: bool,
    /// Breaking vertices first, then tail pairs in tail order.
    pub witnesses: Vec<T1Witness>,
}

/// No breaking vertices, and for maximal tails `M ⊊ N` the set
/// `Ω(M)^∅_∞` is non-empty and emits finitely many edges into `N`.
pub fn t1_check(g: &WeightedGraph, bound: usize) -> Result<T1Verdict> {
    let tails = maximal_tails(g, bound)?;
    let mut witnesses: Vec<T1Witness> = breaking_vertices(g)
        .iter()
        .map(T1Witness::BreakingVertex)
        .collect();
    for m in &tails {
        let w = empty_inf(g, omega(g, m.vertices));
        for n in &tails {
            if !m.vertices.is_proper_subset(n.vertices) {
                continue;
            }
            let reason = if w.is_empty() {
                Some(TailPairReason::EmptyOmegaInf)
            } else if g.edge_count_between(w, n.vertices).is_infinite() {
                Some(TailPairReason::InfiniteEdgeCount)
            } else {
                None
            };
            if let Some(reason) = reason {
                witnesses.push(T1Witness::TailPair {
                    smaller: m.vertices,
                    larger: n.vertices,
                    reason,
                });
            }
        }
    }
    Ok(T1Verdict {
        t1: witnesses.is_empty(),
        witnesses,
    })
}

/// No breaking vertices, every tail ideal `J_{Ω(M), Ω(M)^fin_∞}` is a
/// maximal gauge-invariant ideal, and tails correspond bijectively to the
/// maximal gauge-invariant ideals.
pub fn t1_check_via_lattice(g: &WeightedGraph, bound: usize) -> Result<bool> {
    let tails = maximal_tails(g, bound)?;
    if !breaking_vertices(g).is_empty() {
        return Ok(false);
    }
    let all = enumerate_ideals(g, bound)?;
    let mut images: Vec<_> = tails.iter().map(|t| tail_ideal(g, t.vertices)).collect();
    if !images.iter().all(|i| is_maximal_among(g, i, &all)) {
        return Ok(false);
    }
    images.sort();
    images.dedup();
    if images.len() != tails.len() {
        return Ok(false);
    }
    let maximal = all.iter().filter(|i| is_maximal_among(g, i, &all)).count();
    Ok(maximal == images.len())
}

/// Circle coordinates probed for the one-point sets over tau tails.
pub fn probe_angles() -> [Angle; 2] {
    [Angle::zero(), Angle::new(1, 4).expect("valid angle")]
}

/// Every one-point set is closed: the closure of each gamma point, each
/// breaking vertex, and each probed circle point is the point itself.
pub fn t1_check_via_closure(g: &WeightedGraph, bound: usize) -> Result<bool> {
    let space = PrimSpace::new(g, bound)?;
    let mut points = space.discrete_points();
    for t in space.tails().iter().filter(|t| t.is_tau()) {
        points.extend(
            probe_angles()
                .into_iter()
                .map(|a| PrimPoint::Tau(t.vertices, a)),
        );
    }
    for p in &points {
        let single = PrimSubset::point(p);
        if space.closure(&single)? != single {
            return Ok(false);
        }
    }
    Ok(true)
}
