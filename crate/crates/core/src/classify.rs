//! Structural consequences for T1 graphs: clopen tails, discreteness,
//! direct-sum decompositions, AF quotients and the fibre structure over the
//! one-point compactification of ℕ.
//!
//! "Kirchberg" and "AF" are certified combinatorially (condition (K) with a
//! loop in every tail; a loop-free quotient graph), not analytically.

use crate::error::{Error, Result};
use crate::graph::{LoopClass, WeightedGraph};
use crate::lattice::{
    enumerate_ideals, ideal_leq, join, meet, sigma_h, tail_ideal, GaugeInvariantIdeal,
};
use crate::prim::PrimSpace;
use crate::t1::t1_check;
use crate::tails::{isolation, maximal_tails, private_vertices, MaximalTail};
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    Point,
    Circle,
}

impl SetKind {
    fn of(t: &MaximalTail) -> SetKind {
        if t.is_tau() {
            SetKind::Circle
        } else {
            SetKind::Point
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClopenEntry {
    pub tail: MaximalTail,
    pub clopen: bool,
    pub set_kind: SetKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscretenessReport {
    pub all_isolated: bool,
    pub shape: Vec<SetKind>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub tail: MaximalTail,
    /// `J_{Ω(M), Ω(M)^fin_∞}`, the kernel of the quotient onto this summand.
    pub ideal: GaugeInvariantIdeal,
    pub quotient_vertices: VertexSet,
    /// The direct summand itself: the largest gauge-invariant ideal
    /// contained in the ideal of every other tail.
    pub summand: GaugeInvariantIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub summands: Vec<Summand>,
    /// The summands generate the whole algebra.
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientReport {
    /// `ΣH(V)`, the vertex set generating the ideal.
    pub ideal_generators: VertexSet,
    /// The graph on the remaining vertices.
    pub quotient_graph: WeightedGraph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FiberIndex {
    Finite(usize),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub index: FiberIndex,
    pub tail: Option<MaximalTail>,
    /// For finite indices the summand `J_n`; for the point at infinity the
    /// ideal `⊕ J_n` whose quotient is the fibre.
    pub ideal: GaugeInvariantIdeal,
    /// The fibre algebra is zero.
    pub zero: bool,
}

/// Tails of a T1 graph, or `NotT1`.
fn t1_tails(g: &WeightedGraph, bound: usize) -> Result<Vec<MaximalTail>> {
    let tails = maximal_tails(g, bound)?;
    if !t1_check(g, bound)?.t1 {
        return Err(Error::NotT1);
    }
    Ok(tails)
}

/// For each tail, whether `U_M` is clopen. The verdict from the isolation
/// predicate is checked against the closure computation.
pub fn clopen_report(g: &WeightedGraph, bound: usize) -> Result<Vec<ClopenEntry>> {
    let tails = t1_tails(g, bound)?;
    let space = PrimSpace::new(g, bound)?;
    let mut out = Vec::with_capacity(tails.len());
    for t in &tails {
        let isolated = isolation(g, &tails, t.vertices);
        let hull = space.tail_hull(t)?;
        let clopen = space.is_clopen(&hull)?;
        if isolated != clopen {
            return Err(Error::Postcondition(format!(
                "tail {:?}: isolated={isolated} but clopen={clopen}",
                g.set_names(t.vertices)
            )));
        }
        out.push(ClopenEntry {
            tail: *t,
            clopen,
            set_kind: SetKind::of(t),
        });
    }
    Ok(out)
}

pub fn discreteness_report(g: &WeightedGraph, bound: usize) -> Result<DiscretenessReport> {
    let tails = t1_tails(g, bound)?;
    Ok(DiscretenessReport {
        all_isolated: tails.iter().all(|t| isolation(g, &tails, t.vertices)),
        shape: tails.iter().map(SetKind::of).collect(),
    })
}

/// Condition (K) holds and every maximal tail contains the base of a loop.
pub fn purely_infinite_check(g: &WeightedGraph, bound: usize) -> Result<bool> {
    let tails = maximal_tails(g, bound)?;
    let bases = g.loop_bases();
    Ok(g.condition_k()
        && tails
            .iter()
            .all(|t| !t.vertices.intersection(bases).is_empty()))
}

/// Direct summand attached to an isolated tail: the largest gauge-invariant
/// ideal below the ideals of all other tails.
fn summand_ideal(
    g: &WeightedGraph,
    all: &[GaugeInvariantIdeal],
    tails: &[MaximalTail],
    t: &MaximalTail,
) -> Result<GaugeInvariantIdeal> {
    let upper: Vec<_> = tails
        .iter()
        .filter(|n| n.vertices != t.vertices)
        .map(|n| tail_ideal(g, n.vertices))
        .collect();
    let j = meet(all, &upper)
        .ok_or_else(|| Error::Postcondition("ideal meet does not exist".into()))?;
    if ideal_leq(&j, &tail_ideal(g, t.vertices)) {
        return Err(Error::Postcondition(format!(
            "summand of {:?} lies in its own tail ideal",
            g.set_names(t.vertices)
        )));
    }
    Ok(j)
}

/// One summand per maximal tail of a purely infinite T1 graph.
pub fn kirchberg_decomposition(g: &WeightedGraph, bound: usize) -> Result<DecompositionReport> {
    let tails = t1_tails(g, bound)?;
    if !purely_infinite_check(g, bound)? {
        return Err(Error::NotPurelyInfinite);
    }
    let all = enumerate_ideals(g, bound)?;
    let mut summands = Vec::with_capacity(tails.len());
    for t in &tails {
        summands.push(Summand {
            tail: *t,
            ideal: tail_ideal(g, t.vertices),
            quotient_vertices: t.vertices,
            summand: summand_ideal(g, &all, &tails, t)?,
        });
    }
    let parts: Vec<_> = summands.iter().map(|s| s.summand).collect();
    let exhaustive = join(&all, &parts).is_some_and(|j| j.is_full(g));
    if !exhaustive {
        return Err(Error::Postcondition(
            "summands do not exhaust the algebra".into(),
        ));
    }
    Ok(DecompositionReport {
        summands,
        exhaustive,
    })
}

fn loop_free_quotient(g: &WeightedGraph, ideal: VertexSet) -> Result<QuotientReport> {
    let q = g.induced_subgraph(g.vertices().difference(ideal));
    if (0..q.vertex_count()).any(|v| q.simple_loop_class(v) != LoopClass::Zero) {
        return Err(Error::Postcondition(
            "quotient graph contains a loop".into(),
        ));
    }
    Ok(QuotientReport {
        ideal_generators: ideal,
        quotient_graph: q,
    })
}

/// Quotient by the ideal generated by the vertices lying in exactly one
/// maximal tail. Row-finite T1 graphs only.
pub fn af_quotient(g: &WeightedGraph, bound: usize) -> Result<QuotientReport> {
    if !g.is_row_finite() {
        return Err(Error::NotRowFinite);
    }
    let tails = t1_tails(g, bound)?;
    let single: VertexSet = g
        .vertices()
        .iter()
        .filter(|&v| tails.iter().filter(|t| t.vertices.contains(v)).count() == 1)
        .collect();
    loop_free_quotient(g, sigma_h(g, single))
}

/// Quotient by the ideal generated by the loop bases, for T1 graphs with
/// condition (K).
pub fn pi_ideal_af_quotient(g: &WeightedGraph, bound: usize) -> Result<QuotientReport> {
    if !g.condition_k() {
        return Err(Error::ConditionKRequired);
    }
    t1_tails(g, bound)?;
    loop_free_quotient(g, sigma_h(g, g.loop_bases()))
}

/// Fibres `J_1, .., J_k` for the isolated tails in lexicographic order of
/// their sorted vertex lists, followed by the fibre at infinity.
pub fn c_ntilde_structure(g: &WeightedGraph, bound: usize) -> Result<Vec<Fiber>> {
    let mut tails = t1_tails(g, bound)?;
    tails.sort_by(|a, b| a.vertices.cmp_lex(b.vertices));
    let all = enumerate_ideals(g, bound)?;
    let mut fibers = Vec::new();
    for t in tails.iter().filter(|t| isolation(g, &tails, t.vertices)) {
        let j = summand_ideal(g, &all, &tails, t)?;
        fibers.push(Fiber {
            index: FiberIndex::Finite(fibers.len() + 1),
            tail: Some(*t),
            ideal: j,
            zero: false,
        });
    }
    let parts: Vec<_> = fibers.iter().map(|f| f.ideal).collect();
    let sum = join(&all, &parts)
        .ok_or_else(|| Error::Postcondition("ideal join does not exist".into()))?;
    fibers.push(Fiber {
        index: FiberIndex::Infinity,
        tail: None,
        ideal: sum,
        zero: sum.is_full(g),
    });
    Ok(fibers)
}

/// `(ΣH(P), ∅)` for the private vertices `P` of `M`; equals the summand
/// ideal whenever `P` is non-empty.
pub fn private_vertex_summand(
    g: &WeightedGraph,
    tails: &[MaximalTail],
    m: VertexSet,
) -> GaugeInvariantIdeal {
    GaugeInvariantIdeal::new(
        g,
        sigma_h(g, private_vertices(tails, m)),
        VertexSet::empty(),
    )
    .expect("ΣH of a set is hereditary and saturated")
}
