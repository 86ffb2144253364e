//! Maximal tails, their classification into gamma and tau kinds, and the
//! isolation predicate.

use crate::error::{Error, Result};
use crate::graph::{Multiplicity, WeightedGraph};
use crate::lattice::{check_bound, empty_inf, omega};
use crate::t1::t1_check;
use crate::vset::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TailKind {
    /// Every loop in the tail has an exit in the tail.
    Gamma,
    /// Generated by a loop with no exit in the tail.
    Tau,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MaximalTail {
    pub vertices: VertexSet,
    pub kind: TailKind,
    /// Vertex set of the generating loop; present iff `kind` is `Tau`.
    pub loop_vertices: Option<VertexSet>,
}

impl MaximalTail {
    pub fn is_tau(&self) -> bool {
        self.kind == TailKind::Tau
    }

    pub fn is_gamma(&self) -> bool {
        self.kind == TailKind::Gamma
    }
}

impl PartialOrd for MaximalTail {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MaximalTail {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices
            .cmp(&other.vertices)
            .then(self.kind.cmp(&other.kind))
            .then(self.loop_vertices.cmp(&other.loop_vertices))
    }
}

/// Checks the three tail conditions on a non-empty `M`:
/// upward closure, continuation of finite emitters inside `M`, and a common
/// lower bound in `M` for every pair of members.
pub fn is_maximal_tail(g: &WeightedGraph, m: VertexSet) -> bool {
    if m.is_empty() || !m.is_subset(g.vertices()) {
        return false;
    }
    // (1) if v >= w and w ∈ M then v ∈ M
    if !g.ancestors(m).is_subset(m) {
        return false;
    }
    // (2) finite emitters in M have an edge into M
    if m.iter()
        .any(|v| g.is_finite_emitter(v) && g.edge_count_into(v, m).is_zero())
    {
        return false;
    }
    // (3) pairwise common lower bound inside M
    let members: Vec<usize> = m.iter().collect();
    for (i, &v) in members.iter().enumerate() {
        for &w in &members[i + 1..] {
            if g.reach_set(v)
                .intersection(g.reach_set(w))
                .intersection(m)
                .is_empty()
            {
                return false;
            }
        }
    }
    true
}

/// Decides the kind of a maximal tail and, for tau tails, returns the vertex
/// set of the generating loop.
///
/// A loop without an exit in `M` passes only through vertices that send
/// exactly one edge into `M`; such vertices form a functional graph whose
/// cycles are exactly the exit-free simple loops.
pub fn classify_tail(g: &WeightedGraph, m: VertexSet) -> Result<(TailKind, Option<VertexSet>)> {
    if !is_maximal_tail(g, m) {
        return Err(Error::NotATail);
    }
    let mut succ = vec![None; g.vertex_count()];
    for v in m {
        if g.edge_count_into(v, m) == Multiplicity::ONE {
            succ[v] = g.out_edges(v).find(|(w, _)| m.contains(*w)).map(|(w, _)| w);
        }
    }
    let mut cycles: Vec<VertexSet> = Vec::new();
    for start in m {
        let mut path = Vec::new();
        let mut cur = start;
        let mut seen = VertexSet::empty();
        while let Some(next) = succ[cur] {
            if seen.contains(cur) {
                break;
            }
            seen.insert(cur);
            path.push(cur);
            cur = next;
        }
        if seen.contains(cur) {
            let pos = path.iter().position(|&v| v == cur).unwrap();
            let cycle: VertexSet = path[pos..].iter().copied().collect();
            if !cycles.contains(&cycle) {
                cycles.push(cycle);
            }
        }
    }
    match cycles.as_slice() {
        [] => Ok((TailKind::Gamma, None)),
        [c] => Ok((TailKind::Tau, Some(*c))),
        _ => Err(Error::NonUniqueGeneratingLoop),
    }
}

/// Every maximal tail, classified, ordered by size then lexicographically by
/// sorted vertex list.
pub fn maximal_tails(g: &WeightedGraph, bound: usize) -> Result<Vec<MaximalTail>> {
    check_bound(g, bound)?;
    let mut tails = Vec::new();
    for m in g.vertices().subsets() {
        if is_maximal_tail(g, m) {
            let (kind, loop_vertices) = classify_tail(g, m)?;
            tails.push(MaximalTail {
                vertices: m,
                kind,
                loop_vertices,
            });
        }
    }
    tails.sort();
    Ok(tails)
}

fn loop_of(t: &MaximalTail) -> Result<VertexSet> {
    t.loop_vertices
        .ok_or_else(|| Error::InvalidSubset("expected a tau tail".into()))
}

/// Members `U` of `Y` with no path from `L⁰_U` to `L⁰_U'` for any other
/// `U' ∈ Y`.
pub fn y_min(g: &WeightedGraph, y: &[MaximalTail]) -> Result<Vec<MaximalTail>> {
    let mut out = Vec::new();
    for u in y {
        let lu = loop_of(u)?;
        let mut minimal = true;
        for other in y {
            if other != u && g.set_reaches(lu, loop_of(other)?) {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(*u);
        }
    }
    Ok(out)
}

/// Members `U` of `Y` with no path from `L⁰_U` to `L⁰_V` for any
/// `V ∈ Y_min`.
pub fn y_inf(g: &WeightedGraph, y: &[MaximalTail]) -> Result<Vec<MaximalTail>> {
    let min = y_min(g, y)?;
    let mut out = Vec::new();
    for u in y {
        let lu = loop_of(u)?;
        let mut reaches_min = false;
        for v in &min {
            if g.set_reaches(lu, loop_of(v)?) {
                reaches_min = true;
                break;
            }
        }
        if !reaches_min {
            out.push(*u);
        }
    }
    Ok(out)
}

/// The tails `N` in `tails` with `M ⊆ N` (including `M`).
pub fn tails_containing(tails: &[MaximalTail], m: VertexSet) -> Vec<MaximalTail> {
    tails
        .iter()
        .filter(|n| m.is_subset(n.vertices))
        .copied()
        .collect()
}

/// Vertices of `M` that lie in no other tail.
pub fn private_vertices(tails: &[MaximalTail], m: VertexSet) -> VertexSet {
    let others = tails
        .iter()
        .filter(|n| n.vertices != m)
        .fold(VertexSet::empty(), |acc, n| acc.union(n.vertices));
    m.difference(others)
}

/// The isolation predicate evaluated against an explicit tail list, without
/// checking that the graph is T1.
pub(crate) fn isolation(g: &WeightedGraph, tails: &[MaximalTail], m: VertexSet) -> bool {
    if !private_vertices(tails, m).is_empty() {
        return true;
    }
    let w = empty_inf(g, omega(g, m));
    if w.is_empty() {
        return false;
    }
    let upper = tails_containing(tails, m)
        .iter()
        .fold(VertexSet::empty(), |acc, n| acc.union(n.vertices));
    g.edge_count_between(w, upper).is_finite()
}

/// Whether `M` is isolated: it has a vertex in no other tail, or
/// `Ω(M)^∅_∞` is non-empty and emits finitely many edges into the union of
/// the tails containing `M`. Only defined for T1 graphs.
pub fn is_isolated(g: &WeightedGraph, m: &MaximalTail, bound: usize) -> Result<bool> {
    let tails = maximal_tails(g, bound)?;
    if !tails.iter().any(|t| t.vertices == m.vertices) {
        return Err(Error::NotATail);
    }
    if !t1_check(g, bound)?.t1 {
        return Err(Error::NotT1);
    }
    Ok(isolation(g, &tails, m.vertices))
}
