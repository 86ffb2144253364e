//! The primitive ideal space as a symbolic set and its hull-kernel closure.
//!
//! Points are gamma tails, breaking vertices, and pairs `(N, t)` of a tau
//! tail with a circle coordinate. A [`PrimSubset`] records a finite set of
//! gamma tails, a set of breaking vertices and, per tau tail, a
//! [`CircleSet`] of coordinates.

use std::collections::{BTreeMap, BTreeSet};

use crate::circle::{Angle, CircleSet};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::lattice::{
    breaking_vertex_ideal, breaking_vertices, empty_inf, ideal_leq, omega, tail_ideal,
    GaugeInvariantIdeal,
};
use crate::tails::{maximal_tails, y_inf, y_min, MaximalTail};
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PrimPoint {
    Gamma(VertexSet),
    BreakingVertex(usize),
    Tau(VertexSet, Angle),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PrimSubset {
    pub gamma: BTreeSet<VertexSet>,
    pub bv: VertexSet,
    /// Never maps a tail to [`CircleSet::Empty`].
    pub tau: BTreeMap<VertexSet, CircleSet>,
}

impl PrimSubset {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty() && self.bv.is_empty() && self.tau.is_empty()
    }

    pub fn point(p: &PrimPoint) -> Self {
        let mut s = Self::empty();
        s.insert(p);
        s
    }

    pub fn insert(&mut self, p: &PrimPoint) {
        match p {
            PrimPoint::Gamma(m) => {
                self.gamma.insert(*m);
            }
            PrimPoint::BreakingVertex(v) => self.bv.insert(*v),
            PrimPoint::Tau(n, t) => self.add_circle(*n, &CircleSet::point(*t)),
        }
    }

    /// Unions `circle` into the coordinates recorded for tau tail `n`.
    pub fn add_circle(&mut self, n: VertexSet, circle: &CircleSet) {
        if circle.is_empty() {
            return;
        }
        let entry = self.tau.entry(n).or_default();
        *entry = entry.union(circle);
    }

    pub fn union(&self, other: &PrimSubset) -> PrimSubset {
        let mut out = self.clone();
        out.gamma.extend(other.gamma.iter().copied());
        out.bv = out.bv.union(other.bv);
        for (n, c) in &other.tau {
            out.add_circle(*n, c);
        }
        out
    }

    pub fn is_subset(&self, other: &PrimSubset) -> bool {
        self.gamma.is_subset(&other.gamma)
            && self.bv.is_subset(other.bv)
            && self
                .tau
                .iter()
                .all(|(n, c)| other.tau.get(n).is_some_and(|d| c.is_subset(d)))
    }
}

/// The tails and breaking vertices of a graph, cached for repeated closure
/// computations.
#[derive(Clone, Debug)]
pub struct PrimSpace<'g> {
    g: &'g WeightedGraph,
    tails: Vec<MaximalTail>,
    bv: VertexSet,
    // Ω(M)^∅_∞ for each tail, parallel to `tails`
    empty_inf: Vec<VertexSet>,
}

impl<'g> PrimSpace<'g> {
    pub fn new(g: &'g WeightedGraph, bound: usize) -> Result<Self> {
        let tails = maximal_tails(g, bound)?;
        let empty_inf = tails
            .iter()
            .map(|t| empty_inf(g, omega(g, t.vertices)))
            .collect();
        Ok(PrimSpace {
            g,
            tails,
            bv: breaking_vertices(g),
            empty_inf,
        })
    }

    pub fn graph(&self) -> &'g WeightedGraph {
        self.g
    }

    pub fn tails(&self) -> &[MaximalTail] {
        &self.tails
    }

    pub fn breaking_vertices(&self) -> VertexSet {
        self.bv
    }

    pub fn tail(&self, vertices: VertexSet) -> Option<&MaximalTail> {
        self.tails.iter().find(|t| t.vertices == vertices)
    }

    /// The whole space: every gamma tail, every breaking vertex, and the full
    /// circle over every tau tail.
    pub fn all(&self) -> PrimSubset {
        PrimSubset {
            gamma: self
                .tails
                .iter()
                .filter(|t| t.is_gamma())
                .map(|t| t.vertices)
                .collect(),
            bv: self.bv,
            tau: self
                .tails
                .iter()
                .filter(|t| t.is_tau())
                .map(|t| (t.vertices, CircleSet::Full))
                .collect(),
        }
    }

    pub fn validate(&self, s: &PrimSubset) -> Result<()> {
        for m in &s.gamma {
            if !self.tail(*m).is_some_and(|t| t.is_gamma()) {
                return Err(Error::InvalidSubset(format!(
                    "{:?} is not a gamma tail",
                    self.g.set_names(*m)
                )));
            }
        }
        if !s.bv.is_subset(self.bv) {
            return Err(Error::InvalidSubset(format!(
                "{:?} are not breaking vertices",
                self.g.set_names(s.bv.difference(self.bv))
            )));
        }
        for (n, c) in &s.tau {
            if !self.tail(*n).is_some_and(|t| t.is_tau()) {
                return Err(Error::InvalidSubset(format!(
                    "{:?} is not a tau tail",
                    self.g.set_names(*n)
                )));
            }
            if c.is_empty() {
                return Err(Error::InvalidSubset("empty circle entry".into()));
            }
        }
        Ok(())
    }

    /// `M ⊆ U` and either `Ω(M)^∅_∞ = ∅` or it emits infinitely many edges
    /// into `U`.
    fn tail_condition(&self, idx: usize, u: VertexSet) -> bool {
        let m = self.tails[idx].vertices;
        let w = self.empty_inf[idx];
        m.is_subset(u) && (w.is_empty() || self.g.edge_count_between(w, u).is_infinite())
    }

    /// `v ∈ U` and `v` emits infinitely many edges into `U`.
    fn vertex_condition(&self, v: usize, u: VertexSet) -> bool {
        u.contains(v) && self.g.edge_count_into(v, u).is_infinite()
    }

    /// Closure in the hull-kernel topology, evaluated point by point with
    /// the closed-form membership rules for gamma tails, breaking vertices
    /// and circle points.
    pub fn closure(&self, s: &PrimSubset) -> Result<PrimSubset> {
        self.validate(s)?;
        let g = self.g;
        let union_of = |sets: &mut dyn Iterator<Item = VertexSet>| {
            sets.fold(VertexSet::empty(), |acc, m| acc.union(m))
        };
        let ux = union_of(&mut s.gamma.iter().copied());
        // E⁰ \ ⋂_{w ∈ W} Ω(w), empty when W is.
        let uw = union_of(&mut s.bv.iter().map(|w| g.ancestors(VertexSet::singleton(w))));
        let y: Vec<MaximalTail> = s
            .tau
            .keys()
            .map(|n| *self.tail(*n).expect("validated"))
            .collect();
        let ymin = y_min(g, &y)?;
        let yinf = y_inf(g, &y)?;
        let umin = union_of(&mut ymin.iter().map(|t| t.vertices));
        let uinf = union_of(&mut yinf.iter().map(|t| t.vertices));

        let mut out = PrimSubset::empty();
        for (idx, t) in self.tails.iter().enumerate() {
            let m = t.vertices;
            if t.is_gamma() {
                let member = s.gamma.contains(&m)
                    || self.tail_condition(idx, ux)
                    || self.tail_condition(idx, uw)
                    || self.tail_condition(idx, uinf)
                    || self.tail_condition(idx, umin);
                if member {
                    out.gamma.insert(m);
                }
            } else {
                let in_min = ymin.iter().any(|u| u.vertices == m);
                let full = m.is_subset(ux)
                    || m.is_subset(uw)
                    || m.is_subset(uinf)
                    || (!in_min && m.is_subset(umin));
                if full {
                    out.add_circle(m, &CircleSet::Full);
                } else if in_min {
                    out.add_circle(m, &s.tau[&m].closure());
                }
            }
        }
        for v in self.bv {
            let member = s.bv.contains(v)
                || self.vertex_condition(v, ux)
                || self.vertex_condition(v, uw)
                || self.vertex_condition(v, uinf)
                || self.vertex_condition(v, umin);
            if member {
                out.bv.insert(v);
            }
        }
        Ok(out)
    }

    pub fn is_closed(&self, s: &PrimSubset) -> Result<bool> {
        Ok(self.closure(s)? == *s)
    }

    /// Complement within the space. Fails when a tau tail carries a finite,
    /// non-empty coordinate set, whose complement is cofinite.
    pub fn complement(&self, s: &PrimSubset) -> Result<PrimSubset> {
        self.validate(s)?;
        let all = self.all();
        let mut out = PrimSubset {
            gamma: all.gamma.difference(&s.gamma).copied().collect(),
            bv: all.bv.difference(s.bv),
            tau: BTreeMap::new(),
        };
        for n in all.tau.keys() {
            let c = s.tau.get(n).cloned().unwrap_or_default().complement()?;
            out.add_circle(*n, &c);
        }
        Ok(out)
    }

    pub fn is_clopen(&self, s: &PrimSubset) -> Result<bool> {
        let comp = self.complement(s)?;
        Ok(self.is_closed(s)? && self.is_closed(&comp)?)
    }

    /// The points of a tail: `{M}` for a gamma tail, the whole circle over
    /// `M` for a tau tail.
    pub fn tail_points(&self, t: &MaximalTail) -> PrimSubset {
        let mut s = PrimSubset::empty();
        if t.is_gamma() {
            s.gamma.insert(t.vertices);
        } else {
            s.add_circle(t.vertices, &CircleSet::Full);
        }
        s
    }

    /// `U_M`: the primitive ideals containing `J_{Ω(M), Ω(M)^fin_∞}`,
    /// obtained as the closure of the points of `M`.
    pub fn tail_hull(&self, t: &MaximalTail) -> Result<PrimSubset> {
        self.closure(&self.tail_points(t))
    }

    /// Points of the space other than circle points, with their ideals.
    fn gauge_points(&self) -> Vec<(PrimPoint, GaugeInvariantIdeal)> {
        let mut pts: Vec<_> = self
            .tails
            .iter()
            .filter(|t| t.is_gamma())
            .map(|t| (PrimPoint::Gamma(t.vertices), tail_ideal(self.g, t.vertices)))
            .collect();
        pts.extend(self.bv.iter().map(|v| {
            (
                PrimPoint::BreakingVertex(v),
                breaking_vertex_ideal(self.g, v),
            )
        }));
        pts
    }

    /// Independent closure for graphs with condition (K), where every
    /// primitive ideal is gauge-invariant: `p` is in the closure of `S` iff
    /// the ideal of some `q ∈ S` is contained in the ideal of `p`.
    pub fn closure_oracle_condition_k(&self, s: &PrimSubset) -> Result<PrimSubset> {
        if !self.g.condition_k() {
            return Err(Error::ConditionKRequired);
        }
        self.validate(s)?;
        let pts = self.gauge_points();
        let members: Vec<&GaugeInvariantIdeal> = pts
            .iter()
            .filter(|(p, _)| match p {
                PrimPoint::Gamma(m) => s.gamma.contains(m),
                PrimPoint::BreakingVertex(v) => s.bv.contains(*v),
                PrimPoint::Tau(..) => unreachable!(),
            })
            .map(|(_, i)| i)
            .collect();
        let mut out = PrimSubset::empty();
        for (p, ideal) in &pts {
            if members.iter().any(|q| ideal_leq(q, ideal)) {
                out.insert(p);
            }
        }
        Ok(out)
    }

    /// Every point of the space that is not a circle point.
    pub fn discrete_points(&self) -> Vec<PrimPoint> {
        self.gauge_points().into_iter().map(|(p, _)| p).collect()
    }
}

pub fn prim_space(g: &WeightedGraph, bound: usize) -> Result<PrimSubset> {
    Ok(PrimSpace::new(g, bound)?.all())
}

pub fn closure(g: &WeightedGraph, s: &PrimSubset, bound: usize) -> Result<PrimSubset> {
    PrimSpace::new(g, bound)?.closure(s)
}

pub fn is_closed(g: &WeightedGraph, s: &PrimSubset, bound: usize) -> Result<bool> {
    PrimSpace::new(g, bound)?.is_closed(s)
}

pub fn is_clopen(g: &WeightedGraph, s: &PrimSubset, bound: usize) -> Result<bool> {
    PrimSpace::new(g, bound)?.is_clopen(s)
}

pub fn closure_oracle_condition_k(
    g: &WeightedGraph,
    s: &PrimSubset,
    bound: usize,
) -> Result<PrimSubset> {
    if !g.condition_k() {
        return Err(Error::ConditionKRequired);
    }
    PrimSpace::new(g, bound)?.closure_oracle_condition_k(s)
}
