//! Hereditary and saturated vertex sets and the `(H, B)` parametrization of
//! gauge-invariant ideals.

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::vset::VertexSet;

/// Default ceiling on the vertex count for the exhaustive enumerations.
pub const DEFAULT_MAX_VERTICES: usize = 16;

pub(crate) fn check_bound(g: &WeightedGraph, bound: usize) -> Result<()> {
    if g.vertex_count() > bound {
        Err(Error::TooLarge {
            vertices: g.vertex_count(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// `v ∈ X` and `v >= w` imply `w ∈ X`.
pub fn is_hereditary(g: &WeightedGraph, x: VertexSet) -> bool {
    x.iter().all(|v| g.reach_set(v).is_subset(x))
}

/// Every finite emitter whose edges all land in `X` belongs to `X`.
/// Sinks and infinite emitters impose no constraint.
pub fn is_saturated(g: &WeightedGraph, x: VertexSet) -> bool {
    let outside = g.vertices().difference(x);
    outside
        .iter()
        .all(|v| !g.is_finite_emitter(v) || !g.edge_count_into(v, outside).is_zero())
}

pub fn is_hereditary_saturated(g: &WeightedGraph, x: VertexSet) -> bool {
    is_hereditary(g, x) && is_saturated(g, x)
}

/// `ΣH(X)`: the smallest hereditary and saturated set containing `X`.
pub fn sigma_h(g: &WeightedGraph, x: VertexSet) -> VertexSet {
    let mut h: VertexSet = x
        .iter()
        .fold(VertexSet::empty(), |acc, v| acc.union(g.reach_set(v)));
    // Saturating a hereditary set keeps it hereditary: a newly added vertex
    // has all of its edges, hence all of its descendants, inside `h`.
    loop {
        let outside = g.vertices().difference(h);
        let add: VertexSet = outside
            .iter()
            .filter(|&v| g.is_finite_emitter(v) && g.edge_count_into(v, outside).is_zero())
            .collect();
        if add.is_empty() {
            return h;
        }
        h = h.union(add);
    }
}

/// `Ω(X)`: vertices outside `X` that reach no vertex of `X`.
pub fn omega(g: &WeightedGraph, x: VertexSet) -> VertexSet {
    g.vertices()
        .difference(x)
        .iter()
        .filter(|&w| g.reach_set(w).intersection(x).is_empty())
        .collect()
}

/// `H^fin_∞` without the hereditary/saturated precondition check.
pub(crate) fn fin_inf(g: &WeightedGraph, h: VertexSet) -> VertexSet {
    let outside = g.vertices().difference(h);
    outside
        .iter()
        .filter(|&v| {
            g.is_infinite_emitter(v) && {
                let k = g.edge_count_into(v, outside);
                !k.is_zero() && k.is_finite()
            }
        })
        .collect()
}

/// `H^∅_∞` without the hereditary/saturated precondition check.
pub(crate) fn empty_inf(g: &WeightedGraph, h: VertexSet) -> VertexSet {
    let outside = g.vertices().difference(h);
    outside
        .iter()
        .filter(|&v| g.is_infinite_emitter(v) && g.edge_count_into(v, outside).is_zero())
        .collect()
}

/// Infinite emitters outside `H` sending finitely many, but some, edges
/// outside `H`.
pub fn h_fin_inf(g: &WeightedGraph, h: VertexSet) -> Result<VertexSet> {
    if !is_hereditary_saturated(g, h) {
        return Err(Error::NotHereditarySaturated);
    }
    Ok(fin_inf(g, h))
}

/// Infinite emitters outside `H` with every edge landing in `H`.
pub fn h_empty_inf(g: &WeightedGraph, h: VertexSet) -> Result<VertexSet> {
    if !is_hereditary_saturated(g, h) {
        return Err(Error::NotHereditarySaturated);
    }
    Ok(empty_inf(g, h))
}

/// Infinite emitters `v` with `0 < |s^{-1}(v) \ r^{-1}(Ω(v))| < ∞`.
pub fn breaking_vertices(g: &WeightedGraph) -> VertexSet {
    g.infinite_emitters()
        .iter()
        .filter(|&v| {
            let rest = g.vertices().difference(omega(g, VertexSet::singleton(v)));
            let k = g.edge_count_into(v, rest);
            !k.is_zero() && k.is_finite()
        })
        .collect()
}

/// A gauge-invariant ideal `J_{H,B}`: `H` hereditary and saturated, and
/// `B ⊆ H^fin_∞`. The whole algebra is `(E⁰, ∅)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaugeInvariantIdeal {
    h: VertexSet,
    b: VertexSet,
}

impl GaugeInvariantIdeal {
    pub fn new(g: &WeightedGraph, h: VertexSet, b: VertexSet) -> Result<Self> {
        if !h.is_subset(g.vertices()) || !b.is_subset(g.vertices()) {
            return Err(Error::InvalidIdeal("vertex index out of range".into()));
        }
        let fin = h_fin_inf(g, h)?;
        if !b.is_subset(fin) {
            return Err(Error::InvalidIdeal(
                "B is not contained in H^fin_inf".into(),
            ));
        }
        Ok(GaugeInvariantIdeal { h, b })
    }

    /// Constructs without validation; callers guarantee the invariants.
    pub(crate) fn new_unchecked(h: VertexSet, b: VertexSet) -> Self {
        GaugeInvariantIdeal { h, b }
    }

    pub fn zero() -> Self {
        GaugeInvariantIdeal {
            h: VertexSet::empty(),
            b: VertexSet::empty(),
        }
    }

    pub fn full(g: &WeightedGraph) -> Self {
        GaugeInvariantIdeal {
            h: g.vertices(),
            b: VertexSet::empty(),
        }
    }

    pub fn h(&self) -> VertexSet {
        self.h
    }

    pub fn b(&self) -> VertexSet {
        self.b
    }

    pub fn is_full(&self, g: &WeightedGraph) -> bool {
        self.h == g.vertices()
    }
}

/// The ideal `J_{Ω(M), Ω(M)^fin_∞}` attached to a maximal tail `M`.
pub fn tail_ideal(g: &WeightedGraph, tail: VertexSet) -> GaugeInvariantIdeal {
    let h = omega(g, tail);
    GaugeInvariantIdeal::new_unchecked(h, fin_inf(g, h))
}

/// The ideal `J_{Ω(v), Ω(v)^fin_∞ \ {v}}` attached to a breaking vertex.
pub fn breaking_vertex_ideal(g: &WeightedGraph, v: usize) -> GaugeInvariantIdeal {
    let h = omega(g, VertexSet::singleton(v));
    let mut b = fin_inf(g, h);
    b.remove(v);
    GaugeInvariantIdeal::new_unchecked(h, b)
}

/// Every gauge-invariant ideal, ordered by `H` then `B` (size, then
/// lexicographically).
pub fn enumerate_ideals(g: &WeightedGraph, bound: usize) -> Result<Vec<GaugeInvariantIdeal>> {
    check_bound(g, bound)?;
    let mut out = Vec::new();
    let mut hs: Vec<VertexSet> = g
        .vertices()
        .subsets()
        .filter(|&h| is_hereditary_saturated(g, h))
        .collect();
    hs.sort();
    for h in hs {
        let mut bs: Vec<VertexSet> = fin_inf(g, h).subsets().collect();
        bs.sort();
        out.extend(bs.into_iter().map(|b| GaugeInvariantIdeal { h, b }));
    }
    Ok(out)
}

/// `J_{H,B} ⊆ J_{H',B'}` iff `H ⊆ H'` and `B ⊆ H' ∪ B'`.
pub fn ideal_leq(i: &GaugeInvariantIdeal, j: &GaugeInvariantIdeal) -> bool {
    i.h.is_subset(j.h) && i.b.is_subset(j.h.union(j.b))
}

/// True when the only gauge-invariant ideals containing `ideal` are itself
/// and the whole algebra.
pub fn is_maximal_gauge_invariant(
    g: &WeightedGraph,
    ideal: &GaugeInvariantIdeal,
    bound: usize,
) -> Result<bool> {
    let all = enumerate_ideals(g, bound)?;
    Ok(is_maximal_among(g, ideal, &all))
}

pub(crate) fn is_maximal_among(
    g: &WeightedGraph,
    ideal: &GaugeInvariantIdeal,
    all: &[GaugeInvariantIdeal],
) -> bool {
    !ideal.is_full(g)
        && !all
            .iter()
            .any(|j| j != ideal && !j.is_full(g) && ideal_leq(ideal, j))
}

/// All maximal gauge-invariant ideals.
pub fn maximal_ideals(g: &WeightedGraph, bound: usize) -> Result<Vec<GaugeInvariantIdeal>> {
    let all = enumerate_ideals(g, bound)?;
    Ok(all
        .iter()
        .filter(|i| is_maximal_among(g, i, &all))
        .copied()
        .collect())
}

/// The largest ideal below every member of `upper`, found by search over
/// `all` (the whole algebra when `upper` is empty).
pub(crate) fn meet(
    all: &[GaugeInvariantIdeal],
    upper: &[GaugeInvariantIdeal],
) -> Option<GaugeInvariantIdeal> {
    let below: Vec<_> = all
        .iter()
        .filter(|i| upper.iter().all(|u| ideal_leq(i, u)))
        .collect();
    below
        .iter()
        .find(|i| below.iter().all(|j| ideal_leq(j, i)))
        .map(|i| **i)
}

/// The smallest ideal above every member of `lower`.
pub(crate) fn join(
    all: &[GaugeInvariantIdeal],
    lower: &[GaugeInvariantIdeal],
) -> Option<GaugeInvariantIdeal> {
    let above: Vec<_> = all
        .iter()
        .filter(|i| lower.iter().all(|l| ideal_leq(l, i)))
        .collect();
    above
        .iter()
        .find(|i| above.iter().all(|j| ideal_leq(i, j)))
        .map(|i| **i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &WeightedGraph, names: &[&str]) -> VertexSet {
        g.vertex_set(names.iter().copied()).unwrap()
    }

    #[test]
    fn hereditary_examples() {
        let g = fixtures::line();
        assert!(is_hereditary(&g, set(&g, &["b"])));
        assert!(!is_hereditary(&g, set(&g, &["a"])));
        assert!(is_hereditary(&g, VertexSet::empty()));
    }

    #[test]
    fn saturated_examples() {
        let g = fixtures::fork();
        assert!(!is_saturated(&g, set(&g, &["b", "c"])));
        let g = fixtures::bv();
        assert!(is_saturated(&g, set(&g, &["a"])));
        for (_, g) in fixtures::all() {
            assert!(is_saturated(&g, g.vertices()));
        }
        // b alone is not saturated in a -> b: a is a finite emitter into {b}.
        let g = fixtures::line();
        assert!(!is_saturated(&g, set(&g, &["b"])));
    }

    #[test]
    fn sigma_h_examples() {
        let g = fixtures::fork();
        assert_eq!(sigma_h(&g, set(&g, &["b", "c"])), g.vertices());
        assert_eq!(sigma_h(&g, VertexSet::empty()), VertexSet::empty());
        let g = fixtures::mixed();
        assert_eq!(sigma_h(&g, set(&g, &["b"])), set(&g, &["b"]));
    }

    #[test]
    fn omega_examples() {
        let g = fixtures::bv();
        assert_eq!(omega(&g, set(&g, &["v"])), set(&g, &["a"]));
        let g = fixtures::fork();
        assert_eq!(omega(&g, set(&g, &["a", "b"])), set(&g, &["c"]));
        for (_, g) in fixtures::all() {
            assert_eq!(omega(&g, g.vertices()), VertexSet::empty());
        }
    }

    #[test]
    fn fin_and_empty_inf() {
        let g = fixtures::bv();
        assert_eq!(h_fin_inf(&g, set(&g, &["a"])).unwrap(), set(&g, &["v"]));
        let g = fixtures::infsink();
        assert_eq!(h_empty_inf(&g, set(&g, &["s"])).unwrap(), set(&g, &["w"]));
        for (_, g) in fixtures::all() {
            assert_eq!(h_fin_inf(&g, g.vertices()).unwrap(), VertexSet::empty());
            assert_eq!(h_empty_inf(&g, g.vertices()).unwrap(), VertexSet::empty());
        }
        let g = fixtures::line();
        assert_eq!(
            h_fin_inf(&g, set(&g, &["b"])),
            Err(Error::NotHereditarySaturated)
        );
    }

    #[test]
    fn breaking_vertex_examples() {
        let g = fixtures::bv();
        assert_eq!(breaking_vertices(&g), set(&g, &["v"]));
        assert_eq!(breaking_vertices(&fixtures::infsink()), VertexSet::empty());
        assert_eq!(breaking_vertices(&fixtures::ladder3()), VertexSet::empty());
    }

    #[test]
    fn breaking_vertex_characterization() {
        // An infinite emitter v is breaking iff v ∈ Ω(v)^fin_∞.
        for (_, g) in fixtures::all() {
            let bv = breaking_vertices(&g);
            for v in g.infinite_emitters() {
                let om = omega(&g, VertexSet::singleton(v));
                assert_eq!(bv.contains(v), fin_inf(&g, om).contains(v));
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let g = fixtures::point();
        let ids = enumerate_ideals(&g, 16).unwrap();
        assert_eq!(
            ids,
            vec![GaugeInvariantIdeal::zero(), GaugeInvariantIdeal::full(&g)]
        );

        let g = fixtures::bv();
        let ids = enumerate_ideals(&g, 16).unwrap();
        let a = set(&g, &["a"]);
        let v = set(&g, &["v"]);
        assert!(ids.contains(&GaugeInvariantIdeal::new(&g, a, VertexSet::empty()).unwrap()));
        assert!(ids.contains(&GaugeInvariantIdeal::new(&g, a, v).unwrap()));

        // {b} is not saturated in a -> b, so only the trivial ideals exist.
        let g = fixtures::line();
        assert_eq!(
            enumerate_ideals(&g, 16).unwrap(),
            vec![GaugeInvariantIdeal::zero(), GaugeInvariantIdeal::full(&g)]
        );

        assert!(matches!(
            enumerate_ideals(&fixtures::ladder3(), 5),
            Err(Error::TooLarge {
                vertices: 6,
                bound: 5
            })
        ));
    }

    #[test]
    fn leq_examples() {
        let g = fixtures::bv();
        let a = set(&g, &["a"]);
        let v = set(&g, &["v"]);
        let a0 = GaugeInvariantIdeal::new(&g, a, VertexSet::empty()).unwrap();
        let av = GaugeInvariantIdeal::new(&g, a, v).unwrap();
        for i in enumerate_ideals(&g, 16).unwrap() {
            assert!(ideal_leq(&GaugeInvariantIdeal::zero(), &i));
        }
        assert!(ideal_leq(&a0, &av));
        assert!(!ideal_leq(&av, &a0));
        assert!(ideal_leq(&av, &GaugeInvariantIdeal::full(&g)));
    }

    #[test]
    fn maximality_examples() {
        let g = fixtures::fork();
        let c = GaugeInvariantIdeal::new(&g, set(&g, &["c"]), VertexSet::empty()).unwrap();
        assert!(is_maximal_gauge_invariant(&g, &c, 16).unwrap());
        let g = fixtures::line();
        assert!(is_maximal_gauge_invariant(&g, &GaugeInvariantIdeal::zero(), 16).unwrap());
        let g = fixtures::point();
        assert!(is_maximal_gauge_invariant(&g, &GaugeInvariantIdeal::zero(), 16).unwrap());
        assert!(!is_maximal_gauge_invariant(&g, &GaugeInvariantIdeal::full(&g), 16).unwrap());
        let g = fixtures::tau();
        assert!(!is_maximal_gauge_invariant(&g, &GaugeInvariantIdeal::zero(), 16).unwrap());
    }

    #[test]
    fn invalid_ideal_rejected() {
        let g = fixtures::line();
        assert!(GaugeInvariantIdeal::new(&g, set(&g, &["b"]), VertexSet::empty()).is_err());
        let g = fixtures::bv();
        assert!(matches!(
            GaugeInvariantIdeal::new(&g, VertexSet::empty(), set(&g, &["v"])),
            Err(Error::InvalidIdeal(_))
        ));
    }

    #[test]
    fn meet_and_join_on_fork() {
        let g = fixtures::fork();
        let all = enumerate_ideals(&g, 16).unwrap();
        let b = GaugeInvariantIdeal::new(&g, set(&g, &["b"]), VertexSet::empty()).unwrap();
        let c = GaugeInvariantIdeal::new(&g, set(&g, &["c"]), VertexSet::empty()).unwrap();
        assert_eq!(meet(&all, &[b, c]), Some(GaugeInvariantIdeal::zero()));
        assert_eq!(join(&all, &[b, c]), Some(GaugeInvariantIdeal::full(&g)));
        assert_eq!(meet(&all, &[]), Some(GaugeInvariantIdeal::full(&g)));
    }
}
