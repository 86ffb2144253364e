//! Finitely presented directed multigraphs with edge multiplicities in
//! ℕ ∪ {∞}.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

/// Number of parallel edges between two vertices. `Infinite` absorbs
/// addition and compares above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Multiplicity {
    Finite(u64),
    Infinite,
}

impl Multiplicity {
    pub const ZERO: Multiplicity = Multiplicity::Finite(0);
    pub const ONE: Multiplicity = Multiplicity::Finite(1);

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn is_infinite(self) -> bool {
        self == Multiplicity::Infinite
    }

    pub fn is_finite(self) -> bool {
        !self.is_infinite()
    }
}

impl Add for Multiplicity {
    type Output = Multiplicity;

    fn add(self, rhs: Multiplicity) -> Multiplicity {
        match (self, rhs) {
            (Multiplicity::Finite(a), Multiplicity::Finite(b)) => a
                .checked_add(b)
                .map(Multiplicity::Finite)
                .expect("finite multiplicity sum overflowed u64"),
            _ => Multiplicity::Infinite,
        }
    }
}

impl Sum for Multiplicity {
    fn sum<I: Iterator<Item = Multiplicity>>(iter: I) -> Multiplicity {
        iter.fold(Multiplicity::ZERO, Add::add)
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(k) => write!(f, "{k}"),
            Multiplicity::Infinite => f.write_str("inf"),
        }
    }
}

/// How many edge-level simple loops are based at a vertex, saturating at two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LoopClass {
    Zero,
    One,
    Many,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexProfile {
    pub is_sink: bool,
    pub is_infinite_emitter: bool,
    pub loop_class: LoopClass,
}

/// Returns true if `name` is a legal vertex identifier (`[A-Za-z0-9_]+`).
pub fn is_valid_vertex_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// A directed graph on finitely many vertices. Parallel edges are stored as
/// a multiplicity per ordered vertex pair; a stored multiplicity is never
/// zero.
///
/// Vertices are indexed by the position of their name in sorted order, so
/// two graphs with the same vertex names and edges compare equal no matter
/// how they were built.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    names: Vec<String>,
    out: Vec<BTreeMap<usize, Multiplicity>>,
    // reflexive-transitive reachability: reach[v] = { w : v >= w }
    reach: Vec<VertexSet>,
}

impl WeightedGraph {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.names.len())
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .map_err(|_| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_set<'a, I>(&self, names: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        names.into_iter().map(|n| self.vertex(n)).collect()
    }

    /// Sorted names of the members of `set`.
    pub fn set_names(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.names[v].clone()).collect()
    }

    pub fn multiplicity(&self, source: usize, range: usize) -> Multiplicity {
        self.out[source]
            .get(&range)
            .copied()
            .unwrap_or(Multiplicity::ZERO)
    }

    /// Outgoing edges of `v` as `(range, multiplicity)` pairs in range order.
    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = (usize, Multiplicity)> + '_ {
        self.out[v].iter().map(|(&w, &m)| (w, m))
    }

    /// All edges as `(source, range, multiplicity)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Multiplicity)> + '_ {
        (0..self.names.len()).flat_map(move |v| self.out_edges(v).map(move |(w, m)| (v, w, m)))
    }

    /// Vertices reachable from `v` by a path of length >= 0.
    pub fn reach_set(&self, v: usize) -> VertexSet {
        self.reach[v]
    }

    /// `v >= w`: `v == w` or there is a path from `v` to `w`.
    pub fn reaches(&self, v: usize, w: usize) -> bool {
        self.reach[v].contains(w)
    }

    /// Name-checked variant of [`WeightedGraph::reaches`].
    pub fn reaches_by_name(&self, v: &str, w: &str) -> Result<bool> {
        Ok(self.reaches(self.vertex(v)?, self.vertex(w)?))
    }

    /// True if some vertex of `from` reaches some vertex of `to`.
    pub fn set_reaches(&self, from: VertexSet, to: VertexSet) -> bool {
        from.iter()
            .any(|v| !self.reach[v].intersection(to).is_empty())
    }

    /// Vertices `u` with `u >= w` for some `w` in `set`.
    pub fn ancestors(&self, set: VertexSet) -> VertexSet {
        (0..self.names.len())
            .filter(|&u| !self.reach[u].intersection(set).is_empty())
            .collect()
    }

    /// `|s^{-1}(v)|`.
    pub fn out_degree(&self, v: usize) -> Multiplicity {
        self.out[v].values().copied().sum()
    }

    /// `|s^{-1}(v) ∩ r^{-1}(set)|`.
    pub fn edge_count_into(&self, v: usize, set: VertexSet) -> Multiplicity {
        self.out[v]
            .iter()
            .filter(|(w, _)| set.contains(**w))
            .map(|(_, &m)| m)
            .sum()
    }

    /// Sum of [`WeightedGraph::edge_count_into`] over every source in `sources`.
    pub fn edge_count_between(&self, sources: VertexSet, set: VertexSet) -> Multiplicity {
        sources.iter().map(|v| self.edge_count_into(v, set)).sum()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out[v].is_empty()
    }

    pub fn is_infinite_emitter(&self, v: usize) -> bool {
        self.out_degree(v).is_infinite()
    }

    /// `0 < |s^{-1}(v)| < ∞`.
    pub fn is_finite_emitter(&self, v: usize) -> bool {
        !self.is_sink(v) && !self.is_infinite_emitter(v)
    }

    pub fn is_row_finite(&self) -> bool {
        (0..self.vertex_count()).all(|v| !self.is_infinite_emitter(v))
    }

    pub fn sinks(&self) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&v| self.is_sink(v))
            .collect()
    }

    pub fn infinite_emitters(&self) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&v| self.is_infinite_emitter(v))
            .collect()
    }

    /// Counts the simple loops based at `v`, treating each of `k` parallel
    /// edges as a separate loop edge. Saturates at [`LoopClass::Many`].
    pub fn simple_loop_class(&self, v: usize) -> LoopClass {
        // `weight` is the product of multiplicities along the current path,
        // capped at 2; `found` is capped at 2 as well.
        fn dfs(
            g: &WeightedGraph,
            base: usize,
            u: usize,
            visited: VertexSet,
            weight: u8,
            found: &mut u8,
        ) {
            for (w, m) in g.out_edges(u) {
                if *found >= 2 {
                    return;
                }
                let weight = if m == Multiplicity::ONE { weight } else { 2 };
                if w == base {
                    *found = (*found + weight).min(2);
                } else if !visited.contains(w) && g.reaches(w, base) {
                    dfs(
                        g,
                        base,
                        w,
                        visited.union(VertexSet::singleton(w)),
                        weight,
                        found,
                    );
                }
            }
        }
        let mut found = 0u8;
        dfs(self, v, v, VertexSet::singleton(v), 1, &mut found);
        match found {
            0 => LoopClass::Zero,
            1 => LoopClass::One,
            _ => LoopClass::Many,
        }
    }

    pub fn profile(&self, v: usize) -> VertexProfile {
        VertexProfile {
            is_sink: self.is_sink(v),
            is_infinite_emitter: self.is_infinite_emitter(v),
            loop_class: self.simple_loop_class(v),
        }
    }

    pub fn vertex_profile(&self, name: &str) -> Result<VertexProfile> {
        Ok(self.profile(self.vertex(name)?))
    }

    /// Vertices that are the base of at least one loop.
    pub fn loop_bases(&self) -> VertexSet {
        (0..self.vertex_count())
            .filter(|&v| self.out_edges(v).any(|(w, _)| self.reaches(w, v)))
            .collect()
    }

    /// Every vertex is the base of no simple loop or of at least two.
    pub fn condition_k(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.simple_loop_class(v) != LoopClass::One)
    }

    /// The subgraph induced on `keep`, with the surviving vertex names.
    pub fn induced_subgraph(&self, keep: VertexSet) -> WeightedGraph {
        let mut b = GraphBuilder::new();
        for v in keep {
            b.add_vertex(&self.names[v]).expect("names are valid");
        }
        for (v, w, m) in self.edges() {
            if keep.contains(v) && keep.contains(w) {
                b.add_edge(&self.names[v], &self.names[w], m)
                    .expect("edges are unique and nonzero");
            }
        }
        b.build().expect("subgraph of a valid graph")
    }
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightedGraph")
            .field("vertices", &self.names)
            .field(
                "edges",
                &self
                    .edges()
                    .map(|(v, w, m)| format!("{} -> {} x{}", self.names[v], self.names[w], m))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Incremental construction of a [`WeightedGraph`] from named vertices.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    vertices: BTreeMap<String, ()>,
    edges: BTreeMap<(String, String), Multiplicity>,
}

/// Why [`GraphBuilder::add_edge`] refused an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeRejection {
    InvalidName,
    Zero,
    Duplicate,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<(), EdgeRejection> {
        if !is_valid_vertex_name(name) {
            return Err(EdgeRejection::InvalidName);
        }
        self.vertices.insert(name.to_string(), ());
        Ok(())
    }

    pub fn add_edge(
        &mut self,
        source: &str,
        range: &str,
        m: Multiplicity,
    ) -> Result<(), EdgeRejection> {
        if m.is_zero() {
            return Err(EdgeRejection::Zero);
        }
        let key = (source.to_string(), range.to_string());
        if self.edges.contains_key(&key) {
            return Err(EdgeRejection::Duplicate);
        }
        self.add_vertex(source)?;
        self.add_vertex(range)?;
        self.edges.insert(key, m);
        Ok(())
    }

    pub fn vertex(mut self, name: &str) -> Self {
        self.add_vertex(name).expect("invalid vertex name");
        self
    }

    /// Chaining form of [`GraphBuilder::add_edge`]; panics on rejection.
    pub fn edge(mut self, source: &str, range: &str, m: Multiplicity) -> Self {
        self.add_edge(source, range, m).expect("rejected edge");
        self
    }

    pub fn build(self) -> Result<WeightedGraph> {
        let names: Vec<String> = self.vertices.into_keys().collect();
        if names.len() > MAX_VERTICES {
            return Err(Error::TooLarge {
                vertices: names.len(),
                bound: MAX_VERTICES,
            });
        }
        let index = |n: &str| names.binary_search_by(|x| x.as_str().cmp(n)).unwrap();
        let mut out = vec![BTreeMap::new(); names.len()];
        for ((s, r), m) in &self.edges {
            out[index(s)].insert(index(r), *m);
        }
        let reach = reachability(&out);
        Ok(WeightedGraph { names, out, reach })
    }
}

fn reachability(out: &[BTreeMap<usize, Multiplicity>]) -> Vec<VertexSet> {
    let n = out.len();
    let mut reach: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    for (v, r) in reach.iter_mut().enumerate() {
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &w in out[u].keys() {
                if !r.contains(w) {
                    r.insert(w);
                    stack.push(w);
                }
            }
        }
    }
    reach
}
