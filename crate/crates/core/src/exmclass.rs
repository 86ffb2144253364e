//! Finite truncations of the graphs built from a Bratteli diagram `F` and a
//! sequence of simple component graphs `G_1, G_2, ...`.
//!
//! Row vertex `w_n^j` is named `w{n}_{j}`; vertex `x` of component `G_n`
//! becomes `g{n}_{x}`. Each row vertex `w_n^j` emits one connector edge into
//! `G_n`. Rows stop at level `n`, so the tail `F⁰` of the infinite
//! construction does not appear.

use serde::{Deserialize, Serialize};

use crate::dsl::parse_graph;
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, LoopClass, Multiplicity, WeightedGraph};
use crate::lattice::{is_hereditary_saturated, DEFAULT_MAX_VERTICES};
use crate::tails::maximal_tails;
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    /// Component graph in the text format of [`crate::dsl`].
    pub graph: String,
    /// Target of the connector edges; defaults to the first vertex name.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entry: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExmClassSpec {
    pub levels: usize,
    /// Row sizes `k_1, .., k_n`.
    pub bratteli_rows: Vec<usize>,
    /// `bratteli_edges[n][i][j]` is the number of edges from `w_{n+1}^{i+1}`
    /// to `w_{n+2}^{j+1}`; one matrix per pair of consecutive rows.
    pub bratteli_edges: Vec<Vec<Vec<u64>>>,
    pub components: Vec<ComponentSpec>,
}

impl ExmClassSpec {
    /// `n` rows of one vertex joined by single edges, each component a
    /// vertex with two loops.
    pub fn chain(n: usize) -> ExmClassSpec {
        ExmClassSpec {
            levels: n,
            bratteli_rows: vec![1; n],
            bratteli_edges: vec![vec![vec![1]]; n.saturating_sub(1)],
            components: (0..n)
                .map(|_| ComponentSpec {
                    graph: "g -> g x2\n".into(),
                    entry: None,
                })
                .collect(),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

/// No hereditary saturated subsets other than the empty set and everything.
fn is_simple(g: &WeightedGraph) -> bool {
    let all = g.vertices();
    all.subsets()
        .all(|h| h.is_empty() || h == all || !is_hereditary_saturated(g, h))
}

fn is_loop_free(g: &WeightedGraph) -> bool {
    (0..g.vertex_count()).all(|v| g.simple_loop_class(v) == LoopClass::Zero)
}

fn validate(spec: &ExmClassSpec) -> Result<Vec<(WeightedGraph, usize)>> {
    let n = spec.levels;
    if n == 0 {
        return Err(invalid("levels must be positive"));
    }
    if spec.bratteli_rows.len() != n || spec.components.len() != n {
        return Err(invalid(format!(
            "expected {n} rows and {n} components, got {} and {}",
            spec.bratteli_rows.len(),
            spec.components.len()
        )));
    }
    if spec.bratteli_rows.contains(&0) {
        return Err(invalid("row sizes must be positive"));
    }
    if spec.bratteli_edges.len() != n - 1 {
        return Err(invalid(format!(
            "expected {} edge matrices, got {}",
            n - 1,
            spec.bratteli_edges.len()
        )));
    }
    for (level, m) in spec.bratteli_edges.iter().enumerate() {
        let (rows, cols) = (spec.bratteli_rows[level], spec.bratteli_rows[level + 1]);
        if m.len() != rows || m.iter().any(|r| r.len() != cols) {
            return Err(invalid(format!(
                "edge matrix {} must be {rows}x{cols}",
                level + 1
            )));
        }
        if m.iter().any(|r| r.iter().all(|&k| k == 0)) {
            return Err(invalid(format!(
                "row {} has a vertex with no edge down",
                level + 1
            )));
        }
        if (0..cols).any(|j| m.iter().all(|r| r[j] == 0)) {
            return Err(invalid(format!(
                "row {} has an unreached vertex",
                level + 2
            )));
        }
    }
    let mut components = Vec::with_capacity(n);
    for (i, c) in spec.components.iter().enumerate() {
        let g = parse_graph(&c.graph).map_err(|e| invalid(format!("component {}: {e}", i + 1)))?;
        if g.vertex_count() == 0 {
            return Err(invalid(format!("component {} is empty", i + 1)));
        }
        if g.vertex_count() > DEFAULT_MAX_VERTICES {
            return Err(invalid(format!("component {} is too large", i + 1)));
        }
        if !is_simple(&g) {
            return Err(invalid(format!(
                "component {} has a non-trivial hereditary saturated set",
                i + 1
            )));
        }
        if !is_loop_free(&g) && !g.condition_k() {
            return Err(invalid(format!(
                "component {} is neither loop-free nor satisfies condition (K)",
                i + 1
            )));
        }
        let entry = match &c.entry {
            Some(name) => g
                .vertex(name)
                .map_err(|_| invalid(format!("component {}: no vertex `{name}`", i + 1)))?,
            None => 0,
        };
        components.push((g, entry));
    }
    Ok(components)
}

fn row_name(level: usize, j: usize) -> String {
    format!("w{level}_{j}")
}

fn component_name(level: usize, v: &str) -> String {
    format!("g{level}_{v}")
}

/// Builds the truncated graph and checks that its maximal tails are exactly
/// `M_k = F⁰_1 ∪ .. ∪ F⁰_k ∪ G⁰_k` for `k = 1..n`.
pub fn gen_fixture(spec: &ExmClassSpec) -> Result<WeightedGraph> {
    let components = validate(spec)?;
    let n = spec.levels;
    let mut b = GraphBuilder::new();
    let edge = |b: &mut GraphBuilder, s: &str, r: &str, m: Multiplicity| {
        b.add_edge(s, r, m)
            .map_err(|e| invalid(format!("edge {s} -> {r} rejected: {e:?}")))
    };
    for (idx, (g, entry)) in components.iter().enumerate() {
        let level = idx + 1;
        for v in g.names() {
            b.add_vertex(&component_name(level, v))
                .map_err(|_| invalid(format!("bad vertex name `{v}`")))?;
        }
        for (s, r, m) in g.edges() {
            edge(
                &mut b,
                &component_name(level, g.name(s)),
                &component_name(level, g.name(r)),
                m,
            )?;
        }
        let target = component_name(level, g.name(*entry));
        for j in 1..=spec.bratteli_rows[idx] {
            edge(&mut b, &row_name(level, j), &target, Multiplicity::ONE)?;
        }
    }
    for (idx, m) in spec.bratteli_edges.iter().enumerate() {
        let level = idx + 1;
        for (i, row) in m.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                if k > 0 {
                    edge(
                        &mut b,
                        &row_name(level, i + 1),
                        &row_name(level + 1, j + 1),
                        Multiplicity::Finite(k),
                    )?;
                }
            }
        }
    }
    let g = b.build()?;

    let mut expected = Vec::with_capacity(n);
    let mut rows = VertexSet::empty();
    for (idx, (c, _)) in components.iter().enumerate() {
        let level = idx + 1;
        let row: Vec<String> = (1..=spec.bratteli_rows[idx])
            .map(|j| row_name(level, j))
            .collect();
        rows = rows.union(g.vertex_set(row.iter().map(String::as_str))?);
        let comp: Vec<String> = c.names().iter().map(|v| component_name(level, v)).collect();
        expected.push(rows.union(g.vertex_set(comp.iter().map(String::as_str))?));
    }
    expected.sort();
    let found: Vec<VertexSet> = maximal_tails(&g, DEFAULT_MAX_VERTICES)?
        .iter()
        .map(|t| t.vertices)
        .collect();
    if found != expected {
        return Err(Error::Postcondition(format!(
            "generated graph has {} maximal tails instead of {n}",
            found.len()
        )));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{discreteness_report, SetKind};
    use crate::t1::t1_check;

    #[test]
    fn single_level() {
        let g = gen_fixture(&ExmClassSpec::chain(1)).unwrap();
        assert_eq!(g, parse_graph("g1_g -> g1_g x2\nw1_1 -> g1_g\n").unwrap());
        let tails = maximal_tails(&g, 16).unwrap();
        assert_eq!(tails.len(), 1);
        assert_eq!(tails[0].vertices, g.vertices());
        assert!(t1_check(&g, 16).unwrap().t1);
    }

    #[test]
    fn chain_levels_are_discrete() {
        for n in 1..=3 {
            let g = gen_fixture(&ExmClassSpec::chain(n)).unwrap();
            assert_eq!(maximal_tails(&g, 16).unwrap().len(), n);
            assert!(t1_check(&g, 16).unwrap().t1);
            let d = discreteness_report(&g, 16).unwrap();
            assert!(d.all_isolated);
            assert_eq!(d.shape, vec![SetKind::Point; n]);
        }
    }

    #[test]
    fn wider_rows() {
        let spec = ExmClassSpec {
            levels: 2,
            bratteli_rows: vec![2, 1],
            bratteli_edges: vec![vec![vec![1], vec![2]]],
            components: vec![
                ComponentSpec {
                    graph: "a -> b\nb -> a\na -> a\nb -> b\n".into(),
                    entry: Some("b".into()),
                },
                ComponentSpec {
                    graph: "vertex s\n".into(),
                    entry: None,
                },
            ],
        };
        let g = gen_fixture(&spec).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(
            g.multiplicity(g.vertex("w1_2").unwrap(), g.vertex("w2_1").unwrap()),
            Multiplicity::Finite(2)
        );
        assert!(t1_check(&g, 16).unwrap().t1);
    }

    #[test]
    fn rejects_non_simple_component() {
        let mut spec = ExmClassSpec::chain(2);
        spec.components[1].graph = "a -> a x2\nb -> b x2\n".into();
        assert!(matches!(gen_fixture(&spec), Err(Error::InvalidSpec(_))));
        spec.components[1].graph = "a -> a x2\na -> b\n".into();
        assert!(matches!(gen_fixture(&spec), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn rejects_malformed_shapes() {
        let mut spec = ExmClassSpec::chain(2);
        spec.bratteli_edges[0][0][0] = 0;
        assert!(matches!(gen_fixture(&spec), Err(Error::InvalidSpec(_))));
        let mut spec = ExmClassSpec::chain(2);
        spec.components.pop();
        assert!(matches!(gen_fixture(&spec), Err(Error::InvalidSpec(_))));
        let mut spec = ExmClassSpec::chain(1);
        spec.levels = 0;
        assert!(matches!(gen_fixture(&spec), Err(Error::InvalidSpec(_))));
        let mut spec = ExmClassSpec::chain(1);
        spec.components[0].graph = "a -> a x1\n".into();
        assert!(matches!(gen_fixture(&spec), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn unconnected_rows_keep_the_pattern() {
        let spec = ExmClassSpec {
            levels: 2,
            bratteli_rows: vec![2, 2],
            bratteli_edges: vec![vec![vec![1, 0], vec![0, 1]]],
            components: ExmClassSpec::chain(2).components,
        };
        let g = gen_fixture(&spec).unwrap();
        assert_eq!(maximal_tails(&g, 16).unwrap().len(), 2);
    }

    #[test]
    fn spec_round_trips_through_json() {
        let spec = ExmClassSpec::chain(2);
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<ExmClassSpec>(&text).unwrap(), spec);
    }
}
