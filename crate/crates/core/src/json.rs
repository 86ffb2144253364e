//! JSON forms of analysis results. Vertex sets are written as sorted lists
//! of vertex names, so the output does not depend on internal indices.

use serde::{Deserialize, Serialize};

use crate::circle::{Angle, CircleSet};
use crate::classify::{
    af_quotient, c_ntilde_structure, clopen_report, discreteness_report, kirchberg_decomposition,
    purely_infinite_check, ClopenEntry, DecompositionReport, DiscretenessReport, Fiber, FiberIndex,
    QuotientReport, SetKind,
};
use crate::error::{Error, Result};
use crate::graph::{Multiplicity, WeightedGraph};
use crate::lattice::{breaking_vertices, GaugeInvariantIdeal};
use crate::prim::PrimSubset;
use crate::t1::{t1_check, T1Verdict, T1Witness, TailPairReason};
use crate::tails::{maximal_tails, MaximalTail, TailKind};
use crate::vset::VertexSet;

pub type Names = Vec<String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TailJson {
    pub vertices: Names,
    pub kind: &'static str,
    #[serde(rename = "loop")]
    pub loop_vertices: Option<Names>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TailsJson {
    pub tails: Vec<TailJson>,
    pub breaking_vertices: Names,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealJson {
    pub h: Names,
    pub b: Names,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealEntryJson {
    pub h: Names,
    pub b: Names,
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealsJson {
    pub ideals: Vec<IdealEntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimJson {
    pub space: PrimSubsetJson,
    /// Present for T1 graphs.
    pub discreteness: Option<DiscretenessJson>,
}

/// `"full"`, `"empty"`, or a list of angles `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CircleJson {
    Word(String),
    Angles(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TauJson {
    pub tail: Names,
    pub circle: CircleJson,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimSubsetJson {
    #[serde(default)]
    pub gamma: Vec<Names>,
    #[serde(default)]
    pub bv: Names,
    #[serde(default)]
    pub tau: Vec<TauJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureJson {
    pub input: PrimSubsetJson,
    pub closure: PrimSubsetJson,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessJson {
    BreakingVertex {
        vertex: String,
    },
    TailPair {
        smaller: Names,
        larger: Names,
        reason: &'static str,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct T1Json {
    pub t1: bool,
    pub witnesses: Vec<WitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClopenEntryJson {
    pub tail: Names,
    pub set_kind: &'static str,
    pub clopen: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscretenessJson {
    pub all_isolated: bool,
    pub shape: Vec<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandJson {
    pub tail: Names,
    pub ideal: IdealJson,
    pub quotient_vertices: Names,
    pub summand: IdealJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionJson {
    pub summands: Vec<SummandJson>,
    pub exhaustive: bool,
}

/// A finite count, or the string `"inf"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CountJson {
    Finite(u64),
    Infinite(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeJson {
    pub source: String,
    pub range: String,
    pub multiplicity: CountJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub vertices: Names,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientJson {
    pub ideal_generators: Names,
    pub quotient_graph: GraphJson,
}

/// A fibre index `1, 2, ..` or `"inf"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum FiberIndexJson {
    Finite(usize),
    Infinity(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberJson {
    pub index: FiberIndexJson,
    pub tail: Option<Names>,
    pub ideal: IdealJson,
    pub zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibersJson {
    pub fibers: Vec<FiberJson>,
}

/// Everything at once. Analyses whose preconditions fail are `null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub t1: T1Json,
    pub tails: Vec<TailJson>,
    pub clopen: Option<Vec<ClopenEntryJson>>,
    pub purely_infinite: bool,
    pub decomposition: Option<DecompositionJson>,
    pub af_quotient: Option<QuotientJson>,
    pub c_ntilde: Option<Vec<FiberJson>>,
}

pub fn names(g: &WeightedGraph, set: VertexSet) -> Names {
    g.set_names(set)
}

pub fn tail(g: &WeightedGraph, t: &MaximalTail) -> TailJson {
    TailJson {
        vertices: names(g, t.vertices),
        kind: match t.kind {
            TailKind::Gamma => "gamma",
            TailKind::Tau => "tau",
        },
        loop_vertices: t.loop_vertices.map(|l| names(g, l)),
    }
}

pub fn tails(g: &WeightedGraph, ts: &[MaximalTail]) -> TailsJson {
    TailsJson {
        tails: ts.iter().map(|t| tail(g, t)).collect(),
        breaking_vertices: names(g, breaking_vertices(g)),
    }
}

pub fn ideal(g: &WeightedGraph, i: &GaugeInvariantIdeal) -> IdealJson {
    IdealJson {
        h: names(g, i.h()),
        b: names(g, i.b()),
    }
}

pub fn ideals(
    g: &WeightedGraph,
    all: &[GaugeInvariantIdeal],
    maximal: &[GaugeInvariantIdeal],
) -> IdealsJson {
    IdealsJson {
        ideals: all
            .iter()
            .map(|i| IdealEntryJson {
                h: names(g, i.h()),
                b: names(g, i.b()),
                maximal: maximal.contains(i),
            })
            .collect(),
    }
}

fn circle(c: &CircleSet) -> CircleJson {
    match c {
        CircleSet::Empty => CircleJson::Word("empty".into()),
        CircleSet::Full => CircleJson::Word("full".into()),
        CircleSet::Finite(a) => CircleJson::Angles(a.iter().map(Angle::to_string).collect()),
    }
}

pub fn subset(g: &WeightedGraph, s: &PrimSubset) -> PrimSubsetJson {
    PrimSubsetJson {
        gamma: s.gamma.iter().map(|m| names(g, *m)).collect(),
        bv: names(g, s.bv),
        tau: s
            .tau
            .iter()
            .map(|(n, c)| TauJson {
                tail: names(g, *n),
                circle: circle(c),
            })
            .collect(),
    }
}

fn vertex_set(g: &WeightedGraph, ns: &[String]) -> Result<VertexSet> {
    g.vertex_set(ns.iter().map(String::as_str))
}

/// Resolves names and angles. Whether the sets named are actually tails or
/// breaking vertices is checked later, against the Prim space.
pub fn subset_from_json(g: &WeightedGraph, s: &PrimSubsetJson) -> Result<PrimSubset> {
    let mut out = PrimSubset::empty();
    for m in &s.gamma {
        out.gamma.insert(vertex_set(g, m)?);
    }
    out.bv = vertex_set(g, &s.bv)?;
    for t in &s.tau {
        let c = match &t.circle {
            CircleJson::Word(w) if w == "full" => CircleSet::Full,
            CircleJson::Word(w) if w == "empty" => CircleSet::Empty,
            CircleJson::Word(w) => {
                return Err(Error::InvalidSubset(format!(
                    "circle must be \"full\", \"empty\" or a list of angles, got `{w}`"
                )))
            }
            CircleJson::Angles(a) => CircleSet::finite(
                a.iter()
                    .map(|x| x.parse())
                    .collect::<Result<Vec<Angle>>>()?,
            ),
        };
        out.add_circle(vertex_set(g, &t.tail)?, &c);
    }
    Ok(out)
}

pub fn t1(g: &WeightedGraph, v: &T1Verdict) -> T1Json {
    T1Json {
        t1: v.t1,
        witnesses: v
            .witnesses
            .iter()
            .map(|w| match w {
                T1Witness::BreakingVertex(v) => WitnessJson::BreakingVertex {
                    vertex: g.name(*v).to_string(),
                },
                T1Witness::TailPair {
                    smaller,
                    larger,
                    reason,
                } => WitnessJson::TailPair {
                    smaller: names(g, *smaller),
                    larger: names(g, *larger),
                    reason: match reason {
                        TailPairReason::EmptyOmegaInf => "empty_omega_inf",
                        TailPairReason::InfiniteEdgeCount => "infinite_edge_count",
                    },
                },
            })
            .collect(),
    }
}

fn set_kind(k: SetKind) -> &'static str {
    match k {
        SetKind::Point => "point",
        SetKind::Circle => "circle",
    }
}

pub fn clopen(g: &WeightedGraph, entries: &[ClopenEntry]) -> Vec<ClopenEntryJson> {
    entries
        .iter()
        .map(|e| ClopenEntryJson {
            tail: names(g, e.tail.vertices),
            set_kind: set_kind(e.set_kind),
            clopen: e.clopen,
        })
        .collect()
}

pub fn discreteness(d: &DiscretenessReport) -> DiscretenessJson {
    DiscretenessJson {
        all_isolated: d.all_isolated,
        shape: d.shape.iter().map(|k| set_kind(*k)).collect(),
    }
}

pub fn decomposition(g: &WeightedGraph, d: &DecompositionReport) -> DecompositionJson {
    DecompositionJson {
        summands: d
            .summands
            .iter()
            .map(|s| SummandJson {
                tail: names(g, s.tail.vertices),
                ideal: ideal(g, &s.ideal),
                quotient_vertices: names(g, s.quotient_vertices),
                summand: ideal(g, &s.summand),
            })
            .collect(),
        exhaustive: d.exhaustive,
    }
}

pub fn graph(g: &WeightedGraph) -> GraphJson {
    GraphJson {
        vertices: g.names().to_vec(),
        edges: g
            .edges()
            .map(|(s, r, m)| EdgeJson {
                source: g.name(s).to_string(),
                range: g.name(r).to_string(),
                multiplicity: match m {
                    Multiplicity::Finite(k) => CountJson::Finite(k),
                    Multiplicity::Infinite => CountJson::Infinite("inf"),
                },
            })
            .collect(),
    }
}

pub fn quotient(g: &WeightedGraph, q: &QuotientReport) -> QuotientJson {
    QuotientJson {
        ideal_generators: names(g, q.ideal_generators),
        quotient_graph: graph(&q.quotient_graph),
    }
}

pub fn fibers(g: &WeightedGraph, fs: &[Fiber]) -> Vec<FiberJson> {
    fs.iter()
        .map(|f| FiberJson {
            index: match f.index {
                FiberIndex::Finite(n) => FiberIndexJson::Finite(n),
                FiberIndex::Infinity => FiberIndexJson::Infinity("inf"),
            },
            tail: f.tail.map(|t| names(g, t.vertices)),
            ideal: ideal(g, &f.ideal),
            zero: f.zero,
        })
        .collect()
}

pub fn prim(g: &WeightedGraph, bound: usize) -> Result<PrimJson> {
    let space = crate::prim::prim_space(g, bound)?;
    Ok(PrimJson {
        space: subset(g, &space),
        discreteness: optional(discreteness_report(g, bound))?.map(|d| discreteness(&d)),
    })
}

/// `Ok(None)` when the analysis refused the graph for a precondition.
fn optional<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(
            Error::NotT1
            | Error::NotRowFinite
            | Error::NotPurelyInfinite
            | Error::ConditionKRequired,
        ) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn report(g: &WeightedGraph, bound: usize) -> Result<ReportJson> {
    let ts = maximal_tails(g, bound)?;
    Ok(ReportJson {
        t1: t1(g, &t1_check(g, bound)?),
        tails: ts.iter().map(|t| tail(g, t)).collect(),
        clopen: optional(clopen_report(g, bound))?.map(|c| clopen(g, &c)),
        purely_infinite: purely_infinite_check(g, bound)?,
        decomposition: optional(kirchberg_decomposition(g, bound))?.map(|d| decomposition(g, &d)),
        af_quotient: optional(af_quotient(g, bound))?.map(|q| quotient(g, &q)),
        c_ntilde: optional(c_ntilde_structure(g, bound))?.map(|f| fibers(g, &f)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::prim::PrimSpace;

    #[test]
    fn subset_round_trip() {
        let g = fixtures::bv();
        let sp = PrimSpace::new(&g, 16).unwrap();
        let all = sp.all();
        let j = subset(&g, &all);
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"gamma":[["a","v"]],"bv":["v"],"tau":[{"tail":["v"],"circle":"full"}]}"#
        );
        assert_eq!(subset_from_json(&g, &j).unwrap(), all);
    }

    #[test]
    fn partial_subset_parses() {
        let g = fixtures::loop1();
        let j: PrimSubsetJson =
            serde_json::from_str(r#"{"tau":[{"tail":["a"],"circle":["0","2/4"]}]}"#).unwrap();
        let s = subset_from_json(&g, &j).unwrap();
        assert_eq!(
            serde_json::to_string(&subset(&g, &s)).unwrap(),
            r#"{"gamma":[],"bv":[],"tau":[{"tail":["a"],"circle":["0/1","1/2"]}]}"#
        );
        let j: PrimSubsetJson =
            serde_json::from_str(r#"{"tau":[{"tail":["a"],"circle":"half"}]}"#).unwrap();
        assert!(matches!(
            subset_from_json(&g, &j),
            Err(Error::InvalidSubset(_))
        ));
        let j: PrimSubsetJson = serde_json::from_str(r#"{"gamma":[["zz"]]}"#).unwrap();
        assert!(matches!(
            subset_from_json(&g, &j),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn t1_witness_shape() {
        let g = fixtures::infsink();
        let j = t1(&g, &t1_check(&g, 16).unwrap());
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"t1":false,"witnesses":[{"kind":"tail_pair","smaller":["w"],"larger":["s","w"],"reason":"infinite_edge_count"}]}"#
        );
    }

    #[test]
    fn graph_shape() {
        let g = fixtures::bv();
        assert_eq!(
            serde_json::to_string(&graph(&g)).unwrap(),
            r#"{"vertices":["a","v"],"edges":[{"source":"v","range":"a","multiplicity":"inf"},{"source":"v","range":"v","multiplicity":1}]}"#
        );
    }

    #[test]
    fn report_nulls_failed_preconditions() {
        let g = fixtures::tau();
        let r = report(&g, 16).unwrap();
        assert!(!r.t1.t1);
        assert!(r.clopen.is_none() && r.c_ntilde.is_none() && r.decomposition.is_none());
        let r = report(&fixtures::fork(), 16).unwrap();
        assert!(r.t1.t1 && r.purely_infinite);
        assert_eq!(r.decomposition.unwrap().summands.len(), 2);
        assert_eq!(r.c_ntilde.unwrap().len(), 3);
    }
}
