#![allow(dead_code)]

use primtail::circle::{Angle, CircleSet};
use primtail::classify::{
    af_quotient, c_ntilde_structure, kirchberg_decomposition, pi_ideal_af_quotient,
};
use primtail::json;
use primtail::prim::{PrimSpace, PrimSubset};
use primtail::t1::t1_check;
use primtail::tails::maximal_tails;
use primtail::{fixtures, Error, GraphBuilder, Multiplicity, WeightedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

pub const CORPUS_SEED: u64 = 0x7431_5052_494d;
pub const RANDOM_GRAPHS: usize = 500;
pub const MAX_RANDOM_VERTICES: usize = 6;
pub const BOUND: usize = 16;

pub const MULTIPLICITIES: [Multiplicity; 3] = [
    Multiplicity::Finite(1),
    Multiplicity::Finite(2),
    Multiplicity::Infinite,
];

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    r.set_stream(stream);
    r
}

/// Up to `max_vertices` vertices; each ordered pair (loops included) gets
/// an edge with a per-graph density, multiplicity drawn from 1, 2, inf.
pub fn random_graph(r: &mut ChaCha8Rng, max_vertices: usize) -> WeightedGraph {
    let n = r.gen_range(1..=max_vertices);
    let density = *[0.15, 0.25, 0.4].choose(r).unwrap();
    let mut b = GraphBuilder::new();
    for v in 0..n {
        b.add_vertex(&format!("v{v}")).unwrap();
    }
    for s in 0..n {
        for t in 0..n {
            if r.gen_bool(density) {
                let m = *MULTIPLICITIES.choose(r).unwrap();
                b.add_edge(&format!("v{s}"), &format!("v{t}"), m).unwrap();
            }
        }
    }
    b.build().unwrap()
}

/// The named fixtures followed by the seeded random graphs.
pub fn corpus() -> Vec<(String, WeightedGraph)> {
    let mut out: Vec<(String, WeightedGraph)> = fixtures::all()
        .into_iter()
        .map(|(l, g)| (l.to_string(), g))
        .collect();
    let mut r = rng(0);
    for i in 0..RANDOM_GRAPHS {
        out.push((
            format!("random-{i}"),
            random_graph(&mut r, MAX_RANDOM_VERTICES),
        ));
    }
    out
}

fn sample_circle(r: &mut ChaCha8Rng) -> CircleSet {
    let a = |p, q| Angle::new(p, q).unwrap();
    match r.gen_range(0..5) {
        0 => CircleSet::Empty,
        1 => CircleSet::point(a(0, 1)),
        2 => CircleSet::point(a(1, 4)),
        3 => CircleSet::finite([a(0, 1), a(1, 3)]),
        _ => CircleSet::Full,
    }
}

/// A random subset of the space: each gamma point and breaking vertex with
/// probability one half, and per tau tail one of a few circle sets.
pub fn random_subset(space: &PrimSpace<'_>, r: &mut ChaCha8Rng) -> PrimSubset {
    let mut s = PrimSubset::empty();
    for t in space.tails() {
        if t.is_tau() {
            s.add_circle(t.vertices, &sample_circle(r));
        } else if r.gen_bool(0.5) {
            s.gamma.insert(t.vertices);
        }
    }
    for v in space.breaking_vertices().iter() {
        if r.gen_bool(0.5) {
            s.bv.insert(v);
        }
    }
    s
}

fn error_value(e: Error) -> Value {
    json!({ "error": format!("{e:?}") })
}

fn or_error<T>(r: Result<T, Error>, f: impl FnOnce(T) -> Value) -> Value {
    match r {
        Ok(x) => f(x),
        Err(e) => error_value(e),
    }
}

/// One line of the fixture table, in canonical JSON (sorted keys, compact).
pub fn fixture_record(label: &str, g: &WeightedGraph) -> String {
    let tails = maximal_tails(g, BOUND).unwrap();
    let space = primtail::prim::prim_space(g, BOUND).unwrap();
    let record = json!({
        "label": label,
        "tails": json::tails(g, &tails),
        "t1": json::t1(g, &t1_check(g, BOUND).unwrap()),
        "prim": json::subset(g, &space),
        "decomposition": or_error(kirchberg_decomposition(g, BOUND), |d| {
            Value::Array(d.summands.iter().map(|s| json!({
                "tail": json::names(g, s.tail.vertices),
                "ideal": json::ideal(g, &s.ideal),
                "summand": json::ideal(g, &s.summand),
            })).collect())
        }),
        "af_quotient": or_error(af_quotient(g, BOUND), |q| json!(json::quotient(g, &q))),
        "pi_af": or_error(pi_ideal_af_quotient(g, BOUND), |q| json!(json::quotient(g, &q))),
        "c_ntilde": or_error(c_ntilde_structure(g, BOUND), |fs| {
            Value::Array(json::fibers(g, &fs).into_iter().map(|f| json!({
                "index": f.index,
                "tail": f.tail,
                "zero": f.zero,
            })).collect())
        }),
    });
    serde_json::to_string(&record).unwrap()
}
