use proptest::prelude::*;

use primtail::lattice::{
    enumerate_ideals, h_empty_inf, h_fin_inf, ideal_leq, is_hereditary_saturated, omega, sigma_h,
    tail_ideal, GaugeInvariantIdeal,
};
use primtail::tails::{is_maximal_tail, maximal_tails};
use primtail::{parse_graph, render_graph, GraphBuilder, Multiplicity, VertexSet, WeightedGraph};

const BOUND: usize = 16;

fn multiplicity() -> impl Strategy<Value = Multiplicity> {
    prop_oneof![
        Just(Multiplicity::Finite(1)),
        Just(Multiplicity::Finite(2)),
        Just(Multiplicity::Infinite),
        (3u64..50).prop_map(Multiplicity::Finite),
    ]
}

fn build(
    n: usize,
    edges: &[(usize, usize, Multiplicity)],
    name: impl Fn(usize) -> String,
) -> WeightedGraph {
    let mut b = GraphBuilder::new();
    for v in 0..n {
        b.add_vertex(&name(v)).unwrap();
    }
    for &(s, t, m) in edges {
        let _ = b.add_edge(&name(s), &name(t), m);
    }
    b.build().unwrap()
}

type Spec = (usize, Vec<(usize, usize, Multiplicity)>);

fn graph_spec(max: usize) -> impl Strategy<Value = Spec> {
    (1..=max).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec((0..n, 0..n, multiplicity()), 0..=n * n),
        )
    })
}

fn graph(max: usize) -> impl Strategy<Value = WeightedGraph> {
    graph_spec(max).prop_map(|(n, e)| build(n, &e, |v| format!("v{v}")))
}

fn subset_of(g: &WeightedGraph, bits: u64) -> VertexSet {
    VertexSet::from_bits(bits & g.vertices().bits())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reaches_is_a_preorder(g in graph(6)) {
        let n = g.vertex_count();
        // Warshall closure of the edge relation.
        let mut r = vec![vec![false; n]; n];
        for (v, row) in r.iter_mut().enumerate() {
            row[v] = true;
        }
        for (s, t, _) in g.edges() {
            r[s][t] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if r[i][k] && r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
        for (i, row) in r.iter().enumerate() {
            for (j, &reach) in row.iter().enumerate() {
                prop_assert_eq!(g.reaches(i, j), reach);
            }
        }
    }

    #[test]
    fn infinite_emitters_have_infinite_out_degree(g in graph(6)) {
        for v in 0..g.vertex_count() {
            prop_assert_eq!(
                g.is_infinite_emitter(v),
                g.edge_count_into(v, g.vertices()).is_infinite()
            );
        }
    }

    #[test]
    fn render_parse_round_trip(g in graph(6)) {
        prop_assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
    }

    #[test]
    fn relabeling_preserves_structure(
        (n, edges) in graph_spec(5),
        perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let g = build(n, &edges, |v| format!("v{v}"));
        let h = build(n, &edges, |v| format!("u{}", perm[v]));
        let map = |v: usize| h.vertex(&format!("u{}", perm[g.name(v)[1..].parse::<usize>().unwrap()])).unwrap();
        for v in 0..n {
            prop_assert_eq!(g.simple_loop_class(v), h.simple_loop_class(map(v)));
        }
        let image = |s: VertexSet| s.iter().map(map).collect::<VertexSet>();
        let mut gt: Vec<_> = maximal_tails(&g, BOUND).unwrap().iter()
            .map(|t| (image(t.vertices), t.kind, t.loop_vertices.map(image))).collect();
        let mut ht: Vec<_> = maximal_tails(&h, BOUND).unwrap().iter()
            .map(|t| (t.vertices, t.kind, t.loop_vertices)).collect();
        gt.sort();
        ht.sort();
        prop_assert_eq!(gt, ht);
        prop_assert_eq!(
            primtail::t1::t1_check(&g, BOUND).unwrap().t1,
            primtail::t1::t1_check(&h, BOUND).unwrap().t1
        );
    }

    #[test]
    fn sigma_h_is_a_closure_operator(g in graph(6), a in any::<u64>(), b in any::<u64>()) {
        let x = subset_of(&g, a);
        let y = x.union(subset_of(&g, b));
        let sx = sigma_h(&g, x);
        prop_assert!(x.is_subset(sx));
        prop_assert!(is_hereditary_saturated(&g, sx));
        prop_assert_eq!(sigma_h(&g, sx), sx);
        prop_assert!(sx.is_subset(sigma_h(&g, y)));
        for h in g.vertices().subsets() {
            if x.is_subset(h) && is_hereditary_saturated(&g, h) {
                prop_assert!(sx.is_subset(h));
            }
        }
    }

    #[test]
    fn ideal_order_is_partial(g in graph(5)) {
        let all = enumerate_ideals(&g, BOUND).unwrap();
        for i in &all {
            prop_assert!(ideal_leq(i, i));
            for j in &all {
                if ideal_leq(i, j) && ideal_leq(j, i) {
                    prop_assert_eq!(i, j);
                }
                for k in &all {
                    if ideal_leq(i, j) && ideal_leq(j, k) {
                        prop_assert!(ideal_leq(i, k));
                    }
                }
            }
        }
    }

    #[test]
    fn tail_complements(g in graph(6)) {
        for t in maximal_tails(&g, BOUND).unwrap() {
            let m = t.vertices;
            let om = omega(&g, m);
            prop_assert_eq!(om, g.vertices().difference(m));
            prop_assert!(is_hereditary_saturated(&g, om));
            prop_assert!(h_empty_inf(&g, om).unwrap().len() <= 1);
        }
    }

    #[test]
    fn ideals_below_a_tail_ideal(g in graph(5)) {
        let all = enumerate_ideals(&g, BOUND).unwrap();
        for t in maximal_tails(&g, BOUND).unwrap() {
            let om = omega(&g, t.vertices);
            let w = h_empty_inf(&g, om).unwrap();
            let target = tail_ideal(&g, t.vertices);
            for i in all.iter().filter(|i| i.h().is_subset(om)) {
                prop_assert_eq!(ideal_leq(i, &target), i.b().intersection(w).is_empty());
            }
        }
    }

    #[test]
    fn vertex_tails(g in graph(6)) {
        for v in 0..g.vertex_count() {
            let m = g.vertices().difference(omega(&g, VertexSet::singleton(v)));
            let special = g.is_sink(v) || g.is_infinite_emitter(v) || g.loop_bases().contains(v);
            prop_assert_eq!(is_maximal_tail(&g, m), special);
        }
    }

    #[test]
    fn ideal_validation_matches_definition(g in graph(5), a in any::<u64>(), b in any::<u64>()) {
        let h = subset_of(&g, a);
        let bset = subset_of(&g, b);
        let ok = is_hereditary_saturated(&g, h)
            && bset.is_subset(h_fin_inf(&g, h).unwrap_or(VertexSet::empty()));
        prop_assert_eq!(GaugeInvariantIdeal::new(&g, h, bset).is_ok(), ok);
    }
}
