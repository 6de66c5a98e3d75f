use std::collections::BTreeSet;

use hypercut::io::{emit_instance, parse_instance};
use hypercut::oracle::{brute_force_all_min_terminal_cuts, brute_force_min_k_cutsets};
use hypercut::structure::{sigma, uncross};
use hypercut::{enum_min_cutsets_k2, enum_min_k_cutsets, min_k_cut_value, min_terminal_cut, Hypergraph, VertexSet};
use proptest::prelude::*;

/// Hypergraphs on 2..=max_n vertices; each hyperedge is a bitmask with at
/// least two bits.
fn hypergraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n).prop_flat_map(move |n| {
        let edge = (0u32..(1 << n))
            .prop_filter("size >= 2", |mask| mask.count_ones() >= 2)
            .prop_map(move |mask| (0..n).filter(|v| mask >> v & 1 == 1).collect::<Vec<_>>());
        prop::collection::vec((edge, 1u64..=5), 1..=max_m)
            .prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
    })
}

fn set_of(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|v| mask >> v & 1 == 1))
}

/// `f(A)` with `f(∅) = f(V) = 0`.
fn f(g: &Hypergraph, a: &VertexSet) -> u64 {
    if a.is_empty() || a.len() == g.num_vertices() {
        0
    } else {
        g.cut_value(a).unwrap()
    }
}

fn family(report: &hypercut::EnumerationReport) -> BTreeSet<Vec<usize>> {
    report.family.iter().map(|c| c.edge_ids().to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cut_function_is_symmetric_and_submodular(g in hypergraph(9, 12), a in any::<u32>(), b in any::<u32>()) {
        let n = g.num_vertices();
        let (a, b) = (set_of(n, a), set_of(n, b));
        prop_assert_eq!(f(&g, &a), f(&g, &a.complement()));
        prop_assert!(f(&g, &a) + f(&g, &b) >= f(&g, &a.intersection(&b)) + f(&g, &a.union(&b)));
    }

    #[test]
    fn cut_set_matches_cut_value(g in hypergraph(9, 12), mask in any::<u32>()) {
        let n = g.num_vertices();
        let a = set_of(n, mask);
        prop_assume!(!a.is_empty() && a.len() < n);
        let cut = g.cut_set(&a).unwrap();
        prop_assert_eq!(cut.total_cost(), g.cut_value(&a).unwrap());
        for (id, e) in g.edges().iter().enumerate() {
            prop_assert_eq!(cut.edge_ids().contains(&id), e.crosses(&a));
        }
        let parts = g.components_after_removal(&cut).unwrap();
        prop_assert!(parts.len() >= 2);
        for part in &parts {
            prop_assert!(part.is_subset(&a) || part.is_disjoint(&a));
        }
    }

    #[test]
    fn terminal_cuts_match_brute_force(g in hypergraph(8, 12), s in any::<u32>(), t in any::<u32>()) {
        let n = g.num_vertices();
        let sources = set_of(n, s);
        let sinks = set_of(n, t).difference(&sources);
        prop_assume!(!sources.is_empty() && !sinks.is_empty());
        let cut = min_terminal_cut(&g, &sources, &sinks).unwrap();
        let sides = brute_force_all_min_terminal_cuts(&g, &sources, &sinks).unwrap();
        prop_assert_eq!(cut.value, g.cut_value(&sides[0]).unwrap());
        let meet = sides.iter().skip(1).fold(sides[0].clone(), |acc, s| acc.intersection(s));
        let join = sides.iter().skip(1).fold(sides[0].clone(), |acc, s| acc.union(s));
        prop_assert_eq!(cut.source_minimal, meet);
        prop_assert_eq!(cut.source_maximal, join);
    }

    #[test]
    fn terminal_cut_value_grows_with_terminals(g in hypergraph(8, 12), s in 0usize..8, t in 0usize..8, extra in 0usize..8) {
        let n = g.num_vertices();
        let (s, t, extra) = (s % n, t % n, extra % n);
        prop_assume!(s != t && extra != t);
        let sinks = VertexSet::from_vertices(n, [t]);
        let small = min_terminal_cut(&g, &VertexSet::from_vertices(n, [s]), &sinks).unwrap();
        let large = min_terminal_cut(&g, &VertexSet::from_vertices(n, [s, extra]), &sinks).unwrap();
        prop_assert!(large.value >= small.value);
    }

    #[test]
    fn enumeration_matches_oracle(g in hypergraph(7, 9), k in 2usize..=4) {
        prop_assume!(k <= g.num_vertices());
        let fast = enum_min_k_cutsets(&g, k).unwrap();
        let slow = brute_force_min_k_cutsets(&g, k).unwrap();
        prop_assert_eq!(fast.opt_value, slow.opt_value);
        prop_assert_eq!(family(&fast), family(&slow));
        prop_assert_eq!(min_k_cut_value(&g, k).unwrap(), slow.opt_value);
        if k == 2 {
            prop_assert_eq!(family(&enum_min_cutsets_k2(&g).unwrap()), family(&slow));
        }
    }

    #[test]
    fn sigma_matches_edge_classification(g in hypergraph(9, 12), u in any::<u32>(), picks in prop::collection::vec(any::<u32>(), 2..=4)) {
        let n = g.num_vertices();
        let u = set_of(n, u);
        let outside = u.complement();
        let sides: Vec<VertexSet> = picks.iter().map(|&m| set_of(n, m).intersection(&u).union(&outside)).collect();
        let partition = uncross(&g, &u, &sides).unwrap();
        let got = sigma(&g, &partition);

        let in_w = |v: usize| sides.iter().filter(|a| a.contains(v)).count() >= 2;
        let in_z = |v: usize| sides.iter().all(|a| !a.contains(v));
        let (mut cost, mut wz, mut alpha, mut beta) = (0, 0, 0, 0);
        for e in g.edges() {
            let vs = e.vertices();
            let ys: BTreeSet<usize> = vs
                .iter()
                .filter(|&&v| !in_w(v) && !in_z(v))
                .map(|&v| sides.iter().position(|a| a.contains(v)).unwrap())
                .collect();
            let meets_w = vs.iter().any(|&v| in_w(v));
            let meets_z = vs.iter().any(|&v| in_z(v));
            let touched = ys.len() + usize::from(meets_w) + usize::from(meets_z);
            if touched >= 2 {
                cost += e.cost();
            }
            if ys.is_empty() && meets_w && meets_z {
                wz += e.cost();
            }
            if meets_z && ys.len() + usize::from(meets_w) >= 2 {
                alpha += e.cost();
            }
            if !meets_z && ys.len() >= 2 {
                beta += e.cost();
            }
        }
        prop_assert_eq!((got.cost_partition, got.cost_wz, got.alpha, got.beta), (cost, wz, alpha, beta));
        prop_assert_eq!(got.sigma, cost + wz + alpha + beta);
    }

    #[test]
    fn instance_text_round_trips(g in hypergraph(12, 15)) {
        let text = emit_instance(&g);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_instance(&back), text);
    }
}
