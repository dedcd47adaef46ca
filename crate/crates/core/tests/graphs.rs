mod common;

use bkcolor_core::class::{find_h_witness, find_r_witness, is_in_class, ClassId};
use bkcolor_core::enumerate::enumerate_graphs;
use bkcolor_core::oracles::naive_graph_count;
use bkcolor_core::{emit_graph6, families::*, parse_graph6, random_class_graph, VertexSet};
use common::{gnp, rng};
use proptest::prelude::*;

#[test]
fn enumeration_counts() {
    let known = [1, 2, 4, 11, 34, 156, 1044];
    for (n, &want) in (1..=7).zip(&known) {
        assert_eq!(enumerate_graphs(n).unwrap().len(), want, "n = {n}");
    }
    for n in 1..=6 {
        assert_eq!(naive_graph_count(n), known[n - 1]);
    }
}

#[test]
fn graph6_round_trips_every_small_graph() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let line = emit_graph6(&g);
            assert_eq!(parse_graph6(&line).unwrap(), g);
            assert_eq!(emit_graph6(&parse_graph6(&line).unwrap()), line);
        }
    }
}

#[test]
fn multipartite_graphs_are_in_both_classes() {
    let mut r = rng(11);
    for _ in 0..300 {
        use rand::Rng;
        let parts: Vec<usize> = (0..r.random_range(1..8)).map(|_| r.random_range(1..5)).collect();
        let g = complete_multipartite(&parts);
        if g.order() > 20 {
            continue;
        }
        assert!(find_h_witness(&g).is_none() && find_r_witness(&g).is_none(), "{parts:?}");
    }
}

#[test]
fn k10_minus_an_edge_profile() {
    let g = complete_multipartite(&[1, 1, 1, 1, 1, 1, 1, 1, 2]);
    let p = g.degree_profile();
    assert_eq!(p.degrees, [9, 9, 9, 9, 9, 9, 9, 9, 8, 8]);
    assert_eq!(p.max, 9);
    assert!(is_in_class(&g, ClassId::HFree).0 && is_in_class(&g, ClassId::RFree).0);
}

proptest! {
    #[test]
    fn induced_subgraph_minus_one_is_delete_vertex(seed: u64, n in 1usize..14, p in 0.0f64..1.0) {
        let mut r = rng(seed);
        let g = gnp(&mut r, n, p);
        for v in 0..n {
            let mut keep = VertexSet::full(n);
            keep.remove(v);
            let sub = g.induced_subgraph(&keep).unwrap();
            let del = g.delete_vertex(v).unwrap();
            prop_assert_eq!(&sub.graph, &del);
            for (new, &old) in sub.new_to_old.iter().enumerate() {
                prop_assert_eq!(sub.old_to_new[old], Some(new));
            }
        }
    }

    #[test]
    fn graph6_round_trips_random_graphs(seed: u64, n in 0usize..80, p in 0.0f64..1.0) {
        let mut r = rng(seed);
        let g = gnp(&mut r, n, p);
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn random_class_graphs_are_members_and_hereditary(seed: u64, n in 1usize..17, d in 0.0f64..1.0, h: bool) {
        let class = if h { ClassId::HFree } else { ClassId::RFree };
        let g = random_class_graph(n, class, seed, d);
        prop_assert!(is_in_class(&g, class).0);
        prop_assert_eq!(&g, &random_class_graph(n, class, seed, d));
        for v in 0..n {
            prop_assert!(is_in_class(&g.delete_vertex(v).unwrap(), class).0);
        }
    }

    #[test]
    fn delete_then_add_restores(seed: u64, n in 1usize..12, p in 0.0f64..1.0) {
        let mut r = rng(seed);
        let g = gnp(&mut r, n, p);
        let last = n - 1;
        let nbrs = g.neighbors(last).to_vec();
        let back = g.delete_vertex(last).unwrap().add_vertex(&nbrs).unwrap();
        prop_assert_eq!(back, g);
    }
}
