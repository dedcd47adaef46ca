use bkcolor_core::class::{find_h_witness, find_r_witness, shortest_induced_odd_cycle, Pattern};
use bkcolor_core::enumerate::enumerate_graphs;
use bkcolor_core::oracle::{brooks_color, chromatic_number, is_k_colorable, max_clique};
use bkcolor_core::oracles::{naive_chromatic_number, naive_clique_number, scan_has_h, scan_has_r};
use bkcolor_core::{families::*, verify_coloring};

#[test]
fn detectors_match_subset_scans() {
    for n in 1..=7 {
        for g in enumerate_graphs(n).unwrap() {
            let h = find_h_witness(&g);
            let r = find_r_witness(&g);
            assert_eq!(h.is_some(), scan_has_h(&g), "{g:?}");
            assert_eq!(r.is_some(), scan_has_r(&g), "{g:?}");
            assert!(h.is_none_or(|w| w.pattern == Pattern::H && w.holds_in(&g)));
            assert!(r.is_none_or(|w| w.pattern == Pattern::R && w.holds_in(&g)));
        }
    }
}

#[test]
fn odd_cycles_in_the_classes() {
    let c5 = cycle(5);
    assert!(find_h_witness(&c5).is_none() && find_r_witness(&c5).is_none());
    for k in (7..=15).step_by(2) {
        let g = cycle(k);
        assert!(find_h_witness(&g).unwrap().holds_in(&g));
        assert!(find_r_witness(&g).unwrap().holds_in(&g));
        assert_eq!(shortest_induced_odd_cycle(&g, 5).map(|c| c.len()), Some(k));
    }
}

#[test]
fn exact_oracles_match_brute_force() {
    for n in 1..=7 {
        for g in enumerate_graphs(n).unwrap() {
            let (chi, witness) = chromatic_number(&g);
            assert_eq!(chi, naive_chromatic_number(&g), "{g:?}");
            assert!(verify_coloring(&g, &witness, chi).is_empty());
            let omega = max_clique(&g).size;
            assert_eq!(omega, naive_clique_number(&g));
            assert!(chi >= omega);
            assert!(is_k_colorable(&g, chi - 1).is_none());
        }
    }
}

#[test]
fn brooks_on_connected_graphs_up_to_seven() {
    for n in 1..=7 {
        for g in enumerate_graphs(n).unwrap().into_iter().filter(|g| g.is_connected()) {
            let out = brooks_color(&g);
            let delta = g.max_degree();
            let exceptional = g.is_complete() || (delta == 2 && g.is_regular() && n % 2 == 1);
            assert_eq!(out.flagged(), exceptional, "{g:?}");
            let budget = if exceptional { delta + 1 } else { delta.max(1) };
            assert!(verify_coloring(&g, &out.coloring, budget).is_empty(), "{g:?}");
        }
    }
}
