//! Fallback F: breadth-first search over short sequences of Kempe swaps and
//! single-vertex recolorings near `u` until some budget color is free at `u`.

use super::kempe::{chain, swap_members};
use super::schema::Plan;
use super::trace::Move;
use crate::bitset::VertexSet;
use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, Vertex};
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Longest move sequence tried, not counting the final assignment to `u`.
    pub depth: usize,
    /// Cap on distinct colorings generated.
    pub nodes: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self { depth: 4, nodes: 20_000 }
    }
}

struct Node {
    coloring: Coloring,
    parent: usize,
    mv: Option<Move>,
    depth: usize,
}

fn free_color(g: &Graph, c: &Coloring, u: Vertex, budget: usize) -> Option<Color> {
    let mut seen = vec![false; budget + 1];
    for &w in g.neighbors(u) {
        let k = c.raw(w) as usize;
        if k <= budget {
            seen[k] = true;
        }
    }
    (1..=budget).find(|&k| !seen[k]).map(|k| k as Color)
}

pub(crate) fn kempe_search(
    g: &Graph,
    c: &Coloring,
    u: Vertex,
    budget: usize,
    limits: SearchLimits,
) -> Option<Plan> {
    let mut region = VertexSet::new(g.order());
    for &w in g.neighbors(u) {
        region.insert(w);
        region.union_with(g.neighbor_set(w));
    }
    region.remove(u);
    let region: Vec<Vertex> = region.iter().filter(|&v| c.is_colored(v)).collect();
    let t = budget as Color;

    let mut nodes = vec![Node { coloring: c.clone(), parent: usize::MAX, mv: None, depth: 0 }];
    let mut seen: HashSet<Vec<Color>> = HashSet::from([c.as_raw().to_vec()]);
    let mut head = 0;
    while head < nodes.len() {
        if nodes[head].depth == limits.depth {
            break;
        }
        for &v in &region {
            let cv = nodes[head].coloring.raw(v);
            if cv > t {
                continue;
            }
            for j in (1..=t).filter(|&j| j != cv) {
                let base = &nodes[head].coloring;
                let mut swapped = base.clone();
                swap_members(&mut swapped, &chain(g, base, v, cv, j), cv, j);
                let mut children = vec![(swapped, Move::Swap { i: cv, j, anchor: v })];
                if base.fits(g, v, j) {
                    let mut moved = base.clone();
                    moved.set(v, j);
                    children.push((moved, Move::Assign { v, color: j }));
                }
                for (child, mv) in children {
                    if !seen.insert(child.as_raw().to_vec()) {
                        continue;
                    }
                    let depth = nodes[head].depth + 1;
                    let free = free_color(g, &child, u, budget);
                    nodes.push(Node { coloring: child, parent: head, mv: Some(mv), depth });
                    if let Some(k) = free {
                        return Some(unwind(&nodes, nodes.len() - 1, u, k));
                    }
                    if nodes.len() >= limits.nodes {
                        return None;
                    }
                }
            }
        }
        head += 1;
    }
    None
}

fn unwind(nodes: &[Node], mut at: usize, u: Vertex, color: Color) -> Plan {
    let mut plan = vec![Move::Assign { v: u, color }];
    while let Some(mv) = nodes[at].mv {
        plan.push(mv);
        at = nodes[at].parent;
    }
    plan.reverse();
    plan
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn finds_a_single_swap() {
        // u = 0 sees 1 (color 1) and 2 (color 2); 1–3 is a 1/2 chain that avoids 2
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 3)]).unwrap();
        let c = Coloring::from_raw(vec![0, 1, 2, 2]);
        let plan = kempe_search(&g, &c, 0, 2, SearchLimits::default()).unwrap();
        assert_eq!(plan.len(), 2);
        assert!(matches!(plan[1], Move::Assign { v: 0, .. }));
    }

    #[test]
    fn clique_is_stuck() {
        let g = complete(4);
        let c = Coloring::from_raw(vec![0, 1, 2, 3]);
        assert_eq!(kempe_search(&g, &c, 0, 3, SearchLimits::default()), None);
    }
}
