//! Constructive Brooks coloring: every connected graph other than a complete
//! graph or an odd cycle is colored with at most Δ colors.
//!
//! Per connected component:
//! - complete graphs and odd cycles take `m` and 3 colors and are flagged;
//! - other graphs with Δ ≤ 2 (paths, even cycles) are 2-colored;
//! - non-regular components are colored greedily in reverse BFS order from a
//!   minimum-degree root, so every vertex but the root still has its parent
//!   uncolored when it is colored;
//! - 2-connected regular components: pick `x` with non-adjacent neighbors
//!   `u1`, `u2` such that removing `u1`, `u2` keeps the component connected,
//!   give `u1`, `u2` color 1, then greedy in reverse BFS order from `x`;
//! - regular components with a cut vertex: color each block on its own and
//!   permute block palettes to agree at shared cut vertices.

use crate::bitset::VertexSet;
use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, Vertex};
use std::collections::VecDeque;

/// A component that needs more than Δ colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BrooksException {
    Complete { vertices: Vec<Vertex> },
    OddCycle { vertices: Vec<Vertex> },
}

#[derive(Debug, Clone)]
pub struct BrooksOutcome {
    pub coloring: Coloring,
    /// One entry per flagged component, by smallest vertex.
    pub exceptions: Vec<BrooksException>,
}

impl BrooksOutcome {
    pub fn flagged(&self) -> bool {
        !self.exceptions.is_empty()
    }
}

pub fn brooks_color(g: &Graph) -> BrooksOutcome {
    let mut coloring = Coloring::uncolored(g.order());
    let mut exceptions = Vec::new();
    for comp in g.components() {
        let sub = g
            .induced_subgraph(&VertexSet::from_iter(g.order(), comp.iter().copied()))
            .expect("component vertices are in range");
        let (local, kind) = color_connected(&sub.graph);
        for (i, &v) in sub.new_to_old.iter().enumerate() {
            coloring.set(v, local[i]);
        }
        match kind {
            Kind::Complete => exceptions.push(BrooksException::Complete { vertices: comp }),
            Kind::OddCycle => exceptions.push(BrooksException::OddCycle { vertices: comp }),
            Kind::Regular => {}
        }
    }
    BrooksOutcome { coloring, exceptions }
}

enum Kind {
    Regular,
    Complete,
    OddCycle,
}

fn color_connected(g: &Graph) -> (Vec<Color>, Kind) {
    let n = g.order();
    if g.is_complete() {
        return ((1..=n as Color).collect(), Kind::Complete);
    }
    let delta = g.max_degree();
    let regular = g.is_regular();
    if delta == 2 && regular {
        return color_cycle(g);
    }
    if delta <= 2 || !regular {
        let root = (0..n).min_by_key(|&v| g.degree(v)).expect("nonempty");
        return (reverse_bfs_greedy(g, root, &[]), Kind::Regular);
    }
    let blocks = blocks(g);
    if blocks.len() == 1 {
        if let Some((x, u1, u2)) = find_anchor(g) {
            return (reverse_bfs_greedy(g, x, &[u1, u2]), Kind::Regular);
        }
    }
    (color_by_blocks(g, &blocks), Kind::Regular)
}

fn color_cycle(g: &Graph) -> (Vec<Color>, Kind) {
    let n = g.order();
    let mut order = vec![0];
    let mut prev = usize::MAX;
    while order.len() < n {
        let cur = *order.last().expect("nonempty");
        let next =
            *g.neighbors(cur).iter().find(|&&w| w != prev && !order.contains(&w)).expect("cycle continues");
        prev = cur;
        order.push(next);
    }
    let mut colors = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        colors[v] = if i % 2 == 0 { 1 } else { 2 };
    }
    if n % 2 == 1 {
        colors[order[n - 1]] = 3;
        (colors, Kind::OddCycle)
    } else {
        (colors, Kind::Regular)
    }
}

/// Pre-colors `pre` with color 1, then colors everything reachable from
/// `root` avoiding `pre`, greedily in reverse BFS order.
fn reverse_bfs_greedy(g: &Graph, root: Vertex, pre: &[Vertex]) -> Vec<Color> {
    let n = g.order();
    let mut c = Coloring::uncolored(n);
    for &p in pre {
        c.set(p, 1);
    }
    let mut seen = vec![false; n];
    for &p in pre {
        seen[p] = true;
    }
    seen[root] = true;
    let mut order = vec![root];
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
                queue.push_back(w);
            }
        }
    }
    for &v in order.iter().rev() {
        c.set(v, super::exact::least_free(g, &c, v));
    }
    c.as_raw().to_vec()
}

/// `x` with non-adjacent neighbors `u1 < u2` such that `g − {u1, u2}` is connected.
fn find_anchor(g: &Graph) -> Option<(Vertex, Vertex, Vertex)> {
    let n = g.order();
    for x in 0..n {
        let nbrs = g.neighbors(x);
        for (i, &u1) in nbrs.iter().enumerate() {
            for &u2 in &nbrs[i + 1..] {
                if g.has_edge(u1, u2) {
                    continue;
                }
                let mut keep = VertexSet::full(n);
                keep.remove(u1);
                keep.remove(u2);
                if connected_within(g, &keep) {
                    return Some((x, u1, u2));
                }
            }
        }
    }
    None
}

fn connected_within(g: &Graph, keep: &VertexSet) -> bool {
    let Some(start) = keep.first() else {
        return true;
    };
    let mut seen = VertexSet::new(g.order());
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if keep.contains(w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == keep.len()
}

/// Vertex sets of the blocks (maximal 2-connected pieces) of a connected graph.
pub(crate) fn blocks(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.order();
    if n == 1 {
        return vec![vec![0]];
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut frames = vec![(root, usize::MAX, 0usize)];
        while let Some(frame) = frames.last_mut() {
            let (v, parent, i) = *frame;
            if i < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[i];
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(u, _, _)) = frames.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut block = VertexSet::new(n);
                    while let Some(e) = edge_stack.pop() {
                        block.insert(e.0);
                        block.insert(e.1);
                        if e == (u, v) {
                            break;
                        }
                    }
                    out.push(block.to_vec());
                }
            }
        }
    }
    out
}

fn color_by_blocks(g: &Graph, blocks: &[Vec<Vertex>]) -> Vec<Color> {
    let n = g.order();
    let mut colors: Vec<Color> = vec![0; n];
    let mut member_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            member_of[v].push(b);
        }
    }
    let mut done = vec![false; blocks.len()];
    let mut queue = VecDeque::from([0usize]);
    done[0] = true;
    while let Some(b) = queue.pop_front() {
        let block = &blocks[b];
        let sub =
            g.induced_subgraph(&VertexSet::from_iter(n, block.iter().copied())).expect("block in range");
        let (mut local, _) = color_connected(&sub.graph);
        // at most one vertex of a non-root block is colored already: its cut vertex
        if let Some((i, &v)) = sub.new_to_old.iter().enumerate().find(|(_, &v)| colors[v] != 0) {
            let (want, have) = (colors[v], local[i]);
            for col in local.iter_mut() {
                if *col == have {
                    *col = want;
                } else if *col == want {
                    *col = have;
                }
            }
        }
        for (i, &v) in sub.new_to_old.iter().enumerate() {
            colors[v] = local[i];
            for &nb in &member_of[v] {
                if !done[nb] {
                    done[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::graph::families::*;

    fn check(g: &Graph, expect_colors: usize, flagged: bool) {
        let out = brooks_color(g);
        assert!(verify_coloring(g, &out.coloring, expect_colors).is_empty(), "{g:?}");
        assert_eq!(out.flagged(), flagged);
    }

    #[test]
    fn examples() {
        check(&cycle(6), 2, false);
        check(&complete(5), 5, true);
        check(&petersen(), 3, false);
        check(&cycle(7), 3, true);
        check(&path(5), 2, false);
        check(&Graph::empty(3), 1, true);
    }

    #[test]
    fn flags_name_components() {
        let g =
            Graph::from_edges(9, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 3)])
                .unwrap();
        let out = brooks_color(&g);
        assert_eq!(out.exceptions, vec![BrooksException::Complete { vertices: vec![0, 1, 2] }]);
        assert!(verify_coloring(&g, &out.coloring, 3).is_empty());
    }

    #[test]
    fn regular_with_cut_vertex() {
        // two K4-minus-an-edge halves joined into a cubic graph through a bridge
        let g = Graph::from_edges(
            10,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (3, 4),
                (4, 5),
                (5, 6),
                (5, 9),
                (6, 7),
                (6, 8),
                (7, 8),
                (7, 9),
                (8, 9),
            ],
        )
        .unwrap();
        assert!(g.is_regular() && g.max_degree() == 3);
        assert!(blocks(&g).len() > 1);
        check(&g, 3, false);
    }

    #[test]
    fn blocks_of_a_bowtie() {
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let mut b = blocks(&bowtie);
        b.sort();
        assert_eq!(b, vec![vec![0, 1, 2], vec![2, 3, 4]]);
    }
}
