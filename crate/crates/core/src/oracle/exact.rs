//! Exact k-colorability, chromatic number and greedy coloring.

use super::clique::max_clique_within;
use crate::coloring::{Color, Coloring};
use crate::deadline::{Deadline, Ticker, TimedOut};
use crate::graph::{Graph, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("order has {found} entries for {n} vertices")]
    WrongLength { n: usize, found: usize },
    #[error("vertex {0} repeated or out of range in order")]
    NotAPermutation(Vertex),
}

/// Colors vertices in `order`, each with the least color unused by its
/// already-colored neighbors.
pub fn greedy_color(g: &Graph, order: &[Vertex]) -> Result<Coloring, OrderError> {
    let n = g.order();
    if order.len() != n {
        return Err(OrderError::WrongLength { n, found: order.len() });
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(OrderError::NotAPermutation(v));
        }
    }
    let mut c = Coloring::uncolored(n);
    for &v in order {
        c.set(v, least_free(g, &c, v));
    }
    Ok(c)
}

pub(crate) fn least_free(g: &Graph, c: &Coloring, v: Vertex) -> Color {
    let mut used = vec![false; g.degree(v) + 2];
    for &w in g.neighbors(v) {
        if let Some(col) = c.get(w) {
            if (col as usize) < used.len() {
                used[col as usize] = true;
            }
        }
    }
    (1..used.len()).find(|&k| !used[k]).expect("degree + 1 colors suffice") as Color
}

/// A proper coloring with at most `k` colors, or `None` if `χ(g) > k`.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    is_k_colorable_within(g, k, &Deadline::NONE).expect("no deadline")
}

/// Backtracking on the most saturated vertex (ties: higher degree, then lower
/// index). A color index above the largest one used so far is only ever tried
/// once, which removes palette permutations from the search.
pub fn is_k_colorable_within(g: &Graph, k: usize, deadline: &Deadline) -> Result<Option<Coloring>, TimedOut> {
    let n = g.order();
    if n == 0 {
        return Ok(Some(Coloring::uncolored(0)));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut search = KSearch {
        g,
        k,
        colors: vec![0; n],
        forbid: vec![0; n * (k + 1)],
        sat: vec![0; n],
        ticker: Ticker::new(deadline),
    };
    Ok(search.solve(0)?.then(|| Coloring::from_raw(search.colors)))
}

struct KSearch<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<Color>,
    /// `forbid[v * (k + 1) + c]`: neighbors of `v` colored `c`.
    forbid: Vec<u32>,
    /// Distinct colors among neighbors of `v`.
    sat: Vec<usize>,
    ticker: Ticker<'a>,
}

impl KSearch<'_> {
    fn pick(&self) -> Option<Vertex> {
        let mut best: Option<Vertex> = None;
        for v in 0..self.g.order() {
            if self.colors[v] != 0 {
                continue;
            }
            best = match best {
                Some(b) if (self.sat[b], self.g.degree(b)) >= (self.sat[v], self.g.degree(v)) => Some(b),
                _ => Some(v),
            };
        }
        best
    }

    /// Returns false if some uncolored neighbor ran out of colors.
    fn assign(&mut self, v: Vertex, c: Color) -> bool {
        self.colors[v] = c;
        let stride = self.k + 1;
        let mut alive = true;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.forbid[w * stride + c as usize];
            *slot += 1;
            if *slot == 1 {
                self.sat[w] += 1;
                if self.colors[w] == 0 && self.sat[w] >= self.k {
                    alive = false;
                }
            }
        }
        alive
    }

    fn unassign(&mut self, v: Vertex, c: Color) {
        self.colors[v] = 0;
        let stride = self.k + 1;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.forbid[w * stride + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn solve(&mut self, max_used: usize) -> Result<bool, TimedOut> {
        self.ticker.tick()?;
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        let stride = self.k + 1;
        let top = self.k.min(max_used + 1);
        for c in 1..=top {
            if self.forbid[v * stride + c] != 0 {
                continue;
            }
            let alive = self.assign(v, c as Color);
            if alive && self.solve(max_used.max(c))? {
                return Ok(true);
            }
            self.unassign(v, c as Color);
        }
        Ok(false)
    }
}

/// `χ(g)` with a witness coloring, searching upward from ω.
pub fn chromatic_number(g: &Graph) -> (usize, Coloring) {
    chromatic_number_within(g, &Deadline::NONE).expect("no deadline")
}

pub fn chromatic_number_within(g: &Graph, deadline: &Deadline) -> Result<(usize, Coloring), TimedOut> {
    if g.order() == 0 {
        return Ok((0, Coloring::uncolored(0)));
    }
    let omega = max_clique_within(g, deadline)?.size;
    for k in omega.. {
        if let Some(c) = is_k_colorable_within(g, k, deadline)? {
            return Ok((k, c));
        }
    }
    unreachable!("n colors always suffice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::graph::families::*;

    #[test]
    fn k_colorability_examples() {
        assert!(is_k_colorable(&cycle(5), 2).is_none());
        let c = is_k_colorable(&cycle(5), 3).unwrap();
        assert!(verify_coloring(&cycle(5), &c, 3).is_empty());
        let k10e = complete_multipartite(&[1, 1, 1, 1, 1, 1, 1, 1, 2]);
        let c = is_k_colorable(&k10e, 9).unwrap();
        assert!(verify_coloring(&k10e, &c, 9).is_empty());
        assert_eq!(c.raw(8), c.raw(9));
        assert!(is_k_colorable(&k10e, 8).is_none());
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle(5)).0, 3);
        assert_eq!(chromatic_number(&petersen()).0, 3);
        assert_eq!(chromatic_number(&Graph::empty(4)).0, 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).0, 0);
        let (chi, c) = chromatic_number(&complete_multipartite(&[1, 1, 1, 1, 1, 1, 1, 2, 2]));
        assert_eq!(chi, 9);
        assert_eq!(c.num_colors(), 9);
    }

    #[test]
    fn greedy_examples() {
        let k4 = complete(4);
        assert_eq!(greedy_color(&k4, &[2, 0, 3, 1]).unwrap().num_colors(), 4);
        // BFS order of C6 from 0
        let c6 = greedy_color(&cycle(6), &[0, 1, 5, 2, 4, 3]).unwrap();
        assert_eq!(c6.num_colors(), 2);
        assert!(verify_coloring(&cycle(6), &c6, 2).is_empty());
        assert_eq!(greedy_color(&Graph::empty(3), &[1, 2, 0]).unwrap().num_colors(), 1);
        assert_eq!(greedy_color(&k4, &[0, 1, 1, 2]), Err(OrderError::NotAPermutation(1)));
        assert_eq!(greedy_color(&k4, &[0]), Err(OrderError::WrongLength { n: 4, found: 1 }));
    }

    fn mycielskian(g: &Graph) -> Graph {
        let n = g.order();
        let mut edges: Vec<_> = g.edges().collect();
        for (v, w) in g.edges() {
            edges.push((v, n + w));
            edges.push((w, n + v));
        }
        edges.extend((0..n).map(|v| (n + v, 2 * n)));
        Graph::from_edges(2 * n + 1, edges).unwrap()
    }

    #[test]
    fn deadline_in_the_past_times_out() {
        // Grötzsch-chain graph on 47 vertices: triangle-free, chi = 6
        let g = (0..3).fold(cycle(5), |g, _| mycielskian(&g));
        assert_eq!(g.order(), 47);
        let d = Deadline::after(std::time::Duration::ZERO);
        assert_eq!(is_k_colorable_within(&g, 5, &d), Err(TimedOut));
    }
}
