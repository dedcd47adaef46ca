//! Isomorphism-free enumeration of small graphs.
//!
//! The canonical form of a graph is the lexicographically smallest graph6
//! bit string (upper triangle, column order) over all vertex orderings. The
//! search places vertices one position at a time; placing position `j` fixes
//! column `j`, so partial strings are compared against the best found so far
//! and dominated branches are cut. Unplaced twins are interchangeable and only
//! the smallest of each twin pair is tried.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 8;
/// Largest order whose canonical string fits in a `u64`.
pub const MAX_CANONICAL_ORDER: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {0}")]
    OrderOutOfRange(usize),
}

fn bit_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The canonical bit string, packed most-significant-first into a `u64`.
///
/// Panics if the graph has more than [`MAX_CANONICAL_ORDER`] vertices.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= MAX_CANONICAL_ORDER, "canonical form limited to n <= {MAX_CANONICAL_ORDER}");
    if n <= 1 {
        return 0;
    }
    let mut search =
        Search { g, len: bit_len(n), perm: Vec::with_capacity(n), placed: VertexSet::new(n), best: u64::MAX };
    search.extend(0);
    search.best
}

/// The graph whose labelling realises the canonical string.
pub fn canonical_form(g: &Graph) -> Graph {
    from_code(g.order(), canonical_code(g))
}

pub fn from_code(n: usize, code: u64) -> Graph {
    let len = bit_len(n);
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (len - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("code decodes to valid edges")
}

struct Search<'a> {
    g: &'a Graph,
    len: usize,
    perm: Vec<usize>,
    placed: VertexSet,
    best: u64,
}

impl Search<'_> {
    fn twin_of_smaller(&self, v: usize) -> bool {
        let nv = self.g.neighbor_set(v);
        (0..v).any(|w| {
            if self.placed.contains(w) {
                return false;
            }
            let mut a = nv.clone();
            a.remove(w);
            let mut b = self.g.neighbor_set(w).clone();
            b.remove(v);
            a == b
        })
    }

    fn extend(&mut self, value: u64) {
        let n = self.g.order();
        let j = self.perm.len();
        if j == n {
            self.best = self.best.min(value);
            return;
        }
        let prefix = bit_len(j + 1);
        let shift = self.len - prefix;
        for v in 0..n {
            if self.placed.contains(v) || self.twin_of_smaller(v) {
                continue;
            }
            let column_start = bit_len(j);
            let mut next = value;
            for (i, &p) in self.perm.iter().enumerate() {
                if self.g.has_edge(p, v) {
                    next |= 1 << (self.len - 1 - (column_start + i));
                }
            }
            if self.best != u64::MAX && next >> shift > self.best >> shift {
                continue;
            }
            self.perm.push(v);
            self.placed.insert(v);
            self.extend(next);
            self.placed.remove(v);
            self.perm.pop();
        }
    }
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// increasing canonical order. Each representative carries its canonical
/// labelling.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(EnumerateError::OrderOutOfRange(n));
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let g = from_code(k, code);
            for mask in 0u32..(1 << k) {
                let nbrs: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
                let h = g.add_vertex(&nbrs).expect("in range");
                next.insert(canonical_code(&h));
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|code| from_code(n, code)).collect())
}
