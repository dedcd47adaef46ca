//! Membership in the hereditary classes defined by forbidding an induced
//! `P3 ∪ K1` (pattern H) or an induced `K2 ∪ 2K1` (pattern R).

use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};
use std::fmt;
use std::str::FromStr;

/// The two forbidden four-vertex patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    /// `P3 ∪ K1`: a path `a–b–c` plus a vertex `d` adjacent to none of them.
    H,
    /// `K2 ∪ 2K1`: an edge `ab` plus two vertices `c`, `d` adjacent to nothing
    /// in the pattern.
    R,
}

/// The graph class named by its forbidden pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    HFree,
    RFree,
}

impl ClassId {
    pub fn pattern(self) -> Pattern {
        match self {
            ClassId::HFree => Pattern::H,
            ClassId::RFree => Pattern::R,
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassId::HFree => "H_FREE",
            ClassId::RFree => "R_FREE",
        })
    }
}

impl FromStr for ClassId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "h" | "h_free" | "h-free" => Ok(ClassId::HFree),
            "r" | "r_free" | "r-free" => Ok(ClassId::RFree),
            other => Err(format!("unknown class {other:?}")),
        }
    }
}

/// Four vertices inducing `pattern`, in role order `[a, b, c, d]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InducedWitness {
    pub pattern: Pattern,
    pub vertices: [Vertex; 4],
}

impl InducedWitness {
    /// Re-checks the role invariants against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let [a, b, c, d] = self.vertices;
        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
        if !distinct || self.vertices.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let e = |x, y| g.has_edge(x, y);
        match self.pattern {
            Pattern::H => e(a, b) && e(b, c) && !e(a, c) && !e(a, d) && !e(b, d) && !e(c, d),
            Pattern::R => e(a, b) && !e(c, d) && !e(a, c) && !e(a, d) && !e(b, c) && !e(b, d),
        }
    }
}

/// First induced `P3 ∪ K1` in lexicographic `(a, b, c, d)` order.
pub fn find_h_witness(g: &Graph) -> Option<InducedWitness> {
    let n = g.order();
    for a in 0..n {
        let na = g.closed_neighbor_set(a);
        for &b in g.neighbors(a) {
            let nab = na.union(g.neighbor_set(b));
            for &c in g.neighbors(b) {
                if na.contains(c) {
                    continue;
                }
                let mut outside = VertexSet::full(n);
                outside.difference_with(&nab);
                outside.difference_with(g.neighbor_set(c));
                outside.remove(c);
                if let Some(d) = outside.first() {
                    return Some(InducedWitness { pattern: Pattern::H, vertices: [a, b, c, d] });
                }
            }
        }
    }
    None
}

/// First induced `K2 ∪ 2K1` in lexicographic `(a, b, c, d)` order.
pub fn find_r_witness(g: &Graph) -> Option<InducedWitness> {
    let n = g.order();
    for a in 0..n {
        let na = g.closed_neighbor_set(a);
        for &b in g.neighbors(a) {
            let mut outside = VertexSet::full(n);
            outside.difference_with(&na);
            outside.difference_with(g.neighbor_set(b));
            outside.remove(b);
            for c in outside.iter() {
                let mut rest = outside.difference(g.neighbor_set(c));
                rest.remove(c);
                if let Some(d) = rest.first() {
                    return Some(InducedWitness { pattern: Pattern::R, vertices: [a, b, c, d] });
                }
            }
        }
    }
    None
}

pub fn find_witness(g: &Graph, pattern: Pattern) -> Option<InducedWitness> {
    match pattern {
        Pattern::H => find_h_witness(g),
        Pattern::R => find_r_witness(g),
    }
}

/// `(true, None)` if `g` avoids the class's pattern, else `(false, Some(w))`.
pub fn is_in_class(g: &Graph, class: ClassId) -> (bool, Option<InducedWitness>) {
    let w = find_witness(g, class.pattern());
    (w.is_none(), w)
}

/// A shortest chordless odd cycle of length at least `min_length`, listed
/// in cyclic order starting from its smallest vertex.
///
/// Exponential in the worst case; intended for small test graphs.
pub fn shortest_induced_odd_cycle(g: &Graph, min_length: usize) -> Option<Vec<Vertex>> {
    let n = g.order();
    let mut len = min_length.max(3);
    if len.is_multiple_of(2) {
        len += 1;
    }
    while len <= n {
        for s in 0..n {
            let mut path = vec![s];
            if induced_cycle_from(g, len, &mut path) {
                return Some(path);
            }
        }
        len += 2;
    }
    None
}

/// Extends an induced path starting at `path[0]` (the cycle's minimum) to an
/// induced cycle of exactly `len` vertices.
fn induced_cycle_from(g: &Graph, len: usize, path: &mut Vec<Vertex>) -> bool {
    let s = path[0];
    let last = *path.last().expect("nonempty");
    for &v in g.neighbors(last) {
        if v <= s || path.contains(&v) {
            continue;
        }
        // v may touch only `last` among the path, plus `s` when it closes the cycle
        let closes = path.len() + 1 == len;
        let ok = path[..path.len() - 1].iter().enumerate().all(|(i, &p)| {
            let adj = g.has_edge(p, v);
            if i == 0 && closes && path.len() > 1 {
                adj
            } else {
                !adj
            }
        });
        if !ok {
            continue;
        }
        path.push(v);
        if closes || induced_cycle_from(g, len, path) {
            return true;
        }
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn h_witness_examples() {
        assert_eq!(find_h_witness(&cycle(5)), None);
        let w = find_h_witness(&cycle(7)).unwrap();
        assert_eq!(w.vertices, [0, 1, 2, 4]);
        assert!(w.holds_in(&cycle(7)));
        assert_eq!(find_h_witness(&complete(10)), None);
    }

    #[test]
    fn r_witness_examples() {
        let w = find_r_witness(&cycle(7)).unwrap();
        assert_eq!(w.vertices, [0, 1, 3, 5]);
        assert!(w.holds_in(&cycle(7)));
        assert_eq!(find_r_witness(&path(4)), None);
        let r = Graph::from_edges(4, [(0, 1)]).unwrap();
        assert_eq!(find_r_witness(&r).unwrap().vertices, [0, 1, 2, 3]);
    }

    #[test]
    fn class_membership_examples() {
        assert_eq!(is_in_class(&cycle(5), ClassId::HFree), (true, None));
        assert_eq!(is_in_class(&cycle(5), ClassId::RFree), (true, None));
        let (free, w) = is_in_class(&cycle(9), ClassId::HFree);
        assert!(!free && w.unwrap().holds_in(&cycle(9)));
    }

    #[test]
    fn odd_cycles() {
        assert_eq!(shortest_induced_odd_cycle(&cycle(7), 5), Some((0..7).collect()));
        assert_eq!(shortest_induced_odd_cycle(&cycle(5), 5), Some((0..5).collect()));
        assert_eq!(shortest_induced_odd_cycle(&complete(10), 5), None);
        assert_eq!(shortest_induced_odd_cycle(&petersen(), 5).map(|c| c.len()), Some(5));
        // C7 plus a chord 0-2 leaves a chordless C6 (even) and a triangle
        let chorded = cycle(7).with_edge(0, 2).unwrap();
        assert_eq!(shortest_induced_odd_cycle(&chorded, 5), None);
    }

    #[test]
    fn class_id_parsing() {
        assert_eq!("h".parse::<ClassId>(), Ok(ClassId::HFree));
        assert_eq!("R_FREE".parse::<ClassId>(), Ok(ClassId::RFree));
        assert!("x".parse::<ClassId>().is_err());
    }
}
