//! Brute-force reference implementations. They share no code with the
//! solvers they check beyond `Graph::has_edge`.

use crate::graph::{Graph, Vertex};

/// Smallest `k` admitting a proper coloring, by trying all `k^n` assignments.
pub fn naive_chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    let edges: Vec<(Vertex, Vertex)> =
        (0..n).flat_map(|v| (v + 1..n).map(move |w| (v, w))).filter(|&(v, w)| g.has_edge(v, w)).collect();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(v, w)| colors[v] != colors[w]) {
                return k;
            }
            let mut i = 0;
            while i < n {
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    unreachable!("n colors always suffice")
}

/// Largest clique size over all `2^n` vertex subsets.
pub fn naive_clique_number(g: &Graph) -> usize {
    let n = g.order();
    assert!(n < 32, "subset scan is for small graphs");
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let members: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if members.len() <= best {
            continue;
        }
        let clique =
            members.iter().enumerate().all(|(i, &v)| members[i + 1..].iter().all(|&w| g.has_edge(v, w)));
        if clique {
            best = members.len();
        }
    }
    best
}

fn four_subsets(n: usize) -> impl Iterator<Item = [Vertex; 4]> {
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| (b + 1..n).flat_map(move |c| (c + 1..n).map(move |d| [a, b, c, d])))
    })
}

const PERMUTATIONS: [[usize; 4]; 24] = [
    [0, 1, 2, 3],
    [0, 1, 3, 2],
    [0, 2, 1, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [0, 3, 2, 1],
    [1, 0, 2, 3],
    [1, 0, 3, 2],
    [1, 2, 0, 3],
    [1, 2, 3, 0],
    [1, 3, 0, 2],
    [1, 3, 2, 0],
    [2, 0, 1, 3],
    [2, 0, 3, 1],
    [2, 1, 0, 3],
    [2, 1, 3, 0],
    [2, 3, 0, 1],
    [2, 3, 1, 0],
    [3, 0, 1, 2],
    [3, 0, 2, 1],
    [3, 1, 0, 2],
    [3, 1, 2, 0],
    [3, 2, 0, 1],
    [3, 2, 1, 0],
];

/// Whether some 4-subset, under some role assignment, has exactly the edge
/// set `pattern` (pairs of role indices).
fn scan(g: &Graph, pattern: &[(usize, usize)]) -> bool {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    four_subsets(g.order()).any(|set| {
        PERMUTATIONS.iter().any(|p| {
            let roles = [set[p[0]], set[p[1]], set[p[2]], set[p[3]]];
            pairs.iter().all(|&(i, j)| {
                let want = pattern.contains(&(i, j));
                g.has_edge(roles[i], roles[j]) == want
            })
        })
    })
}

/// An induced `P3 ∪ K1` exists.
pub fn scan_has_h(g: &Graph) -> bool {
    scan(g, &[(0, 1), (1, 2)])
}

/// An induced `K2 ∪ 2K1` exists.
pub fn scan_has_r(g: &Graph) -> bool {
    scan(g, &[(0, 1)])
}

/// Number of isomorphism classes of graphs on `n ≤ 6` vertices: every edge
/// set is reduced to its least adjacency code over all `n!` relabelings.
pub fn naive_graph_count(n: usize) -> usize {
    assert!(n <= 6, "brute force is exponential in n!");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (v + 1..n).map(move |w| (v, w))).collect();
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(v, w)) in pairs.iter().enumerate() {
        index[v][w] = i;
        index[w][v] = i;
    }
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let code = perms
            .iter()
            .map(|p| {
                let mut c = 0u32;
                for (bit, &(v, w)) in pairs.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        c |= 1 << index[p[v]][p[w]];
                    }
                }
                c
            })
            .min()
            .expect("at least one permutation");
        seen.insert(code);
    }
    seen.len()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn reference_values() {
        assert_eq!(naive_chromatic_number(&cycle(5)), 3);
        assert_eq!(naive_chromatic_number(&complete(4)), 4);
        assert_eq!(naive_clique_number(&cycle(5)), 2);
        assert!(!scan_has_h(&cycle(5)) && !scan_has_r(&cycle(5)));
        assert!(scan_has_h(&cycle(7)) && scan_has_r(&cycle(7)));
        assert_eq!((1..=4).map(naive_graph_count).collect::<Vec<_>>(), [1, 2, 4, 11]);
    }
}
