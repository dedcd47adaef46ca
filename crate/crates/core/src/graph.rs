//! Simple undirected graphs on dense vertex ids `0..n`.

use crate::bitset::VertexSet;
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
}

/// Immutable simple undirected graph.
///
/// Adjacency is kept both as bit rows (constant-time queries, fast set
/// algebra) and as sorted neighbor lists (iteration).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
    lists: Vec<Vec<Vertex>>,
    edges: usize,
}

/// Per-vertex degrees and their maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max: usize,
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_to_new[v]` is the id of `v` in the subgraph, if retained.
    pub old_to_new: Vec<Option<Vertex>>,
    /// Inverse of `old_to_new`, ascending.
    pub new_to_old: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate pairs are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut rows = vec![VertexSet::new(n); n];
        for (v, w) in edges {
            for x in [v, w] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if v == w {
                return Err(GraphError::SelfLoop(v));
            }
            rows[v].insert(w);
            rows[w].insert(v);
        }
        Ok(Self::from_rows(rows))
    }

    /// Builds from symmetric, irreflexive bit rows.
    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Self {
        let lists: Vec<Vec<Vertex>> = rows.iter().map(VertexSet::to_vec).collect();
        debug_assert!(lists
            .iter()
            .enumerate()
            .all(|(v, l)| !l.contains(&v) && l.iter().all(|&w| rows[w].contains(v))));
        let edges = lists.iter().map(Vec::len).sum::<usize>() / 2;
        Self { rows, lists, edges }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![VertexSet::new(n); n])
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, v: Vertex, w: Vertex) -> bool {
        self.rows[v].contains(w)
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.lists[v].len()
    }

    /// Open neighborhood as a sorted slice.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.lists[v]
    }

    /// Open neighborhood as a bit set.
    #[inline]
    pub fn neighbor_set(&self, v: Vertex) -> &VertexSet {
        &self.rows[v]
    }

    /// `N(v)` or `N(v) ∪ {v}`, range-checked.
    pub fn neighborhood(&self, v: Vertex, closed: bool) -> Result<VertexSet, GraphError> {
        self.check(v)?;
        let mut set = self.rows[v].clone();
        if closed {
            set.insert(v);
        }
        Ok(set)
    }

    pub fn closed_neighbor_set(&self, v: Vertex) -> VertexSet {
        let mut set = self.rows[v].clone();
        set.insert(v);
        set
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Edges `(v, w)` with `v < w`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.lists
            .iter()
            .enumerate()
            .flat_map(|(v, l)| l.iter().filter(move |&&w| w > v).map(move |&w| (v, w)))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = self.lists.iter().map(Vec::len).collect();
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, max }
    }

    pub fn max_degree(&self) -> usize {
        self.lists.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.lists.iter().all(|l| l.len() + 1 == n)
    }

    pub fn is_regular(&self) -> bool {
        self.lists.windows(2).all(|w| w[0].len() == w[1].len())
    }

    fn check(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.order() })
        }
    }

    /// The subgraph induced by `keep`, relabelled to `0..|keep|` in ascending order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        if let Some(bad) = keep.iter().find(|&v| v >= self.order()) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n: self.order() });
        }
        let new_to_old = keep.to_vec();
        let mut old_to_new = vec![None; self.order()];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let k = new_to_old.len();
        let rows = new_to_old
            .iter()
            .map(|&v| VertexSet::from_iter(k, self.lists[v].iter().filter_map(|&w| old_to_new[w])))
            .collect();
        Ok(InducedSubgraph { graph: Self::from_rows(rows), old_to_new, new_to_old })
    }

    /// `G − v`, with vertices above `v` shifted down by one.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Graph, GraphError> {
        self.check(v)?;
        let mut keep = VertexSet::full(self.order());
        keep.remove(v);
        Ok(self.induced_subgraph(&keep)?.graph)
    }

    /// Appends a vertex adjacent to `neighbors`; the new vertex gets id `n`.
    pub fn add_vertex(&self, neighbors: &[Vertex]) -> Result<Graph, GraphError> {
        let n = self.order();
        let edges = self.edges().chain(neighbors.iter().map(|&w| (w, n))).collect::<Vec<_>>();
        Graph::from_edges(n + 1, edges)
    }

    /// Copy with one extra edge.
    pub fn with_edge(&self, v: Vertex, w: Vertex) -> Result<Graph, GraphError> {
        self.check(v)?;
        self.check(w)?;
        if v == w {
            return Err(GraphError::SelfLoop(v));
        }
        let mut rows = self.rows.clone();
        rows[v].insert(w);
        rows[w].insert(v);
        Ok(Self::from_rows(rows))
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let rows = (0..n)
            .map(|v| {
                let mut r = VertexSet::full(n);
                r.difference_with(&self.rows[v]);
                r.remove(v);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in &self.lists[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Whether `set` induces a complete subgraph.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let k = set.len();
        set.iter().all(|v| self.rows[v].intersection_len(set) + 1 == k)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Builds a graph from an edge list; duplicate pairs are merged.
pub fn make_graph(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
    Graph::from_edges(n, edges.iter().copied())
}

/// Named graph families used throughout tests, examples and benchmarks.
pub mod families {
    use super::*;

    pub fn complete(n: usize) -> Graph {
        let rows = (0..n)
            .map(|v| {
                let mut r = VertexSet::full(n);
                r.remove(v);
                r
            })
            .collect();
        Graph::from_rows(rows)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    /// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i–(i+5).
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, edges).expect("valid petersen")
    }

    /// Complete multipartite graph; vertices are numbered part by part.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let n: usize = parts.iter().sum();
        let mut label = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            label.extend(std::iter::repeat_n(p, size));
        }
        let edges =
            (0..n).flat_map(|v| (v + 1..n).map(move |w| (v, w))).filter(|&(v, w)| label[v] != label[w]);
        Graph::from_edges(n, edges).expect("valid multipartite")
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn make_graph_examples() {
        let c5 = make_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.max_degree(), 2);
        assert_eq!(c5, cycle(5));
        let e3 = make_graph(3, &[]).unwrap();
        assert_eq!(e3.max_degree(), 0);
        let all: Vec<_> = (0..10).flat_map(|v| (v + 1..10).map(move |w| (v, w))).collect();
        assert_eq!(all.len(), 45);
        let k10 = make_graph(10, &all).unwrap();
        assert!(k10.degree_profile().degrees.iter().all(|&d| d == 9));
    }

    #[test]
    fn make_graph_dedupes_and_rejects() {
        let g = make_graph(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(make_graph(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(make_graph(3, &[(2, 2)]), Err(GraphError::SelfLoop(2)));
    }

    #[test]
    fn degree_profiles() {
        assert_eq!(cycle(5).degree_profile(), DegreeProfile { degrees: vec![2; 5], max: 2 });
        assert_eq!(complete(10).degree_profile().max, 9);
        let k10e = complete_multipartite(&[1, 1, 1, 1, 1, 1, 1, 1, 2]);
        let mut expected = vec![9; 8];
        expected.extend([8, 8]);
        assert_eq!(k10e.degree_profile(), DegreeProfile { degrees: expected, max: 9 });
        assert_eq!(Graph::empty(0).degree_profile().max, 0);
    }

    #[test]
    fn neighborhoods() {
        let c5 = cycle(5);
        assert_eq!(c5.neighborhood(0, false).unwrap().to_vec(), vec![1, 4]);
        assert_eq!(c5.neighborhood(0, true).unwrap().to_vec(), vec![0, 1, 4]);
        assert!(Graph::empty(3).neighborhood(1, false).unwrap().is_empty());
        assert!(c5.neighborhood(5, false).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        let sub = c5.induced_subgraph(&VertexSet::from_iter(5, [0, 1, 2])).unwrap();
        assert_eq!(sub.graph, path(3));
        let all = c5.induced_subgraph(&VertexSet::full(5)).unwrap();
        assert_eq!(all.graph, c5);
        assert_eq!(all.new_to_old, vec![0, 1, 2, 3, 4]);
        let k4 = complete(10).induced_subgraph(&VertexSet::from_iter(10, [1, 4, 7, 9])).unwrap();
        assert_eq!(k4.graph, complete(4));
        assert_eq!(k4.old_to_new[7], Some(2));
        assert!(c5.induced_subgraph(&VertexSet::from_iter(6, [5])).is_err());
    }

    #[test]
    fn delete_vertex_examples() {
        assert_eq!(complete(10).delete_vertex(3).unwrap(), complete(9));
        for v in 0..5 {
            let p = cycle(5).delete_vertex(v).unwrap();
            assert_eq!(p.size(), 3);
            assert_eq!(p.degree_profile().degrees.iter().filter(|&&d| d == 1).count(), 2);
        }
        // re-adding vertex 4 of C5 with its old adjacencies reproduces C5 exactly
        let back = cycle(5).delete_vertex(4).unwrap().add_vertex(&[0, 3]).unwrap();
        assert_eq!(back, cycle(5));
    }

    #[test]
    fn petersen_is_cubic() {
        let p = petersen();
        assert_eq!(p.size(), 15);
        assert!(p.is_regular() && p.max_degree() == 3);
    }
}
