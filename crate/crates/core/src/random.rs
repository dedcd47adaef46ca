//! Seeded random members of the H-free and R-free classes.

use crate::class::{find_witness, ClassId, Pattern};
use crate::graph::{Graph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_DENSITY: f64 = 0.5;

/// A random graph in `class` on `n` vertices.
///
/// Vertices are dealt into a random number of parts; distinct parts are
/// completely joined and each pair inside a part is joined with probability
/// `density`. While the class pattern occurs, one edge inside the witness is
/// added: `d` to a random path vertex for H, `cd` for R.
pub fn random_class_graph(n: usize, class: ClassId, seed: u64, density: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = density.clamp(0.0, 1.0);
    let parts = rng.random_range(1..=n.max(1));
    let part: Vec<usize> = (0..n).map(|_| rng.random_range(0..parts)).collect();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for v in 0..n {
        for w in v + 1..n {
            if part[v] != part[w] || rng.random_bool(density) {
                edges.push((v, w));
            }
        }
    }
    let mut g = Graph::from_edges(n, edges).expect("pairs are in range");
    while let Some(w) = find_witness(&g, class.pattern()) {
        let [a, b, c, d] = w.vertices;
        let (x, y) = match w.pattern {
            Pattern::H => ([a, b, c][rng.random_range(0..3)], d),
            Pattern::R => (c, d),
        };
        g = g.with_edge(x, y).expect("witness vertices are in range");
    }
    g
}
