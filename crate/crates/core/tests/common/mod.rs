#![allow(dead_code)]

use bkcolor_core::{Coloring, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for w in v + 1..n {
            if rng.random_bool(p) {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Greedy coloring in a random vertex order.
pub fn random_greedy(rng: &mut ChaCha8Rng, g: &Graph) -> Coloring {
    let mut order: Vec<usize> = g.vertices().collect();
    order.shuffle(rng);
    bkcolor_core::greedy_color(g, &order).unwrap()
}
