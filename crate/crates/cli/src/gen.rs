//! Seeded random class instances subject to a degree filter.

use bkcolor_core::{random_class_graph, ClassId, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::ops::RangeInclusive;

#[derive(Debug, Clone)]
pub struct GenSpec {
    pub class: ClassId,
    pub order: RangeInclusive<usize>,
    pub min_delta: usize,
    pub seed: u64,
}

/// Gives up on an instance after this many rejected draws.
pub const MAX_ATTEMPTS: usize = 10_000;

/// Instance `i` of the stream: order and density are drawn per attempt, and
/// draws are repeated until `Δ ≥ min_delta`. `None` if the filter cannot be
/// met in [`MAX_ATTEMPTS`] draws.
pub fn instance(spec: &GenSpec, i: u64) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(i);
    for _ in 0..MAX_ATTEMPTS {
        let n = rng.random_range(spec.order.clone());
        let density = rng.random::<f64>();
        let g = random_class_graph(n, spec.class, rng.random(), density);
        if g.max_degree() >= spec.min_delta {
            return Some(g);
        }
    }
    None
}
