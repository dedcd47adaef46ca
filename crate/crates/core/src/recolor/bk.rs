//! Peel-and-reinsert coloring within `max(ω, Δ−1)` colors.

use super::extend::{extend_coloring, ExtendError, ExtendOptions};
use super::schema::{EngineError, SchemaId};
use super::search::SearchLimits;
use super::trace::{Move, MoveTrace};
use crate::bitset::VertexSet;
use crate::class::{is_in_class, ClassId, InducedWitness};
use crate::coloring::Coloring;
use crate::deadline::Deadline;
use crate::graph::{Graph, Vertex};
use crate::oracle::{brooks_color, exact::least_free, max_clique, max_clique_among};
use std::time::Duration;

/// Peeling stops once the residual graph has maximum degree below this.
pub const PEEL_DELTA: usize = 9;

#[derive(Debug, Clone, Default)]
pub struct BkOptions {
    pub search: SearchLimits,
    /// Cap for each exact last-resort recoloring.
    pub exact_cap: Option<Duration>,
}

/// Extension steps per schema.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchemaHistogram {
    counts: [usize; SchemaId::ALL.len()],
}

impl SchemaHistogram {
    pub fn add(&mut self, id: SchemaId) {
        self.counts[id.index()] += 1;
    }

    pub fn get(&self, id: SchemaId) -> usize {
        self.counts[id.index()]
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn merge(&mut self, other: &SchemaHistogram) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
    }

    /// Nonzero entries in schema order.
    pub fn iter(&self) -> impl Iterator<Item = (SchemaId, usize)> + '_ {
        SchemaId::ALL.into_iter().map(|id| (id, self.get(id))).filter(|&(_, n)| n > 0)
    }
}

#[derive(Debug, Clone)]
pub struct BkOutcome {
    pub coloring: Coloring,
    pub colors_used: usize,
    /// `max(ω, Δ−1)`.
    pub budget: usize,
    pub omega: usize,
    pub delta: usize,
    pub in_class: bool,
    pub witness: Option<InducedWitness>,
    /// Vertices in the order they were peeled; reinsertion runs in reverse.
    pub peeled: Vec<Vertex>,
    /// Replays from the all-uncolored coloring.
    pub trace: MoveTrace,
    pub histogram: SchemaHistogram,
}

impl BkOutcome {
    pub fn within_budget(&self) -> bool {
        self.colors_used <= self.budget && self.coloring.max_color() as usize <= self.budget
    }
}

pub fn bk_color(g: &Graph, class: ClassId) -> Result<BkOutcome, EngineError> {
    bk_color_with(g, class, &BkOptions::default())
}

/// If `ω ≥ Δ` the Brooks coloring already fits. Otherwise a maximum-degree
/// vertex of a maximum clique is peeled until the residual graph is complete
/// or has `Δ < 9`; the residual is Brooks-colored and the peeled vertices
/// are reinserted last-first with budget `max(ω, Δ−1)`. A vertex that cannot
/// be reinserted within budget takes the least free color and is counted as
/// [`SchemaId::Overflow`].
pub fn bk_color_with(g: &Graph, class: ClassId, opts: &BkOptions) -> Result<BkOutcome, EngineError> {
    let n = g.order();
    let delta = g.max_degree();
    let omega = max_clique(g).size;
    let budget = omega.max(delta.saturating_sub(1));
    let (in_class, witness) = is_in_class(g, class);

    let mut active = VertexSet::full(n);
    let mut peeled = Vec::new();
    if omega < delta {
        while let Some(u) = next_peel(g, &active) {
            active.remove(u);
            peeled.push(u);
        }
    }

    let sub = g.induced_subgraph(&active).expect("subset of the vertex range");
    let base = brooks_color(&sub.graph).coloring;
    let mut c = Coloring::uncolored(n);
    let mut trace = MoveTrace::new();
    trace.record(Move::SchemaStart(SchemaId::Base), &c);
    for (i, &v) in sub.new_to_old.iter().enumerate() {
        c.set(v, base.raw(i));
        trace.record(Move::Assign { v, color: base.raw(i) }, &c);
    }
    trace.record(Move::Commit, &c);

    let mut histogram = SchemaHistogram::default();
    for &u in peeled.iter().rev() {
        let eo = ExtendOptions {
            search: opts.search,
            deadline: Deadline::from_option(opts.exact_cap),
            delta: Some(delta),
            clique: None,
        };
        match extend_coloring(g, u, &c, budget, &eo) {
            Ok(ext) => {
                histogram.add(ext.schema);
                trace.extend(ext.trace);
                c = ext.coloring;
            }
            Err(ExtendError::NoExtension { .. } | ExtendError::TimedOut) => {
                histogram.add(SchemaId::Overflow);
                let color = least_free(g, &c, u);
                trace.record(Move::SchemaStart(SchemaId::Overflow), &c);
                c.set(u, color);
                trace.record(Move::Assign { v: u, color }, &c);
                trace.record(Move::Commit, &c);
            }
            Err(ExtendError::Engine(e)) => return Err(e),
            Err(e @ (ExtendError::TargetColored(_) | ExtendError::OutOfRange { .. })) => {
                unreachable!("peeled vertices are uncolored and in range: {e}")
            }
        }
    }

    Ok(BkOutcome {
        colors_used: c.num_colors(),
        coloring: c,
        budget,
        omega,
        delta,
        in_class,
        witness,
        peeled,
        trace,
        histogram,
    })
}

/// Maximum-degree vertex of a maximum clique of the residual, lowest index
/// first, or `None` once the residual is complete or has `Δ < 9`.
fn next_peel(g: &Graph, active: &VertexSet) -> Option<Vertex> {
    let deg = |v: Vertex| g.neighbor_set(v).intersection_len(active);
    let max_deg = active.iter().map(deg).max().unwrap_or(0);
    if max_deg < PEEL_DELTA || max_deg + 1 == active.len() && g.is_clique(active) {
        return None;
    }
    let q = max_clique_among(g, active).witness;
    q.iter().max_by_key(|&v| (deg(v), std::cmp::Reverse(v)))
}
