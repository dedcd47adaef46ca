//! Reinserting one vertex into a coloring without exceeding the budget.

use super::context::ExtensionContext;
use super::schema::{apply_schema, execute, EngineError, Plan, SchemaId};
use super::search::{kempe_search, SearchLimits};
use super::trace::{Move, MoveTrace};
use crate::bitset::VertexSet;
use crate::coloring::Coloring;
use crate::deadline::Deadline;
use crate::graph::{Graph, Vertex};
use crate::oracle::{is_k_colorable_within, CliqueResult};
use thiserror::Error;

#[derive(Debug, Clone)]
pub struct ExtendOptions {
    pub search: SearchLimits,
    /// Cap for the exact last resort.
    pub deadline: Deadline,
    /// Δ of the input graph, if known; defaults to Δ of `g`.
    pub delta: Option<usize>,
    pub clique: Option<CliqueResult>,
}

impl Default for ExtendOptions {
    fn default() -> Self {
        Self { search: SearchLimits::default(), deadline: Deadline::NONE, delta: None, clique: None }
    }
}

#[derive(Debug, Clone)]
pub struct Extension {
    pub coloring: Coloring,
    pub trace: MoveTrace,
    pub schema: SchemaId,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("vertex {0} is already colored")]
    TargetColored(Vertex),
    #[error("vertex {u} out of range")]
    OutOfRange { u: Vertex },
    /// The exact solver certified that the colored part plus `u` needs more
    /// than `budget` colors.
    #[error("no coloring of the inserted vertices with {budget} colors exists")]
    NoExtension { budget: usize },
    #[error("exact recoloring timed out")]
    TimedOut,
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Colors the uncolored vertex `u` with at most `budget` colors, recoloring
/// others as needed. Vertices other than `u` left uncolored in `c` count as
/// not yet inserted and are ignored.
///
/// Tries the catalog S0–S5 in order, then the bounded search F, then exact
/// recoloring Z.
pub fn extend_coloring(
    g: &Graph,
    u: Vertex,
    c: &Coloring,
    budget: usize,
    opts: &ExtendOptions,
) -> Result<Extension, ExtendError> {
    if u >= g.order() {
        return Err(ExtendError::OutOfRange { u });
    }
    if c.is_colored(u) {
        return Err(ExtendError::TargetColored(u));
    }
    let delta = opts.delta.unwrap_or_else(|| g.max_degree());
    let ctx = ExtensionContext::observe(g, c, u, budget, delta, opts.clique.clone());
    for schema in SchemaId::CATALOG {
        if let Some((coloring, trace)) = apply_schema(g, c, &ctx, schema)? {
            return Ok(Extension { coloring, trace, schema });
        }
    }
    if let Some(plan) = kempe_search(g, c, u, budget, opts.search) {
        let (coloring, trace) = execute(g, c, u, budget, SchemaId::F, plan)?;
        return Ok(Extension { coloring, trace, schema: SchemaId::F });
    }
    let plan = exact_plan(g, c, u, budget, &opts.deadline)?;
    let (coloring, trace) = execute(g, c, u, budget, SchemaId::Z, plan)?;
    Ok(Extension { coloring, trace, schema: SchemaId::Z })
}

/// Recolors all inserted vertices and `u` from scratch.
fn exact_plan(
    g: &Graph,
    c: &Coloring,
    u: Vertex,
    budget: usize,
    deadline: &Deadline,
) -> Result<Plan, ExtendError> {
    let keep = VertexSet::from_iter(g.order(), g.vertices().filter(|&v| v == u || c.is_colored(v)));
    let sub = g.induced_subgraph(&keep).expect("subset of the vertex range");
    let found = is_k_colorable_within(&sub.graph, budget, deadline)
        .map_err(|_| ExtendError::TimedOut)?
        .ok_or(ExtendError::NoExtension { budget })?;
    Ok(sub
        .new_to_old
        .iter()
        .enumerate()
        .filter(|&(i, &v)| found.raw(i) != c.raw(v))
        .map(|(i, &v)| Move::Assign { v, color: found.raw(i) })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_coloring;
    use crate::graph::families::*;

    #[test]
    fn low_degree_is_direct() {
        let g = star(3);
        let c = Coloring::from_raw(vec![0, 1, 2, 3]);
        let e = extend_coloring(&g, 0, &c, 4, &ExtendOptions::default()).unwrap();
        assert_eq!(e.schema, SchemaId::S0);
        assert_eq!(e.coloring.raw(0), 4);
    }

    #[test]
    fn k10_takes_the_tenth_color() {
        let g = complete(10);
        let c = Coloring::from_raw((0..10).collect());
        let e = extend_coloring(&g, 0, &c, 10, &ExtendOptions::default()).unwrap();
        assert_eq!(e.schema, SchemaId::S0);
        assert!(verify_coloring(&g, &e.coloring, 10).is_empty());
    }

    #[test]
    fn impossible_budget_is_certified() {
        let g = complete(4);
        let c = Coloring::from_raw(vec![0, 1, 2, 3]);
        assert_eq!(
            extend_coloring(&g, 0, &c, 3, &ExtendOptions::default()).unwrap_err(),
            ExtendError::NoExtension { budget: 3 }
        );
    }

    #[test]
    fn preconditions() {
        let g = path(2);
        let c = Coloring::from_raw(vec![1, 0]);
        let opts = ExtendOptions::default();
        assert_eq!(extend_coloring(&g, 0, &c, 2, &opts).unwrap_err(), ExtendError::TargetColored(0));
        assert_eq!(extend_coloring(&g, 5, &c, 2, &opts).unwrap_err(), ExtendError::OutOfRange { u: 5 });
    }
}
