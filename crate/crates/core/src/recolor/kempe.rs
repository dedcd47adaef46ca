//! Kempe components: maximal connected sets of vertices colored `i` or `j`.

use crate::bitset::VertexSet;
use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, Vertex};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempeComponent {
    pub colors: (Color, Color),
    pub members: VertexSet,
    pub anchor: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KempeError {
    #[error("vertex {vertex} is not colored {i} or {j}")]
    NotOnChain { vertex: Vertex, i: Color, j: Color },
    #[error("kempe colors must differ, got {0} twice")]
    SameColors(Color),
    #[error("component anchored at {0} no longer matches the coloring")]
    Stale(Vertex),
}

/// The `(i, j)` component containing `v`.
pub fn kempe_component(
    g: &Graph,
    c: &Coloring,
    v: Vertex,
    i: Color,
    j: Color,
) -> Result<KempeComponent, KempeError> {
    if i == j {
        return Err(KempeError::SameColors(i));
    }
    let cv = c.raw(v);
    if cv != i && cv != j {
        return Err(KempeError::NotOnChain { vertex: v, i, j });
    }
    Ok(KempeComponent { colors: (i, j), members: chain(g, c, v, i, j), anchor: v })
}

pub(crate) fn chain(g: &Graph, c: &Coloring, v: Vertex, i: Color, j: Color) -> VertexSet {
    let mut members = VertexSet::new(g.order());
    members.insert(v);
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for &w in g.neighbors(x) {
            let cw = c.raw(w);
            if (cw == i || cw == j) && members.insert(w) {
                stack.push(w);
            }
        }
    }
    members
}

/// Exchanges the component's two colors on its members.
///
/// Fails if the component is not the current maximal component of its anchor.
pub fn kempe_swap(g: &Graph, c: &Coloring, comp: &KempeComponent) -> Result<Coloring, KempeError> {
    let (i, j) = comp.colors;
    match kempe_component(g, c, comp.anchor, i, j) {
        Ok(fresh) if fresh.members == comp.members => {}
        _ => return Err(KempeError::Stale(comp.anchor)),
    }
    let mut out = c.clone();
    swap_members(&mut out, &comp.members, i, j);
    Ok(out)
}

pub(crate) fn swap_members(c: &mut Coloring, members: &VertexSet, i: Color, j: Color) {
    for v in members.iter() {
        let next = if c.raw(v) == i { j } else { i };
        c.set(v, next);
    }
}
