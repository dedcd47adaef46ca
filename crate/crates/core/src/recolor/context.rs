use super::palette::{neighborhood_palette, Palette};
use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, Vertex};
use crate::oracle::CliqueResult;
use thiserror::Error;

/// The two neighbors of `u` sharing the one repeated color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepeatPair {
    pub color: Color,
    pub x: Vertex,
    pub y: Vertex,
}

/// Everything a schema needs to know about the vertex being reinserted.
#[derive(Debug, Clone)]
pub struct ExtensionContext {
    pub u: Vertex,
    pub budget: usize,
    pub delta: usize,
    pub clique: Option<CliqueResult>,
    pub palette: Palette,
    /// `reps[k]`: the lowest neighbor of `u` colored `k`.
    pub reps: Vec<Option<Vertex>>,
    /// `unique[k]`: `reps[k]` is the only neighbor colored `k`.
    pub unique: Vec<bool>,
    pub repeat: Option<RepeatPair>,
    /// Vertices outside the closed neighborhood of `u` carrying the repeat color.
    pub outside: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error("vertex {0} is already colored")]
    TargetColored(Vertex),
    #[error("color {0} is absent from the neighborhood, nothing to repair")]
    MissingColor(Color),
}

impl ExtensionContext {
    pub fn rep(&self, k: Color) -> Option<Vertex> {
        self.reps.get(k as usize).copied().flatten()
    }

    pub fn is_unique(&self, k: Color) -> bool {
        self.unique.get(k as usize).copied().unwrap_or(false)
    }

    /// Unique colors in increasing order.
    pub fn unique_colors(&self) -> impl Iterator<Item = Color> + '_ {
        (1..self.unique.len()).filter(|&k| self.unique[k]).map(|k| k as Color)
    }

    pub fn outside_vertex(&self) -> Option<Vertex> {
        self.outside.first().copied()
    }

    /// Like [`build_extension_context`] but tolerates colors absent from
    /// the neighborhood, which S0 needs. `u` must be uncolored.
    pub fn observe(
        g: &Graph,
        c: &Coloring,
        u: Vertex,
        budget: usize,
        delta: usize,
        clique: Option<CliqueResult>,
    ) -> ExtensionContext {
        debug_assert!(!c.is_colored(u));
        let palette = neighborhood_palette(g, c, u, budget);
        let mut reps = vec![None; budget + 1];
        for &w in g.neighbors(u) {
            let k = c.raw(w) as usize;
            if k != 0 && k <= budget && reps[k].is_none() {
                reps[k] = Some(w);
            }
        }
        let unique: Vec<bool> = palette.counts.iter().map(|&n| n == 1).collect();
        let repeated: Vec<Color> = palette.repeated().collect();
        let repeat = match repeated[..] {
            [color] if palette.counts[color as usize] == 2 => {
                let mut pair = g.neighbors(u).iter().copied().filter(|&w| c.raw(w) == color);
                let x = pair.next().expect("two carriers");
                let y = pair.next().expect("two carriers");
                Some(RepeatPair { color, x, y })
            }
            _ => None,
        };
        let outside = match repeat {
            Some(p) => {
                (0..g.order()).filter(|&w| w != u && c.raw(w) == p.color && !g.has_edge(u, w)).collect()
            }
            None => Vec::new(),
        };
        ExtensionContext { u, budget, delta, clique, palette, reps, unique, repeat, outside }
    }
}

/// Builds the context for reinserting the uncolored vertex `u` with colors
/// `1..=budget`. Every budget color must already appear around `u`.
pub fn build_extension_context(
    g: &Graph,
    c: &Coloring,
    u: Vertex,
    budget: usize,
    delta: usize,
    clique: Option<CliqueResult>,
) -> Result<ExtensionContext, ContextError> {
    if c.is_colored(u) {
        return Err(ContextError::TargetColored(u));
    }
    let ctx = ExtensionContext::observe(g, c, u, budget, delta, clique);
    if let Some(&k) = ctx.palette.missing.first() {
        return Err(ContextError::MissingColor(k));
    }
    Ok(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn all_distinct() {
        let g = star(4);
        let c = Coloring::from_raw(vec![0, 1, 2, 3, 4]);
        let ctx = build_extension_context(&g, &c, 0, 4, 4, None).unwrap();
        assert!((1..=4).all(|k| ctx.is_unique(k)));
        assert!(ctx.repeat.is_none());
        assert_eq!(ctx.rep(3), Some(3));
    }

    #[test]
    fn k10_minus_edge_has_the_repeat_pair() {
        let g = complete_multipartite(&[1, 1, 1, 1, 1, 1, 1, 1, 2]);
        assert!(!g.has_edge(8, 9));
        let c = Coloring::from_raw(vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 8]);
        let ctx = build_extension_context(&g, &c, 0, 8, 9, None).unwrap();
        assert_eq!(ctx.repeat, Some(RepeatPair { color: 8, x: 8, y: 9 }));
        assert_eq!(ctx.unique_colors().count(), 7);
        assert!(ctx.outside.is_empty());
    }

    #[test]
    fn errors() {
        let g = star(2);
        let c = Coloring::from_raw(vec![0, 1, 1]);
        assert_eq!(
            build_extension_context(&g, &c, 0, 2, 2, None).unwrap_err(),
            ContextError::MissingColor(2)
        );
        let c = Coloring::from_raw(vec![3, 1, 2]);
        assert_eq!(
            build_extension_context(&g, &c, 0, 2, 2, None).unwrap_err(),
            ContextError::TargetColored(0)
        );
    }
}
