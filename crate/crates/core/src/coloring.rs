//! Vertex colorings and the properness checker.

use crate::graph::{Graph, Vertex};
use std::collections::BTreeSet;
use std::fmt;

/// Colors are `1..=k`; 0 is reserved for "uncolored".
pub type Color = u32;

const UNCOLORED: Color = 0;

/// A partial or total map from vertices to colors.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    /// All of `0..n` uncolored.
    pub fn uncolored(n: usize) -> Self {
        Self { colors: vec![UNCOLORED; n] }
    }

    /// From raw colors, where 0 means uncolored.
    pub fn from_raw(colors: Vec<Color>) -> Self {
        Self { colors }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> Option<Color> {
        match self.colors[v] {
            UNCOLORED => None,
            c => Some(c),
        }
    }

    /// Raw color of `v`, 0 when uncolored.
    #[inline]
    pub fn raw(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    #[inline]
    pub fn set(&mut self, v: Vertex, color: Color) {
        assert!(color != UNCOLORED, "color 0 is reserved");
        self.colors[v] = color;
    }

    #[inline]
    pub fn clear(&mut self, v: Vertex) {
        self.colors[v] = UNCOLORED;
    }

    #[inline]
    pub fn is_colored(&self, v: Vertex) -> bool {
        self.colors[v] != UNCOLORED
    }

    pub fn as_raw(&self) -> &[Color] {
        &self.colors
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c != UNCOLORED)
    }

    /// Largest color in use, 0 when nothing is colored.
    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(UNCOLORED)
    }

    /// Number of distinct colors in use.
    pub fn num_colors(&self) -> usize {
        self.colors.iter().filter(|&&c| c != UNCOLORED).collect::<BTreeSet<_>>().len()
    }

    /// Whether adjacent colored vertices always differ.
    pub fn is_proper_on(&self, g: &Graph) -> bool {
        g.edges().all(|(v, w)| {
            let (a, b) = (self.colors[v], self.colors[w]);
            a == UNCOLORED || a != b
        })
    }

    /// Whether `v` can take `color` without clashing with a colored neighbor.
    pub fn fits(&self, g: &Graph, v: Vertex, color: Color) -> bool {
        g.neighbors(v).iter().all(|&w| self.colors[w] != color)
    }

    /// Renumbers colors to `1..=k` in order of first appearance by vertex.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if c == UNCOLORED {
                    return UNCOLORED;
                }
                let next = map.len() as Color + 1;
                *map.entry(c).or_insert(next)
            })
            .collect();
        Coloring { colors }
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring{:?}", self.colors)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// One reason a coloring fails [`verify_coloring`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    /// The coloring covers a different number of vertices than the graph.
    Length {
        graph: usize,
        coloring: usize,
    },
    Uncolored(Vertex),
    /// Both endpoints of an edge share a color.
    Conflict {
        v: Vertex,
        w: Vertex,
        color: Color,
    },
    /// A color outside `1..=budget` is used.
    Palette {
        color: Color,
        budget: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Length { graph, coloring } => {
                write!(f, "coloring has {coloring} entries for {graph} vertices")
            }
            Violation::Uncolored(v) => write!(f, "vertex {v} uncolored"),
            Violation::Conflict { v, w, color } => write!(f, "edge {v}-{w} both colored {color}"),
            Violation::Palette { color, budget } => write!(f, "color {color} exceeds budget {budget}"),
        }
    }
}

/// Empty iff `c` is total, proper and uses only colors `1..=budget`.
pub fn verify_coloring(g: &Graph, c: &Coloring, budget: usize) -> Vec<Violation> {
    if g.order() != c.len() {
        return vec![Violation::Length { graph: g.order(), coloring: c.len() }];
    }
    let mut out = Vec::new();
    out.extend((0..c.len()).filter(|&v| !c.is_colored(v)).map(Violation::Uncolored));
    out.extend(g.edges().filter_map(|(v, w)| {
        let color = c.raw(v);
        (color != UNCOLORED && color == c.raw(w)).then_some(Violation::Conflict { v, w, color })
    }));
    let over: BTreeSet<Color> = c.as_raw().iter().copied().filter(|&col| col as usize > budget).collect();
    out.extend(over.into_iter().map(|color| Violation::Palette { color, budget }));
    out
}
