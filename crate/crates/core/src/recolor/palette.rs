use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, Vertex};

/// Colors around a vertex `u`, indexed by color `1..=budget`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    /// `counts[k]`: neighbors of `u` colored `k`; index 0 is unused.
    pub counts: Vec<usize>,
    /// Colors in `1..=budget` absent from the closed neighborhood of `u`.
    pub missing: Vec<Color>,
    /// `unique[k]`: the only neighbor colored `k`, if exactly one exists.
    pub unique: Vec<Option<Vertex>>,
}

impl Palette {
    pub fn is_unique(&self, k: Color) -> bool {
        self.unique.get(k as usize).is_some_and(Option::is_some)
    }

    /// Colors carried by two or more neighbors.
    pub fn repeated(&self) -> impl Iterator<Item = Color> + '_ {
        (1..self.counts.len()).filter(|&k| self.counts[k] >= 2).map(|k| k as Color)
    }
}

/// Neighbor colors of `u` against a palette of `budget` colors. Colors above
/// the budget are ignored.
pub fn neighborhood_palette(g: &Graph, c: &Coloring, u: Vertex, budget: usize) -> Palette {
    let mut counts = vec![0; budget + 1];
    let mut unique = vec![None; budget + 1];
    for &w in g.neighbors(u) {
        let k = c.raw(w) as usize;
        if k != 0 && k <= budget {
            counts[k] += 1;
            unique[k] = if counts[k] == 1 { Some(w) } else { None };
        }
    }
    let own = c.raw(u) as usize;
    let missing = (1..=budget).filter(|&k| counts[k] == 0 && k != own).map(|k| k as Color).collect();
    Palette { counts, missing, unique }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn star_examples() {
        let g = star(3);
        let c = Coloring::from_raw(vec![0, 1, 2, 3]);
        let p = neighborhood_palette(&g, &c, 0, 4);
        assert_eq!(p.missing, vec![4]);
        assert!((1..=3).all(|k| p.is_unique(k)));

        let c = Coloring::from_raw(vec![0, 1, 1, 3]);
        let p = neighborhood_palette(&g, &c, 0, 4);
        assert!(!p.is_unique(1));
        assert_eq!(p.repeated().collect::<Vec<_>>(), vec![1]);
        assert_eq!(p.missing, vec![2, 4]);
    }

    #[test]
    fn own_color_is_not_missing() {
        let g = star(2);
        let c = Coloring::from_raw(vec![3, 1, 2]);
        assert!(neighborhood_palette(&g, &c, 0, 3).missing.is_empty());
    }
}
