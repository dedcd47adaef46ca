use crate::bitset::VertexSet;
use crate::deadline::{Deadline, Ticker, TimedOut};
use crate::graph::{Graph, Vertex};

/// A maximum clique and its size ω.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: VertexSet,
}

/// Exact maximum clique.
pub fn max_clique(g: &Graph) -> CliqueResult {
    max_clique_within(g, &Deadline::NONE).expect("no deadline")
}

/// Branch and bound over candidate sets; a greedy coloring of the candidates
/// bounds how far each branch can still grow.
pub fn max_clique_within(g: &Graph, deadline: &Deadline) -> Result<CliqueResult, TimedOut> {
    clique_among(g, VertexSet::full(g.order()), deadline)
}

/// Maximum clique of the subgraph induced by `among`.
pub fn max_clique_among(g: &Graph, among: &VertexSet) -> CliqueResult {
    clique_among(g, among.clone(), &Deadline::NONE).expect("no deadline")
}

fn clique_among(g: &Graph, among: VertexSet, deadline: &Deadline) -> Result<CliqueResult, TimedOut> {
    let n = g.order();
    let mut search = CliqueSearch { g, best: Vec::new(), current: Vec::new(), ticker: Ticker::new(deadline) };
    search.expand(among)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(CliqueResult { size: best.len(), witness: VertexSet::from_iter(n, best) })
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<Vertex>,
    current: Vec<Vertex>,
    ticker: Ticker<'a>,
}

impl CliqueSearch<'_> {
    /// Greedy sequential coloring of `cand`: vertices with their color number,
    /// in nondecreasing color order.
    fn color_bound(&self, cand: &VertexSet) -> Vec<(Vertex, usize)> {
        let mut order = Vec::with_capacity(cand.len());
        let mut uncolored = cand.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut open = uncolored.clone();
            while let Some(v) = open.first() {
                open.remove(v);
                open.difference_with(self.g.neighbor_set(v));
                uncolored.remove(v);
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&mut self, mut cand: VertexSet) -> Result<(), TimedOut> {
        self.ticker.tick()?;
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return Ok(());
        }
        let order = self.color_bound(&cand);
        for &(v, bound) in order.iter().rev() {
            if self.current.len() + bound <= self.best.len() {
                return Ok(());
            }
            self.current.push(v);
            let next = cand.intersection(self.g.neighbor_set(v));
            self.expand(next)?;
            self.current.pop();
            cand.remove(v);
        }
        Ok(())
    }
}
