//! Independent checking of a coloring certificate against a graph.

use bkcolor_core::recolor::{replay, MoveTrace, TraceParseError};
use bkcolor_core::{max_clique, verify_coloring, Color, Coloring, Graph};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyInputError {
    #[error("trace {0}")]
    Trace(#[from] TraceParseError),
    #[error("coloring token {position}: {token:?} is not a color")]
    Coloring { position: usize, token: String },
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// `None` when replay stopped before producing a coloring.
    pub coloring: Option<Coloring>,
    pub budget: usize,
    pub violations: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn colors_used(&self) -> usize {
        self.coloring.as_ref().map_or(0, Coloring::num_colors)
    }
}

/// `max(ω, Δ−1)`.
pub fn default_budget(g: &Graph) -> usize {
    max_clique(g).size.max(g.max_degree().saturating_sub(1))
}

/// Replays `text` from the all-uncolored coloring and checks the result is
/// total, proper and within `budget`.
pub fn verify_trace_text(g: &Graph, text: &str, budget: usize) -> Result<VerifyReport, VerifyInputError> {
    let trace = MoveTrace::parse(text)?;
    Ok(match replay(g, &Coloring::uncolored(g.order()), &trace) {
        Ok(c) => check(g, c, budget),
        Err(e) => VerifyReport { coloring: None, budget, violations: vec![e.to_string()] },
    })
}

/// Checks a whitespace-separated color list, `0` meaning uncolored.
pub fn verify_coloring_text(g: &Graph, text: &str, budget: usize) -> Result<VerifyReport, VerifyInputError> {
    let colors = text
        .split_whitespace()
        .enumerate()
        .map(|(position, token)| {
            token
                .parse::<Color>()
                .map_err(|_| VerifyInputError::Coloring { position, token: token.to_string() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(check(g, Coloring::from_raw(colors), budget))
}

fn check(g: &Graph, c: Coloring, budget: usize) -> VerifyReport {
    let violations = verify_coloring(g, &c, budget).iter().map(ToString::to_string).collect();
    VerifyReport { coloring: Some(c), budget, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bkcolor_core::graph::families::*;

    #[test]
    fn trace_round_trip_and_tamper() {
        let g = complete(4);
        let text = "schema BASE\nassign 0 1\nassign 1 2\nassign 2 3\nassign 3 4\ncommit\n";
        let ok = verify_trace_text(&g, text, 4).unwrap();
        assert!(ok.passed());
        assert_eq!(ok.colors_used(), 4);
        let bad = verify_trace_text(&g, &text.replace("assign 3 4", "assign 3 1"), 4).unwrap();
        assert!(!bad.passed());
        assert!(bad.violations[0].contains("edge 0-3"), "{:?}", bad.violations);
    }

    #[test]
    fn empty_trace_is_not_total() {
        let r = verify_trace_text(&cycle(5), "", 3).unwrap();
        assert_eq!(r.violations.len(), 5);
        assert!(r.violations[0].contains("uncolored"));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            verify_trace_text(&cycle(5), "schema S0\nassign x 1\n", 3),
            Err(VerifyInputError::Trace(TraceParseError::Malformed { line: 2, .. }))
        ));
        assert_eq!(
            verify_coloring_text(&cycle(5), "1 2 red", 3).unwrap_err(),
            VerifyInputError::Coloring { position: 2, token: "red".into() }
        );
    }

    #[test]
    fn coloring_budget() {
        let g = cycle(5);
        assert!(verify_coloring_text(&g, "1 2 1 2 3", 3).unwrap().passed());
        assert!(!verify_coloring_text(&g, "1 2 1 2 3", 2).unwrap().passed());
        assert_eq!(default_budget(&g), 2);
        assert_eq!(default_budget(&complete(10)), 10);
    }
}
