//! Exact ground-truth solvers and the Brooks base-case colorer.

pub mod brooks;
pub mod clique;
pub mod exact;

pub use brooks::{brooks_color, BrooksException, BrooksOutcome};
pub use clique::{max_clique, max_clique_among, max_clique_within, CliqueResult};
pub use exact::{
    chromatic_number, chromatic_number_within, greedy_color, is_k_colorable, is_k_colorable_within,
    OrderError,
};
