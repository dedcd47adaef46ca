//! Library half of the `bkcolor` binary: subcommand logic, the corpus hunt
//! and the random instance generator, shared with the acceptance suite.

pub mod commands;
pub mod gen;
pub mod hunt;
pub mod input;
pub mod verify;

pub use hunt::{hunt_graph, run_hunt, ClassFilter, HuntConfig, HuntReport, HuntSummary, Verdict};
pub use verify::{default_budget, verify_coloring_text, verify_trace_text, VerifyInputError, VerifyReport};
