//! Recoloring engine: Kempe machinery, the schema catalog, single-vertex
//! extension and the peel-and-reinsert colorer.

pub mod bk;
pub mod context;
pub mod extend;
pub mod kempe;
pub mod palette;
pub mod schema;
pub mod search;
pub mod trace;

pub use bk::{bk_color, bk_color_with, BkOptions, BkOutcome, SchemaHistogram, PEEL_DELTA};
pub use context::{build_extension_context, ContextError, ExtensionContext, RepeatPair};
pub use extend::{extend_coloring, ExtendError, ExtendOptions, Extension};
pub use kempe::{kempe_component, kempe_swap, KempeComponent, KempeError};
pub use palette::{neighborhood_palette, Palette};
pub use schema::{apply_schema, EngineError, SchemaId};
pub use search::SearchLimits;
pub use trace::{replay, Move, MoveTrace, ReplayError, TraceParseError};
