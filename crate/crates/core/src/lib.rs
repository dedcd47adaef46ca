pub mod bitset;
pub mod class;
pub mod coloring;
pub mod deadline;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod oracle;
#[cfg(feature = "test-oracles")]
#[doc(hidden)]
pub mod oracles;
pub mod random;
pub mod recolor;
pub mod records;

pub use bitset::VertexSet;
pub use class::{
    find_h_witness, find_r_witness, find_witness, is_in_class, ClassId, InducedWitness, Pattern,
};
pub use coloring::{verify_coloring, Color, Coloring, Violation};
pub use deadline::{Deadline, TimedOut};
pub use graph::{families, make_graph, DegreeProfile, Graph, GraphError, InducedSubgraph, Vertex};
pub use graph6::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, EdgeListError, Graph6Error};
pub use oracle::{
    brooks_color, chromatic_number, greedy_color, is_k_colorable, max_clique, BrooksOutcome, CliqueResult,
};
pub use random::random_class_graph;
pub use recolor::{
    bk_color, bk_color_with, extend_coloring, kempe_component, kempe_swap, BkOptions, BkOutcome, MoveTrace,
    SchemaId,
};
