//! Exhaustive sweeps over small graphs: isomorph-free generation, graph6 and
//! edge-list I/O, and verification reports.

mod canon;
mod edgelist;
mod generate;
mod graph6;
mod verify;

pub use canon::{
    canonical_form, canonical_form_with_limit, canonical_graph, CanonicalForm, CANON_HARD_LIMIT,
    DEFAULT_CANON_LIMIT,
};
pub use edgelist::{emit_edge_list, emit_inline_edges, parse_edge_list};
pub use generate::{
    generate_all, generate_all_with_limit, generate_connected, generate_connected_with_limit,
    DEFAULT_GENERATOR_LIMIT,
};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_lines, GRAPH6_HEADER};
pub use verify::{
    verify_conjecture, verify_identities, ExtremalHit, GraphRecord, GraphSource, InputError,
    VerificationReport, Violation,
};
