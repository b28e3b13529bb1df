//! Total edge product cordial (TEPC) labelings of corona graphs.
//!
//! An edge labeling over {0,1} induces a vertex labeling by the product of
//! incident edge labels; it is TEPC when the 0-labeled and 1-labeled elements
//! (vertices plus edges) are balanced to within one. This crate provides:
//!
//! - generators for the graph families involved: paths, cycles, fans, wheels,
//!   the paw graph, and general corona products ([`graph`]);
//! - the induced labeling and balance verdict machinery ([`labeling`]);
//! - constructive balanced labelings for P_n ∘ P_m and P_n ∘ C_m with their
//!   closed-form predicted tallies ([`labelers`]);
//! - an exhaustive Gray-walk search oracle that finds, counts, or refutes
//!   balanced labelings on small graphs ([`search`]);
//! - JSON document formats and DOT export ([`doc`], [`dot`]).

pub mod doc;
pub mod dot;
pub mod error;
pub mod graph;
pub mod labelers;
pub mod labeling;
pub mod search;

pub use error::{Error, Result};
pub use graph::{
    build_cycle, build_fan, build_path, build_paw, build_wheel, corona, isomorphic_small,
    CoronaLayout, Graph, Role,
};
pub use labelers::{
    case_of, label_corona_path_cycle, label_corona_path_path, label_fan, label_wheel,
    predicted_tally, CaseTag, CaseVariant, Family, FormulaSource, PredictedTally,
};
pub use labeling::{induced_vertex_labels, is_tepc, tally, EdgeLabeling, Tally, VertexLabeling};
pub use search::{
    certify_not_tepc, count_tepc, count_tepc_with, find_tepc, find_tepc_with, IncrementalTally,
    SearchOptions, SearchReport, DEFAULT_EDGE_BUDGET,
};
