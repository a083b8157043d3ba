//! Crown-free linear 3-graphs.
//!
//! A linear 3-graph has 3-element edges, any two of which share at most one
//! vertex. The crown is the linear 3-graph formed by one edge and three
//! pairwise disjoint edges hanging off its three vertices. This crate
//!
//! - validates linear 3-graphs and answers degree and neighborhood queries
//!   ([`graph`], [`format`]),
//! - finds crowns exhaustively and checks crown certificates ([`crown`]),
//! - extracts a crown constructively from any graph with more than
//!   `3(n - s)/2` edges, where `s` counts vertices of degree at least 6, or
//!   more than `10(n - s)/7` edges when `s <= 2` ([`proof`]),
//! - computes the maximum size of crown-free graphs at small orders and the
//!   known closed-form bounds ([`search`]).

pub mod crown;
pub mod format;
pub mod graph;
pub mod proof;
pub mod search;

pub use crown::{
    find_crown_exhaustive, find_crown_through_edge, is_crown_free, verify_crown, CrownCertificate,
    CrownDefect, Pendant,
};
pub use format::{parse_graph, write_graph, FormatError};
pub use graph::{DegreeTriple, Edge, GraphError, GrowingGraph, LinearThreeGraph, Vertex};
pub use proof::{
    decompose, weighted_sum_identity, AnalysisOutcome, Branch, Conclusion, ProofError, WeightScheme,
};
pub use search::{exact_max_edges, lower_bound_value, SearchError, SearchResult};
