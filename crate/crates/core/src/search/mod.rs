//! Extremal values of the crown Turán number: closed-form bounds, exact
//! search at small orders, and seeded random instances.

mod bounds;
mod orderly;
mod random;

use thiserror::Error;

pub use bounds::{
    below_five_thirds, bounds_table, corollary_bound, lower_bound_value, BoundsRow, LowerBoundValue,
};
pub use orderly::{
    enumerate_linear, exact_max_edges, exact_max_edges_with, SearchOptions, SearchResult,
};
pub use random::{random_crown_free, random_linear, REJECTION_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("n = {0} is too small, need at least 3 vertices")]
    TooSmall(usize),
}
