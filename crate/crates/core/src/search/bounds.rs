//! Closed-form bounds on the crown Turán number.

use num::rational::Ratio;
use serde::Serialize;

use super::SearchError;

/// `6 * floor((n - 3) / 4) + epsilon`, the known construction size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LowerBoundValue {
    pub n: u64,
    pub epsilon: u64,
    pub value: u64,
}

pub fn lower_bound_value(n: u64) -> Result<LowerBoundValue, SearchError> {
    if n < 3 {
        return Err(SearchError::TooSmall(n as usize));
    }
    let epsilon = match (n - 3) % 4 {
        0 | 1 => 0,
        2 => 1,
        _ => 3,
    };
    Ok(LowerBoundValue {
        n,
        epsilon,
        value: 6 * ((n - 3) / 4) + epsilon,
    })
}

/// `3 (n - 3) / 2`, the upper bound for large `n`; meaningful for `n >= 3`.
pub fn corollary_bound(n: u64) -> Ratio<i64> {
    Ratio::new(3 * (n as i64 - 3), 2)
}

/// Largest integer strictly below `5n / 3`.
pub fn below_five_thirds(n: u64) -> u64 {
    (5 * n).div_ceil(3) - 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsRow {
    pub n: u64,
    pub lower: u64,
    pub epsilon: u64,
    /// Exact rational, e.g. `"27/2"`.
    pub corollary: String,
    pub two_n: u64,
    pub below_five_thirds: u64,
}

pub fn bounds_table(from: u64, to: u64) -> Result<Vec<BoundsRow>, SearchError> {
    (from..=to)
        .map(|n| {
            let lower = lower_bound_value(n)?;
            Ok(BoundsRow {
                n,
                lower: lower.value,
                epsilon: lower.epsilon,
                corollary: corollary_bound(n).to_string(),
                two_n: 2 * n,
                below_five_thirds: below_five_thirds(n),
            })
        })
        .collect()
}
