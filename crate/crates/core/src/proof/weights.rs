//! Vertex weightings for the double-counting argument.
//!
//! Each scheme assigns a weight to every (vertex, edge) incidence; summing
//! `weight / degree` over an edge's three vertices gives the edge's load. The
//! loads of all edges add up to at most `n - s`, so a graph with more than
//! `(n - s) / threshold` edges must contain an edge whose load is strictly
//! below the threshold (a light edge).

use std::fmt;

use num::rational::{BigRational, Ratio};
use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::{Edge, LinearThreeGraph, HIGH_DEGREE};

pub type Weight = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightScheme {
    /// Weight 1 on vertices of degree at most 5, 0 otherwise; threshold 2/3.
    Theorem1,
    /// Degree-3 vertices weigh 21/20 on edges through a high-degree vertex
    /// and 9/10 elsewhere; threshold 7/10. Valid for `s <= 2`.
    Theorem2,
}

impl WeightScheme {
    pub fn from_number(k: u8) -> Option<WeightScheme> {
        match k {
            1 => Some(WeightScheme::Theorem1),
            2 => Some(WeightScheme::Theorem2),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            WeightScheme::Theorem1 => 1,
            WeightScheme::Theorem2 => 2,
        }
    }

    pub fn threshold(self) -> Weight {
        match self {
            WeightScheme::Theorem1 => Ratio::new(2, 3),
            WeightScheme::Theorem2 => Ratio::new(7, 10),
        }
    }

    /// Edge-count bound per unit of `n - s`: 3/2 resp. 10/7.
    pub fn bound_factor(self) -> Weight {
        self.threshold().recip()
    }

    /// The bound on the edge count, `(n - s) / threshold`.
    pub fn edge_bound(self, n: usize, s: usize) -> Weight {
        self.bound_factor() * Ratio::from_integer((n - s) as i64)
    }

    /// Whether `m` edges exceed the bound for `n` vertices and `s` vertices of
    /// high degree.
    pub fn exceeds_bound(self, m: usize, n: usize, s: usize) -> bool {
        let free = (n - s) as u128;
        let m = m as u128;
        match self {
            WeightScheme::Theorem1 => 2 * m > 3 * free,
            WeightScheme::Theorem2 => 7 * m > 10 * free,
        }
    }

    /// The weight of a vertex of degree `degree` on an edge that does or does
    /// not contain a high-degree vertex.
    pub fn chi(self, degree: usize, edge_has_high: bool) -> Weight {
        if degree >= HIGH_DEGREE {
            return Ratio::zero();
        }
        match (self, degree) {
            (WeightScheme::Theorem2, 3) if edge_has_high => Ratio::new(21, 20),
            (WeightScheme::Theorem2, 3) => Ratio::new(9, 10),
            _ => Ratio::from_integer(1),
        }
    }

    /// Load of an edge whose vertices have the given degrees (all at least 1).
    pub fn edge_load(self, degrees: [usize; 3]) -> Weight {
        let has_high = degrees.iter().any(|&d| d >= HIGH_DEGREE);
        degrees
            .iter()
            .map(|&d| {
                assert!(d > 0, "vertices of an edge have positive degree");
                self.chi(d, has_high) / Ratio::from_integer(d as i64)
            })
            .sum()
    }

    pub fn is_light(self, degrees: [usize; 3]) -> bool {
        self.edge_load(degrees) < self.threshold()
    }

    pub fn edge_load_in(self, g: &LinearThreeGraph, edge: &Edge) -> Weight {
        self.edge_load(edge.vertices().map(|v| g.deg(v)))
    }
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theorem {}", self.number())
    }
}

/// Total load of all edges, exactly.
///
/// Under [`WeightScheme::Theorem1`] every non-isolated vertex of degree at
/// most 5 contributes exactly 1, so the total is `n - s - (isolated vertices)`.
pub fn weighted_sum_identity(g: &LinearThreeGraph, scheme: WeightScheme) -> BigRational {
    g.edges()
        .iter()
        .map(|e| {
            let w = scheme.edge_load_in(g, e);
            BigRational::new(BigInt::from(*w.numer()), BigInt::from(*w.denom()))
        })
        .fold(BigRational::zero(), |acc, w| acc + w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Weight {
        Ratio::new(n, d)
    }

    #[test]
    fn chi_values() {
        let t2 = WeightScheme::Theorem2;
        assert_eq!(t2.chi(3, true), r(21, 20));
        assert_eq!(t2.chi(3, false), r(9, 10));
        for d in [1, 2, 4, 5] {
            assert_eq!(t2.chi(d, true), r(1, 1));
            assert_eq!(WeightScheme::Theorem1.chi(d, false), r(1, 1));
        }
        assert_eq!(t2.chi(6, false), r(0, 1));
        assert_eq!(WeightScheme::Theorem1.chi(9, true), r(0, 1));
    }

    #[test]
    fn loads() {
        let t1 = WeightScheme::Theorem1;
        assert_eq!(t1.edge_load([4, 5, 5]), r(13, 20));
        assert!(t1.is_light([4, 5, 5]));
        assert_eq!(t1.edge_load([4, 4, 5]), r(7, 10));
        assert!(!t1.is_light([4, 4, 5]));
        assert_eq!(t1.edge_load([2, 4, 7]), r(3, 4));
        assert!(!t1.is_light([2, 4, 7]));
        // exactly on the threshold is not light
        assert!(!WeightScheme::Theorem2.is_light([3, 5, 5]));
        assert_eq!(WeightScheme::Theorem2.edge_load([3, 4, 6]), r(3, 5));
    }

    #[test]
    fn bounds() {
        let t1 = WeightScheme::Theorem1;
        assert!(!t1.exceeds_bound(3, 2, 0));
        assert!(t1.exceeds_bound(4, 2, 0));
        assert_eq!(t1.edge_bound(9, 0), r(27, 2));
        assert_eq!(WeightScheme::Theorem2.edge_bound(9, 2), r(10, 1));
        assert!(WeightScheme::Theorem2.exceeds_bound(11, 9, 2));
        assert!(!WeightScheme::Theorem2.exceeds_bound(10, 9, 2));
    }

    #[test]
    fn identity_examples() {
        let single = LinearThreeGraph::build(3, [[0, 1, 2]]).unwrap();
        let three = BigRational::from_integer(BigInt::from(3));
        assert_eq!(
            weighted_sum_identity(&single, WeightScheme::Theorem1),
            three
        );
        assert!(weighted_sum_identity(&single, WeightScheme::Theorem2) <= three);
        let crown =
            LinearThreeGraph::build(9, [[0, 1, 2], [0, 3, 4], [1, 5, 6], [2, 7, 8]]).unwrap();
        assert_eq!(
            weighted_sum_identity(&crown, WeightScheme::Theorem1),
            BigRational::from_integer(BigInt::from(9))
        );
    }
}
