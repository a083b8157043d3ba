//! Seeded random linear 3-graphs.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::crown::find_crown_through_edge;
use crate::graph::{Edge, GrowingGraph, LinearThreeGraph, Vertex};

/// Consecutive rejected samples after which generation stops.
pub const REJECTION_BUDGET: usize = 5_000;

/// Random crown-free linear 3-graph: samples triples uniformly and keeps
/// each one that preserves linearity and does not complete a crown. Stops
/// at `target_edges` or after [`REJECTION_BUDGET`] consecutive rejections.
pub fn random_crown_free(n: usize, seed: u64, target_edges: Option<usize>) -> LinearThreeGraph {
    grow(n, seed, target_edges, true)
}

/// Same as [`random_crown_free`] without the crown test.
pub fn random_linear(n: usize, seed: u64, target_edges: Option<usize>) -> LinearThreeGraph {
    grow(n, seed, target_edges, false)
}

fn grow(n: usize, seed: u64, target_edges: Option<usize>, crown_free: bool) -> LinearThreeGraph {
    let mut g = GrowingGraph::new(n);
    if n < 3 {
        return g.freeze();
    }
    let target = target_edges.unwrap_or(usize::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rejected = 0;
    while g.edges().len() < target && rejected < REJECTION_BUDGET {
        let picked = sample(&mut rng, n, 3);
        let triple = [0, 1, 2].map(|i| picked.index(i) as Vertex);
        let edge = Edge::new(triple).expect("sampled indices are distinct");
        if !g.accepts(&edge) {
            rejected += 1;
            continue;
        }
        let index = g.push(edge);
        if crown_free && find_crown_through_edge(&g, index).is_some() {
            g.pop();
            rejected += 1;
            continue;
        }
        rejected = 0;
    }
    g.freeze()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crown::is_crown_free;

    #[test]
    fn zero_target_is_empty() {
        let g = random_crown_free(12, 1, Some(0));
        assert_eq!((g.n(), g.edge_count()), (12, 0));
    }

    #[test]
    fn outputs_are_crown_free_and_seeded() {
        for seed in 0..20 {
            let g = random_crown_free(15, seed, None);
            assert!(is_crown_free(&g));
            assert_eq!(g, random_crown_free(15, seed, None));
        }
        assert_eq!(random_linear(9, 3, Some(5)).edge_count(), 5);
    }
}
