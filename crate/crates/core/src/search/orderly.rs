//! Orderly generation of linear 3-graphs up to isomorphism.
//!
//! Triples are ordered colexicographically (largest vertex first). A graph is
//! *canonical* when its colex-sorted edge list is lexicographically smallest
//! among all relabellings. Deleting the last edge of a canonical graph leaves
//! a canonical graph, so extending canonical graphs by colex-larger edges and
//! keeping only canonical children visits every isomorphism class once.
//!
//! Canonicity is decided by a backtracking search over relabellings that
//! assigns new labels 0, 1, 2, ... one vertex at a time. With colex order the
//! edges whose labels are all below `k` form a prefix of the relabelled list,
//! so each partial assignment can be compared against the current list and
//! cut off as soon as it is known to be larger.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::random::random_crown_free;
use super::SearchError;
use crate::crown::find_crown_through_edge;
use crate::graph::{Edge, GrowingGraph, IncidenceView, LinearThreeGraph, Vertex};

/// Depth (edge count) at which the parallel search splits the tree.
const FRONTIER_DEPTH: usize = 3;

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    pub time_limit: Option<Duration>,
    /// Seeds the random crown-free graph used as the starting incumbent.
    pub seed: u64,
    pub single_thread: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub best_count: usize,
    pub witness: LinearThreeGraph,
    /// The whole tree was explored, so `best_count` is optimal.
    pub exhaustive: bool,
    pub nodes_explored: u64,
    #[serde(serialize_with = "millis")]
    pub wall_time: Duration,
    pub seed: u64,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

fn colex_key(e: &Edge) -> [Vertex; 3] {
    let [a, b, c] = e.vertices();
    [c, b, a]
}

fn colex_cmp(a: &Edge, b: &Edge) -> Ordering {
    colex_key(a).cmp(&colex_key(b))
}

/// All triples on `n` vertices in colex order.
fn colex_triples(n: usize) -> Vec<Edge> {
    let n = n as Vertex;
    let mut out = Vec::new();
    for c in 2..n {
        for b in 1..c {
            for a in 0..b {
                out.push(Edge::new([a, b, c]).expect("distinct"));
            }
        }
    }
    out
}

/// Whether the vertices of `e` not yet in use are exactly `used, used + 1, ...`.
fn introduces_in_order(e: &Edge, used: usize) -> bool {
    let mut expect = used as Vertex;
    for v in e.vertices() {
        if v >= used as Vertex {
            if v != expect {
                return false;
            }
            expect += 1;
        }
    }
    true
}

const UNLABELLED: Vertex = Vertex::MAX;

/// Whether the colex-sorted edge list of `g`, which uses exactly the vertices
/// `0..used`, is minimal among all relabellings.
pub(crate) fn is_canonical(g: &GrowingGraph, used: usize) -> bool {
    let mut label = vec![UNLABELLED; used];
    let mut image = Vec::with_capacity(g.edges().len());
    !smaller_relabelling(g, used, 0, &mut label, &mut image)
}

fn smaller_relabelling(
    g: &GrowingGraph,
    used: usize,
    depth: usize,
    label: &mut [Vertex],
    image: &mut Vec<Edge>,
) -> bool {
    if depth == used {
        return false;
    }
    let edges = g.edges();
    let k = depth as Vertex;
    for v in 0..used {
        if label[v] != UNLABELLED {
            continue;
        }
        label[v] = k;
        let start = image.len();
        for &ei in g.incident(v as Vertex) {
            let [o1, o2] = edges[ei].others(v as Vertex);
            let (l1, l2) = (label[o1 as usize], label[o2 as usize]);
            if l1 != UNLABELLED && l2 != UNLABELLED {
                image.push(Edge::new([l1, l2, k]).expect("labels are distinct"));
            }
        }
        image[start..].sort_unstable_by(colex_cmp);

        let mut verdict = Ordering::Equal;
        for i in start..image.len() {
            verdict = colex_cmp(&image[i], &edges[i]);
            if verdict != Ordering::Equal {
                break;
            }
        }
        if verdict == Ordering::Equal
            && image.len() < edges.len()
            && colex_key(&edges[image.len()])[0] <= k
        {
            verdict = Ordering::Greater;
        }
        let found = match verdict {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => smaller_relabelling(g, used, depth + 1, label, image),
        };
        image.truncate(start);
        label[v] = UNLABELLED;
        if found {
            return true;
        }
    }
    false
}

struct Walker<'a> {
    candidates: &'a [Edge],
    crown_free: bool,
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    nodes: u64,
}

/// A node of the generation tree: the canonical graph, the number of vertices
/// it uses and the first candidate index a child may add.
type Visit<'v> = dyn FnMut(&GrowingGraph, usize, usize) -> bool + 'v;

impl Walker<'_> {
    fn walk(&mut self, g: &mut GrowingGraph, used: usize, next: usize, visit: &mut Visit<'_>) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.stop.store(true, AtomicOrdering::Relaxed);
        }
        if self.stop.load(AtomicOrdering::Relaxed) || !visit(g, used, next) {
            return;
        }
        for ci in next..self.candidates.len() {
            let t = self.candidates[ci];
            let top = colex_key(&t)[0] as usize;
            if top > used + 2 {
                break;
            }
            if !introduces_in_order(&t, used) || !g.accepts(&t) {
                continue;
            }
            let index = g.push(t);
            let child_used = used.max(top + 1);
            let keep = !(self.crown_free && find_crown_through_edge(g, index).is_some())
                && is_canonical(g, child_used);
            if keep {
                self.walk(g, child_used, ci + 1, visit);
            }
            g.pop();
            if self.stop.load(AtomicOrdering::Relaxed) {
                return;
            }
        }
    }
}

/// Upper bound on the edge count of any descendant: every later edge contains
/// a vertex at least as large as the top vertex of the last edge, and a vertex
/// with `f` uncovered pairs lies on at most `f / 2` more edges.
fn descendant_cap(g: &GrowingGraph, n: usize) -> usize {
    let m = g.edges().len();
    let from = g.edges().last().map_or(0, |e| colex_key(e)[0] as usize);
    let room: usize = (from..n)
        .map(|w| (n - 1 - 2 * g.degree(w as Vertex)) / 2)
        .sum();
    let packing = n * ((n - 1) / 2) / 3;
    (m + room).min(packing)
}

/// Walks every canonical linear 3-graph on `n` vertices with at most
/// `max_edges` edges (crown-free ones only if `crown_free`), once per
/// isomorphism class. Isolated vertices are allowed.
pub fn enumerate_linear(
    n: usize,
    max_edges: usize,
    crown_free: bool,
    mut visit: impl FnMut(&LinearThreeGraph),
) {
    let candidates = colex_triples(n);
    let stop = AtomicBool::new(false);
    let mut walker = Walker {
        candidates: &candidates,
        crown_free,
        deadline: None,
        stop: &stop,
        nodes: 0,
    };
    let mut g = GrowingGraph::new(n);
    walker.walk(&mut g, 0, 0, &mut |g, _, _| {
        visit(&g.freeze());
        g.edges().len() < max_edges
    });
}

/// Largest crown-free linear 3-graph on `n` vertices, single-threaded, seed 0.
pub fn exact_max_edges(
    n: usize,
    time_limit: Option<Duration>,
) -> Result<SearchResult, SearchError> {
    exact_max_edges_with(
        n,
        &SearchOptions {
            time_limit,
            seed: 0,
            single_thread: true,
        },
    )
}

struct Best {
    count: usize,
    witness: Option<Vec<Edge>>,
}

impl Best {
    fn offer(&mut self, g: &GrowingGraph, incumbent: &AtomicUsize) {
        let m = g.edges().len();
        if m > self.count {
            self.count = m;
            self.witness = Some(g.edges().to_vec());
            incumbent.fetch_max(m, AtomicOrdering::Relaxed);
        }
    }
}

pub fn exact_max_edges_with(
    n: usize,
    options: &SearchOptions,
) -> Result<SearchResult, SearchError> {
    if n < 3 {
        return Err(SearchError::TooSmall(n));
    }
    let started = Instant::now();
    let deadline = options.time_limit.map(|t| started + t);
    let candidates = colex_triples(n);
    let stop = AtomicBool::new(false);

    let warm = random_crown_free(n, options.seed, None);
    let incumbent = AtomicUsize::new(warm.edge_count());
    let mut best = Best {
        count: warm.edge_count(),
        witness: None,
    };
    let mut frontier: Vec<(Vec<Edge>, usize, usize)> = Vec::new();
    let mut nodes;
    {
        let mut walker = Walker {
            candidates: &candidates,
            crown_free: true,
            deadline,
            stop: &stop,
            nodes: 0,
        };
        let split = !options.single_thread;
        let mut g = GrowingGraph::new(n);
        walker.walk(&mut g, 0, 0, &mut |g, used, next| {
            best.offer(g, &incumbent);
            if split && g.edges().len() == FRONTIER_DEPTH {
                frontier.push((g.edges().to_vec(), used, next));
                return false;
            }
            descendant_cap(g, n) > incumbent.load(AtomicOrdering::Relaxed)
        });
        nodes = walker.nodes;
    }

    if !frontier.is_empty() {
        let results: Vec<(Best, u64)> = frontier
            .par_iter()
            .map(|(edges, used, next)| {
                let mut walker = Walker {
                    candidates: &candidates,
                    crown_free: true,
                    deadline,
                    stop: &stop,
                    nodes: 0,
                };
                let mut g = GrowingGraph::new(n);
                for e in edges {
                    g.push(*e);
                }
                let mut local = Best {
                    count: 0,
                    witness: None,
                };
                walker.walk(&mut g, *used, *next, &mut |g, _, _| {
                    local.offer(g, &incumbent);
                    descendant_cap(g, n) > incumbent.load(AtomicOrdering::Relaxed)
                });
                // the frontier node itself was already counted
                (local, walker.nodes - 1)
            })
            .collect();
        for (local, explored) in results {
            nodes += explored;
            if local.count > best.count {
                best = local;
            }
        }
    }

    let witness = match best.witness {
        Some(edges) => LinearThreeGraph::build(n, edges.iter().map(Edge::vertices))
            .expect("search only builds linear graphs"),
        None => warm,
    };
    Ok(SearchResult {
        n,
        best_count: best.count,
        witness,
        exhaustive: !stop.load(AtomicOrdering::Relaxed),
        nodes_explored: nodes,
        wall_time: started.elapsed(),
        seed: options.seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grow(n: usize, edges: &[[Vertex; 3]]) -> GrowingGraph {
        let mut g = GrowingGraph::new(n);
        for t in edges {
            g.push(Edge::new(*t).unwrap());
        }
        g
    }

    #[test]
    fn colex_order() {
        let t = colex_triples(5);
        assert_eq!(t.len(), 10);
        assert_eq!(t[0].vertices(), [0, 1, 2]);
        assert_eq!(t[1].vertices(), [0, 1, 3]);
        assert_eq!(t[3].vertices(), [1, 2, 3]);
        assert!(t
            .windows(2)
            .all(|w| colex_cmp(&w[0], &w[1]) == Ordering::Less));
    }

    #[test]
    fn canonicity() {
        assert!(is_canonical(&grow(5, &[[0, 1, 2]]), 3));
        assert!(is_canonical(&grow(5, &[[0, 1, 2], [0, 3, 4]]), 5));
        // {0,1,2},{2,3,4} relabels to {0,1,2},{0,3,4}
        assert!(!is_canonical(&grow(5, &[[0, 1, 2], [2, 3, 4]]), 5));
        assert!(is_canonical(&grow(6, &[[0, 1, 2], [3, 4, 5]]), 6));
    }

    #[test]
    fn counts_small_classes() {
        // linear 3-graphs on 6 vertices up to isomorphism, isolated vertices
        // allowed: empty, one edge, two meeting edges, two disjoint edges,
        // the triangle {012,034,135} and the Pasch configuration.
        let mut seen = Vec::new();
        enumerate_linear(6, usize::MAX, false, |g| seen.push(g.edge_count()));
        seen.sort();
        assert_eq!(seen, vec![0, 1, 2, 2, 3, 4]);
    }

    #[test]
    fn tiny_exact_values() {
        assert_eq!(exact_max_edges(3, None).unwrap().best_count, 1);
        assert_eq!(exact_max_edges(4, None).unwrap().best_count, 1);
        assert!(exact_max_edges(2, None).is_err());
    }
}
