//! Linear 3-graphs: validated construction, degree queries and neighborhoods.
//!
//! A [`LinearThreeGraph`] is immutable once built. Edges are kept sorted
//! (each triple ascending, the list lexicographically) so that every scan over
//! the graph is reproducible. Incremental construction, as needed by the
//! generators and the exhaustive search, goes through [`GrowingGraph`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = u32;

/// Vertices of degree at least this are "high degree".
pub const HIGH_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices{}", at_edge(.index))]
    OutOfRange {
        vertex: Vertex,
        n: usize,
        index: Option<usize>,
    },
    #[error("edge #{index} {triple:?} does not have three distinct vertices")]
    NotThreeDistinct { index: usize, triple: [Vertex; 3] },
    #[error(
        "edges #{first} {first_edge} and #{second} {second_edge} share the pair {{{}, {}}}",
        .pair.0,
        .pair.1
    )]
    LinearityViolation {
        first: usize,
        second: usize,
        first_edge: Edge,
        second_edge: Edge,
        pair: (Vertex, Vertex),
    },
    #[error("edge {edge} appears twice (#{first} and #{second})")]
    DuplicateEdge {
        first: usize,
        second: usize,
        edge: Edge,
    },
    #[error("edge {0} is not in the graph")]
    EdgeNotInGraph(Edge),
}

fn at_edge(index: &Option<usize>) -> String {
    match index {
        Some(i) => format!(" (edge #{i})"),
        None => String::new(),
    }
}

impl GraphError {
    /// Input positions of the edges this error is about.
    pub fn edge_positions(&self) -> Vec<usize> {
        match self {
            GraphError::OutOfRange { index, .. } => index.iter().copied().collect(),
            GraphError::NotThreeDistinct { index, .. } => vec![*index],
            GraphError::LinearityViolation { first, second, .. }
            | GraphError::DuplicateEdge { first, second, .. } => vec![*first, *second],
            GraphError::EdgeNotInGraph(_) => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0:?} does not consist of three distinct vertices")]
pub struct BadTriple(pub [Vertex; 3]);

/// A 3-element vertex set, stored in ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[Vertex; 3]", into = "[Vertex; 3]")]
pub struct Edge([Vertex; 3]);

impl Edge {
    pub fn new(mut triple: [Vertex; 3]) -> Result<Edge, BadTriple> {
        triple.sort_unstable();
        if triple[0] == triple[1] || triple[1] == triple[2] {
            return Err(BadTriple(triple));
        }
        Ok(Edge(triple))
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// Number of shared vertices.
    pub fn meet(&self, other: &Edge) -> usize {
        self.0.iter().filter(|v| other.contains(**v)).count()
    }

    pub fn is_disjoint(&self, other: &Edge) -> bool {
        self.meet(other) == 0
    }

    /// The two vertices other than `v`, ascending. `v` must be in the edge.
    pub fn others(&self, v: Vertex) -> [Vertex; 2] {
        let [a, b, c] = self.0;
        if v == a {
            [b, c]
        } else if v == b {
            [a, c]
        } else {
            debug_assert_eq!(v, c);
            [a, b]
        }
    }

    pub fn pairs(&self) -> [(Vertex, Vertex); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Edge {
        Edge::new(self.0.map(f)).expect("vertex map must be injective on an edge")
    }
}

impl TryFrom<[Vertex; 3]> for Edge {
    type Error = BadTriple;

    fn try_from(triple: [Vertex; 3]) -> Result<Self, Self::Error> {
        Edge::new(triple)
    }
}

impl From<Edge> for [Vertex; 3] {
    fn from(e: Edge) -> Self {
        e.0
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// Read access to edges and vertex incidences, shared by the immutable graph
/// and the incremental builder so the crown scans can run on either.
pub trait IncidenceView {
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn edge_at(&self, index: usize) -> Edge;
    /// Indices of the edges containing `v`, ascending.
    fn incident(&self, v: Vertex) -> &[usize];
}

/// Degrees of an edge's vertices sorted descending, with the vertex carrying
/// each degree. Ties are ordered by descending vertex index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeTriple {
    vertices: [Vertex; 3],
    degrees: [usize; 3],
}

impl DegreeTriple {
    pub fn degrees(&self) -> [usize; 3] {
        self.degrees
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        self.vertices
    }

    /// Whether the edge has degree type at least `<a, b, c>` (with `a >= b >= c`).
    pub fn meets(&self, a: usize, b: usize, c: usize) -> bool {
        let [p, q, r] = self.degrees;
        p >= a && q >= b && r >= c
    }

    /// Vertices and degrees in ascending degree order (ties by vertex index).
    pub fn ascending(&self) -> ([Vertex; 3], [usize; 3]) {
        let [v0, v1, v2] = self.vertices;
        let [d0, d1, d2] = self.degrees;
        ([v2, v1, v0], [d2, d1, d0])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct LinearThreeGraph {
    n: usize,
    edges: Vec<Edge>,
    incidence: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[Vertex; 3]>,
}

impl TryFrom<GraphRepr> for LinearThreeGraph {
    type Error = GraphError;

    fn try_from(repr: GraphRepr) -> Result<Self, Self::Error> {
        LinearThreeGraph::build(repr.n, repr.edges)
    }
}

impl From<LinearThreeGraph> for GraphRepr {
    fn from(g: LinearThreeGraph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|e| e.vertices()).collect(),
        }
    }
}

impl LinearThreeGraph {
    /// Validates `edge_list` and builds the graph. Errors refer to positions in
    /// the input list; the stored edge order is canonical.
    pub fn build(
        n: usize,
        edge_list: impl IntoIterator<Item = [Vertex; 3]>,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut pair_owner: HashMap<(Vertex, Vertex), usize> = HashMap::new();
        for (index, triple) in edge_list.into_iter().enumerate() {
            if let Some(&vertex) = triple.iter().find(|&&v| v as usize >= n) {
                return Err(GraphError::OutOfRange {
                    vertex,
                    n,
                    index: Some(index),
                });
            }
            let edge =
                Edge::new(triple).map_err(|_| GraphError::NotThreeDistinct { index, triple })?;
            for pair in edge.pairs() {
                if let Some(&first) = pair_owner.get(&pair) {
                    let first_edge: Edge = edges[first];
                    return Err(if first_edge == edge {
                        GraphError::DuplicateEdge {
                            first,
                            second: index,
                            edge,
                        }
                    } else {
                        GraphError::LinearityViolation {
                            first,
                            second: index,
                            first_edge,
                            second_edge: edge,
                            pair,
                        }
                    });
                }
            }
            for pair in edge.pairs() {
                pair_owner.insert(pair, index);
            }
            edges.push(edge);
        }
        edges.sort_unstable();
        Ok(Self::from_sorted(n, edges))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for v in e.vertices() {
                incidence[v as usize].push(i);
            }
        }
        LinearThreeGraph {
            n,
            edges,
            incidence,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    pub fn edge_index(&self, edge: &Edge) -> Option<usize> {
        self.edges.binary_search(edge).ok()
    }

    pub fn contains_edge(&self, edge: &Edge) -> bool {
        self.edge_index(edge).is_some()
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n,
                index: None,
            })
        }
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    /// Degree without the range check; `v` must be a vertex.
    pub(crate) fn deg(&self, v: Vertex) -> usize {
        self.incidence[v as usize].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn incident_edges(&self, v: Vertex) -> Result<&[usize], GraphError> {
        self.check_vertex(v)?;
        Ok(&self.incidence[v as usize])
    }

    /// `s`: the number of vertices of degree at least 6.
    pub fn high_degree_count(&self) -> usize {
        self.incidence
            .iter()
            .filter(|inc| inc.len() >= HIGH_DEGREE)
            .count()
    }

    pub fn isolated_count(&self) -> usize {
        self.incidence.iter().filter(|inc| inc.is_empty()).count()
    }

    pub fn degree_triple(&self, edge: &Edge) -> Result<DegreeTriple, GraphError> {
        if !self.contains_edge(edge) {
            return Err(GraphError::EdgeNotInGraph(*edge));
        }
        let mut slots = edge.vertices().map(|v| (self.deg(v), v));
        slots.sort_unstable();
        slots.reverse();
        Ok(DegreeTriple {
            vertices: slots.map(|(_, v)| v),
            degrees: slots.map(|(d, _)| d),
        })
    }

    /// Vertices sharing an edge with `p`, without `p` itself and without the
    /// vertices of `excluded`. Ascending.
    pub fn vertex_neighborhood(
        &self,
        p: Vertex,
        excluded: &Edge,
    ) -> Result<Vec<Vertex>, GraphError> {
        self.check_vertex(p)?;
        let set: BTreeSet<Vertex> = self.incidence[p as usize]
            .iter()
            .flat_map(|&i| self.edges[i].vertices())
            .filter(|&v| v != p && !excluded.contains(v))
            .collect();
        Ok(set.into_iter().collect())
    }

    /// Deletes `removed` together with every edge meeting it. The remaining
    /// vertices are renumbered densely in their original order; the returned
    /// vector maps each new index to its old one.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> (LinearThreeGraph, Vec<Vertex>) {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v as usize] = true;
        }
        let mut new_index = vec![Vertex::MAX; self.n];
        let mut kept = Vec::new();
        for v in 0..self.n {
            if !gone[v] {
                new_index[v] = kept.len() as Vertex;
                kept.push(v as Vertex);
            }
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| e.vertices().iter().all(|&v| !gone[v as usize]))
            .map(|e| e.map(|v| new_index[v as usize]))
            .collect();
        edges.sort_unstable();
        (Self::from_sorted(kept.len(), edges), kept)
    }

    /// Drops isolated vertices.
    pub fn without_isolated(&self) -> (LinearThreeGraph, Vec<Vertex>) {
        let isolated: Vec<Vertex> = (0..self.n as Vertex)
            .filter(|&v| self.deg(v) == 0)
            .collect();
        self.remove_vertices(&isolated)
    }

    /// The disjoint union, with `other`'s vertices shifted past this graph's.
    pub fn disjoint_union(&self, other: &LinearThreeGraph) -> LinearThreeGraph {
        let shift = self.n as Vertex;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| e.map(|v| v + shift)));
        edges.sort_unstable();
        Self::from_sorted(self.n + other.n, edges)
    }

    /// The graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> LinearThreeGraph {
        assert_eq!(perm.len(), self.n);
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| e.map(|v| perm[v as usize]))
            .collect();
        edges.sort_unstable();
        Self::from_sorted(self.n, edges)
    }
}

impl IncidenceView for LinearThreeGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn edge_at(&self, index: usize) -> Edge {
        self.edges[index]
    }

    fn incident(&self, v: Vertex) -> &[usize] {
        &self.incidence[v as usize]
    }
}

/// A linear 3-graph under construction. Edges keep insertion order and can
/// be popped again, which is what backtracking and the seeded generators need.
#[derive(Clone, Debug)]
pub struct GrowingGraph {
    n: usize,
    edges: Vec<Edge>,
    incidence: Vec<Vec<usize>>,
    covered: Vec<bool>,
}

impl GrowingGraph {
    pub fn new(n: usize) -> Self {
        GrowingGraph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
            covered: vec![false; n * n],
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v as usize].len()
    }

    pub fn pair_covered(&self, u: Vertex, v: Vertex) -> bool {
        self.covered[u as usize * self.n + v as usize]
    }

    /// Whether adding `edge` keeps the graph linear (and duplicate free).
    pub fn accepts(&self, edge: &Edge) -> bool {
        edge.pairs().iter().all(|&(u, v)| !self.pair_covered(u, v))
    }

    /// Adds `edge`, which must be accepted. Returns its index.
    pub fn push(&mut self, edge: Edge) -> usize {
        debug_assert!(self.accepts(&edge));
        let index = self.edges.len();
        for (u, v) in edge.pairs() {
            self.covered[u as usize * self.n + v as usize] = true;
            self.covered[v as usize * self.n + u as usize] = true;
        }
        for v in edge.vertices() {
            self.incidence[v as usize].push(index);
        }
        self.edges.push(edge);
        index
    }

    pub fn pop(&mut self) -> Option<Edge> {
        let edge = self.edges.pop()?;
        for (u, v) in edge.pairs() {
            self.covered[u as usize * self.n + v as usize] = false;
            self.covered[v as usize * self.n + u as usize] = false;
        }
        for v in edge.vertices() {
            self.incidence[v as usize].pop();
        }
        Some(edge)
    }

    pub fn freeze(&self) -> LinearThreeGraph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        LinearThreeGraph::from_sorted(self.n, edges)
    }
}

impl IncidenceView for GrowingGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn edge_at(&self, index: usize) -> Edge {
        self.edges[index]
    }

    fn incident(&self, v: Vertex) -> &[usize] {
        &self.incidence[v as usize]
    }
}
