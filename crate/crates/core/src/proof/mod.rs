//! Constructive replay of the crown-free edge bounds.
//!
//! Given a graph with more edges than `(n - s) / threshold`, [`decompose`]
//! finds a light edge by weighted double counting, and then either extracts
//! a crown around it or isolates an 11-vertex closed component, removes it and
//! repeats on the rest. Every crown it returns is checked against the graph.

mod decompose;
mod extract;
mod lemma;
mod light;
pub mod weights;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crown::{verify_crown, CrownCertificate, Pendant};
use crate::graph::{Edge, GraphError, LinearThreeGraph, Vertex};

pub use decompose::{decompose, peel, AnalysisOutcome, Conclusion, PeelStep};
pub use extract::extract_crown_642;
pub use lemma::{
    analyze_554, AuxiliaryBipartite, HClass, Labels, LemmaOutcome, NeighborhoodStructure,
};
pub use light::{find_light_edge, light_edge_degree_facts, LightEdge};
pub use weights::{weighted_sum_identity, Weight, WeightScheme};

#[derive(Debug, Error)]
pub enum ProofError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// An internal deduction failed; this points at a bug, not at the input.
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error(
        "theorem 2 weighting needs at most 2 vertices of degree >= 6, graph has {high_degree}"
    )]
    SchemeInapplicable { high_degree: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The vertices of a base edge named by degree, `d(x) <= d(y) <= d(z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Roles {
    pub x: Vertex,
    pub y: Vertex,
    pub z: Vertex,
}

impl Roles {
    /// Roles by ascending degree, ties broken by vertex index.
    pub fn of(g: &LinearThreeGraph, edge: &Edge) -> Result<Roles, GraphError> {
        let ([x, y, z], _) = g.degree_triple(edge)?.ascending();
        Ok(Roles { x, y, z })
    }

    fn covers(&self, edge: &Edge) -> bool {
        Edge::new([self.x, self.y, self.z]).is_ok_and(|e| e == *edge)
    }
}

/// Which argument produced a crown, or that the component closed up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    /// Greedy choice around an edge with a vertex of degree at least 6.
    #[serde(rename = "642")]
    Greedy642,
    /// The outer neighborhoods of `y` and `z` differ.
    #[serde(rename = "554-1")]
    NeighborhoodsDiffer,
    /// An edge at `x` leaves the outer neighborhood of `y`.
    #[serde(rename = "554-2")]
    XEdgeEscapes,
    /// Pairwise disjoint edges at `x`, `y` and `z`.
    #[serde(rename = "554-3")]
    DisjointTriple,
    /// An edge at `x` joins the two halves of the neighborhood.
    #[serde(rename = "554-4")]
    MixedXEdge,
    /// An outer edge meets the neighborhood in a single vertex.
    #[serde(rename = "554-5i")]
    OuterSingle,
    /// An outer edge contains a diagonal pair of one half.
    #[serde(rename = "554-5ii")]
    OuterDiagonal,
    /// An outer edge joins the two halves.
    #[serde(rename = "554-5iii")]
    OuterCross,
    #[serde(rename = "554-closed")]
    Closed,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::Greedy642 => "642",
            Branch::NeighborhoodsDiffer => "554-1",
            Branch::XEdgeEscapes => "554-2",
            Branch::DisjointTriple => "554-3",
            Branch::MixedXEdge => "554-4",
            Branch::OuterSingle => "554-5i",
            Branch::OuterDiagonal => "554-5ii",
            Branch::OuterCross => "554-5iii",
            Branch::Closed => "554-closed",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn contract(msg: impl Into<String>) -> ProofError {
    ProofError::ContractViolation(msg.into())
}

/// Builds a certificate from a central edge and `(pendant, attachment)` pairs
/// and checks it against `g`.
fn certify(
    g: &LinearThreeGraph,
    central: Edge,
    pendants: [(Edge, Vertex); 3],
    branch: Branch,
) -> Result<CrownCertificate, ProofError> {
    let cert = CrownCertificate {
        central,
        pendants: pendants.map(|(edge, attach)| Pendant { edge, attach }),
    };
    verify_crown(g, &cert).map_err(|d| contract(format!("branch {branch}: {d}")))?;
    Ok(cert)
}

/// Edge from three vertices that are known to be distinct.
fn edge3(a: Vertex, b: Vertex, c: Vertex) -> Result<Edge, ProofError> {
    Edge::new([a, b, c]).map_err(|t| contract(t.to_string()))
}

/// Indices of the edges at `v` other than `skip`.
fn edges_at_except(g: &LinearThreeGraph, v: Vertex, skip: usize) -> Vec<usize> {
    g.incident_edges(v)
        .map(|inc| inc.iter().copied().filter(|&i| i != skip).collect())
        .unwrap_or_default()
}
