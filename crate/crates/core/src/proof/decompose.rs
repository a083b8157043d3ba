use serde::Serialize;
use serde_json::{json, Value};

use super::{
    analyze_554, contract, extract_crown_642, find_light_edge, light_edge_degree_facts, Branch,
    LemmaOutcome, NeighborhoodStructure, ProofError, WeightScheme,
};
use crate::crown::CrownCertificate;
use crate::graph::{Edge, LinearThreeGraph, Vertex, HIGH_DEGREE};

/// One removal of a closed component. Vertices and edges are given in the
/// labels of the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelStep {
    pub step: usize,
    pub light_edge: Edge,
    pub degrees: [usize; 3],
    pub branch: Branch,
    pub peeled_vertices: Vec<Vertex>,
    pub removed_edges: Vec<Edge>,
    /// Input label of each vertex of the remaining graph, by its new index.
    pub vertex_map: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Conclusion {
    Crown {
        branch: Branch,
        light_edge: Edge,
        degrees: [usize; 3],
        certificate: CrownCertificate,
    },
    BoundSatisfied {
        vertices: usize,
        edges: usize,
        high_degree: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisOutcome {
    pub scheme: WeightScheme,
    pub trace: Vec<PeelStep>,
    pub conclusion: Conclusion,
}

impl AnalysisOutcome {
    pub fn certificate(&self) -> Option<&CrownCertificate> {
        match &self.conclusion {
            Conclusion::Crown { certificate, .. } => Some(certificate),
            Conclusion::BoundSatisfied { .. } => None,
        }
    }

    pub fn is_crown(&self) -> bool {
        self.certificate().is_some()
    }

    /// The trace as a JSON array: one record per peel, then the conclusion.
    pub fn trace_json(&self) -> Value {
        let mut records: Vec<Value> = self
            .trace
            .iter()
            .map(|s| serde_json::to_value(s).expect("trace serializes"))
            .collect();
        let mut last = serde_json::to_value(&self.conclusion).expect("conclusion serializes");
        last.as_object_mut()
            .expect("conclusion is an object")
            .insert("step".into(), json!(self.trace.len()));
        records.push(last);
        Value::Array(records)
    }
}

/// Removes a verified closed component: its vertices and every edge touching
/// them. Returns the rest, renumbered densely, and the old index of each new
/// vertex.
pub fn peel(
    g: &LinearThreeGraph,
    component: &NeighborhoodStructure,
) -> Result<(LinearThreeGraph, Vec<Vertex>), ProofError> {
    component
        .verify_closed(g)
        .map_err(ProofError::PreconditionViolated)?;
    Ok(g.remove_vertices(&component.s_vertices))
}

/// Replays the bound argument on `g`: repeatedly take the first light edge,
/// extract a crown around it or peel the closed component it sits in, until
/// either a crown is found or the edge count drops within the bound.
pub fn decompose(
    g: &LinearThreeGraph,
    scheme: WeightScheme,
) -> Result<AnalysisOutcome, ProofError> {
    let high_degree = g.high_degree_count();
    if scheme == WeightScheme::Theorem2 && high_degree > 2 {
        return Err(ProofError::SchemeInapplicable { high_degree });
    }
    let mut current = g.clone();
    let mut origin: Vec<Vertex> = (0..g.n() as Vertex).collect();
    let mut trace = Vec::new();

    loop {
        let s = current.high_degree_count();
        if !scheme.exceeds_bound(current.edge_count(), current.n(), s) {
            return Ok(AnalysisOutcome {
                scheme,
                trace,
                conclusion: Conclusion::BoundSatisfied {
                    vertices: current.n(),
                    edges: current.edge_count(),
                    high_degree: s,
                },
            });
        }
        let light = find_light_edge(&current, scheme)
            .ok_or_else(|| contract("edge count exceeds the bound but no edge is light"))?;
        light_edge_degree_facts(&current, &light.edge, scheme)?;
        let to_input = |v: Vertex| origin[v as usize];
        let light_edge = light.edge.map(to_input);

        let (certificate, branch) = if light.degrees[2] >= HIGH_DEGREE {
            let cert = extract_crown_642(&current, &light.edge, light.roles)?;
            (cert, Branch::Greedy642)
        } else {
            match analyze_554(&current, &light.edge, light.roles)? {
                LemmaOutcome::Crown {
                    certificate,
                    branch,
                } => (certificate, branch),
                LemmaOutcome::Closed(component) => {
                    let (rest, kept) = peel(&current, &component)?;
                    let next_origin: Vec<Vertex> =
                        kept.iter().map(|&v| origin[v as usize]).collect();
                    let mut peeled_vertices: Vec<Vertex> =
                        component.s_vertices.iter().map(|&v| to_input(v)).collect();
                    peeled_vertices.sort_unstable();
                    let mut removed_edges: Vec<Edge> =
                        component.s_edges.iter().map(|e| e.map(to_input)).collect();
                    removed_edges.sort_unstable();
                    trace.push(PeelStep {
                        step: trace.len(),
                        light_edge,
                        degrees: light.degrees,
                        branch: Branch::Closed,
                        peeled_vertices,
                        removed_edges,
                        vertex_map: next_origin.clone(),
                    });
                    if rest.high_degree_count() != s {
                        return Err(contract(
                            "peeling changed the number of high-degree vertices",
                        ));
                    }
                    current = rest;
                    origin = next_origin;
                    continue;
                }
            }
        };
        return Ok(AnalysisOutcome {
            scheme,
            trace,
            conclusion: Conclusion::Crown {
                branch,
                light_edge,
                degrees: light.degrees,
                certificate: certificate.map(to_input),
            },
        });
    }
}
