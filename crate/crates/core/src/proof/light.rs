use serde::Serialize;

use super::{contract, ProofError, Roles, Weight, WeightScheme};
use crate::graph::{DegreeTriple, Edge, LinearThreeGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LightEdge {
    pub index: usize,
    pub edge: Edge,
    pub roles: Roles,
    /// `[d(x), d(y), d(z)]`.
    pub degrees: [usize; 3],
    #[serde(serialize_with = "ratio_string")]
    pub load: Weight,
}

fn ratio_string<S: serde::Serializer>(w: &Weight, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(w)
}

/// The lowest-index edge whose load is strictly below the scheme threshold.
pub fn find_light_edge(g: &LinearThreeGraph, scheme: WeightScheme) -> Option<LightEdge> {
    g.edges().iter().enumerate().find_map(|(index, edge)| {
        let load = scheme.edge_load_in(g, edge);
        if load >= scheme.threshold() {
            return None;
        }
        let (vertices, degrees) = g.degree_triple(edge).ok()?.ascending();
        let [x, y, z] = vertices;
        Some(LightEdge {
            index,
            edge: *edge,
            roles: Roles { x, y, z },
            degrees,
            load,
        })
    })
}

/// Re-derives the degree facts every light edge satisfies: `d(x) >= 2`,
/// `d(y) >= 4`, and degree type at least `<5, 5, 4>` when `d(z) <= 5`.
pub fn light_edge_degree_facts(
    g: &LinearThreeGraph,
    edge: &Edge,
    scheme: WeightScheme,
) -> Result<DegreeTriple, ProofError> {
    let triple = g.degree_triple(edge)?;
    let (_, [dx, dy, dz]) = triple.ascending();
    if !scheme.is_light([dx, dy, dz]) {
        return Err(ProofError::PreconditionViolated(format!(
            "edge {edge} with degrees ({dx}, {dy}, {dz}) is not light under {scheme}"
        )));
    }
    if dx < 2 {
        return Err(contract(format!("light edge {edge} has d(x) = {dx} < 2")));
    }
    if dy < 4 {
        return Err(contract(format!("light edge {edge} has d(y) = {dy} < 4")));
    }
    if dz <= 5 && !triple.meets(5, 5, 4) {
        return Err(contract(format!(
            "light edge {edge} with d(z) <= 5 is not of type <5,5,4>"
        )));
    }
    Ok(triple)
}
