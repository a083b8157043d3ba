use super::{certify, contract, edges_at_except, Branch, ProofError, Roles};
use crate::crown::CrownCertificate;
use crate::graph::{Edge, LinearThreeGraph, HIGH_DEGREE};

/// Greedy crown around `edge` when `d(x) >= 2`, `d(y) >= 4`, `d(z) >= 6`.
///
/// Takes the first edge at `x`, then the first edge at `y` missing it, then
/// the first edge at `z` missing both. Linearity makes each stage succeed:
/// every outside vertex blocks at most one edge at `y` or `z`.
pub fn extract_crown_642(
    g: &LinearThreeGraph,
    edge: &Edge,
    roles: Roles,
) -> Result<CrownCertificate, ProofError> {
    let index = g
        .edge_index(edge)
        .ok_or_else(|| contract(format!("edge {edge} is not in the graph")))?;
    if !roles.covers(edge) {
        return Err(contract(format!(
            "roles {roles:?} do not match edge {edge}"
        )));
    }
    let (dx, dy, dz) = (g.deg(roles.x), g.deg(roles.y), g.deg(roles.z));
    if dx < 2 || dy < 4 || dz < HIGH_DEGREE {
        return Err(contract(format!(
            "degrees ({dx}, {dy}, {dz}) do not dominate <6, 4, 2>"
        )));
    }

    let e1 = g.edge(edges_at_except(g, roles.x, index)[0]);
    let e2 = edges_at_except(g, roles.y, index)
        .into_iter()
        .map(|i| g.edge(i))
        .find(|f| f.is_disjoint(&e1))
        .ok_or_else(|| contract("no edge at y avoids the edge at x"))?;
    let e3 = edges_at_except(g, roles.z, index)
        .into_iter()
        .map(|i| g.edge(i))
        .find(|f| f.is_disjoint(&e1) && f.is_disjoint(&e2))
        .ok_or_else(|| contract("no edge at z avoids the edges at x and y"))?;

    certify(
        g,
        *edge,
        [(e1, roles.x), (e2, roles.y), (e3, roles.z)],
        Branch::Greedy642,
    )
}
