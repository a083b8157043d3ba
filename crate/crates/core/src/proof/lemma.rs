//! Neighborhood analysis around an edge of degree type `<5, 5, 4>`.
//!
//! With `d(y) = d(z) = 5` and `d(x) >= 4`, a crown-free graph forces the
//! edges at `x`, `y` and `z` into a rigid 11-vertex configuration that no
//! other edge touches. [`analyze_554`] walks the argument branch by branch:
//! each branch either exhibits a crown or narrows the structure, and the last
//! one returns the closed component.
//!
//! Naming: `G(p)` is the set of vertices outside `{x, y, z}` sharing an edge
//! with `p`. The auxiliary bipartite graph `H` joins an edge at `y` to an edge
//! at `z` when they meet. Once `H` is known to be two 4-cycles, the eight
//! outer vertices are labelled
//!
//! ```text
//! z-edges: {z,a,b} {z,c,d} | {z,r,s} {z,p,q}
//! y-edges: {y,a,c} {y,b,d} | {y,r,p} {y,s,q}
//! ```
//!
//! and the only edges at `x` compatible with linearity and the mixing rule
//! are the diagonals `{x,a,d} {x,b,c} {x,r,q} {x,s,p}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{certify, contract, edge3, edges_at_except, Branch, ProofError, Roles};
use crate::crown::CrownCertificate;
use crate::graph::{Edge, LinearThreeGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaOutcome {
    Crown {
        certificate: CrownCertificate,
        branch: Branch,
    },
    Closed(NeighborhoodStructure),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HClass {
    #[serde(rename = "C8")]
    C8,
    #[serde(rename = "C4_PLUS_C4")]
    C4PlusC4,
    #[serde(rename = "IRREGULAR")]
    Irregular,
}

/// Bipartite intersection graph between the edges at `y` and at `z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxiliaryBipartite {
    pub x_side: Vec<Edge>,
    pub y_side: Vec<Edge>,
    /// `(i, j)` when `x_side[i]` meets `y_side[j]`.
    pub adjacency: Vec<(usize, usize)>,
    pub class: HClass,
}

impl AuxiliaryBipartite {
    pub fn new(x_side: Vec<Edge>, y_side: Vec<Edge>) -> Self {
        let mut adjacency = Vec::new();
        for (i, a) in x_side.iter().enumerate() {
            for (j, b) in y_side.iter().enumerate() {
                if !a.is_disjoint(b) {
                    adjacency.push((i, j));
                }
            }
        }
        let mut h = AuxiliaryBipartite {
            x_side,
            y_side,
            adjacency,
            class: HClass::Irregular,
        };
        h.class = h.classify();
        h
    }

    pub fn x_neighbors(&self, i: usize) -> Vec<usize> {
        self.adjacency
            .iter()
            .filter(|e| e.0 == i)
            .map(|e| e.1)
            .collect()
    }

    pub fn y_neighbors(&self, j: usize) -> Vec<usize> {
        self.adjacency
            .iter()
            .filter(|e| e.1 == j)
            .map(|e| e.0)
            .collect()
    }

    pub fn is_two_regular(&self) -> bool {
        self.x_side.len() == 4
            && self.y_side.len() == 4
            && (0..4).all(|i| self.x_neighbors(i).len() == 2)
            && (0..4).all(|j| self.y_neighbors(j).len() == 2)
    }

    fn classify(&self) -> HClass {
        if !self.is_two_regular() {
            return HClass::Irregular;
        }
        // component of y_side[0]
        let mut seen_y = [false; 4];
        let mut stack = vec![0];
        seen_y[0] = true;
        let mut size = 0;
        while let Some(j) = stack.pop() {
            size += 1;
            for i in self.y_neighbors(j) {
                for k in self.x_neighbors(i) {
                    if !seen_y[k] {
                        seen_y[k] = true;
                        stack.push(k);
                    }
                }
            }
        }
        match size {
            4 => HClass::C8,
            2 => HClass::C4PlusC4,
            _ => HClass::Irregular,
        }
    }

    /// Whether, after deleting every node that meets `probe`, the remaining
    /// nodes form a complete bipartite graph with at least two nodes a side.
    pub fn complete_after_removing(&self, probe: &Edge) -> bool {
        let xs: Vec<usize> = (0..self.x_side.len())
            .filter(|&i| self.x_side[i].is_disjoint(probe))
            .collect();
        let ys: Vec<usize> = (0..self.y_side.len())
            .filter(|&j| self.y_side[j].is_disjoint(probe))
            .collect();
        xs.len() >= 2
            && ys.len() >= 2
            && xs
                .iter()
                .all(|&i| ys.iter().all(|&j| self.adjacency.contains(&(i, j))))
    }
}

/// Names of the eight outer vertices, see the module docs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labels {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub d: Vertex,
    pub r: Vertex,
    pub s: Vertex,
    pub p: Vertex,
    pub q: Vertex,
}

// Structure-preserving relabellings, as position maps on [a b c d r s p q].
const SWAP_HALVES: [usize; 8] = [4, 5, 6, 7, 0, 1, 2, 3];
const V1_WITHIN: [usize; 8] = [1, 0, 3, 2, 4, 5, 6, 7];
const V1_PAIRS: [usize; 8] = [2, 3, 0, 1, 4, 5, 6, 7];
const V2_WITHIN: [usize; 8] = [0, 1, 2, 3, 5, 4, 7, 6];
const V2_PAIRS: [usize; 8] = [0, 1, 2, 3, 6, 7, 4, 5];

impl Labels {
    fn to_array(self) -> [Vertex; 8] {
        [
            self.a, self.b, self.c, self.d, self.r, self.s, self.p, self.q,
        ]
    }

    fn from_array([a, b, c, d, r, s, p, q]: [Vertex; 8]) -> Self {
        Labels {
            a,
            b,
            c,
            d,
            r,
            s,
            p,
            q,
        }
    }

    fn permute(self, sigma: [usize; 8]) -> Self {
        let old = self.to_array();
        Self::from_array(sigma.map(|i| old[i]))
    }

    fn position(self, v: Vertex) -> Option<usize> {
        self.to_array().iter().position(|&w| w == v)
    }

    pub fn first_half(self) -> [Vertex; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn second_half(self) -> [Vertex; 4] {
        [self.r, self.s, self.p, self.q]
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.position(v).is_some()
    }

    pub fn swap_halves(self) -> Self {
        self.permute(SWAP_HALVES)
    }

    /// Relabels so that `u` becomes `a`.
    fn with_in_a(self, u: Vertex) -> Self {
        let mut l = self;
        let mut pos = self.position(u).expect("vertex is labelled");
        if pos >= 4 {
            l = l.swap_halves();
            pos -= 4;
        }
        match pos {
            0 => l,
            1 => l.permute(V1_WITHIN),
            2 => l.permute(V1_PAIRS),
            _ => l.permute(V1_WITHIN).permute(V1_PAIRS),
        }
    }

    /// Relabels inside the second half so that `v` becomes `r`.
    fn with_in_r(self, v: Vertex) -> Self {
        match self.position(v).expect("vertex is labelled") {
            4 => self,
            5 => self.permute(V2_WITHIN),
            6 => self.permute(V2_PAIRS),
            7 => self.permute(V2_WITHIN).permute(V2_PAIRS),
            _ => panic!("{v} is not in the second half"),
        }
    }
}

/// The configuration around a `<5, 5, 4>` edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodStructure {
    pub base: Edge,
    pub roles: Roles,
    /// `{x, y, z}` together with every vertex sharing an edge with them.
    pub s_vertices: Vec<Vertex>,
    /// Edges meeting `s_vertices`.
    pub s_edges: Vec<Edge>,
    /// Edges meeting `s_vertices` but avoiding `{x, y, z}`.
    pub outer_edges: Vec<Edge>,
    pub gx: Vec<Vertex>,
    pub gy: Vec<Vertex>,
    pub gz: Vec<Vertex>,
    pub labels: Labels,
    pub h_class: HClass,
}

impl NeighborhoodStructure {
    /// Checks that the structure is a closed 11-vertex component of `g`.
    pub fn verify_closed(&self, g: &LinearThreeGraph) -> Result<(), String> {
        if self.s_vertices.len() != 11 {
            return Err(format!("|S| = {} instead of 11", self.s_vertices.len()));
        }
        let in_s: BTreeSet<Vertex> = self.s_vertices.iter().copied().collect();
        for &v in &self.s_vertices {
            let d = g.degree(v).map_err(|e| e.to_string())?;
            if d > 5 {
                return Err(format!("vertex {v} of S has degree {d} > 5"));
            }
        }
        let touching = edges_meeting(g, &self.s_vertices);
        if touching != self.s_edges {
            return Err("recorded E_S differs from the edges meeting S".into());
        }
        if touching.len() > 13 {
            return Err(format!("|E_S| = {} > 13", touching.len()));
        }
        if let Some(e) = touching
            .iter()
            .find(|e| !e.vertices().iter().all(|v| in_s.contains(v)))
        {
            return Err(format!("edge {e} leaves S"));
        }
        if !self.outer_edges.is_empty() {
            return Err(format!("{} outer edges remain", self.outer_edges.len()));
        }
        Ok(())
    }
}

/// Edges meeting `vertices`, in graph order.
fn edges_meeting(g: &LinearThreeGraph, vertices: &[Vertex]) -> Vec<Edge> {
    let indices: BTreeSet<usize> = vertices
        .iter()
        .filter_map(|&v| g.incident_edges(v).ok())
        .flatten()
        .copied()
        .collect();
    indices.into_iter().map(|i| g.edge(i)).collect()
}

fn first_edge(
    candidates: &[Edge],
    pred: impl Fn(&Edge) -> bool,
    what: &str,
) -> Result<Edge, ProofError> {
    candidates
        .iter()
        .copied()
        .find(pred)
        .ok_or_else(|| contract(format!("no {what}")))
}

/// Runs the neighborhood argument on `edge` with `d(x) >= 4`, `d(y) = d(z) = 5`.
pub fn analyze_554(
    g: &LinearThreeGraph,
    edge: &Edge,
    roles: Roles,
) -> Result<LemmaOutcome, ProofError> {
    let pre = |m: String| ProofError::PreconditionViolated(m);
    let index = g
        .edge_index(edge)
        .ok_or_else(|| pre(format!("edge {edge} is not in the graph")))?;
    if !roles.covers(edge) {
        return Err(pre(format!("roles {roles:?} do not match edge {edge}")));
    }
    let Roles { x, y, z } = roles;
    let (dx, dy, dz) = (g.deg(x), g.deg(y), g.deg(z));
    if dx < 4 || dy != 5 || dz != 5 {
        return Err(pre(format!(
            "need d(x) >= 4 and d(y) = d(z) = 5, got ({dx}, {dy}, {dz})"
        )));
    }
    let at = |v| -> Vec<Edge> {
        edges_at_except(g, v, index)
            .into_iter()
            .map(|i| g.edge(i))
            .collect()
    };
    let (ex, ey, ez) = (at(x), at(y), at(z));
    let gx = g.vertex_neighborhood(x, edge)?;
    let gy = g.vertex_neighborhood(y, edge)?;
    let gz = g.vertex_neighborhood(z, edge)?;
    let found = |certificate, branch| {
        Ok(LemmaOutcome::Crown {
            certificate,
            branch,
        })
    };

    // G(y) = G(z)
    if gy != gz {
        let branch = Branch::NeighborhoodsDiffer;
        let e1 = first_edge(
            &ey,
            |f| f.others(y).iter().any(|v| !gz.contains(v)),
            "edge at y leaving G(z)",
        )?;
        let e2 = first_edge(&ex, |f| f.is_disjoint(&e1), "edge at x avoiding e1")?;
        let e3 = first_edge(
            &ez,
            |f| f.is_disjoint(&e1) && f.is_disjoint(&e2),
            "edge at z avoiding e1 and e2",
        )?;
        return found(
            certify(g, *edge, [(e2, x), (e1, y), (e3, z)], branch)?,
            branch,
        );
    }

    // G(x) within G(y)
    if let Some(e1) = ex
        .iter()
        .copied()
        .find(|f| f.others(x).iter().any(|v| !gy.contains(v)))
    {
        let branch = Branch::XEdgeEscapes;
        let e3 = first_edge(&ez, |f| f.is_disjoint(&e1), "edge at z avoiding e1")?;
        let e2 = first_edge(
            &ey,
            |f| f.is_disjoint(&e1) && f.is_disjoint(&e3),
            "edge at y avoiding e1 and e3",
        )?;
        return found(
            certify(g, *edge, [(e1, x), (e2, y), (e3, z)], branch)?,
            branch,
        );
    }

    // The intersection graph H and one probe edge at x.
    let h = AuxiliaryBipartite::new(ey.clone(), ez.clone());
    if !h.is_two_regular() {
        return Err(contract(format!(
            "H is not 2-regular on 4 + 4 nodes: {:?}",
            h.adjacency
        )));
    }
    let probe = ex[0];
    for ei in ey.iter().filter(|f| f.is_disjoint(&probe)) {
        if let Some(ej) = ez
            .iter()
            .find(|f| f.is_disjoint(&probe) && f.is_disjoint(ei))
        {
            let branch = Branch::DisjointTriple;
            return found(
                certify(g, *edge, [(probe, x), (*ei, y), (*ej, z)], branch)?,
                branch,
            );
        }
    }
    if !h.complete_after_removing(&probe) {
        return Err(contract(
            "H minus the nodes meeting the probe is not complete",
        ));
    }
    if h.class != HClass::C4PlusC4 {
        return Err(contract(format!(
            "H is {:?}, expected two 4-cycles",
            h.class
        )));
    }
    let labels = label_outer_vertices(g, &h, y, z)?;

    // No edge at x mixes the halves.
    let (v1, v2) = (labels.first_half(), labels.second_half());
    for xe in &ex {
        let [u, w] = xe.others(x);
        let (p1, p2) = if v1.contains(&u) && v2.contains(&w) {
            (u, w)
        } else if v2.contains(&u) && v1.contains(&w) {
            (w, u)
        } else {
            continue;
        };
        let l = labels.with_in_a(p1).with_in_r(p2);
        let branch = Branch::MixedXEdge;
        let pendants = [
            (edge3(z, l.p, l.q)?, z),
            (*xe, l.a),
            (edge3(y, l.b, l.d)?, l.b),
        ];
        return found(certify(g, edge3(z, l.a, l.b)?, pendants, branch)?, branch);
    }

    // Edges touching the outer vertices but not x, y, z.
    let mut s_vertices = gy.clone();
    s_vertices.extend([x, y, z]);
    s_vertices.sort_unstable();
    let s_edges = edges_meeting(g, &s_vertices);
    let outer_edges: Vec<Edge> = s_edges
        .iter()
        .copied()
        .filter(|f| f.is_disjoint(edge))
        .collect();
    if let Some(f) = outer_edges.first() {
        let (certificate, branch) = outer_edge_crown(g, roles, labels, *f)?;
        return found(certificate, branch);
    }

    let structure = NeighborhoodStructure {
        base: *edge,
        roles,
        s_vertices,
        s_edges,
        outer_edges,
        gx,
        gy,
        gz,
        labels,
        h_class: h.class,
    };
    structure.verify_closed(g).map_err(contract)?;
    Ok(LemmaOutcome::Closed(structure))
}

/// Names the outer vertices from the two 4-cycles of `H`.
fn label_outer_vertices(
    g: &LinearThreeGraph,
    h: &AuxiliaryBipartite,
    y: Vertex,
    z: Vertex,
) -> Result<Labels, ProofError> {
    let y_edges = &h.x_side;
    // z-edges of the first cycle: the lowest one and its partner
    let z1 = 0;
    let partner = h
        .x_neighbors(h.y_neighbors(z1)[0])
        .into_iter()
        .find(|&j| j != z1)
        .ok_or_else(|| contract("degenerate H"))?;
    let rest: Vec<usize> = (0..4).filter(|&j| j != z1 && j != partner).collect();

    let half = |first: usize, second: usize| -> Result<[Vertex; 4], ProofError> {
        let [a, b] = h.y_side[first].others(z);
        let with_a = y_edges
            .iter()
            .find(|f| f.contains(a))
            .ok_or_else(|| contract(format!("no edge at y through {a}")))?;
        let [o1, o2] = with_a.others(y);
        let c = if o1 == a { o2 } else { o1 };
        let second_edge = h.y_side[second];
        if !second_edge.contains(c) {
            return Err(contract("H cycle does not pair the z-edges"));
        }
        let [c1, c2] = second_edge.others(z);
        let d = if c1 == c { c2 } else { c1 };
        if !g.contains_edge(&edge3(y, b, d)?) {
            return Err(contract(format!("missing edge {{{y}, {b}, {d}}}")));
        }
        Ok([a, b, c, d])
    };
    let [a, b, c, d] = half(z1, partner)?;
    let [r, s, p, q] = half(rest[0], rest[1])?;
    Ok(Labels {
        a,
        b,
        c,
        d,
        r,
        s,
        p,
        q,
    })
}

/// Crown through an outer edge `f`, after moving one of its labelled vertices
/// to `a` by a structure-preserving relabelling.
fn outer_edge_crown(
    g: &LinearThreeGraph,
    roles: Roles,
    labels: Labels,
    f: Edge,
) -> Result<(CrownCertificate, Branch), ProofError> {
    let Roles { x, y, z } = roles;
    let inside: Vec<Vertex> = f
        .vertices()
        .into_iter()
        .filter(|&v| labels.contains(v))
        .collect();
    let mut l = labels.with_in_a(inside[0]);

    if inside.len() == 1 {
        let branch = Branch::OuterSingle;
        let pendants = [
            (edge3(z, l.r, l.s)?, z),
            (f, l.a),
            (edge3(y, l.b, l.d)?, l.b),
        ];
        return Ok((certify(g, edge3(z, l.a, l.b)?, pendants, branch)?, branch));
    }
    if f.contains(l.b) || f.contains(l.c) {
        return Err(contract(format!("outer edge {f} repeats a covered pair")));
    }
    if !f.contains(l.d) {
        let w = inside
            .iter()
            .copied()
            .find(|&v| v != l.a)
            .expect("two labelled vertices");
        if !l.second_half().contains(&w) {
            return Err(contract(format!("outer edge {f} stays in one half")));
        }
        l = l.with_in_r(w);
        if f.contains(l.q) {
            // {r, q} is the diagonal of the other half
            l = l.swap_halves();
        } else {
            if !g.contains_edge(&edge3(x, l.b, l.c)?) {
                l = l.swap_halves();
            }
            let branch = Branch::OuterCross;
            let pendants = [
                (edge3(z, l.p, l.q)?, z),
                (f, l.a),
                (edge3(x, l.b, l.c)?, l.b),
            ];
            return Ok((certify(g, edge3(z, l.a, l.b)?, pendants, branch)?, branch));
        }
    }
    // f contains the diagonal {a, d}
    if f.contains(l.r) || f.contains(l.s) {
        l = l.permute(V2_PAIRS);
    }
    let branch = Branch::OuterDiagonal;
    let pendants = [
        (edge3(z, l.r, l.s)?, z),
        (f, l.a),
        (edge3(x, l.b, l.c)?, l.b),
    ];
    Ok((certify(g, edge3(z, l.a, l.b)?, pendants, branch)?, branch))
}
