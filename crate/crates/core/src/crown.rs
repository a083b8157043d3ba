//! Crown detection.
//!
//! The crown is the 4-edge linear 3-graph on 9 vertices made of a central edge
//! `{a, b, c}` and three pairwise disjoint pendant edges, one through each of
//! `a`, `b` and `c`. The scans here are exhaustive and serve as ground truth
//! for the constructive extraction in [`crate::proof`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, IncidenceView, LinearThreeGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pendant {
    pub edge: Edge,
    pub attach: Vertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrownCertificate {
    pub central: Edge,
    pub pendants: [Pendant; 3],
}

impl CrownCertificate {
    pub fn edges(&self) -> [Edge; 4] {
        [
            self.central,
            self.pendants[0].edge,
            self.pendants[1].edge,
            self.pendants[2].edge,
        ]
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.edges().iter().flat_map(|e| e.vertices()).collect()
    }

    /// Renames every vertex through `f`.
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex + Copy) -> CrownCertificate {
        CrownCertificate {
            central: self.central.map(f),
            pendants: self.pendants.map(|p| Pendant {
                edge: p.edge.map(f),
                attach: f(p.attach),
            }),
        }
    }
}

/// The first crown invariant a certificate breaks.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CrownDefect {
    #[error("edge not in graph: {0}")]
    EdgeNotInGraph(Edge),
    #[error("pendant {edge} is not attached at {attach}")]
    DetachedPendant { edge: Edge, attach: Vertex },
    #[error("pendant {0} meets the central edge in more than its attachment vertex")]
    PendantOverlapsCentral(Edge),
    #[error("attachment vertices do not cover the central edge")]
    AttachmentsNotCentral,
    #[error("pendants not disjoint: {0} and {1}")]
    PendantsNotDisjoint(Edge, Edge),
    #[error("crown spans {0} vertices instead of 9")]
    VertexCount(usize),
}

/// Checks every crown invariant of `cert` against `g`.
pub fn verify_crown(g: &LinearThreeGraph, cert: &CrownCertificate) -> Result<(), CrownDefect> {
    if let Some(missing) = cert.edges().iter().find(|e| !g.contains_edge(e)) {
        return Err(CrownDefect::EdgeNotInGraph(*missing));
    }
    for p in &cert.pendants {
        if !p.edge.contains(p.attach) || !cert.central.contains(p.attach) {
            return Err(CrownDefect::DetachedPendant {
                edge: p.edge,
                attach: p.attach,
            });
        }
        if p.edge.meet(&cert.central) != 1 {
            return Err(CrownDefect::PendantOverlapsCentral(p.edge));
        }
    }
    let attached: BTreeSet<Vertex> = cert.pendants.iter().map(|p| p.attach).collect();
    if attached.len() != 3 {
        return Err(CrownDefect::AttachmentsNotCentral);
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let (p, q) = (cert.pendants[i].edge, cert.pendants[j].edge);
            if !p.is_disjoint(&q) {
                return Err(CrownDefect::PendantsNotDisjoint(p, q));
            }
        }
    }
    match cert.vertices().len() {
        9 => Ok(()),
        other => Err(CrownDefect::VertexCount(other)),
    }
}

/// First crown in the scan order: central edge by index, then the pendant at
/// each central vertex (ascending) by edge index.
pub fn find_crown_exhaustive<G: IncidenceView>(g: &G) -> Option<CrownCertificate> {
    (0..g.edge_count()).find_map(|i| crown_with_central(g, i))
}

pub fn is_crown_free<G: IncidenceView>(g: &G) -> bool {
    find_crown_exhaustive(g).is_none()
}

/// A crown using edge `central` as its central edge, if any.
pub fn crown_with_central<G: IncidenceView>(g: &G, central: usize) -> Option<CrownCertificate> {
    let c = g.edge_at(central);
    let [a, b, z] = c.vertices();
    for &i in g.incident(a).iter().filter(|&&i| i != central) {
        let pa = g.edge_at(i);
        for &j in g.incident(b).iter().filter(|&&j| j != central) {
            let pb = g.edge_at(j);
            if !pa.is_disjoint(&pb) {
                continue;
            }
            for &k in g.incident(z).iter().filter(|&&k| k != central) {
                let pz = g.edge_at(k);
                if pz.is_disjoint(&pa) && pz.is_disjoint(&pb) {
                    return Some(CrownCertificate {
                        central: c,
                        pendants: [
                            Pendant {
                                edge: pa,
                                attach: a,
                            },
                            Pendant {
                                edge: pb,
                                attach: b,
                            },
                            Pendant {
                                edge: pz,
                                attach: z,
                            },
                        ],
                    });
                }
            }
        }
    }
    None
}

/// A crown that uses edge `index`, as central edge or as a pendant. In a
/// graph whose other edges are crown-free this decides crown-freeness.
pub fn find_crown_through_edge<G: IncidenceView>(g: &G, index: usize) -> Option<CrownCertificate> {
    if let Some(cert) = crown_with_central(g, index) {
        return Some(cert);
    }
    let f = g.edge_at(index);
    for v in f.vertices() {
        for &ci in g.incident(v).iter().filter(|&&ci| ci != index) {
            let central = g.edge_at(ci);
            let [u, w] = central.others(v);
            for &i in g.incident(u).iter().filter(|&&i| i != ci) {
                let pu = g.edge_at(i);
                if !pu.is_disjoint(&f) {
                    continue;
                }
                for &j in g.incident(w).iter().filter(|&&j| j != ci) {
                    let pw = g.edge_at(j);
                    if pw.is_disjoint(&f) && pw.is_disjoint(&pu) {
                        let mut pendants = [
                            Pendant { edge: f, attach: v },
                            Pendant {
                                edge: pu,
                                attach: u,
                            },
                            Pendant {
                                edge: pw,
                                attach: w,
                            },
                        ];
                        pendants.sort_by_key(|p| p.attach);
                        return Some(CrownCertificate { central, pendants });
                    }
                }
            }
        }
    }
    None
}
