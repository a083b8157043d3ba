//! Test-only oracles and fixtures, independent of the library's search code.

#![allow(dead_code)]

use crown_turan::{Edge, LinearThreeGraph, Vertex};

/// Whether four edges form a crown with `central` in the middle.
fn is_crown_shape(central: &Edge, pendants: [&Edge; 3]) -> bool {
    let mut attached = Vec::new();
    for p in pendants {
        if p.meet(central) != 1 {
            return false;
        }
        let v = p
            .vertices()
            .into_iter()
            .find(|&v| central.contains(v))
            .unwrap();
        attached.push(v);
    }
    attached.sort_unstable();
    attached.dedup();
    attached.len() == 3
        && pendants[0].is_disjoint(pendants[1])
        && pendants[0].is_disjoint(pendants[2])
        && pendants[1].is_disjoint(pendants[2])
}

/// Checks every 4-subset of edges and every choice of central edge.
pub fn naive_has_crown(g: &LinearThreeGraph) -> bool {
    let e = g.edges();
    let m = e.len();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                for l in k + 1..m {
                    let four = [&e[i], &e[j], &e[k], &e[l]];
                    for c in 0..4 {
                        let mut rest = four
                            .iter()
                            .enumerate()
                            .filter(|&(t, _)| t != c)
                            .map(|(_, e)| *e);
                        let p = [
                            rest.next().unwrap(),
                            rest.next().unwrap(),
                            rest.next().unwrap(),
                        ];
                        if is_crown_shape(four[c], p) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

fn all_triples(n: Vertex) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn pair_shared(t: &[Vertex; 3], u: &[Vertex; 3]) -> bool {
    t.iter().filter(|v| u.contains(v)).count() >= 2
}

/// Largest crown-free linear 3-graph on `n` labelled vertices, by plain
/// backtracking over all triples without any symmetry reduction.
pub fn naive_max_edges(n: Vertex) -> usize {
    fn go(
        triples: &[[Vertex; 3]],
        from: usize,
        chosen: &mut Vec<[Vertex; 3]>,
        best: &mut usize,
        n: Vertex,
    ) {
        *best = (*best).max(chosen.len());
        for i in from..triples.len() {
            let t = triples[i];
            if chosen.iter().any(|u| pair_shared(&t, u)) {
                continue;
            }
            chosen.push(t);
            let g = LinearThreeGraph::build(n as usize, chosen.iter().copied()).unwrap();
            if !naive_has_crown(&g) {
                go(triples, i + 1, chosen, best, n);
            }
            chosen.pop();
        }
    }
    let triples = all_triples(n);
    let mut best = 0;
    go(&triples, 0, &mut Vec::new(), &mut best, n);
    best
}

pub const X: Vertex = 0;
pub const Y: Vertex = 1;
pub const Z: Vertex = 2;
pub const A: Vertex = 3;
pub const B: Vertex = 4;
pub const C: Vertex = 5;
pub const D: Vertex = 6;
pub const R: Vertex = 7;
pub const S: Vertex = 8;
pub const P: Vertex = 9;
pub const Q: Vertex = 10;

pub const BASE: [Vertex; 3] = [X, Y, Z];
pub const Z_EDGES: [[Vertex; 3]; 4] = [[Z, A, B], [Z, C, D], [Z, R, S], [Z, P, Q]];
pub const Y_EDGES: [[Vertex; 3]; 4] = [[Y, A, C], [Y, B, D], [Y, R, P], [Y, S, Q]];
pub const XAD: [Vertex; 3] = [X, A, D];
pub const XBC: [Vertex; 3] = [X, B, C];
pub const XRQ: [Vertex; 3] = [X, R, Q];
pub const XSP: [Vertex; 3] = [X, S, P];

/// The 11-vertex configuration around `{x, y, z}` with the given edges at `x`
/// (besides the base edge), plus `extra` edges, on `n >= 11` vertices.
/// `y_edges` replaces the standard edges at `y` when given.
pub fn configuration(
    n: usize,
    y_edges: Option<&[[Vertex; 3]]>,
    x_edges: &[[Vertex; 3]],
    extra: &[[Vertex; 3]],
) -> LinearThreeGraph {
    let mut edges = vec![BASE];
    edges.extend(Z_EDGES);
    edges.extend(y_edges.unwrap_or(&Y_EDGES).iter().copied());
    edges.extend(x_edges.iter().copied());
    edges.extend(extra.iter().copied());
    LinearThreeGraph::build(n, edges).expect("fixture is linear")
}

/// The closed configuration with three diagonal edges at `x`.
pub fn closed_configuration() -> LinearThreeGraph {
    configuration(11, None, &[XAD, XBC, XRQ], &[])
}

/// Figure-style crown on `a..i = 0..8`.
pub fn crown_graph() -> LinearThreeGraph {
    LinearThreeGraph::build(9, [[0, 1, 2], [0, 3, 4], [1, 5, 6], [2, 7, 8]]).unwrap()
}

pub fn edge(t: [Vertex; 3]) -> Edge {
    Edge::new(t).unwrap()
}
