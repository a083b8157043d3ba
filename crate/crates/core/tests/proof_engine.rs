mod common;

use common::*;
use crown_turan::proof::{
    analyze_554, decompose, extract_crown_642, find_light_edge, peel, Branch, Conclusion, HClass,
    LemmaOutcome, ProofError, Roles, WeightScheme,
};
use crown_turan::{find_crown_exhaustive, is_crown_free, verify_crown, LinearThreeGraph};
use num::BigRational;

fn base_roles(g: &LinearThreeGraph) -> Roles {
    let roles = Roles::of(g, &edge(BASE)).unwrap();
    assert_eq!((roles.x, roles.y, roles.z), (X, Y, Z));
    roles
}

fn expect_crown(g: &LinearThreeGraph, expected: Branch) {
    assert!(naive_has_crown(g));
    assert!(find_crown_exhaustive(g).is_some());
    match analyze_554(g, &edge(BASE), base_roles(g)).unwrap() {
        LemmaOutcome::Crown {
            certificate,
            branch,
        } => {
            assert_eq!(branch, expected);
            assert!(verify_crown(g, &certificate).is_ok());
        }
        LemmaOutcome::Closed(_) => panic!("expected a crown from branch {expected}"),
    }
}

#[test]
fn greedy_crown_on_minimal_witness() {
    let mut edges = vec![[0, 1, 2], [0, 3, 4], [1, 5, 6], [1, 7, 8], [1, 9, 10]];
    edges.extend((0..5).map(|i| [2, 11 + 2 * i, 12 + 2 * i]));
    let g = LinearThreeGraph::build(21, edges).unwrap();
    let roles = Roles::of(&g, &edge([0, 1, 2])).unwrap();
    let cert = extract_crown_642(&g, &edge([0, 1, 2]), roles).unwrap();
    assert!(verify_crown(&g, &cert).is_ok());
    assert_eq!(cert.central, edge([0, 1, 2]));
}

#[test]
fn greedy_crown_with_blocking_edges() {
    let g = LinearThreeGraph::build(
        17,
        [
            [0, 1, 2],
            [0, 5, 7],
            [1, 5, 6],
            [1, 7, 8],
            [1, 9, 10],
            [2, 5, 9],
            [2, 7, 10],
            [2, 11, 12],
            [2, 13, 14],
            [2, 15, 16],
        ],
    )
    .unwrap();
    let roles = Roles::of(&g, &edge([0, 1, 2])).unwrap();
    assert_eq!((roles.x, roles.y, roles.z), (0, 1, 2));
    let cert = extract_crown_642(&g, &edge([0, 1, 2]), roles).unwrap();
    assert!(verify_crown(&g, &cert).is_ok());
    assert_eq!(cert.pendants[0].edge, edge([0, 5, 7]));
    assert_eq!(cert.pendants[1].edge, edge([1, 9, 10]));
}

#[test]
fn greedy_crown_needs_a_high_degree_vertex() {
    let g = closed_configuration();
    let err = extract_crown_642(&g, &edge(BASE), base_roles(&g)).unwrap_err();
    assert!(matches!(err, ProofError::ContractViolation(_)), "{err}");
}

#[test]
fn closed_configuration_is_closed() {
    for (g, edges) in [
        (closed_configuration(), 12),
        (configuration(11, None, &[XAD, XBC, XRQ, XSP], &[]), 13),
    ] {
        assert!(is_crown_free(&g) && !naive_has_crown(&g));
        let LemmaOutcome::Closed(s) = analyze_554(&g, &edge(BASE), base_roles(&g)).unwrap() else {
            panic!("expected a closed component");
        };
        assert_eq!(s.s_vertices.len(), 11);
        assert_eq!(s.s_edges.len(), edges);
        assert_eq!(s.h_class, HClass::C4PlusC4);
        assert!(s.outer_edges.is_empty());
        assert!(s.verify_closed(&g).is_ok());
        assert!(s.s_vertices.iter().all(|&v| g.degree(v).unwrap() <= 5));
    }
}

#[test]
fn neighborhoods_of_y_and_z_differ() {
    let ys = [Y_EDGES[0], Y_EDGES[1], Y_EDGES[2], [Y, S, 11]];
    expect_crown(
        &configuration(12, Some(&ys), &[XAD, XBC, XRQ], &[]),
        Branch::NeighborhoodsDiffer,
    );
}

#[test]
fn x_edge_leaves_neighborhood() {
    expect_crown(
        &configuration(12, None, &[XAD, XBC, [X, R, 11]], &[]),
        Branch::XEdgeEscapes,
    );
}

#[test]
fn disjoint_triple_with_two_four_cycles() {
    expect_crown(
        &configuration(11, None, &[[X, A, R], [X, B, S], [X, C, Q]], &[]),
        Branch::DisjointTriple,
    );
}

#[test]
fn disjoint_triple_with_eight_cycle() {
    let ys = [[Y, A, C], [Y, D, R], [Y, S, P], [Y, Q, B]];
    expect_crown(
        &configuration(11, Some(&ys), &[XAD, [X, B, S], [X, C, Q]], &[]),
        Branch::DisjointTriple,
    );
}

#[test]
fn x_edge_mixing_halves() {
    expect_crown(
        &configuration(11, None, &[XAD, [X, B, R], XSP], &[]),
        Branch::MixedXEdge,
    );
}

#[test]
fn outer_edge_through_one_vertex() {
    expect_crown(
        &configuration(13, None, &[XAD, XBC, XRQ], &[[A, 11, 12]]),
        Branch::OuterSingle,
    );
}

#[test]
fn outer_edge_through_diagonal() {
    expect_crown(
        &configuration(12, None, &[XBC, XRQ, XSP], &[[A, D, 11]]),
        Branch::OuterDiagonal,
    );
}

#[test]
fn outer_edge_across_halves() {
    expect_crown(
        &configuration(12, None, &[XAD, XBC, XRQ], &[[A, R, 11]]),
        Branch::OuterCross,
    );
    expect_crown(
        &configuration(12, None, &[XAD, XRQ, XSP], &[[A, R, 11]]),
        Branch::OuterCross,
    );
}

#[test]
fn rejects_wrong_degrees() {
    let g = crown_graph();
    let roles = Roles::of(&g, &edge([0, 1, 2])).unwrap();
    let err = analyze_554(&g, &edge([0, 1, 2]), roles).unwrap_err();
    assert!(matches!(err, ProofError::PreconditionViolated(_)));
}

fn closed_component_of(g: &LinearThreeGraph) -> crown_turan::proof::NeighborhoodStructure {
    match analyze_554(g, &edge(BASE), base_roles(g)).unwrap() {
        LemmaOutcome::Closed(s) => s,
        LemmaOutcome::Crown { branch, .. } => panic!("unexpected crown from {branch}"),
    }
}

#[test]
fn peel_examples() {
    let g = closed_configuration();
    let (rest, kept) = peel(&g, &closed_component_of(&g)).unwrap();
    assert_eq!((rest.n(), rest.edge_count()), (0, 0));
    assert!(kept.is_empty());

    let single = LinearThreeGraph::build(3, [[0, 1, 2]]).unwrap();
    let g = closed_configuration().disjoint_union(&single);
    let (rest, kept) = peel(&g, &closed_component_of(&g)).unwrap();
    assert_eq!((rest.n(), rest.edge_count()), (3, 1));
    assert_eq!(kept, vec![11, 12, 13]);
    assert_eq!(rest.high_degree_count(), g.high_degree_count());
}

#[test]
fn peel_rejects_open_component() {
    let closed = closed_configuration();
    let component = closed_component_of(&closed);
    let g = configuration(13, None, &[XAD, XBC, XRQ], &[[A, 11, 12]]);
    assert!(matches!(
        peel(&g, &component),
        Err(ProofError::PreconditionViolated(_))
    ));
}

/// Six edges through vertex 0 plus a dense crown-free part keeps s = 1.
fn star(spokes: u32) -> LinearThreeGraph {
    LinearThreeGraph::build(
        1 + 2 * spokes as usize,
        (0..spokes).map(|i| [0, 1 + 2 * i, 2 + 2 * i]),
    )
    .unwrap()
}

#[test]
fn decompose_examples() {
    let out = decompose(&LinearThreeGraph::empty(0), WeightScheme::Theorem1).unwrap();
    assert!(out.trace.is_empty());
    assert!(matches!(out.conclusion, Conclusion::BoundSatisfied { .. }));

    let out = decompose(&closed_configuration(), WeightScheme::Theorem1).unwrap();
    assert!(matches!(
        out.conclusion,
        Conclusion::BoundSatisfied {
            vertices: 11,
            edges: 12,
            high_degree: 0
        }
    ));

    let three_stars = star(6).disjoint_union(&star(6)).disjoint_union(&star(6));
    assert_eq!(three_stars.high_degree_count(), 3);
    assert!(matches!(
        decompose(&three_stars, WeightScheme::Theorem2),
        Err(ProofError::SchemeInapplicable { high_degree: 3 })
    ));
}

/// Lines of the projective space over GF(2) in dimension 3: points are the
/// nonzero vectors `1..=15`, lines are `{u, v, u ^ v}`.
fn projective_triple_system() -> LinearThreeGraph {
    let mut lines = Vec::new();
    for u in 1u32..16 {
        for v in u + 1..16 {
            let w = u ^ v;
            if w > v {
                lines.push([u - 1, v - 1, w - 1]);
            }
        }
    }
    LinearThreeGraph::build(15, lines).unwrap()
}

#[test]
fn decompose_peels_then_finds_crown() {
    let dense = projective_triple_system();
    assert_eq!(dense.edge_count(), 35);
    let mut g = closed_configuration();
    for _ in 0..2 {
        g = g.disjoint_union(&closed_configuration());
    }
    let g = g.disjoint_union(&dense);
    assert!(WeightScheme::Theorem1.exceeds_bound(g.edge_count(), g.n(), g.high_degree_count()));
    let out = decompose(&g, WeightScheme::Theorem1).unwrap();
    assert_eq!(out.trace.len(), 3);
    for (k, step) in out.trace.iter().enumerate() {
        assert_eq!(step.branch, Branch::Closed);
        assert_eq!(
            step.light_edge,
            edge([11 * k as u32, 11 * k as u32 + 1, 11 * k as u32 + 2])
        );
        assert_eq!(
            step.peeled_vertices,
            (11 * k as u32..11 * k as u32 + 11).collect::<Vec<_>>()
        );
    }
    let Conclusion::Crown { branch, .. } = out.conclusion else {
        panic!("expected a crown");
    };
    assert_eq!(branch, Branch::Greedy642);
    assert!(verify_crown(&g, out.certificate().unwrap()).is_ok());
    assert_eq!(
        out.trace_json(),
        decompose(&g, WeightScheme::Theorem1).unwrap().trace_json()
    );
}

#[test]
fn light_edge_exists_above_bound() {
    for seed in 0..100 {
        let g = crown_turan::search::random_linear(12, seed, None);
        let s = g.high_degree_count();
        if WeightScheme::Theorem1.exceeds_bound(g.edge_count(), g.n(), s) {
            let light = find_light_edge(&g, WeightScheme::Theorem1).unwrap();
            assert!(WeightScheme::Theorem1.is_light(light.degrees));
        }
        let total = crown_turan::weighted_sum_identity(&g, WeightScheme::Theorem1);
        let expected = (g.n() - s - g.isolated_count()) as i64;
        assert_eq!(total, BigRational::from_integer(expected.into()));
    }
}
