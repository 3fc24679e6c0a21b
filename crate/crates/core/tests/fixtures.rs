use cmpowers::census::enumerate_graphs;
use cmpowers::cohomology::{depth, krull_dim, LocalCohomology};
use cmpowers::cover::{
    first_failure, ideal_star, is_standard_graded, is_standard_graded_by_decomposition,
};
use cmpowers::graph::{criteria, ordinary_power, symbolic_power, Diameter, GraphClass};
use cmpowers::homology::reduced_homology_dims;
use cmpowers::simplicial::delta_a;
use cmpowers::{AmbientContext, DegreeVector, Graph, Monomial, MonomialIdeal, SimplicialComplex};

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        AmbientContext::with_vars(n).unwrap(),
        gens.iter().map(|g| Monomial::new(g.to_vec())),
    )
    .unwrap()
}

#[test]
fn census_sizes() {
    let counts: Vec<usize> = (3..=5)
        .map(|n| enumerate_graphs(n).unwrap().count())
        .collect();
    assert_eq!(counts, vec![4, 41, 768]);
}

#[test]
fn complete_graph_on_four_vertices() {
    let k4 = Graph::complete(4).unwrap();
    let f = Monomial::new(vec![2, 2, 2, 1]);
    assert!(symbolic_power(&k4, 3).contains(&f));
    assert!(!ordinary_power(&k4, 3).contains(&f));
    // the triangle ideal: generators are the four triangles
    assert_eq!(symbolic_power(&k4, 1).generators().len(), 4);
}

#[test]
fn four_cycle_powers() {
    let c4 = Graph::cycle(4).unwrap();
    let i3 = symbolic_power(&c4, 3);
    assert_eq!(krull_dim(&i3).unwrap(), 2);
    assert_eq!(depth(&i3).unwrap(), 2);
    // I_C4 = (x1x3, x2x4)
    assert!(symbolic_power(&c4, 1).equals(&ideal(4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]])));
}

#[test]
fn five_cycle_third_symbolic_power() {
    let c5 = Graph::cycle(5).unwrap();
    assert_eq!(c5.diameter(), Diameter::Finite(2));
    assert!(!c5.disjoint_pairs_in_4cycles());
    let i3 = symbolic_power(&c5, 3);
    let report = LocalCohomology::new(&i3).unwrap().depth_report();
    assert_eq!((report.depth, report.krull_dim), (1, 2));

    // a degree where Δ_a splits into two pieces
    let a = DegreeVector::new(vec![2, 0, 1, 1, 0]);
    let d = delta_a(&i3, &a);
    assert_eq!(d.facet_lists(), vec![vec![1, 2], vec![1, 5], vec![3, 4]]);
    assert_eq!(reduced_homology_dims(&d, 0).dim(0), 1);

    // the same a spread over a longer stretch keeps Δ_a connected
    let b = DegreeVector::new(vec![1, 1, 2, 0, 0]);
    assert!(delta_a(&i3, &b).is_connected());
}

#[test]
fn path_on_four_vertices() {
    let p4 = Graph::path(4).unwrap();
    assert_eq!(p4.diameter(), Diameter::Finite(3));
    for m in 2..=3 {
        assert!(symbolic_power(&p4, m).equals(&ordinary_power(&p4, m)));
    }
    let c = criteria(&p4, 2).unwrap();
    assert!(!c.cm_sym2 && c.eq2 && c.eq_high && !c.cm_ord2);
}

/// The path on five vertices has the non-edge triangle {1,3,5}, so the
/// second symbolic power holds a cubic while I^2 starts in degree 4. The
/// combinatorial criterion for I^(2) = I^2 still lists this graph.
#[test]
fn path_on_five_vertices_has_unequal_second_powers() {
    let p5 = Graph::path(5).unwrap();
    assert_eq!(p5.classify(), GraphClass::Path);
    let f = Monomial::squarefree(5, &[1, 3, 5]);
    assert!(symbolic_power(&p5, 2).contains(&f));
    assert_eq!(ordinary_power(&p5, 2).min_degree(), Some(4));
    assert!(!ordinary_power(&p5, 2).contains(&f));
    assert!(criteria(&p5, 2).unwrap().eq2);
}

/// A star with three leaves is a pure 1-dimensional complex on 4 vertices
/// whose cover ideal is the complete intersection (x1, x2x3x4).
#[test]
fn star_cover_algebra_is_standard_graded() {
    let star =
        SimplicialComplex::from_facet_lists(4, &[vec![1, 2], vec![1, 3], vec![1, 4]]).unwrap();
    let cover = ideal_star(&star).unwrap();
    assert!(cover.equals(&ideal(4, &[&[1, 0, 0, 0], &[0, 1, 1, 1]])));
    assert!(is_standard_graded(&star, 4).unwrap());
    assert!(is_standard_graded_by_decomposition(&star, 4).unwrap());
}

#[test]
fn five_cycle_cover_algebra_fails_in_degree_two() {
    let c5 = SimplicialComplex::from_facet_lists(
        5,
        &[vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![1, 5]],
    )
    .unwrap();
    let (m, w) = first_failure(&c5, 4).unwrap().unwrap();
    assert_eq!(m, 2);
    assert_eq!(w, Monomial::new(vec![1, 1, 1, 1, 1]));
}

#[test]
fn disconnected_graph_has_infinite_diameter() {
    let two = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
    assert_eq!(two.diameter(), Diameter::Infinite);
    assert_eq!(two.classify(), GraphClass::TwoDisjointEdges);
    assert!(symbolic_power(&two, 3).equals(&ordinary_power(&two, 3)));
}

#[test]
fn invalid_graphs_are_rejected() {
    assert!(Graph::new(4, [(1, 2), (2, 3)]).is_err()); // vertex 4 isolated
    assert!(Graph::new(3, [(1, 1), (2, 3)]).is_err());
    assert!(Graph::new(3, [(1, 2), (1, 2), (2, 3)]).is_err());
    assert!(Graph::new(2, [(1, 2)]).is_err());
    assert!("n 3\n1 2\n2 x\n".parse::<Graph>().is_err());
}

#[test]
fn cohen_macaulay_verdicts_agree_in_characteristic_two() {
    let depth_of = |i: &MonomialIdeal| LocalCohomology::new(i).unwrap().depth_report().depth;
    for n in 4..=5 {
        let char2 = AmbientContext::new(n, 2).unwrap();
        for g in enumerate_graphs(n).unwrap() {
            for m in 2..=3 {
                let sym = symbolic_power(&g, m);
                let sym2 =
                    MonomialIdeal::minimalize(char2, sym.generators().iter().cloned()).unwrap();
                assert_eq!(sym2.ambient().field_char(), 2);
                assert_eq!(depth_of(&sym), depth_of(&sym2), "{:?} m={m}", g.edges());
            }
        }
    }
}
