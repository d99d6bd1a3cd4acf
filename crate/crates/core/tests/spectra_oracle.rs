//! Matrix-route spectra of reduced co-Engel graphs against the closed forms
//! for `K_n` and `K_{a*b}`.

use proptest::prelude::*;

use engel_lab::analysis::recognize_complete_multipartite;
use engel_lab::engel::reduced_co_engel_graph;
use engel_lab::graph::SimpleGraph;
use engel_lab::group::{
    build_cyclic, build_dihedral, build_frobenius, build_generalized_quaternion, direct_product, FiniteGroup,
};
use engel_lab::spectra::{
    adjacency_matrix, char_poly_exact, char_poly_faddeev, closed_form_spectra, laplacian_matrix, spectrum_report,
    ClosedFormFamily,
};

fn groups() -> Vec<FiniteGroup> {
    let mut out = vec![];
    for t in 1..=3u32 {
        for m in [3usize, 5, 7, 9] {
            let order = (1 << (t + 1)) * m;
            out.push(build_dihedral(order).unwrap());
            out.push(build_generalized_quaternion(order).unwrap());
        }
    }
    for m in [3, 5, 7, 9] {
        out.push(build_dihedral(2 * m).unwrap());
    }
    for (p, q) in [(2, 3), (2, 5), (2, 7), (3, 7), (3, 13), (5, 11)] {
        out.push(build_frobenius(p, q, None).unwrap());
    }
    let d6 = build_dihedral(6).unwrap();
    out.push(direct_product(&build_cyclic(3).unwrap(), &d6).unwrap());
    out.push(direct_product(&build_cyclic(2).unwrap(), &d6).unwrap());
    out
}

#[test]
fn closed_forms_match_matrix_route() {
    for g in groups() {
        let graph = reduced_co_engel_graph(&g).unwrap();
        let shape = recognize_complete_multipartite(&graph).unwrap();
        let closed = closed_form_spectra(ClosedFormFamily::from_shape(&shape).unwrap()).unwrap();
        let computed = spectrum_report(&graph).unwrap();
        assert_eq!(computed, closed, "{}", g.label());
        assert!(computed.super_integral);
        assert!(computed.energies().unwrap().ele_holds);
    }
}

fn random_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            SimpleGraph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Coefficient identities that hold whether or not the spectrum is integral.
    #[test]
    fn trace_identities(graph in random_graph()) {
        let n = graph.n_vertices();
        let e = graph.edge_count() as i64;
        let a = char_poly_exact(&adjacency_matrix(&graph));
        let l = char_poly_exact(&laplacian_matrix(&graph));
        prop_assert_eq!(a.degree(), n);
        prop_assert!(a.is_monic() && l.is_monic());
        let coeff = |p: &engel_lab::spectra::IntPolynomial, k: usize| p.coeffs()[k].clone();
        // trace A = 0, and the sum of 2x2 principal minors of A is -e
        prop_assert_eq!(coeff(&a, n - 1), 0.into());
        if n >= 2 {
            prop_assert_eq!(coeff(&a, n - 2), (-e).into());
        }
        prop_assert_eq!(coeff(&l, n - 1), (-2 * e).into());
        // multiplicity of the Laplacian eigenvalue 0 is the number of components
        let zero_mult = l.coeffs().iter().take_while(|c| **c == 0.into()).count();
        prop_assert_eq!(zero_mult, graph.components().len());
        prop_assert_eq!(char_poly_faddeev(&laplacian_matrix(&graph)), l);
    }

    #[test]
    fn integral_spectra_sum_to_traces(a in 1usize..7, b in 1usize..5) {
        let graph = SimpleGraph::complete_multipartite(&vec![b; a]);
        let report = spectrum_report(&graph).unwrap();
        let sum = |s: &engel_lab::spectra::IntegerSpectrum| s.roots.iter().map(|&(r, m)| r * m as i64).sum::<i64>();
        let e = graph.edge_count() as i64;
        prop_assert_eq!(sum(report.adjacency.spectrum.as_ref().unwrap()), 0);
        prop_assert_eq!(sum(report.laplacian.spectrum.as_ref().unwrap()), 2 * e);
        prop_assert_eq!(sum(report.signless.spectrum.as_ref().unwrap()), 2 * e);
        prop_assert_eq!(report.laplacian.spectrum.as_ref().unwrap().multiplicity(0), graph.components().len());
    }
}
