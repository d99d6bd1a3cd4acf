use proptest::prelude::*;

use engel_lab::analysis::recognize_complete_multipartite;
use engel_lab::cli::GroupSpec;
use engel_lab::engel::{engel_commutator, engel_verdict, EngelTable};
use engel_lab::graph::SimpleGraph;
use engel_lab::group::{hypercenter, FiniteGroup};

fn leaf() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1usize..13).prop_map(GroupSpec::Cyclic),
        (3usize..16).prop_map(|n| GroupSpec::Dihedral(2 * n)),
        (2usize..9).prop_map(|n| GroupSpec::Quaternion(4 * n)),
        prop::sample::select(vec![(2usize, 3usize), (2, 5), (3, 7), (2, 7), (5, 11)])
            .prop_map(|(p, q)| GroupSpec::Frobenius { p, q, r: None }),
        (2usize..5).prop_map(GroupSpec::Symmetric),
        (3usize..6).prop_map(GroupSpec::Alternating),
    ]
}

fn small_group() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        3 => leaf(),
        1 => (leaf(), leaf())
            .prop_filter("order at most 120", |(a, b)| a.order() * b.order() <= 120)
            .prop_map(|(a, b)| GroupSpec::Product(vec![a, b])),
    ]
}

fn group_with_elements() -> impl Strategy<Value = (GroupSpec, FiniteGroup, usize, usize, usize)> {
    small_group().prop_flat_map(|spec| {
        let g = spec.build().unwrap();
        let n = g.order();
        (Just(spec), Just(g), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_axioms((spec, g, a, b, c) in group_with_elements()) {
        prop_assert_eq!(g.order(), spec.order());
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.identity()), a);
        prop_assert_eq!(g.mul(g.inv(a), a), g.identity());
        prop_assert_eq!(g.order() % g.element_order(a), 0);
        prop_assert_eq!(g.commutator(a, b), g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }

    #[test]
    fn engel_sequences_stay_at_the_identity((_spec, g, x, y, _c) in group_with_elements()) {
        let v = engel_verdict(&g, x, y);
        let table = EngelTable::build(&g);
        prop_assert_eq!(v.terminates, table.terminates(x, y));
        if let Some(k) = v.first_k {
            prop_assert!((1..k).all(|j| engel_commutator(&g, x, y, j) != g.identity()));
            for m in k..=k + g.order() {
                prop_assert_eq!(engel_commutator(&g, x, y, m), g.identity());
            }
        } else {
            let period = v.cycle_length.unwrap();
            prop_assert!((1..=g.order() + period).all(|k| engel_commutator(&g, x, y, k) != g.identity()));
        }
    }

    /// Co-Engel adjacency survives multiplication by hypercentral elements.
    #[test]
    fn hypercentre_shifts_preserve_adjacency((_spec, g, x, y, _c) in group_with_elements()) {
        let table = EngelTable::build(&g);
        if table.co_engel_adjacent(x, y) {
            let z = hypercenter(&g);
            for &z1 in z.members() {
                for &z2 in z.members() {
                    prop_assert!(table.co_engel_adjacent(g.mul(x, z1), g.mul(y, z2)));
                }
            }
        }
    }

    #[test]
    fn spec_strings_round_trip(spec in small_group()) {
        let text = spec.to_string();
        prop_assert_eq!(text.parse::<GroupSpec>().unwrap(), spec);
    }

    #[test]
    fn multipartite_round_trip(parts in proptest::collection::vec(1usize..6, 2..7)) {
        let shape = recognize_complete_multipartite(&SimpleGraph::complete_multipartite(&parts)).unwrap();
        let mut sorted = parts.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(shape.n_vertices(), parts.iter().sum::<usize>());
        prop_assert_eq!(shape.is_uniform, sorted.windows(2).all(|w| w[0] == w[1]));
        prop_assert_eq!(shape.parts, sorted);
    }
}
