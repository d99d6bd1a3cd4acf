//! Central and derived series.

use super::{subgroup_generated, FiniteGroup, Subgroup};

pub fn center(group: &FiniteGroup) -> Subgroup {
    let members = group
        .elements()
        .filter(|&z| group.elements().all(|x| group.mul(z, x) == group.mul(x, z)));
    Subgroup::from_members_unchecked(group.order(), members)
}

/// `Z_0 = 1 < Z_1 = Z(G) < ...` up to the first repeated term, which is the
/// last entry.
pub fn upper_central_series(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::trivial(group)];
    loop {
        let current = series.last().expect("series is nonempty");
        let next_members: Vec<_> = group
            .elements()
            .filter(|&g| group.elements().all(|x| current.contains(group.commutator(g, x))))
            .collect();
        if next_members.len() == current.order() {
            return series;
        }
        series.push(Subgroup::from_members_unchecked(group.order(), next_members));
    }
}

pub fn hypercenter(group: &FiniteGroup) -> Subgroup {
    upper_central_series(group).pop().expect("series is nonempty")
}

/// `G = G^(0) > G' > G'' > ...` until the series stabilises.
pub fn derived_series(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::whole(group)];
    loop {
        let current = series.last().expect("series is nonempty");
        let mut commutators: Vec<_> = current
            .members()
            .iter()
            .flat_map(|&a| current.members().iter().map(move |&b| (a, b)))
            .map(|(a, b)| group.commutator(a, b))
            .collect();
        commutators.sort_unstable();
        commutators.dedup();
        let next = subgroup_generated(group, &commutators);
        if next.order() == current.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent(group: &FiniteGroup) -> bool {
    hypercenter(group).order() == group.order()
}

pub fn is_soluble(group: &FiniteGroup) -> bool {
    derived_series(group).last().is_some_and(|s| s.order() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        build_alternating, build_cyclic, build_dihedral, build_generalized_quaternion, build_symmetric,
        direct_product,
    };

    #[test]
    fn hypercenters() {
        assert_eq!(hypercenter(&build_dihedral(6).unwrap()).order(), 1);
        let g = direct_product(&build_cyclic(3).unwrap(), &build_dihedral(6).unwrap()).unwrap();
        assert_eq!(hypercenter(&g).order(), 3);
        let q8 = build_generalized_quaternion(8).unwrap();
        assert_eq!(hypercenter(&q8).order(), 8);
        assert_eq!(center(&q8).order(), 2);
    }

    #[test]
    fn series_strictly_increasing() {
        for g in [build_dihedral(16).unwrap(), build_symmetric(4).unwrap(), build_dihedral(24).unwrap()] {
            let s = upper_central_series(&g);
            for w in s.windows(2) {
                assert!(w[0].is_subset_of(&w[1]));
                assert!(w[0].order() < w[1].order());
            }
        }
    }

    #[test]
    fn nilpotent_and_soluble() {
        let q8 = build_generalized_quaternion(8).unwrap();
        assert!(is_nilpotent(&q8));
        let s4 = build_symmetric(4).unwrap();
        assert!(is_soluble(&s4));
        assert!(!is_nilpotent(&s4));
        let orders: Vec<usize> = derived_series(&s4).iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        let a5 = build_alternating(5).unwrap();
        assert!(!is_soluble(&a5));
        assert_eq!(derived_series(&a5).len(), 1);
        assert!(is_nilpotent(&build_dihedral(8).unwrap()));
    }
}
