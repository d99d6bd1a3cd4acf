//! Subgroups, normality, and small quotient isomorphism checks.

use std::collections::{HashMap, VecDeque};

use super::{AssociativityCheck, Element, FiniteGroup, Generator, GroupError};
use crate::bitset::Bitset;

/// Largest quotient order accepted by [`quotient_iso_check`].
pub const MAX_QUOTIENT_ORDER: usize = 24;

/// A subgroup given by its sorted member list.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<Element>,
    mask: Bitset,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("Subgroup").field(&self.members).finish()
    }
}

impl Subgroup {
    /// Checks closure and identity membership before accepting the set.
    pub fn new(group: &FiniteGroup, members: impl IntoIterator<Item = Element>) -> Result<Self, GroupError> {
        let sub = Self::from_members_unchecked(group.order(), members);
        if sub.is_subgroup_of(group) {
            Ok(sub)
        } else {
            Err(GroupError::NotSubgroup)
        }
    }

    pub(crate) fn from_members_unchecked(order: usize, members: impl IntoIterator<Item = Element>) -> Self {
        let mut mask = Bitset::new(order);
        for m in members {
            mask.insert(m);
        }
        Self { members: mask.iter().collect(), mask }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Self::from_members_unchecked(group.order(), [group.identity()])
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Self::from_members_unchecked(group.order(), group.elements())
    }

    fn is_subgroup_of(&self, group: &FiniteGroup) -> bool {
        self.mask.len() == group.order()
            && self.contains(group.identity())
            && self
                .members
                .iter()
                .all(|&a| self.contains(group.inv(a)) && self.members.iter().all(|&b| self.contains(group.mul(a, b))))
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: Element) -> bool {
        x < self.mask.len() && self.mask.contains(x)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Re-indexes the subgroup as a standalone group, keeping element names.
    pub fn to_group(&self, parent: &FiniteGroup, label: impl Into<String>) -> FiniteGroup {
        let pos: HashMap<Element, usize> = self.members.iter().enumerate().map(|(k, &m)| (m, k)).collect();
        let k = self.members.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &self.members {
            for &b in &self.members {
                table.push(pos[&parent.mul(a, b)] as u32);
            }
        }
        let names = self.members.iter().map(|&m| parent.element_name(m).to_string()).collect();
        let gens = parent
            .generators()
            .iter()
            .filter(|g| self.contains(g.index))
            .map(|g| Generator { name: g.name.clone(), index: pos[&g.index] })
            .collect();
        FiniteGroup::from_table(label, table, gens, names, AssociativityCheck::Sampled(0))
            .expect("closed subset of a group is a group")
    }
}

/// Closure of `seeds` under multiplication (finite, so inverses come for free).
pub fn subgroup_generated(group: &FiniteGroup, seeds: &[Element]) -> Subgroup {
    let mut mask = Bitset::new(group.order());
    mask.insert(group.identity());
    let mut queue = VecDeque::from([group.identity()]);
    let gens: Vec<Element> = seeds.iter().copied().filter(|&s| s != group.identity()).collect();
    while let Some(x) = queue.pop_front() {
        for &s in &gens {
            let y = group.mul(x, s);
            if !mask.contains(y) {
                mask.insert(y);
                queue.push_back(y);
            }
        }
    }
    Subgroup { members: mask.iter().collect(), mask }
}

pub fn is_normal(group: &FiniteGroup, sub: &Subgroup) -> bool {
    // conjugation by a generating set suffices, but generators may be absent
    let conjugators: Vec<Element> = if group.generators().is_empty() {
        group.elements().collect()
    } else {
        group.generators().iter().map(|g| g.index).collect()
    };
    if subgroup_generated(group, &conjugators).order() != group.order() {
        return group
            .elements()
            .all(|g| sub.members().iter().all(|&s| sub.contains(group.conjugate(s, g))));
    }
    conjugators
        .iter()
        .all(|&g| sub.members().iter().all(|&s| sub.contains(group.conjugate(s, g))))
}

/// The quotient `G/S` as a group on coset indices (cosets ordered by least member).
pub fn quotient_group(group: &FiniteGroup, sub: &Subgroup) -> Result<FiniteGroup, GroupError> {
    if !is_normal(group, sub) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut reps = vec![];
    for g in group.elements() {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(g);
        for &s in sub.members() {
            coset_of[group.mul(g, s)] = id;
        }
    }
    let k = reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[group.mul(a, b)] as u32);
        }
    }
    let names = reps.iter().map(|&r| format!("{}N", group.element_name(r))).collect();
    FiniteGroup::from_table(
        format!("{}/N", group.label()),
        table,
        vec![],
        names,
        AssociativityCheck::Sampled(0),
    )
}

/// Greedy small generating set: repeatedly add the element that is furthest
/// from the current span, preferring high element order.
fn small_generating_set(group: &FiniteGroup) -> Vec<Element> {
    let mut gens = vec![];
    let mut span = subgroup_generated(group, &gens);
    while span.order() < group.order() {
        let next = group
            .elements()
            .filter(|&g| !span.contains(g))
            .max_by_key(|&g| (group.element_order(g), std::cmp::Reverse(g)))
            .expect("span is proper");
        gens.push(next);
        span = subgroup_generated(group, &gens);
    }
    gens
}

/// Tries to extend `images` (for `gens`) to an isomorphism `source -> target`.
fn extend_to_isomorphism(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[Element],
    images: &[Element],
) -> bool {
    let n = source.order();
    let mut phi = vec![usize::MAX; n];
    phi[source.identity()] = target.identity();
    let mut queue = VecDeque::from([source.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = source.mul(x, g);
            let fy = target.mul(phi[x], img);
            if phi[y] == usize::MAX {
                phi[y] = fy;
                queue.push_back(y);
            } else if phi[y] != fy {
                return false;
            }
        }
    }
    let mut hit = vec![false; target.order()];
    for &v in &phi {
        if v == usize::MAX || hit[v] {
            return false;
        }
        hit[v] = true;
    }
    source
        .elements()
        .all(|a| source.elements().all(|b| phi[source.mul(a, b)] == target.mul(phi[a], phi[b])))
}

/// Generator-image backtracking isomorphism test for small groups.
pub fn groups_isomorphic_small(source: &FiniteGroup, target: &FiniteGroup) -> Result<bool, GroupError> {
    if source.order() > MAX_QUOTIENT_ORDER {
        return Err(GroupError::QuotientTooLarge(source.order()));
    }
    if source.order() != target.order() || source.order_census() != target.order_census() {
        return Ok(false);
    }
    let gens = small_generating_set(source);
    let orders: Vec<usize> = gens.iter().map(|&g| source.element_order(g)).collect();
    let candidates: Vec<Vec<Element>> = orders
        .iter()
        .map(|&o| target.elements().filter(|&t| target.element_order(t) == o).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search_images(source, target, &gens, &candidates, &mut images))
}

fn search_images(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[Element],
    candidates: &[Vec<Element>],
    images: &mut Vec<Element>,
) -> bool {
    let depth = images.len();
    if depth == gens.len() {
        return extend_to_isomorphism(source, target, gens, images);
    }
    for &c in &candidates[depth] {
        images.push(c);
        if search_images(source, target, gens, candidates, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Whether `G/S` is isomorphic to `target` (quotients of order at most 24).
pub fn quotient_iso_check(group: &FiniteGroup, sub: &Subgroup, target: &FiniteGroup) -> Result<bool, GroupError> {
    let k = group.order() / sub.order();
    if k > MAX_QUOTIENT_ORDER {
        return Err(GroupError::QuotientTooLarge(k));
    }
    let quotient = quotient_group(group, sub)?;
    groups_isomorphic_small(&quotient, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_cyclic, build_dihedral, build_frobenius, build_symmetric, direct_product, hypercenter};

    #[test]
    fn cyclic_part_of_dihedral() {
        let d24 = build_dihedral(24).unwrap();
        let y = d24.generator("y").unwrap();
        let sub = subgroup_generated(&d24, &[y]);
        assert_eq!(sub.order(), 12);
        assert!(is_normal(&d24, &sub));
        assert_eq!(subgroup_generated(&d24, &[d24.identity()]).order(), 1);
    }

    #[test]
    fn subgroup_validation() {
        let d6 = build_dihedral(6).unwrap();
        assert!(Subgroup::new(&d6, [0, 1]).is_err());
        assert!(Subgroup::new(&d6, [0, 1, 2]).is_ok());
        let refl = Subgroup::new(&d6, [0, 3]).unwrap();
        assert!(!is_normal(&d6, &refl));
        assert_eq!(quotient_group(&d6, &refl), Err(GroupError::NotNormal));
    }

    #[test]
    fn quotient_by_hypercenter() {
        let c3 = build_cyclic(3).unwrap();
        let d6 = build_dihedral(6).unwrap();
        let g = direct_product(&c3, &d6).unwrap();
        let z = hypercenter(&g);
        assert_eq!(z.order(), 3);
        assert!(quotient_iso_check(&g, &z, &d6).unwrap());
        assert!(!quotient_iso_check(&g, &z, &build_cyclic(6).unwrap()).unwrap());
    }

    #[test]
    fn small_isomorphisms() {
        let f25 = build_frobenius(2, 5, None).unwrap();
        let d10 = build_dihedral(10).unwrap();
        assert!(groups_isomorphic_small(&f25, &d10).unwrap());
        let s3 = build_symmetric(3).unwrap();
        assert!(groups_isomorphic_small(&s3, &build_dihedral(6).unwrap()).unwrap());
        let big = build_dihedral(48).unwrap();
        assert!(groups_isomorphic_small(&big, &big).is_err());
    }

    #[test]
    fn subgroup_to_group_keeps_names() {
        let s4 = build_symmetric(4).unwrap();
        let v4 = Subgroup::new(
            &s4,
            ["()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"].map(|n| s4.element_by_name(n).unwrap()),
        )
        .unwrap();
        let g = v4.to_group(&s4, "V4");
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert_eq!(g.element_name(0), "()");
    }
}
