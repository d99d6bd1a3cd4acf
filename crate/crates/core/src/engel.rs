//! Engel commutators and the graphs built from them.
//!
//! For `x, y` in a group write `[x, _1 y] = [x, y]` and
//! `[x, _{k+1} y] = [[x, _k y], y]`. In a finite group this sequence is
//! eventually periodic, and once it hits the identity it stays there.
//! [`engel_verdict`] follows one sequence; [`EngelTable`] answers the
//! "does it ever reach 1" question for every ordered pair at once by walking
//! the functional graph of `a -> [a, y]` backwards from the identity.

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::bitset::Bitset;
use crate::graph::{DirectedGraph, SimpleGraph};
use crate::group::{
    is_nilpotent, is_normal, subgroup_generated, Element, FiniteGroup, Subgroup,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngelError {
    #[error("{0} is an Engel group: the reduced co-Engel graph has an empty vertex set")]
    EmptyVertexSet(String),
}

/// Outcome of iterating `[x, _k y]`.
///
/// Exactly one of `first_k` / `cycle_length` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngelVerdict {
    pub terminates: bool,
    /// Least `k >= 1` with `[x, _k y] = 1`.
    pub first_k: Option<usize>,
    /// Period of the tail when the identity is never reached.
    pub cycle_length: Option<usize>,
}

/// Follows `a_1 = [x, y]`, `a_{k+1} = [a_k, y]` until the identity or a repeat.
pub fn engel_verdict(group: &FiniteGroup, x: Element, y: Element) -> EngelVerdict {
    let mut first_seen: HashMap<Element, usize> = HashMap::new();
    let mut a = group.commutator(x, y);
    let mut k = 1;
    loop {
        if a == group.identity() {
            return EngelVerdict { terminates: true, first_k: Some(k), cycle_length: None };
        }
        if let Some(&earlier) = first_seen.get(&a) {
            return EngelVerdict { terminates: false, first_k: None, cycle_length: Some(k - earlier) };
        }
        first_seen.insert(a, k);
        assert!(k <= group.order(), "Engel sequence longer than the group order");
        a = group.commutator(a, y);
        k += 1;
    }
}

/// `[x, _k y]` for a fixed `k`.
pub fn engel_commutator(group: &FiniteGroup, x: Element, y: Element, k: usize) -> Element {
    let mut a = x;
    for _ in 0..k {
        a = group.commutator(a, y);
    }
    a
}

/// Termination of every Engel sequence of a group.
#[derive(Debug, Clone)]
pub struct EngelTable {
    // reaches[y] has bit x iff [x, _k y] = 1 for some k >= 1
    reaches: Vec<Bitset>,
}

impl EngelTable {
    pub fn build(group: &FiniteGroup) -> Self {
        let reaches = group
            .elements()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|y| identity_basin(group, y))
            .collect();
        Self { reaches }
    }

    pub fn order(&self) -> usize {
        self.reaches.len()
    }

    /// Whether `[x, _k y] = 1` for some `k`.
    pub fn terminates(&self, x: Element, y: Element) -> bool {
        self.reaches[y].contains(x)
    }

    /// Elements `x` whose sequence over `y` reaches the identity.
    pub fn basin(&self, y: Element) -> &Bitset {
        &self.reaches[y]
    }

    pub fn is_left_engel(&self, y: Element) -> bool {
        self.reaches[y].count() == self.order()
    }

    pub fn left_engel_set(&self) -> Vec<Element> {
        (0..self.order()).filter(|&y| self.is_left_engel(y)).collect()
    }

    /// Co-Engel adjacency: neither sequence ever reaches the identity.
    pub fn co_engel_adjacent(&self, x: Element, y: Element) -> bool {
        x != y && !self.terminates(x, y) && !self.terminates(y, x)
    }
}

/// Elements `x` with `[x, _k y] = 1` for some `k >= 1`: reverse reachability
/// from the identity under `a -> [a, y]`.
fn identity_basin(group: &FiniteGroup, y: Element) -> Bitset {
    let n = group.order();
    let step: Vec<Element> = group.elements().map(|a| group.commutator(a, y)).collect();
    let mut preimages: Vec<Vec<Element>> = vec![vec![]; n];
    for (a, &b) in step.iter().enumerate() {
        preimages[b].push(a);
    }
    let mut basin = Bitset::new(n);
    basin.insert(group.identity());
    let mut stack = vec![group.identity()];
    while let Some(b) = stack.pop() {
        for &a in &preimages[b] {
            if !basin.contains(a) {
                basin.insert(a);
                stack.push(a);
            }
        }
    }
    basin
}

/// `L(G)`, the left Engel elements, in ascending index order.
pub fn left_engel_set(group: &FiniteGroup) -> Vec<Element> {
    EngelTable::build(group).left_engel_set()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FittingViolation {
    #[error("left Engel set is not a subgroup")]
    NotSubgroup,
    #[error("left Engel set is not normal")]
    NotNormal,
    #[error("left Engel set is not nilpotent")]
    NotNilpotent,
    #[error("<L(G), {0}> is a larger normal nilpotent subgroup")]
    NotMaximal(Element),
}

/// Checks that `L(G)` is a normal nilpotent subgroup and that no subgroup
/// `<L(G), g>` with `g` outside it is both normal and nilpotent.
pub fn validate_left_engel_set(group: &FiniteGroup, left: &[Element]) -> Result<Subgroup, FittingViolation> {
    let sub = Subgroup::new(group, left.iter().copied()).map_err(|_| FittingViolation::NotSubgroup)?;
    if !is_normal(group, &sub) {
        return Err(FittingViolation::NotNormal);
    }
    if !is_nilpotent(&sub.to_group(group, "L")) {
        return Err(FittingViolation::NotNilpotent);
    }
    let mut seeds = left.to_vec();
    // <L(G), g> depends only on the coset g L(G)
    let mut covered = Bitset::new(group.order());
    for &x in sub.members() {
        covered.insert(x);
    }
    for g in group.elements() {
        if covered.contains(g) {
            continue;
        }
        for &x in sub.members() {
            covered.insert(group.mul(g, x));
        }
        seeds.push(g);
        let bigger = subgroup_generated(group, &seeds);
        seeds.pop();
        if is_normal(group, &bigger) && is_nilpotent(&bigger.to_group(group, "H")) {
            return Err(FittingViolation::NotMaximal(g));
        }
    }
    Ok(sub)
}

pub fn co_engel_graph_from(group: &FiniteGroup, table: &EngelTable) -> SimpleGraph {
    let n = group.order();
    let mut graph = SimpleGraph::empty(n).with_labels(group.element_names().to_vec());
    for x in 0..n {
        for y in x + 1..n {
            if table.co_engel_adjacent(x, y) {
                graph.add_edge(x, y);
            }
        }
    }
    graph
}

/// The co-Engel graph on all of `G`.
pub fn co_engel_graph(group: &FiniteGroup) -> SimpleGraph {
    co_engel_graph_from(group, &EngelTable::build(group))
}

pub fn reduced_co_engel_graph_from(group: &FiniteGroup, table: &EngelTable) -> Result<SimpleGraph, EngelError> {
    let full = co_engel_graph_from(group, table);
    let outside: Vec<Element> = group.elements().filter(|&x| !table.is_left_engel(x)).collect();
    if outside.is_empty() {
        return Err(EngelError::EmptyVertexSet(group.label().to_string()));
    }
    Ok(full.induced_subgraph(&outside))
}

/// The co-Engel graph induced on `G \ L(G)`, vertices in ascending element order.
pub fn reduced_co_engel_graph(group: &FiniteGroup) -> Result<SimpleGraph, EngelError> {
    reduced_co_engel_graph_from(group, &EngelTable::build(group))
}

pub fn directed_engel_graph_from(group: &FiniteGroup, table: &EngelTable) -> DirectedGraph {
    let n = group.order();
    let mut graph = DirectedGraph::empty(n).with_labels(group.element_names().to_vec());
    for x in 0..n {
        for y in 0..n {
            if x != y && table.terminates(y, x) {
                graph.add_arc(x, y);
            }
        }
    }
    graph
}

/// Arc `x -> y` iff `[y, _n x] = 1` for some `n`.
pub fn directed_engel_graph(group: &FiniteGroup) -> DirectedGraph {
    directed_engel_graph_from(group, &EngelTable::build(group))
}

/// Pairs `(x, y)` with `x -> y` but not `y -> x`, in lexicographic order.
pub fn single_arc_pairs(digraph: &DirectedGraph) -> Vec<(usize, usize)> {
    digraph
        .arcs()
        .into_iter()
        .filter(|&(x, y)| !digraph.has_arc(y, x))
        .collect()
}

/// Single arcs with both ends outside `L(G)`.
pub fn single_arcs_outside_left_engel(group: &FiniteGroup) -> Vec<(Element, Element)> {
    let table = EngelTable::build(group);
    let digraph = directed_engel_graph_from(group, &table);
    single_arc_pairs(&digraph)
        .into_iter()
        .filter(|&(x, y)| !table.is_left_engel(x) && !table.is_left_engel(y))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        build_cyclic, build_dihedral, build_frobenius, build_generalized_quaternion, build_symmetric,
    };

    #[test]
    fn verdict_of_equal_elements() {
        let g = build_symmetric(3).unwrap();
        for x in g.elements() {
            let v = engel_verdict(&g, x, x);
            assert_eq!(v, EngelVerdict { terminates: true, first_k: Some(1), cycle_length: None });
        }
    }

    #[test]
    fn dihedral_reflection_pairs() {
        // D_24: n = 12 = 4 * 3
        let g = build_dihedral(24).unwrap();
        let refl = |i: usize| 12 + i;
        // i = j mod 3, i != j
        let v = engel_verdict(&g, refl(1), refl(4));
        assert!(v.terminates);
        // brute force minimal k
        let k = (1..=24).find(|&k| engel_commutator(&g, refl(1), refl(4), k) == g.identity()).unwrap();
        assert_eq!(v.first_k, Some(k));
        let v = engel_verdict(&g, refl(1), refl(2));
        assert!(!v.terminates);
        assert!(v.cycle_length.unwrap() >= 1);
    }

    #[test]
    fn table_matches_sequences() {
        for g in [build_dihedral(12).unwrap(), build_symmetric(4).unwrap(), build_frobenius(3, 7, None).unwrap()] {
            let t = EngelTable::build(&g);
            for x in g.elements() {
                for y in g.elements() {
                    assert_eq!(t.terminates(x, y), engel_verdict(&g, x, y).terminates, "{} {x} {y}", g.label());
                }
            }
        }
    }

    #[test]
    fn left_engel_sets() {
        let d24 = build_dihedral(24).unwrap();
        let l = left_engel_set(&d24);
        let y = d24.generator("y").unwrap();
        assert_eq!(l, subgroup_generated(&d24, &[y]).members());
        let s4 = build_symmetric(4).unwrap();
        let names: Vec<&str> = left_engel_set(&s4).iter().map(|&e| s4.element_name(e)).collect();
        assert_eq!(names, vec!["()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]);
        let q8 = build_generalized_quaternion(8).unwrap();
        assert_eq!(left_engel_set(&q8).len(), 8);
        assert!(validate_left_engel_set(&s4, &left_engel_set(&s4)).is_ok());
    }

    #[test]
    fn validation_catches_wrong_sets() {
        let s4 = build_symmetric(4).unwrap();
        let c3 = s4.element_by_name("(1,2,3)").unwrap();
        assert_eq!(validate_left_engel_set(&s4, &[0, c3]), Err(FittingViolation::NotSubgroup));
        let s3 = build_symmetric(3).unwrap();
        let trivial = [s3.identity()];
        assert!(matches!(validate_left_engel_set(&s3, &trivial), Err(FittingViolation::NotMaximal(_))));
        let transposition = s3.element_by_name("(1,2)").unwrap();
        assert_eq!(validate_left_engel_set(&s3, &[0, transposition]), Err(FittingViolation::NotNormal));
    }

    #[test]
    fn reduced_graphs() {
        let d6 = build_dihedral(6).unwrap();
        let r = reduced_co_engel_graph(&d6).unwrap();
        assert_eq!(r.n_vertices(), 3);
        assert_eq!(r.edge_count(), 3);
        assert_eq!(r.labels(), &["x", "x y", "x y^2"]);
        assert_eq!(r.origin(), &[3, 4, 5]);
        let q8 = build_generalized_quaternion(8).unwrap();
        assert!(matches!(reduced_co_engel_graph(&q8), Err(EngelError::EmptyVertexSet(_))));
    }

    #[test]
    fn isolated_vertices_are_left_engel() {
        let g = build_symmetric(4).unwrap();
        let full = co_engel_graph(&g);
        let l = left_engel_set(&g);
        for x in g.elements() {
            if l.contains(&x) {
                assert_eq!(full.degree(x), 0);
            }
        }
    }

    #[test]
    fn nilpotent_digraph_is_complete() {
        for g in [build_cyclic(6).unwrap(), build_dihedral(8).unwrap()] {
            let d = directed_engel_graph(&g);
            assert!(d.is_complete());
            assert!(single_arc_pairs(&d).is_empty());
        }
    }

    #[test]
    fn single_arcs_in_s3() {
        let g = build_symmetric(3).unwrap();
        assert!(!single_arc_pairs(&directed_engel_graph(&g)).is_empty());
        assert!(single_arcs_outside_left_engel(&build_dihedral(12).unwrap()).is_empty());
    }
}
