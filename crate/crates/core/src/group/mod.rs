//! Finite groups stored as explicit multiplication tables.
//!
//! Every group in this crate is a [`FiniteGroup`]: elements are the indices
//! `0..n`, and the product of `a` and `b` is a table lookup. Builders for the
//! families used throughout the crate live in [`builders`]; commutator series,
//! centres and the nilpotency/solubility tests live in [`series`]; subgroup
//! closure and small quotient isomorphism checks live in [`subgroup`].

pub mod builders;
pub mod series;
pub mod subgroup;

use rand::{rngs::StdRng, Rng, SeedableRng};
use thiserror::Error;

pub use builders::{
    build_alternating, build_cyclic, build_dihedral, build_frobenius,
    build_generalized_quaternion, build_symmetric, default_frobenius_residue, direct_product,
};
pub use series::{
    center, derived_series, hypercenter, is_nilpotent, is_soluble, upper_central_series,
};
pub use subgroup::{groups_isomorphic_small, is_normal, quotient_group, quotient_iso_check, subgroup_generated, Subgroup, MAX_QUOTIENT_ORDER};

/// Element of a [`FiniteGroup`], identified by its row in the table.
pub type Element = usize;

/// Orders above this use sampled associativity checks unless forced.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 200;
const SAMPLED_TRIPLES: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("multiplication table is not a Latin square (row/column {0})")]
    NotLatin(usize),
    #[error("multiplication table has no two-sided identity")]
    NoIdentity,
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("table has {got} entries, expected {expected}")]
    BadTableSize { got: usize, expected: usize },
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("quotient of order {0} is too large for isomorphism testing")]
    QuotientTooLarge(usize),
}

/// How thoroughly [`FiniteGroup::from_table`] checks associativity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AssociativityCheck {
    /// Exhaustive up to [`EXHAUSTIVE_ASSOCIATIVITY_LIMIT`], sampled above.
    #[default]
    Auto,
    Exhaustive,
    /// Check this many seeded random triples.
    Sampled(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub index: Element,
}

/// A finite group given by its full multiplication table.
///
/// Immutable after construction. Tables are row-major: the product `a * b`
/// is `table[a * n + b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    table: Vec<u32>,
    identity: Element,
    inverse: Vec<u32>,
    generators: Vec<Generator>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Validates a table and builds the group. Identity and inverses are
    /// located from the table.
    pub fn from_table(
        label: impl Into<String>,
        table: Vec<u32>,
        generators: Vec<Generator>,
        names: Vec<String>,
        check: AssociativityCheck,
    ) -> Result<Self, GroupError> {
        let n = names.len();
        if n == 0 {
            return Err(GroupError::BadTableSize { got: table.len(), expected: 0 });
        }
        if table.len() != n * n {
            return Err(GroupError::BadTableSize { got: table.len(), expected: n * n });
        }
        check_latin(&table, n)?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
            .ok_or(GroupError::NoIdentity)?;
        // Latin rows guarantee exactly one right inverse per element.
        let mut inverse = vec![0u32; n];
        for x in 0..n {
            let y = (0..n).find(|&y| table[x * n + y] as usize == identity).ok_or(GroupError::NoIdentity)?;
            if table[y * n + x] as usize != identity {
                return Err(GroupError::NoIdentity);
            }
            inverse[x] = y as u32;
        }
        for g in &generators {
            if g.index >= n {
                return Err(GroupError::IndexOutOfRange { index: g.index, order: n });
            }
        }
        let group = Self {
            label: label.into(),
            order: n,
            table,
            identity,
            inverse,
            generators,
            names,
        };
        group.check_associativity(check)?;
        Ok(group)
    }

    pub fn check_associativity(&self, check: AssociativityCheck) -> Result<(), GroupError> {
        let n = self.order;
        let exhaustive = match check {
            AssociativityCheck::Exhaustive => true,
            AssociativityCheck::Auto => n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT,
            AssociativityCheck::Sampled(_) => false,
        };
        if exhaustive {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(GroupError::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            let samples = match check {
                AssociativityCheck::Sampled(k) => k,
                _ => SAMPLED_TRIPLES,
            };
            let mut rng = StdRng::seed_from_u64(0x5eed_0f_a550c);
            for _ in 0..samples {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(GroupError::NotAssociative(a, b, c));
                }
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<Element> {
        self.generators.iter().find(|g| g.name == name).map(|g| g.index)
    }

    pub fn element_name(&self, x: Element) -> &str {
        &self.names[x]
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    /// Looks up an element by its display name.
    pub fn element_by_name(&self, name: &str) -> Option<Element> {
        self.names.iter().position(|s| s == name)
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a] as usize
    }

    pub fn pow(&self, a: Element, k: u64) -> Element {
        let (mut acc, mut base, mut e) = (self.identity, a, k);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    #[inline]
    pub fn commutator(&self, x: Element, y: Element) -> Element {
        let xy = self.mul(x, y);
        let yx_inv = self.inv(self.mul(y, x));
        self.mul(yx_inv, xy)
    }

    /// `x^y = y^-1 x y`.
    #[inline]
    pub fn conjugate(&self, x: Element, y: Element) -> Element {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn element_order(&self, x: Element) -> usize {
        let mut k = 1;
        let mut p = x;
        while p != self.identity {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    fn check_index(&self, x: Element) -> Result<(), GroupError> {
        if x < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange { index: x, order: self.order })
        }
    }

    pub fn checked_commutator(&self, x: Element, y: Element) -> Result<Element, GroupError> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(self.commutator(x, y))
    }

    pub fn checked_conjugate(&self, x: Element, y: Element) -> Result<Element, GroupError> {
        self.check_index(x)?;
        self.check_index(y)?;
        Ok(self.conjugate(x, y))
    }

    pub fn checked_element_order(&self, x: Element) -> Result<usize, GroupError> {
        self.check_index(x)?;
        Ok(self.element_order(x))
    }

    /// Sorted list of `(element order, count)`.
    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for x in self.elements() {
            *counts.entry(self.element_order(x)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn check_latin(table: &[u32], n: usize) -> Result<(), GroupError> {
    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = table[r * n + c] as usize;
            if v >= n || seen[v] == r {
                return Err(GroupError::NotLatin(r));
            }
            seen[v] = r;
        }
    }
    seen.iter_mut().for_each(|s| *s = usize::MAX);
    for c in 0..n {
        for r in 0..n {
            let v = table[r * n + c] as usize;
            if seen[v] == c {
                return Err(GroupError::NotLatin(c));
            }
            seen[v] = c;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_table() -> (Vec<u32>, Vec<String>) {
        (vec![0, 1, 1, 0], vec!["1".into(), "g".into()])
    }

    #[test]
    fn from_table_finds_identity_and_inverses() {
        let (table, names) = z2_table();
        let g = FiniteGroup::from_table("C2", table, vec![], names, AssociativityCheck::Auto).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(1), 1);
        assert_eq!(g.element_order(1), 2);
    }

    #[test]
    fn rejects_non_latin_table() {
        let err = FiniteGroup::from_table(
            "bad",
            vec![0, 1, 1, 1],
            vec![],
            vec!["a".into(), "b".into()],
            AssociativityCheck::Auto,
        )
        .unwrap_err();
        assert!(matches!(err, GroupError::NotLatin(_)));
    }

    #[test]
    fn rejects_non_associative_loop() {
        // A Latin square with identity 0 that is not associative (order-5 loop).
        let rows: [[u32; 5]; 5] = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let table = rows.iter().flatten().copied().collect();
        let names = (0..5).map(|i| i.to_string()).collect();
        let err = FiniteGroup::from_table("loop", table, vec![], names, AssociativityCheck::Exhaustive)
            .unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative(..)));
    }

    #[test]
    fn checked_ops_reject_bad_index() {
        let g = build_cyclic(4).unwrap();
        assert_eq!(
            g.checked_commutator(0, 9),
            Err(GroupError::IndexOutOfRange { index: 9, order: 4 })
        );
        assert!(g.checked_element_order(4).is_err());
        assert_eq!(g.checked_conjugate(1, 2), Ok(1));
    }

    #[test]
    fn commutator_of_element_with_itself_is_identity() {
        let g = build_symmetric(4).unwrap();
        for x in g.elements() {
            assert_eq!(g.commutator(x, x), g.identity());
        }
        assert_eq!(g.element_order(g.identity()), 1);
    }
}
