use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CliError;
use crate::group::{
    build_alternating, build_cyclic, build_dihedral, build_frobenius, build_generalized_quaternion, build_symmetric,
    default_frobenius_residue, direct_product, FiniteGroup,
};

/// A buildable group, written `C:n`, `D:order`, `Q:order`, `F:p:q[:r]`,
/// `S:n`, `A:n` or `P:(spec)x(spec)...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    /// Generalized quaternion (dicyclic) group of the given order.
    Quaternion(usize),
    Frobenius { p: usize, q: usize, r: Option<usize> },
    Symmetric(usize),
    Alternating(usize),
    Product(Vec<GroupSpec>),
}

fn usage(spec: &str, reason: impl Into<String>) -> CliError {
    CliError::InvalidSpec { spec: spec.to_string(), reason: reason.into() }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl GroupSpec {
    pub fn order(&self) -> usize {
        match self {
            Self::Cyclic(n) | Self::Dihedral(n) | Self::Quaternion(n) => *n,
            Self::Frobenius { p, q, .. } => p * q,
            Self::Symmetric(n) => (1..=*n).product(),
            Self::Alternating(n) => (1..=*n).product::<usize>() / 2,
            Self::Product(factors) => factors.iter().map(Self::order).product(),
        }
    }

    /// Parameter checks matching the builders' preconditions.
    pub fn validate(&self) -> Result<(), CliError> {
        let text = self.to_string();
        match *self {
            Self::Cyclic(0) => Err(usage(&text, "cyclic order must be at least 1")),
            Self::Dihedral(n) if n < 4 || n % 2 == 1 => Err(usage(&text, format!("dihedral order {n} must be even and >= 4"))),
            Self::Quaternion(n) if n < 8 || n % 4 != 0 => {
                Err(usage(&text, format!("quaternion order {n} must be a multiple of 4 and >= 8")))
            }
            Self::Frobenius { p, q, r } => {
                if !is_prime(p) || !is_prime(q) {
                    return Err(usage(&text, format!("p = {p} and q = {q} must be prime")));
                }
                if q % p != 1 {
                    return Err(usage(&text, format!("q = {q} must be 1 mod p = {p}")));
                }
                if let Some(r) = r {
                    let ok = (2..q).contains(&(r % q))
                        && (0..p).fold(1usize, |acc, _| acc * (r % q) % q) == 1;
                    if !ok {
                        return Err(usage(&text, format!("r = {r} must satisfy r^p = 1 mod q, r != 1")));
                    }
                }
                Ok(())
            }
            Self::Symmetric(n) | Self::Alternating(n) if !(2..=6).contains(&n) => {
                Err(usage(&text, format!("degree {n} outside 2..=6")))
            }
            Self::Product(ref factors) => {
                if factors.len() < 2 {
                    return Err(usage(&text, "a product needs at least two factors"));
                }
                factors.iter().try_for_each(Self::validate)
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup, CliError> {
        self.validate()?;
        let group = match self {
            Self::Cyclic(n) => build_cyclic(*n)?,
            Self::Dihedral(n) => build_dihedral(*n)?,
            Self::Quaternion(n) => build_generalized_quaternion(*n)?,
            Self::Frobenius { p, q, r } => build_frobenius(*p, *q, *r)?,
            Self::Symmetric(n) => build_symmetric(*n)?,
            Self::Alternating(n) => build_alternating(*n)?,
            Self::Product(factors) => {
                let mut acc = factors[0].build()?;
                for f in &factors[1..] {
                    acc = direct_product(&acc, &f.build()?)?;
                }
                acc
            }
        };
        Ok(group)
    }

    /// Whether the group is built as a soluble one. Symmetric and
    /// alternating groups of degree 5 or more are not.
    pub fn is_soluble_family(&self) -> bool {
        match self {
            Self::Symmetric(n) | Self::Alternating(n) => *n <= 4,
            Self::Product(factors) => factors.iter().all(Self::is_soluble_family),
            _ => true,
        }
    }

    /// The residue actually used for a Frobenius spec.
    pub fn frobenius_residue(&self) -> Option<usize> {
        match *self {
            Self::Frobenius { p, q, r } => r.or_else(|| default_frobenius_residue(p as u64, q as u64).map(|r| r as usize)),
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic(n) => write!(f, "C:{n}"),
            Self::Dihedral(n) => write!(f, "D:{n}"),
            Self::Quaternion(n) => write!(f, "Q:{n}"),
            Self::Frobenius { p, q, r: None } => write!(f, "F:{p}:{q}"),
            Self::Frobenius { p, q, r: Some(r) } => write!(f, "F:{p}:{q}:{r}"),
            Self::Symmetric(n) => write!(f, "S:{n}"),
            Self::Alternating(n) => write!(f, "A:{n}"),
            Self::Product(factors) => {
                write!(f, "P:")?;
                for (k, factor) in factors.iter().enumerate() {
                    if k > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "({factor})")?;
                }
                Ok(())
            }
        }
    }
}

/// Splits `(a)x(b)x(c)` into `["a", "b", "c"]`, respecting nesting.
fn split_factors<'a>(whole: &str, body: &'a str) -> Result<Vec<&'a str>, CliError> {
    let mut out = vec![];
    let bytes = body.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if !out.is_empty() {
            if bytes[i] != b'x' {
                return Err(usage(whole, format!("expected 'x' between factors at byte {i}")));
            }
            i += 1;
        }
        if bytes.get(i) != Some(&b'(') {
            return Err(usage(whole, format!("expected '(' at byte {i}")));
        }
        let start = i + 1;
        let mut depth = 0usize;
        let mut end = None;
        for (j, &c) in bytes.iter().enumerate().skip(i) {
            match c {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        end = Some(j);
                        break;
                    }
                }
                _ => {}
            }
        }
        let end = end.ok_or_else(|| usage(whole, "unbalanced parentheses"))?;
        out.push(&body[start..end]);
        i = end + 1;
    }
    Ok(out)
}

impl FromStr for GroupSpec {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        let text = text.trim();
        let (family, rest) = text.split_once(':').ok_or_else(|| usage(text, "expected FAMILY:PARAMS"))?;
        let spec = if family.eq_ignore_ascii_case("P") {
            let factors = split_factors(text, rest)?
                .into_iter()
                .map(str::parse)
                .collect::<Result<Vec<GroupSpec>, _>>()?;
            GroupSpec::Product(factors)
        } else {
            let params = rest
                .split(':')
                .map(|p| p.trim().parse::<usize>().map_err(|_| usage(text, format!("parameter {p:?} is not a non-negative integer"))))
                .collect::<Result<Vec<usize>, _>>()?;
            let one = |spec: fn(usize) -> GroupSpec| match params.as_slice() {
                &[n] => Ok(spec(n)),
                _ => Err(usage(text, format!("family {family} takes one parameter"))),
            };
            match family.to_ascii_uppercase().as_str() {
                "C" => one(GroupSpec::Cyclic)?,
                "D" => one(GroupSpec::Dihedral)?,
                "Q" => one(GroupSpec::Quaternion)?,
                "S" => one(GroupSpec::Symmetric)?,
                "A" => one(GroupSpec::Alternating)?,
                "F" => match params.as_slice() {
                    &[p, q] => GroupSpec::Frobenius { p, q, r: None },
                    &[p, q, r] => GroupSpec::Frobenius { p, q, r: Some(r) },
                    _ => return Err(usage(text, "family F takes p:q or p:q:r")),
                },
                other => return Err(usage(text, format!("unknown family {other:?}"))),
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        assert_eq!("D:24".parse::<GroupSpec>().unwrap(), GroupSpec::Dihedral(24));
        assert_eq!("F:3:7".parse::<GroupSpec>().unwrap(), GroupSpec::Frobenius { p: 3, q: 7, r: None });
        let p: GroupSpec = "P:(C:3)x(D:6)".parse().unwrap();
        assert_eq!(p, GroupSpec::Product(vec![GroupSpec::Cyclic(3), GroupSpec::Dihedral(6)]));
        assert_eq!(p.order(), 18);
        let nested: GroupSpec = "P:(P:(C:2)x(C:2))x(Q:8)".parse().unwrap();
        assert_eq!(nested.to_string(), "P:(P:(C:2)x(C:2))x(Q:8)");
        assert_eq!(nested.order(), 32);
    }

    #[test]
    fn rejects_bad_parameters() {
        for bad in ["D:7", "Q:12x", "F:3:11", "F:2:4", "F:3:7:1", "S:7", "X:3", "C", "P:(C:3)", "P:(C:3)x(D:6", "C:-1"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
        let err = "F:3:11".parse::<GroupSpec>().unwrap_err().to_string();
        assert!(err.contains("q = 11"), "{err}");
    }

    #[test]
    fn builds_with_matching_order() {
        for text in ["C:5", "D:12", "Q:12", "F:3:7:2", "S:4", "A:4", "P:(C:3)x(D:6)"] {
            let spec: GroupSpec = text.parse().unwrap();
            assert_eq!(spec.build().unwrap().order(), spec.order(), "{text}");
        }
        assert_eq!("F:3:7".parse::<GroupSpec>().unwrap().frobenius_residue(), Some(2));
    }

    fn leaf() -> impl Strategy<Value = GroupSpec> {
        prop_oneof![
            (1usize..40).prop_map(GroupSpec::Cyclic),
            (2usize..30).prop_map(|n| GroupSpec::Dihedral(2 * n)),
            (2usize..15).prop_map(|n| GroupSpec::Quaternion(4 * n)),
            prop::sample::select(vec![(2, 3), (2, 5), (3, 7), (3, 13), (5, 11)])
                .prop_map(|(p, q)| GroupSpec::Frobenius { p, q, r: None }),
            Just(GroupSpec::Frobenius { p: 3, q: 7, r: Some(4) }),
            (2usize..=6).prop_map(GroupSpec::Symmetric),
            (2usize..=6).prop_map(GroupSpec::Alternating),
        ]
    }

    fn spec() -> impl Strategy<Value = GroupSpec> {
        leaf().prop_recursive(2, 8, 3, |inner| prop::collection::vec(inner, 2..4).prop_map(GroupSpec::Product))
    }

    proptest! {
        #[test]
        fn display_round_trips(s in spec()) {
            let text = s.to_string();
            prop_assert_eq!(text.parse::<GroupSpec>().unwrap(), s.clone());
            let json = serde_json::to_string(&s).unwrap();
            prop_assert_eq!(serde_json::from_str::<GroupSpec>(&json).unwrap(), s);
        }
    }
}
