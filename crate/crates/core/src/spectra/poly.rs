use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Polynomial with arbitrary-precision integer coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self { coeffs: vec![BigInt::one()] }
    }

    /// `x - r`.
    pub fn linear(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    /// `prod (x - root)^mult`.
    pub fn from_roots(roots: &[(i64, usize)]) -> Self {
        let mut p = Self::one();
        for &(r, mult) in roots {
            for _ in 0..mult {
                p = &p * &Self::linear(r);
            }
        }
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Quotient by `x - r` if it divides exactly.
    pub fn divide_by_root(&self, r: i64) -> Option<IntPolynomial> {
        let n = self.degree();
        if n == 0 {
            return None;
        }
        let r = BigInt::from(r);
        // synthetic division from the top
        let mut quotient = vec![BigInt::zero(); n];
        let mut carry = BigInt::zero();
        for k in (1..=n).rev() {
            carry = &self.coeffs[k] + carry * &r;
            quotient[k - 1] = carry.clone();
        }
        let remainder = &self.coeffs[0] + carry * &r;
        remainder.is_zero().then(|| IntPolynomial::new(quotient))
    }

    /// Decimal strings, ascending degree.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            match (show_coeff, k) {
                (true, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}x")?,
                (true, _) => write!(f, "{mag}x^{k}")?,
                (false, 1) => write!(f, "x")?,
                (false, _) => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Integer eigenvalues with multiplicities, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerSpectrum {
    pub roots: Vec<(i64, usize)>,
}

impl IntegerSpectrum {
    /// Merges duplicates and sorts ascending; zero multiplicities are dropped.
    pub fn new(roots: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut map = std::collections::BTreeMap::new();
        for (r, m) in roots {
            if m > 0 {
                *map.entry(r).or_insert(0) += m;
            }
        }
        Self { roots: map.into_iter().collect() }
    }

    pub fn degree(&self) -> usize {
        self.roots.iter().map(|&(_, m)| m).sum()
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        self.roots.iter().find(|&&(r, _)| r == value).map_or(0, |&(_, m)| m)
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_roots(&self.roots)
    }

    /// Eigenvalues with repetition, ascending.
    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.roots.iter().flat_map(|&(r, m)| std::iter::repeat(r).take(m))
    }
}

/// The roots of a monic polynomial when it splits into integer linear
/// factors, `None` otherwise.
///
/// If a monic polynomial splits over the integers, its roots satisfy
/// `sum r^2 = c_{n-1}^2 - 2 c_{n-2}`, which bounds every `|r|`; only that
/// range is tried.
pub fn integer_roots(p: &IntPolynomial) -> Option<IntegerSpectrum> {
    if !p.is_monic() {
        return None;
    }
    let n = p.degree();
    if n == 0 {
        return Some(IntegerSpectrum { roots: vec![] });
    }
    let c = p.coeffs();
    let power_sum = if n >= 2 {
        &c[n - 1] * &c[n - 1] - BigInt::from(2) * &c[n - 2]
    } else {
        &c[0] * &c[0]
    };
    if power_sum.is_negative() {
        return None;
    }
    let bound = power_sum.sqrt().to_i64()?;
    integer_roots_bounded(p, bound)
}

/// Like [`integer_roots`], with candidates limited to `|r| <= bound`.
pub fn integer_roots_bounded(p: &IntPolynomial, bound: i64) -> Option<IntegerSpectrum> {
    let mut rest = p.clone();
    let mut roots = vec![];
    for r in -bound..=bound {
        let mut mult = 0;
        while let Some(q) = rest.divide_by_root(r) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
        if rest.degree() == 0 {
            break;
        }
    }
    (rest.degree() == 0).then(|| IntegerSpectrum::new(roots))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divide_and_eval() {
        // (x - 2)(x + 3) = x^2 + x - 6
        let p = IntPolynomial::from_i64(&[-6, 1, 1]);
        assert_eq!(p.divide_by_root(2), Some(IntPolynomial::from_i64(&[3, 1])));
        assert_eq!(p.divide_by_root(1), None);
        assert_eq!(p.eval(&BigInt::from(-3)), BigInt::zero());
        assert_eq!(p.to_string(), "x^2 + x - 6");
    }

    #[test]
    fn roots_of_split_polynomials() {
        let spec = IntegerSpectrum::new([(0, 1), (4, 3), (6, 2)]);
        let p = spec.to_polynomial();
        assert_eq!(integer_roots(&p), Some(spec));
        assert_eq!(integer_roots(&IntPolynomial::from_i64(&[1, 0, 1])), None);
        // x^2 - 2 has real irrational roots
        assert_eq!(integer_roots(&IntPolynomial::from_i64(&[-2, 0, 1])), None);
        // (x - 1)(x^2 + 1) does not fully split
        assert_eq!(integer_roots(&IntPolynomial::from_i64(&[-1, 1, -1, 1])), None);
        assert_eq!(integer_roots(&IntPolynomial::from_i64(&[0, 1])), Some(IntegerSpectrum::new([(0, 1)])));
    }

    #[test]
    fn complete_graph_signless_roots() {
        // P_Q(K_n) = (x - (n-2))^(n-1) (x - 2(n-1))
        for n in 2..9i64 {
            let p = IntPolynomial::from_roots(&[(n - 2, (n - 1) as usize), (2 * (n - 1), 1)]);
            let spec = integer_roots(&p).unwrap();
            assert_eq!(spec.multiplicity(n - 2), (n - 1) as usize);
            assert_eq!(spec.multiplicity(2 * (n - 1)), 1);
        }
    }
}
