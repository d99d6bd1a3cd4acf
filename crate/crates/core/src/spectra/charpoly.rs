//! Exact characteristic polynomials of integer matrices.
//!
//! The default route reduces the matrix to upper Hessenberg form modulo a run
//! of word-sized primes, reads off the characteristic polynomial there, and
//! lifts the residues with the Chinese remainder theorem. A coefficient bound
//! from row norms fixes how many primes are needed, so the lift is exact.
//! Faddeev–LeVerrier over big integers is kept as an independent route.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::sync::OnceLock;

use super::poly::IntPolynomial;
use super::SpectraError;

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0; n * n] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, SpectraError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(SpectraError::NotSquare { rows: n, row: bad, len: rows[bad].len() });
        }
        Ok(Self { n, data: rows.concat() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.n + j] = value;
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }
}

/// Upper bound on every coefficient of the characteristic polynomial: each
/// coefficient is a sum of principal minors, and Hadamard's inequality
/// bounds those by products of row norms.
fn coefficient_bound(m: &IntMatrix) -> BigInt {
    let mut bound = BigInt::one();
    for i in 0..m.n {
        let sq: BigInt = m.row(i).iter().map(|&v| BigInt::from(v) * v).sum();
        // ceil(sqrt(sq))
        let mut norm = sq.sqrt();
        if &norm * &norm < sq {
            norm += 1;
        }
        bound *= norm + 1;
    }
    bound
}

const CACHED_PRIMES: usize = 256;

/// Primes below 2^31, descending from the top.
fn primes_below_2_31() -> impl Iterator<Item = u64> {
    static CACHE: OnceLock<Vec<u64>> = OnceLock::new();
    let cached = CACHE.get_or_init(|| descending_primes(1 << 31).take(CACHED_PRIMES).collect());
    let last = *cached.last().expect("cache is non-empty");
    cached.iter().copied().chain(descending_primes(last))
}

/// Odd primes strictly below `below`, descending.
fn descending_primes(below: u64) -> impl Iterator<Item = u64> {
    let start = if below % 2 == 0 { below - 1 } else { below - 2 };
    (3..=start).rev().step_by(2).filter(|&p| is_prime_u64(p))
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Characteristic polynomial modulo `p`, ascending coefficients in `[0, p)`.
fn char_poly_mod_p(m: &IntMatrix, p: u64) -> Vec<u64> {
    let n = m.n;
    let mut h: Vec<u64> = m.data.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect();
    let at = |i: usize, j: usize| i * n + j;

    // Hessenberg reduction by similarity transforms.
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&r| h[at(r, col)] != 0) else {
            continue;
        };
        if piv != col + 1 {
            let r = col + 1;
            for j in 0..n {
                h.swap(at(piv, j), at(r, j));
            }
            for i in 0..n {
                h.swap(at(i, piv), at(i, r));
            }
        }
        let inv = inv_mod(h[at(col + 1, col)], p);
        for r in col + 2..n {
            let factor = h[at(r, col)] * inv % p;
            if factor == 0 {
                continue;
            }
            // row_r -= factor * row_{col+1}
            for j in 0..n {
                let sub = factor * h[at(col + 1, j)] % p;
                h[at(r, j)] = (h[at(r, j)] + p - sub) % p;
            }
            // col_{col+1} += factor * col_r
            for i in 0..n {
                h[at(i, col + 1)] = (h[at(i, col + 1)] + factor * h[at(i, r)]) % p;
            }
        }
    }

    // polys[k] is the characteristic polynomial of the leading k x k block.
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for k in 1..=n {
        let kk = k - 1;
        let prev = &polys[k - 1];
        // (x - h_kk) * prev
        let mut next = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - c * h[at(kk, kk)] % p) % p;
        }
        let mut sub_diag = 1u64;
        for i in (0..kk).rev() {
            sub_diag = sub_diag * h[at(i + 1, i)] % p;
            if sub_diag == 0 {
                break;
            }
            let coef = h[at(i, kk)] * sub_diag % p;
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = (next[d] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap_or_else(|| vec![1])
}

/// Exact monic characteristic polynomial `det(xI - M)`.
pub fn char_poly_exact(m: &IntMatrix) -> IntPolynomial {
    let n = m.n;
    if n == 0 {
        return IntPolynomial::one();
    }
    let bound = coefficient_bound(m);
    // need modulus > 2 * bound for a symmetric lift
    let target = bound * 2;
    let mut primes = vec![];
    let mut modulus = BigInt::one();
    for p in primes_below_2_31() {
        if modulus > target {
            break;
        }
        modulus *= p;
        primes.push(p);
    }
    let residues: Vec<Vec<u64>> = primes.par_iter().map(|&p| char_poly_mod_p(m, p)).collect();

    // Garner-style incremental CRT per coefficient
    let coeffs = (0..=n)
        .map(|k| {
            let mut value = BigInt::zero();
            let mut running = BigInt::one();
            for (&p, res) in primes.iter().zip(&residues) {
                let pb = BigInt::from(p);
                let current = (&value % &pb + &pb) % &pb;
                let current = u64::try_from(current).expect("residue fits");
                let diff = (res[k] + p - current) % p;
                let running_mod = u64::try_from(&running % &pb).expect("residue fits");
                let t = diff * inv_mod(running_mod, p) % p;
                value += &running * t;
                running *= p;
            }
            if &value * 2 > running {
                value -= running;
            }
            value
        })
        .collect();
    IntPolynomial::new(coeffs)
}

/// Faddeev–LeVerrier over big integers. Every division is exact.
pub fn char_poly_faddeev(m: &IntMatrix) -> IntPolynomial {
    let n = m.n;
    let a: Vec<BigInt> = m.data.iter().map(|&v| BigInt::from(v)).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_0 = 0, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    let mut mk = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        let c_prev = coeffs[n - k + 1].clone();
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for l in 0..n {
                    if !a[i * n + l].is_zero() && !mk[l * n + j].is_zero() {
                        acc += &a[i * n + l] * &mk[l * n + j];
                    }
                }
                next[i * n + j] = acc;
            }
            next[i * n + i] += &c_prev;
        }
        mk = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                if !a[i * n + l].is_zero() {
                    trace += &a[i * n + l] * &mk[l * n + i];
                }
            }
        }
        let kb = BigInt::from(k);
        debug_assert!((&trace % &kb).is_zero());
        coeffs[n - k] = -(trace / kb);
    }
    IntPolynomial::new(coeffs)
}

/// Largest absolute row sum, a bound on every eigenvalue modulus.
pub fn max_abs_row_sum(m: &IntMatrix) -> i64 {
    (0..m.n).map(|i| m.row(i).iter().map(|v| v.abs()).sum()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_adjacency(n: usize) -> IntMatrix {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i != j)).collect()).collect();
        IntMatrix::from_rows(&rows).unwrap()
    }

    #[test]
    fn zero_one_by_one() {
        let z = IntMatrix::zeros(1);
        assert_eq!(char_poly_exact(&z), IntPolynomial::from_i64(&[0, 1]));
        assert_eq!(char_poly_faddeev(&z), IntPolynomial::from_i64(&[0, 1]));
    }

    #[test]
    fn complete_graph_adjacency() {
        for n in 1..12 {
            let expected = IntPolynomial::from_roots(&[(-1, n - 1), (n as i64 - 1, 1)]);
            let a = complete_adjacency(n);
            assert_eq!(char_poly_exact(&a), expected, "K_{n}");
            assert_eq!(char_poly_faddeev(&a), expected, "K_{n}");
        }
    }

    #[test]
    fn routes_agree_on_dense_matrices() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(1..9);
            let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
            let m = IntMatrix::from_rows(&rows).unwrap();
            let p = char_poly_exact(&m);
            assert_eq!(p, char_poly_faddeev(&m));
            assert_eq!(p.coeffs()[n - 1], BigInt::from(-m.trace()));
        }
    }

    #[test]
    fn large_coefficients_lift_exactly() {
        // diagonal with big entries: coefficients exceed one prime
        let mut m = IntMatrix::zeros(6);
        for i in 0..6 {
            m.set(i, i, 1_000_003 * (i as i64 + 1));
        }
        let roots: Vec<(i64, usize)> = (0..6).map(|i| (1_000_003 * (i + 1), 1)).collect();
        assert_eq!(char_poly_exact(&m), IntPolynomial::from_roots(&roots));
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(IntMatrix::from_rows(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn needs_pivoting() {
        // zero subdiagonal entry forces a row swap in the reduction
        let m = IntMatrix::from_rows(&[vec![1, 2, 3], vec![0, 4, 5], vec![6, 7, 8]]).unwrap();
        assert_eq!(char_poly_exact(&m), char_poly_faddeev(&m));
        assert!(BigInt::from(max_abs_row_sum(&m)).is_positive());
    }
}
