//! Constructors for the group families used by the crate.
//!
//! Element enumeration is fixed per builder so tables are reproducible:
//!
//! | family | element `k` |
//! |--------|-------------|
//! | `C_n` | `g^k` |
//! | `D_2n` | `y^k` for `k < n`, `x y^(k-n)` otherwise |
//! | `Q_4n` | `y^k` for `k < 2n`, `x y^(k-2n)` otherwise |
//! | `F(p,q)` | `a^i b^j` with `k = i q + j` |
//! | `S_n`, `A_n` | permutations in lexicographic order of their images |
//! | `G x H` | `(g, h)` with `k = g |H| + h` |

use super::{AssociativityCheck, FiniteGroup, Generator, GroupError};

fn table_from<F>(n: usize, mut product: F) -> Vec<u32>
where
    F: FnMut(usize, usize) -> usize,
{
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(product(a, b) as u32);
        }
    }
    table
}

fn power_name(sym: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{k}"),
    }
}

fn word(parts: &[String]) -> String {
    let nonempty: Vec<&str> = parts.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
    if nonempty.is_empty() {
        "1".to_string()
    } else {
        nonempty.join(" ")
    }
}

fn gen(name: &str, index: usize) -> Generator {
    Generator { name: name.to_string(), index }
}

/// The cyclic group `Z/nZ` with generator `g = 1`.
pub fn build_cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter { family: "cyclic", reason: "order must be at least 1".into() });
    }
    let table = table_from(n, |a, b| (a + b) % n);
    let names = (0..n).map(|k| word(&[power_name("g", k)])).collect();
    let gens = if n > 1 { vec![gen("g", 1)] } else { vec![] };
    FiniteGroup::from_table(format!("C{n}"), table, gens, names, AssociativityCheck::Auto)
}

/// The dihedral group `D_{2n} = <x, y | y^n = x^2 = 1, x y x^-1 = y^-1>`.
pub fn build_dihedral(two_n: usize) -> Result<FiniteGroup, GroupError> {
    if two_n < 4 || two_n % 2 != 0 {
        return Err(GroupError::InvalidParameter {
            family: "dihedral",
            reason: format!("order {two_n} must be even and at least 4"),
        });
    }
    let n = two_n / 2;
    // x^a y^i * x^b y^j = x^(a+b) y^((-1)^b i + j)
    let table = table_from(two_n, |p, q| {
        let (a, i) = (p / n, p % n);
        let (b, j) = (q / n, q % n);
        let i = if b == 1 { (n - i) % n } else { i };
        ((a + b) % 2) * n + (i + j) % n
    });
    let names = (0..two_n)
        .map(|k| word(&[power_name("x", k / n), power_name("y", k % n)]))
        .collect();
    FiniteGroup::from_table(
        format!("D{two_n}"),
        table,
        vec![gen("x", n), gen("y", 1)],
        names,
        AssociativityCheck::Auto,
    )
}

/// The dicyclic group `Q_{4n} = <x, y | y^{2n} = 1, x^2 = y^n, x y x^-1 = y^-1>`.
pub fn build_generalized_quaternion(four_n: usize) -> Result<FiniteGroup, GroupError> {
    if four_n < 8 || four_n % 4 != 0 {
        return Err(GroupError::InvalidParameter {
            family: "quaternion",
            reason: format!("order {four_n} must be a multiple of 4 and at least 8"),
        });
    }
    let m = four_n / 2; // order of y
    let half = m / 2;
    let table = table_from(four_n, |p, q| {
        let (a, i) = (p / m, p % m);
        let (b, j) = (q / m, q % m);
        let i = if b == 1 { (m - i) % m } else { i };
        // x * x = y^half
        let shift = if a == 1 && b == 1 { half } else { 0 };
        ((a + b) % 2) * m + (i + j + shift) % m
    });
    let names = (0..four_n)
        .map(|k| word(&[power_name("x", k / m), power_name("y", k % m)]))
        .collect();
    FiniteGroup::from_table(
        format!("Q{four_n}"),
        table,
        vec![gen("x", m), gen("y", 1)],
        names,
        AssociativityCheck::Auto,
    )
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    let (mut acc, mut b, mut e) = (1 % modulus, base % modulus, exp);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % modulus;
        }
        b = b * b % modulus;
        e >>= 1;
    }
    acc
}

/// Smallest `r >= 2` with `r^p = 1 (mod q)`.
pub fn default_frobenius_residue(p: u64, q: u64) -> Option<u64> {
    (2..q).find(|&r| pow_mod(r, p, q) == 1)
}

/// The nonabelian group `F_{p,q} = <a, b | a^p = b^q = 1, a^-1 b a = b^r>` of order `pq`.
///
/// When `r` is omitted the smallest valid residue is used; all valid choices
/// give isomorphic groups.
pub fn build_frobenius(p: usize, q: usize, r: Option<usize>) -> Result<FiniteGroup, GroupError> {
    let bad = |reason: String| GroupError::InvalidParameter { family: "frobenius", reason };
    if !is_prime(p as u64) || !is_prime(q as u64) {
        return Err(bad(format!("p = {p} and q = {q} must both be prime")));
    }
    if q % p != 1 {
        return Err(bad(format!("q = {q} is not 1 mod p = {p}")));
    }
    let r = match r {
        Some(r) => {
            let r = r % q;
            if r == 1 || r == 0 || pow_mod(r as u64, p as u64, q as u64) != 1 {
                return Err(bad(format!("r = {r} must satisfy r^p = 1 mod q and r != 1")));
            }
            r
        }
        None => default_frobenius_residue(p as u64, q as u64).expect("q = 1 mod p admits a residue") as usize,
    };
    // r^k mod q for k < p
    let rpow: Vec<usize> = (0..p).map(|k| pow_mod(r as u64, k as u64, q as u64) as usize).collect();
    let n = p * q;
    // a^i b^t * a^j b^s = a^(i+j) b^(s + t r^j)
    let table = table_from(n, |x, y| {
        let (i, t) = (x / q, x % q);
        let (j, s) = (y / q, y % q);
        ((i + j) % p) * q + (s + t * rpow[j]) % q
    });
    let names = (0..n)
        .map(|k| word(&[power_name("a", k / q), power_name("b", k % q)]))
        .collect();
    FiniteGroup::from_table(
        format!("F({p},{q})"),
        table,
        vec![gen("a", q), gen("b", 1)],
        names,
        AssociativityCheck::Auto,
    )
}

/// Formats a permutation of `0..n` in cycle notation on the points `1..=n`.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![];
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = perm[i];
        }
        out.push('(');
        out.push_str(&cycle.join(","));
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

/// Parses cycle notation such as `(1,2,3)(4,5)` into a permutation of `0..n`.
pub fn parse_cycles(text: &str, n: usize) -> Option<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_end = rest.find(')')?;
        let body = rest.strip_prefix('(')?.get(..body_end - 1)?;
        rest = rest[body_end + 1..].trim_start();
        if body.trim().is_empty() {
            continue;
        }
        let points: Vec<usize> = body
            .split(',')
            .map(|s| s.trim().parse::<usize>().ok().filter(|&p| p >= 1 && p <= n).map(|p| p - 1))
            .collect::<Option<_>>()?;
        // cycles compose left to right: i -> cycle(perm(i))
        perm = perm
            .iter()
            .map(|&v| {
                points
                    .iter()
                    .position(|&p| p == v)
                    .map(|k| points[(k + 1) % points.len()])
                    .unwrap_or(v)
            })
            .collect();
    }
    Some(perm)
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn is_even(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

const MAX_PERMUTATION_DEGREE: usize = 6;

/// Builds a permutation group from an ordered element list (identity first).
/// Products compose left to right: `(s t)(i) = t(s(i))`.
fn permutation_group(
    label: String,
    perms: Vec<Vec<usize>>,
    generator_cycles: &[&str],
) -> Result<FiniteGroup, GroupError> {
    let n = perms.len();
    let index: std::collections::HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();
    let table = table_from(n, |a, b| {
        let composed: Vec<usize> = perms[a].iter().map(|&i| perms[b][i]).collect();
        index[composed.as_slice()]
    });
    let degree = perms[0].len();
    let gens = generator_cycles
        .iter()
        .map(|c| {
            let perm = parse_cycles(c, degree).expect("well-formed generator");
            gen(c, index[perm.as_slice()])
        })
        .collect();
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_table(label, table, gens, names, AssociativityCheck::Auto)
}

fn check_degree(family: &'static str, n: usize) -> Result<(), GroupError> {
    if !(2..=MAX_PERMUTATION_DEGREE).contains(&n) {
        return Err(GroupError::InvalidParameter {
            family,
            reason: format!("degree {n} outside 2..={MAX_PERMUTATION_DEGREE}"),
        });
    }
    Ok(())
}

fn full_cycle(points: std::ops::RangeInclusive<usize>) -> String {
    let pts: Vec<String> = points.map(|p| p.to_string()).collect();
    format!("({})", pts.join(","))
}

/// The symmetric group on `n` points, `2 <= n <= 6`.
pub fn build_symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    check_degree("symmetric", n)?;
    let cycle = full_cycle(1..=n);
    let gens: Vec<&str> = if n == 2 { vec!["(1,2)"] } else { vec!["(1,2)", cycle.as_str()] };
    permutation_group(format!("S{n}"), permutations_lex(n), &gens)
}

/// The alternating group on `n` points, `2 <= n <= 6`.
pub fn build_alternating(n: usize) -> Result<FiniteGroup, GroupError> {
    check_degree("alternating", n)?;
    let perms: Vec<Vec<usize>> = permutations_lex(n).into_iter().filter(|p| is_even(p)).collect();
    let long = if n % 2 == 1 { full_cycle(1..=n) } else { full_cycle(2..=n) };
    let gens: Vec<&str> = match n {
        2 => vec![],
        3 => vec!["(1,2,3)"],
        _ => vec!["(1,2,3)", long.as_str()],
    };
    permutation_group(format!("A{n}"), perms, &gens)
}

/// `G x H` with `(g, h)` stored at index `g |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let m = h.order();
    let n = g.order() * m;
    let table = table_from(n, |x, y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m));
    let names = (0..n)
        .map(|k| format!("({}, {})", g.element_name(k / m), h.element_name(k % m)))
        .collect::<Vec<String>>();
    let mut gens = vec![];
    for gg in g.generators() {
        let idx = gg.index * m + h.identity();
        gens.push(gen(&names[idx], idx));
    }
    for hg in h.generators() {
        let idx = g.identity() * m + hg.index;
        gens.push(gen(&names[idx], idx));
    }
    // Both factors are already validated; associativity of the product follows.
    FiniteGroup::from_table(
        format!("{} x {}", g.label(), h.label()),
        table,
        gens,
        names,
        AssociativityCheck::Sampled(if n <= 200 { 0 } else { 1000 }),
    )
}
