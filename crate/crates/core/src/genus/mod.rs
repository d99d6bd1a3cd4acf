//! Genus and crosscap values for complete and complete multipartite graphs,
//! surface classification of reduced co-Engel graphs, and Zagreb indices.
//!
//! Nothing here computes a genus from scratch; the values are closed forms
//! for recognised shapes.

pub mod zagreb;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{recognize_complete_multipartite, verify_biclique, MultipartiteShape};
use crate::engel::reduced_co_engel_graph;
use crate::group::{build_alternating, groups_isomorphic_small, FiniteGroup};

pub use zagreb::{zagreb_closed_form, zagreb_report, HvComparison, ZagrebReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenusError {
    #[error("{what} needs {param} >= {min}, got {got}")]
    BelowRange { what: &'static str, param: &'static str, min: u64, got: u64 },
}

fn check(what: &'static str, param: &'static str, min: u64, got: u64) -> Result<(), GenusError> {
    if got < min {
        Err(GenusError::BelowRange { what, param, min, got })
    } else {
        Ok(())
    }
}

/// `ceil((n-3)(n-4)/12)`; `K_1` and `K_2` are planar.
pub fn genus_complete(n: u64) -> u64 {
    if n <= 4 {
        return 0;
    }
    ((n - 3) * (n - 4)).div_ceil(12)
}

/// `ceil((m-2)(n-2)/4)` for `m, n >= 2`.
pub fn genus_complete_bipartite(m: u64, n: u64) -> Result<u64, GenusError> {
    check("genus of K_{m,n}", "m", 2, m)?;
    check("genus of K_{m,n}", "n", 2, n)?;
    Ok(((m - 2) * (n - 2)).div_ceil(4))
}

/// `ceil((m-2)(n-2)/2)` for `m, n >= 2`, at least 1.
///
/// Crosscap number here is the least `k >= 1` such that the graph embeds in
/// the sphere with `k` crosscaps, so planar graphs get 1.
pub fn crosscap_complete_bipartite(m: u64, n: u64) -> Result<u64, GenusError> {
    check("crosscap of K_{m,n}", "m", 2, m)?;
    check("crosscap of K_{m,n}", "n", 2, n)?;
    Ok(((m - 2) * (n - 2)).div_ceil(2).max(1))
}

/// `ceil((n-3)(n-4)/6)` for `n >= 3`, except `K_7` which needs 3; at least 1.
pub fn crosscap_complete(n: u64) -> Result<u64, GenusError> {
    check("crosscap of K_n", "n", 3, n)?;
    match n {
        7 => Ok(3),
        ..=4 => Ok(1),
        _ => Ok(((n - 3) * (n - 4)).div_ceil(6).max(1)),
    }
}

/// Genus of `K_{mn,n,n}`: `(mn-2)(n-1)/2` for `m, n >= 1`.
pub fn genus_k_mnn(m: u64, n: u64) -> Result<u64, GenusError> {
    check("genus of K_{mn,n,n}", "m", 1, m)?;
    check("genus of K_{mn,n,n}", "n", 1, n)?;
    if n == 1 {
        // K_{m,1,1} is planar; also keeps mn - 2 from going negative
        return Ok(0);
    }
    let twice = (m * n - 2) * (n - 1);
    assert!(twice % 2 == 0, "(mn-2)(n-1) is even for n >= 2");
    Ok(twice / 2)
}

/// `a(a-1)/2 * ceil((b-2)^2/4) + ceil((a-3)(a-4)/12)` for `a >= 3, b >= 2`;
/// `b = 1` gives the genus of `K_a`.
///
/// This is the closed form as usually quoted for `K_{a*b}`. It is not a
/// valid genus for every shape: `K_{4*2}` evaluates to 0 although it is not
/// planar, and `K_{3*3}` evaluates to 3 while `K_{3,3,3}` has genus 1. See
/// [`euler_genus_lower_bound`] and [`genus_k_mnn`].
pub fn genus_uniform_multipartite(a: u64, b: u64) -> Result<u64, GenusError> {
    check("genus of K_{a*b}", "a", 3, a)?;
    check("genus of K_{a*b}", "b", 1, b)?;
    if b == 1 {
        return Ok(genus_complete(a));
    }
    let square = (b - 2) * (b - 2);
    Ok(a * (a - 1) / 2 * square.div_ceil(4) + genus_complete(a))
}

/// Euler-characteristic lower bound `ceil((e - 3v + 6) / 6)` for a connected
/// simple graph, floored at 0.
pub fn euler_genus_lower_bound(v: u64, e: u64) -> u64 {
    (e + 6).saturating_sub(3 * v).div_ceil(6)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Planar,
    Toroidal,
    DoubleToroidal,
    TripleToroidal,
    GenusFour,
    GenusAtLeastFive,
    Unknown,
}

impl Classification {
    pub fn from_genus(genus: Option<u64>) -> Self {
        match genus {
            Some(0) => Self::Planar,
            Some(1) => Self::Toroidal,
            Some(2) => Self::DoubleToroidal,
            Some(3) => Self::TripleToroidal,
            Some(4) => Self::GenusFour,
            Some(_) => Self::GenusAtLeastFive,
            None => Self::Unknown,
        }
    }
}

/// Where a reduced co-Engel graph embeds, as far as closed forms decide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceClass {
    pub genus: Option<u64>,
    pub crosscap: Option<u64>,
    pub classification: Classification,
    pub projective: Option<bool>,
    /// Which closed form produced the genus.
    pub source: String,
    /// Euler-characteristic lower bound for the graph, when a shape is known.
    pub euler_lower_bound: Option<u64>,
}

impl SurfaceClass {
    /// False when the reported genus is below the Euler bound, i.e. the
    /// closed form cannot be the true genus of this graph.
    pub fn consistent_with_euler(&self) -> bool {
        match (self.genus, self.euler_lower_bound) {
            (Some(g), Some(lb)) => g >= lb,
            _ => true,
        }
    }
}

impl SurfaceClass {
    fn unknown(source: impl Into<String>) -> Self {
        Self {
            genus: None,
            crosscap: None,
            classification: Classification::Unknown,
            projective: None,
            source: source.into(),
            euler_lower_bound: None,
        }
    }

    fn new(genus: u64, crosscap: Option<u64>, projective: Option<bool>, source: impl Into<String>) -> Self {
        let projective = crosscap.map(|c| c == 1).or(projective);
        Self {
            genus: Some(genus),
            crosscap,
            classification: Classification::from_genus(Some(genus)),
            projective,
            source: source.into(),
            euler_lower_bound: None,
        }
    }

    fn with_bound(mut self, v: usize, e: usize) -> Self {
        self.euler_lower_bound = Some(euler_genus_lower_bound(v as u64, e as u64));
        self
    }
}

/// Largest crosscap value among bicliques `K_{kb,(a-k)b}` obtained by
/// splitting the parts of `K_{a*b}` into two groups.
fn biclique_crosscap_bound(a: u64, b: u64) -> u64 {
    (1..a)
        .filter_map(|k| crosscap_complete_bipartite(k * b, (a - k) * b).ok())
        .max()
        .unwrap_or(0)
}

/// Surface data for a recognised complete multipartite shape.
pub fn surface_class_of_shape(shape: &MultipartiteShape) -> SurfaceClass {
    let a = shape.a as u64;
    let v = shape.n_vertices();
    let e = (v * v - shape.parts.iter().map(|p| p * p).sum::<usize>()) / 2;
    let class = match (shape.b.map(|b| b as u64), shape.parts.as_slice()) {
        (Some(1), _) => {
            let crosscap = crosscap_complete(a).ok().or(Some(1));
            SurfaceClass::new(genus_complete(a), crosscap, None, "complete")
        }
        (_, &[m, n]) if n >= 2 => {
            let (m, n) = (m as u64, n as u64);
            let genus = genus_complete_bipartite(m, n).expect("parts >= 2");
            SurfaceClass::new(genus, crosscap_complete_bipartite(m, n).ok(), None, "complete bipartite")
        }
        (Some(b), _) if a == 3 => {
            let genus = genus_k_mnn(1, b).expect("b >= 2");
            SurfaceClass::new(genus, None, multipartite_projective(a, b, genus), "complete tripartite")
        }
        (Some(b), _) if a > 3 => {
            let genus = genus_uniform_multipartite(a, b).expect("a > 3");
            SurfaceClass::new(genus, None, multipartite_projective(a, b, genus), "uniform multipartite")
        }
        _ => return SurfaceClass::unknown(format!("no closed form for {shape}")),
    };
    class.with_bound(v, e)
}

/// A biclique with crosscap at least 2 rules the projective plane out;
/// otherwise a planar shape embeds there.
fn multipartite_projective(a: u64, b: u64, genus: u64) -> Option<bool> {
    if biclique_crosscap_bound(a, b) >= 2 {
        Some(false)
    } else if genus == 0 {
        Some(true)
    } else {
        None
    }
}

/// The two sides of the `K_{4,4}` inside the reduced graph of `A_4`.
pub const A4_BICLIQUE: ([&str; 4], [&str; 4]) =
    (["(2,3,4)", "(1,2,4)", "(2,4,3)", "(1,4,2)"], ["(1,2,3)", "(1,3,4)", "(1,3,2)", "(1,4,3)"]);

fn is_alternating_four(group: &FiniteGroup) -> bool {
    group.order() == 12
        && build_alternating(4)
            .ok()
            .and_then(|a4| groups_isomorphic_small(&a4, group).ok())
            .unwrap_or(false)
}

/// Genus, crosscap and classification of the reduced co-Engel graph.
///
/// `A_4` is taken from a known torus embedding (its reduced graph is
/// `K_{4*2}`, where the multipartite closed form undercounts), with its
/// `K_{4,4}` biclique excluding the projective plane. Other complete and
/// complete multipartite shapes go through the closed forms. Everything else
/// is `Unknown`.
pub fn surface_class_of_reduced(group: &FiniteGroup) -> SurfaceClass {
    let graph = match reduced_co_engel_graph(group) {
        Ok(g) => g,
        Err(e) => return SurfaceClass::unknown(e.to_string()),
    };
    if is_alternating_four(group) {
        let named = |names: &[&str]| -> Option<Vec<usize>> {
            names
                .iter()
                .map(|n| group.element_by_name(n).and_then(|x| graph.origin().iter().position(|&o| o == x)))
                .collect()
        };
        let projective = match (named(&A4_BICLIQUE.0), named(&A4_BICLIQUE.1)) {
            (Some(h), Some(k)) if verify_biclique(&graph, &h, &k) == Ok(true) => Some(false),
            _ => None,
        };
        return SurfaceClass::new(1, None, projective, "known embedding of A_4")
            .with_bound(graph.n_vertices(), graph.edge_count());
    }
    match recognize_complete_multipartite(&graph) {
        Some(shape) => surface_class_of_shape(&shape),
        None => SurfaceClass::unknown("reduced graph is not complete multipartite"),
    }
}
