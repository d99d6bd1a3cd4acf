use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::charpoly::{char_poly_exact, max_abs_row_sum, IntMatrix};
use super::poly::{integer_roots_bounded, IntPolynomial, IntegerSpectrum};
use super::SpectraError;
use crate::analysis::MultipartiteShape;
use crate::graph::SimpleGraph;

pub fn adjacency_matrix(graph: &SimpleGraph) -> IntMatrix {
    let n = graph.n_vertices();
    let mut m = IntMatrix::zeros(n);
    for (u, v) in graph.edges() {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    m
}

/// `D - A`.
pub fn laplacian_matrix(graph: &SimpleGraph) -> IntMatrix {
    degree_plus(graph, -1)
}

/// `D + A`.
pub fn signless_laplacian_matrix(graph: &SimpleGraph) -> IntMatrix {
    degree_plus(graph, 1)
}

fn degree_plus(graph: &SimpleGraph, sign: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(graph.n_vertices());
    for u in 0..graph.n_vertices() {
        m.set(u, u, graph.degree(u) as i64);
    }
    for (u, v) in graph.edges() {
        m.set(u, v, sign);
        m.set(v, u, sign);
    }
    m
}

/// A characteristic polynomial and, when it splits over the integers, its
/// roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSpectrum {
    pub poly: IntPolynomial,
    pub spectrum: Option<IntegerSpectrum>,
}

impl MatrixSpectrum {
    fn of_matrix(m: &IntMatrix) -> Self {
        let poly = char_poly_exact(m);
        let spectrum = integer_roots_bounded(&poly, max_abs_row_sum(m));
        Self { poly, spectrum }
    }

    fn from_spectrum(spectrum: IntegerSpectrum) -> Self {
        Self { poly: spectrum.to_polynomial(), spectrum: Some(spectrum) }
    }
}

/// `E`, `LE`, `LE+` and the flags derived from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Energies {
    pub energy: Rational64,
    pub laplacian_energy: Rational64,
    pub signless_laplacian_energy: Rational64,
    /// `E > 2(n - 1)`, the energy of `K_n`.
    pub hyperenergetic: bool,
    /// `E < n`.
    pub hypoenergetic: bool,
    /// `E <= LE`.
    pub ele_holds: bool,
}

impl Energies {
    fn new(n: usize, energy: Rational64, laplacian_energy: Rational64, signless_laplacian_energy: Rational64) -> Self {
        let n = n as i64;
        Self {
            hyperenergetic: energy > Rational64::from_integer(2 * (n - 1)),
            hypoenergetic: energy < Rational64::from_integer(n),
            ele_holds: energy <= laplacian_energy,
            energy,
            laplacian_energy,
            signless_laplacian_energy,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub adjacency: MatrixSpectrum,
    pub laplacian: MatrixSpectrum,
    pub signless: MatrixSpectrum,
    /// `2e / v`.
    pub mean_degree: Rational64,
    pub super_integral: bool,
    energies: Option<Energies>,
}

impl SpectrumReport {
    fn assemble(n: usize, e: usize, adjacency: MatrixSpectrum, laplacian: MatrixSpectrum, signless: MatrixSpectrum) -> Self {
        let mean_degree = Rational64::new(2 * e as i64, n as i64);
        let energies = match (&adjacency.spectrum, &laplacian.spectrum, &signless.spectrum) {
            (Some(a), Some(l), Some(q)) => {
                let abs_sum = |s: &IntegerSpectrum, shift: Rational64| {
                    s.roots
                        .iter()
                        .map(|&(r, m)| (Rational64::from_integer(r) - shift).abs() * m as i64)
                        .fold(Rational64::zero(), |acc, x| acc + x)
                };
                Some(Energies::new(
                    n,
                    abs_sum(a, Rational64::zero()),
                    abs_sum(l, mean_degree),
                    abs_sum(q, mean_degree),
                ))
            }
            _ => None,
        };
        Self { n_vertices: n, n_edges: e, super_integral: energies.is_some(), adjacency, laplacian, signless, mean_degree, energies }
    }

    /// Energies, available only for super-integral graphs.
    pub fn energies(&self) -> Result<&Energies, SpectraError> {
        self.energies.as_ref().ok_or(SpectraError::NonIntegralSpectrum)
    }

    pub fn to_json_model(&self) -> SpectrumReportJson {
        let side = |m: &MatrixSpectrum| MatrixSpectrumJson {
            poly: m.poly.to_decimal_strings(),
            spectrum: m.spectrum.as_ref().map(|s| s.roots.iter().map(|&(r, k)| (r, k)).collect()),
        };
        let ratio = |r: &Rational64| format!("{}/{}", r.numer(), r.denom());
        SpectrumReportJson {
            n_vertices: self.n_vertices,
            n_edges: self.n_edges,
            adjacency: side(&self.adjacency),
            laplacian: side(&self.laplacian),
            signless: side(&self.signless),
            mean_degree: ratio(&self.mean_degree),
            super_integral: self.super_integral,
            energies: self.energies.as_ref().map(|e| EnergiesJson {
                energy: ratio(&e.energy),
                laplacian_energy: ratio(&e.laplacian_energy),
                signless_laplacian_energy: ratio(&e.signless_laplacian_energy),
                hyperenergetic: e.hyperenergetic,
                hypoenergetic: e.hypoenergetic,
                ele_holds: e.ele_holds,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixSpectrumJson {
    /// Ascending coefficients as decimal strings.
    pub poly: Vec<String>,
    /// `[[value, multiplicity], ...]` ascending.
    pub spectrum: Option<Vec<(i64, usize)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnergiesJson {
    pub energy: String,
    pub laplacian_energy: String,
    pub signless_laplacian_energy: String,
    pub hyperenergetic: bool,
    pub hypoenergetic: bool,
    pub ele_holds: bool,
}

/// Serialized form of [`SpectrumReport`]; rationals as `"num/den"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReportJson {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub adjacency: MatrixSpectrumJson,
    pub laplacian: MatrixSpectrumJson,
    pub signless: MatrixSpectrumJson,
    pub mean_degree: String,
    pub super_integral: bool,
    pub energies: Option<EnergiesJson>,
}

/// Builds `A`, `D - A`, `D + A` and computes everything from the matrices.
pub fn spectrum_report(graph: &SimpleGraph) -> Result<SpectrumReport, SpectraError> {
    let n = graph.n_vertices();
    if n == 0 {
        return Err(SpectraError::EmptyGraph);
    }
    let [adjacency, laplacian, signless] =
        [adjacency_matrix(graph), laplacian_matrix(graph), signless_laplacian_matrix(graph)].map(|m| MatrixSpectrum::of_matrix(&m));
    Ok(SpectrumReport::assemble(n, graph.edge_count(), adjacency, laplacian, signless))
}

/// Families with known spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormFamily {
    Complete(usize),
    /// `K_{a*b}`: `a` parts of size `b`.
    UniformMultipartite { a: usize, b: usize },
}

impl ClosedFormFamily {
    pub fn from_shape(shape: &MultipartiteShape) -> Result<Self, SpectraError> {
        match shape.b {
            Some(1) => Ok(Self::Complete(shape.a)),
            Some(b) => Ok(Self::UniformMultipartite { a: shape.a, b }),
            None => Err(SpectraError::UnknownFamily(shape.to_string())),
        }
    }

    fn parts(self) -> (i64, i64) {
        match self {
            Self::Complete(n) => (n as i64, 1),
            Self::UniformMultipartite { a, b } => (a as i64, b as i64),
        }
    }
}

/// Report assembled from the closed forms, with no matrix work.
///
/// For `K_{a*b}` (and `K_n = K_{n*1}`):
/// `Spec = {0^{a(b-1)}, (-b)^{a-1}, (b(a-1))^1}`,
/// `L-Spec = {0^1, (b(a-1))^{a(b-1)}, (ab)^{a-1}}`,
/// `Q-Spec = {(b(a-1))^{a(b-1)}, (b(a-2))^{a-1}, (2b(a-1))^1}`,
/// and `E = LE = LE+ = 2b(a-1)`.
pub fn closed_form_spectra(family: ClosedFormFamily) -> Result<SpectrumReport, SpectraError> {
    let (a, b) = family.parts();
    if a < 1 || b < 1 {
        return Err(SpectraError::EmptyGraph);
    }
    let (au, bu) = (a as usize, b as usize);
    let n = au * bu;
    let e = au * (au - 1) / 2 * bu * bu;
    let adjacency = IntegerSpectrum::new([(0, au * (bu - 1)), (-b, au - 1), (b * (a - 1), 1)]);
    let laplacian = IntegerSpectrum::new([(0, 1), (b * (a - 1), au * (bu - 1)), (a * b, au - 1)]);
    let signless = IntegerSpectrum::new([(b * (a - 1), au * (bu - 1)), (b * (a - 2), au - 1), (2 * b * (a - 1), 1)]);
    let energy = Rational64::from_integer(2 * b * (a - 1));
    let mut report = SpectrumReport::assemble(
        n,
        e,
        MatrixSpectrum::from_spectrum(adjacency),
        MatrixSpectrum::from_spectrum(laplacian),
        MatrixSpectrum::from_spectrum(signless),
    );
    report.energies = Some(Energies::new(n, energy, energy, energy));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engel::reduced_co_engel_graph;
    use crate::group::{build_dihedral, build_frobenius};

    fn int(v: i64) -> Rational64 {
        Rational64::from_integer(v)
    }

    #[test]
    fn reduced_d24() {
        let g = build_dihedral(24).unwrap();
        let report = spectrum_report(&reduced_co_engel_graph(&g).unwrap()).unwrap();
        assert_eq!(report.adjacency.spectrum, Some(IntegerSpectrum::new([(0, 9), (-4, 2), (8, 1)])));
        let e = report.energies().unwrap();
        assert_eq!((e.energy, e.laplacian_energy, e.signless_laplacian_energy), (int(16), int(16), int(16)));
        assert!(report.super_integral);
        assert_eq!(report, closed_form_spectra(ClosedFormFamily::UniformMultipartite { a: 3, b: 4 }).unwrap());
    }

    #[test]
    fn reduced_f37() {
        let g = build_frobenius(3, 7, None).unwrap();
        let report = spectrum_report(&reduced_co_engel_graph(&g).unwrap()).unwrap();
        assert_eq!(report.adjacency.spectrum, Some(IntegerSpectrum::new([(0, 7), (-2, 6), (12, 1)])));
        assert_eq!(report.energies().unwrap().energy, int(24));
    }

    #[test]
    fn single_vertex() {
        let report = spectrum_report(&SimpleGraph::empty(1)).unwrap();
        assert_eq!(report.adjacency.spectrum, Some(IntegerSpectrum::new([(0, 1)])));
        let e = report.energies().unwrap();
        assert_eq!(e.energy, int(0));
        assert!(e.hypoenergetic);
        assert!(!e.hyperenergetic);
        assert_eq!(report, closed_form_spectra(ClosedFormFamily::UniformMultipartite { a: 1, b: 1 }).unwrap());
        assert_eq!(spectrum_report(&SimpleGraph::empty(0)), Err(SpectraError::EmptyGraph));
    }

    #[test]
    fn complete_graph_closed_form() {
        let k7 = closed_form_spectra(ClosedFormFamily::Complete(7)).unwrap();
        assert_eq!(k7.adjacency.spectrum, Some(IntegerSpectrum::new([(-1, 6), (6, 1)])));
        assert_eq!(k7.energies().unwrap().energy, int(12));
        assert_eq!(k7, spectrum_report(&SimpleGraph::complete(7)).unwrap());
    }

    #[test]
    fn multipartite_laplacian_closed_form() {
        for a in 1..6usize {
            for b in 1..5usize {
                let (ai, bi) = (a as i64, b as i64);
                let closed = closed_form_spectra(ClosedFormFamily::UniformMultipartite { a, b }).unwrap();
                let expected = IntegerSpectrum::new([(0, 1), (bi * (ai - 1), a * (b - 1)), (ai * bi, a - 1)]);
                assert_eq!(closed.laplacian.spectrum.as_ref(), Some(&expected));
                let computed = spectrum_report(&SimpleGraph::complete_multipartite(&vec![b; a])).unwrap();
                assert_eq!(computed, closed, "K_{{{a}*{b}}}");
            }
        }
    }

    #[test]
    fn five_cycle_is_not_integral() {
        let report = spectrum_report(&SimpleGraph::cycle(5)).unwrap();
        assert!(report.adjacency.spectrum.is_none());
        assert!(!report.super_integral);
        assert_eq!(report.energies(), Err(SpectraError::NonIntegralSpectrum));
        // x^5 - 5x^3 + 5x - 2
        assert_eq!(report.adjacency.poly, IntPolynomial::from_i64(&[-2, 5, 0, -5, 0, 1]));
    }

    #[test]
    fn json_shape() {
        let report = closed_form_spectra(ClosedFormFamily::Complete(3)).unwrap();
        let value = serde_json::to_value(report.to_json_model()).unwrap();
        assert_eq!(value["adjacency"]["poly"], serde_json::json!(["-2", "-3", "0", "1"]));
        assert_eq!(value["adjacency"]["spectrum"], serde_json::json!([[-1, 2], [2, 1]]));
        assert_eq!(value["mean_degree"], "2/1");
        assert_eq!(value["energies"]["energy"], "4/1");
    }
}
