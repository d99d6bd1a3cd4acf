//! Exact adjacency, Laplacian and signless Laplacian spectra, graph energies
//! and the closed forms for complete and uniform multipartite graphs.
//!
//! Everything is exact: polynomials carry big-integer coefficients and
//! energies are rationals. Energies are only produced for super-integral
//! graphs.

pub mod charpoly;
pub mod poly;
pub mod report;

use thiserror::Error;

pub use charpoly::{char_poly_exact, char_poly_faddeev, max_abs_row_sum, IntMatrix};
pub use poly::{integer_roots, integer_roots_bounded, IntPolynomial, IntegerSpectrum};
pub use report::{
    adjacency_matrix, closed_form_spectra, laplacian_matrix, signless_laplacian_matrix, spectrum_report, ClosedFormFamily,
    Energies, MatrixSpectrum, SpectrumReport, SpectrumReportJson,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("matrix is not square: {rows} rows but row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("non-integral spectrum: energies unavailable")]
    NonIntegralSpectrum,
    #[error("no closed form for {0}")]
    UnknownFamily(String),
}
