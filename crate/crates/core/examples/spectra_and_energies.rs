//! Exact characteristic polynomials, integer spectra and energies of a
//! reduced co-Engel graph, checked against the closed form for its shape.

use engel_lab::analysis::recognize_complete_multipartite;
use engel_lab::cli::GroupSpec;
use engel_lab::engel::reduced_co_engel_graph;
use engel_lab::spectra::{closed_form_spectra, spectrum_report, ClosedFormFamily, MatrixSpectrum};

fn describe(name: &str, m: &MatrixSpectrum) {
    let spec = match &m.spectrum {
        Some(s) => s.roots.iter().map(|(r, k)| format!("{r}^{k}")).collect::<Vec<_>>().join(" "),
        None => "not integral".into(),
    };
    println!("  {name:<10} P(x) = {}\n  {:<10} {{{spec}}}", m.poly, "");
}

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "D:24".to_string());
    let g = text.parse::<GroupSpec>().unwrap_or_else(|e| panic!("{e}")).build().unwrap();
    let graph = reduced_co_engel_graph(&g).unwrap_or_else(|e| panic!("{e}"));
    let report = spectrum_report(&graph).unwrap();
    println!("{text}: {} vertices, {} edges", report.n_vertices, report.n_edges);
    describe("adjacency", &report.adjacency);
    describe("laplacian", &report.laplacian);
    describe("signless", &report.signless);
    match report.energies() {
        Ok(e) => println!(
            "  E = {}  LE = {}  LE+ = {}  hyperenergetic {}  hypoenergetic {}  E <= LE {}",
            e.energy, e.laplacian_energy, e.signless_laplacian_energy, e.hyperenergetic, e.hypoenergetic, e.ele_holds
        ),
        Err(e) => println!("  energies unavailable: {e}"),
    }
    if let Some(shape) = recognize_complete_multipartite(&graph) {
        let closed = closed_form_spectra(ClosedFormFamily::from_shape(&shape).unwrap()).unwrap();
        println!("  closed form for {shape} agrees: {}", closed == report);
    }
}
