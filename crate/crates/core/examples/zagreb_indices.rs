//! First and second Zagreb indices of reduced co-Engel graphs and the
//! comparison of M2/e with M1/v.

use engel_lab::analysis::recognize_complete_multipartite;
use engel_lab::cli::GroupSpec;
use engel_lab::engel::reduced_co_engel_graph;
use engel_lab::genus::{zagreb_closed_form, zagreb_report};

fn main() {
    for text in ["D:12", "Q:24", "D:40", "F:3:7", "F:5:11", "A:4", "S:4"] {
        let g = text.parse::<GroupSpec>().unwrap().build().unwrap();
        let graph = reduced_co_engel_graph(&g).unwrap();
        let z = zagreb_report(&graph);
        let closed = recognize_complete_multipartite(&graph)
            .and_then(|s| s.b.map(|b| zagreb_closed_form(s.a as u64, b as u64)));
        let hv = z.hv.as_ref().map(|h| format!("{} vs {} holds {}", h.lhs, h.rhs, h.holds)).unwrap_or_default();
        println!("{text:<8} M1 = {:<8} M2 = {:<9} closed form {:?}  {hv}", z.m1, z.m2, closed);
    }
}
