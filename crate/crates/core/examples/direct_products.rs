//! Shapes of reduced co-Engel graphs of H x G for nilpotent H. The
//! observed shape has as many parts as G's graph, each |H| times larger.

use engel_lab::analysis::recognize_complete_multipartite;
use engel_lab::cli::GroupSpec;
use engel_lab::engel::reduced_co_engel_graph;

fn shape_of(spec: &GroupSpec) -> String {
    let graph = reduced_co_engel_graph(&spec.build().unwrap()).unwrap();
    recognize_complete_multipartite(&graph).map(|s| s.to_string()).unwrap_or_else(|| "not multipartite".into())
}

fn main() {
    let nilpotent = ["C:2", "C:3", "C:4", "P:(C:2)x(C:2)", "Q:8"];
    let bases = ["D:6", "D:12", "Q:12", "F:3:7"];
    for g in bases {
        let g: GroupSpec = g.parse().unwrap();
        println!("{g}: {}", shape_of(&g));
        for h in nilpotent {
            let product = GroupSpec::Product(vec![h.parse().unwrap(), g.clone()]);
            println!("  {product:<22} {}", shape_of(&product));
        }
    }
}
