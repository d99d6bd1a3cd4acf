//! Recognises the reduced co-Engel graphs of the dihedral, quaternion and
//! Frobenius families as complete multipartite graphs and reports clique
//! number and planarity.

use engel_lab::analysis::{clique_number_with_limit, is_planar, recognize_complete_multipartite};
use engel_lab::cli::GroupSpec;
use engel_lab::engel::reduced_co_engel_graph;

fn main() {
    let specs = ["D:6", "D:10", "D:12", "Q:12", "D:24", "Q:40", "F:2:7", "F:3:7", "F:5:11", "A:4", "S:4", "P:(C:3)x(D:6)"];
    println!("{:<16} {:>4} {:<14} {:>6} {:>7}", "group", "|V|", "shape", "omega", "planar");
    for text in specs {
        let spec: GroupSpec = text.parse().unwrap();
        let graph = reduced_co_engel_graph(&spec.build().unwrap()).unwrap();
        let shape = recognize_complete_multipartite(&graph).map(|s| s.to_string()).unwrap_or_else(|| "-".into());
        let omega = clique_number_with_limit(&graph, 64).map(|w| w.to_string()).unwrap_or_else(|_| "?".into());
        println!("{text:<16} {:>4} {shape:<14} {omega:>6} {:>7}", graph.n_vertices(), is_planar(&graph));
    }
}
