//! Writes the reduced co-Engel graph and the directed Engel graph of a group
//! in DOT format.
//!
//! cargo run --example engel_graphs_dot -- A:4 | dot -Tsvg > a4.svg

use engel_lab::cli::GroupSpec;
use engel_lab::engel::{directed_engel_graph, reduced_co_engel_graph};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "S:3".to_string());
    let spec: GroupSpec = text.parse().unwrap_or_else(|e| panic!("{e}"));
    let g = spec.build().unwrap();
    match reduced_co_engel_graph(&g) {
        Ok(graph) => print!("{}", graph.to_dot(&format!("reduced {spec}"))),
        Err(e) => eprintln!("{e}"),
    }
    print!("{}", directed_engel_graph(&g).to_dot(&format!("directed {spec}")));
}
