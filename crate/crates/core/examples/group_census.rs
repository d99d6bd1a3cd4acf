//! Builds a few groups from spec strings and prints their element-order
//! census and structural flags.
//!
//! cargo run --example group_census -- D:24 Q:12 F:3:7 "P:(C:3)x(D:6)"

use engel_lab::cli::GroupSpec;
use engel_lab::group::{hypercenter, is_nilpotent, is_soluble};

fn main() {
    let mut specs: Vec<String> = std::env::args().skip(1).collect();
    if specs.is_empty() {
        specs = ["D:24", "Q:12", "F:3:7", "S:4", "A:5", "P:(C:3)x(D:6)"].map(String::from).to_vec();
    }
    for text in specs {
        let spec: GroupSpec = match text.parse() {
            Ok(s) => s,
            Err(e) => {
                eprintln!("{e}");
                continue;
            }
        };
        let g = spec.build().expect("validated spec builds");
        let census: Vec<String> = g.order_census().iter().map(|(o, c)| format!("{c}x{o}")).collect();
        println!(
            "{spec:<16} |G| = {:<4} orders [{}]  nilpotent {}  soluble {}  |Z*| = {}",
            g.order(),
            census.join(" "),
            is_nilpotent(&g),
            is_soluble(&g),
            hypercenter(&g).order()
        );
    }
}
