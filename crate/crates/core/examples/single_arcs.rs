//! Single arcs of the directed Engel graph that avoid L(G), over the built-in
//! soluble groups up to a given order.
//!
//! cargo run --release --example single_arcs -- 96

use engel_lab::cli::{cmd_sweep_single_arcs, GroupCache};

fn main() {
    let max_order = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(48);
    let rows = cmd_sweep_single_arcs(max_order, &GroupCache::disabled()).unwrap();
    let (with, without): (Vec<_>, Vec<_>) = rows.iter().partition(|r| r.single_arcs_outside_left_engel > 0);
    println!("{} groups of order <= {max_order}", rows.len());
    for r in &with {
        println!("  {:<10} {} single arcs outside L(G)", r.group, r.single_arcs_outside_left_engel);
    }
    let names: Vec<&str> = without.iter().map(|r| r.group.as_str()).collect();
    println!("none outside L(G): {}", names.join(" "));
}
