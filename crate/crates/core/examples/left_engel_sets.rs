//! Left Engel elements of soluble groups and the check that they form the
//! Fitting subgroup.

use engel_lab::engel::{left_engel_set, validate_left_engel_set};
use engel_lab::group::{build_dihedral, build_frobenius, build_symmetric};

fn main() {
    let groups = [
        build_dihedral(12).unwrap(),
        build_dihedral(40).unwrap(),
        build_frobenius(3, 7, None).unwrap(),
        build_symmetric(4).unwrap(),
    ];
    for g in &groups {
        let left = left_engel_set(g);
        let names: Vec<&str> = left.iter().map(|&x| g.element_name(x)).collect();
        let verdict = match validate_left_engel_set(g, &left) {
            Ok(sub) => format!("maximal normal nilpotent subgroup of order {}", sub.order()),
            Err(e) => format!("invalid: {e}"),
        };
        println!("L({}) = {{{}}}\n    {verdict}", g.label(), names.join(", "));
    }
}
