//! Genus, crosscap and classification of reduced co-Engel graphs, with the
//! Euler lower bound printed next to each closed-form genus.

use engel_lab::cli::GroupSpec;
use engel_lab::genus::surface_class_of_reduced;

fn show<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

fn main() {
    let mut specs: Vec<String> = ["D:6", "D:10", "D:14", "D:18", "D:22", "A:4", "P:(C:3)x(D:6)"].map(String::from).to_vec();
    for t in 1..=2u32 {
        for m in [3usize, 5, 7, 9] {
            specs.push(format!("D:{}", (1 << (t + 1)) * m));
        }
    }
    specs.extend(["F:2:5", "F:3:7", "F:3:13"].map(String::from));
    println!("{:<16} {:>6} {:>6} {:>9} {:<20} {:<10} source", "group", "genus", "euler", "crosscap", "class", "projective");
    for text in specs {
        let g = text.parse::<GroupSpec>().unwrap().build().unwrap();
        let c = surface_class_of_reduced(&g);
        let flag = if c.consistent_with_euler() { "" } else { "  (below Euler bound)" };
        println!(
            "{text:<16} {:>6} {:>6} {:>9} {:<20} {:<10} {}{flag}",
            show(c.genus),
            show(c.euler_lower_bound),
            show(c.crosscap),
            serde_json::to_value(c.classification).unwrap().as_str().unwrap(),
            show(c.projective),
            c.source
        );
    }
}
