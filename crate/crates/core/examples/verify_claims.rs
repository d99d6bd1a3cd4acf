//! Runs the closed-form verification sweep and summarises it per claim.
//!
//! cargo run --release --example verify_claims

use std::collections::BTreeMap;

use engel_lab::cli::{cmd_verify_paper, Status, VerifyOptions};

fn main() {
    let records = cmd_verify_paper(&VerifyOptions::default());
    let mut by_claim: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for r in &records {
        let entry = by_claim.entry(r.claim_id.as_str()).or_default();
        match r.status {
            Status::Pass => entry.0 += 1,
            Status::Fail => entry.1 += 1,
            Status::Skipped => entry.2 += 1,
        }
    }
    for (claim, (pass, fail, skipped)) in &by_claim {
        println!("{claim:<30} pass {pass:>3}  fail {fail:>3}  skipped {skipped:>3}");
    }
    for r in records.iter().filter(|r| r.status == Status::Fail).take(3) {
        println!("\n{} on {}:\n  expected {}\n  computed {}", r.claim_id, r.group, r.expected, r.computed);
    }
}
