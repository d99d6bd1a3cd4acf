//! The verification sweep: each claim about the group families becomes a
//! record comparing a closed-form expectation with a computed value.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::cache::GroupCache;
use super::spec::GroupSpec;
use super::CliError;
use crate::analysis::{clique_number, graphs_isomorphic_small, is_planar, recognize_complete_multipartite, verify_biclique};
use crate::engel::{
    directed_engel_graph_from, reduced_co_engel_graph_from, single_arc_pairs, validate_left_engel_set, EngelTable,
};
use crate::genus::{
    crosscap_complete, crosscap_complete_bipartite, genus_complete, genus_complete_bipartite, genus_uniform_multipartite,
    surface_class_of_reduced, zagreb_report, Classification, A4_BICLIQUE,
};
use crate::graph::SimpleGraph;
use crate::group::{subgroup_generated, FiniteGroup};
use crate::spectra::{spectrum_report, IntegerSpectrum, SpectrumReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Skipped => "skipped",
        })
    }
}

/// One checked claim on one subject. `group` is a canonical group spec, or a
/// graph name for claims about closed forms alone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub claim_id: String,
    pub group: String,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
}

impl VerificationRecord {
    pub fn new(claim_id: &str, group: impl Into<String>, expected: Value, computed: Value) -> Self {
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Self { claim_id: claim_id.to_string(), group: group.into(), expected, computed, status }
    }

    pub fn skipped(claim_id: &str, group: impl Into<String>, expected: Value, reason: impl Into<String>) -> Self {
        Self {
            claim_id: claim_id.to_string(),
            group: group.into(),
            expected,
            computed: json!({ "skipped": reason.into() }),
            status: Status::Skipped,
        }
    }
}

/// Families the sweep can be restricted to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SweepFamily {
    /// `D_{2m}`, `m` odd.
    Dihedral,
    /// `D_{2^{t+1} m}` and `Q_{2^{t+1} m}`.
    DihedralQuaternion,
    Frobenius,
    /// Products with nilpotent factors.
    Products,
    /// `S_4`, `A_4`, `C_3 x D_6`, nilpotent groups and closed-form checks.
    Other,
}

impl SweepFamily {
    pub const ALL: [SweepFamily; 5] =
        [Self::Dihedral, Self::DihedralQuaternion, Self::Frobenius, Self::Products, Self::Other];

    pub fn name(self) -> &'static str {
        match self {
            Self::Dihedral => "D",
            Self::DihedralQuaternion => "DQ",
            Self::Frobenius => "F",
            Self::Products => "P",
            Self::Other => "other",
        }
    }
}

impl FromStr for SweepFamily {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Self::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| CliError::Usage(format!("unknown family {s:?}; expected one of D, DQ, F, P, other")))
    }
}

pub const SWEEP_T: [u32; 3] = [1, 2, 3];
pub const SWEEP_M: [u64; 4] = [3, 5, 7, 9];
pub const SWEEP_PQ: [(u64, u64); 6] = [(2, 3), (2, 5), (2, 7), (3, 7), (3, 13), (5, 11)];
/// `D_{2m}` is also classified at `m = 11`, the first case of genus >= 5.
pub const SWEEP_DIHEDRAL_M: [u64; 5] = [3, 5, 7, 9, 11];
pub const DEFAULT_MAX_ORDER: usize = 512;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub families: Vec<SweepFamily>,
    pub max_order: usize,
    pub cache: GroupCache,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { families: SweepFamily::ALL.to_vec(), max_order: DEFAULT_MAX_ORDER, cache: GroupCache::disabled() }
    }
}

/// Everything derived once per group.
struct Facts {
    spec: GroupSpec,
    group: FiniteGroup,
    table: EngelTable,
    reduced: Option<SimpleGraph>,
}

impl Facts {
    fn new(spec: &GroupSpec, cache: &GroupCache) -> Result<Self, CliError> {
        let group = cache.get_or_build(spec)?;
        let table = EngelTable::build(&group);
        let reduced = reduced_co_engel_graph_from(&group, &table).ok();
        Ok(Self { spec: spec.clone(), group, table, reduced })
    }

    fn name(&self) -> String {
        self.spec.to_string()
    }

    fn parts(&self) -> Value {
        match self.reduced.as_ref().and_then(recognize_complete_multipartite) {
            Some(shape) => json!(shape.parts),
            None => Value::Null,
        }
    }

    fn spectrum(&self) -> Option<SpectrumReport> {
        self.reduced.as_ref().and_then(|g| spectrum_report(g).ok())
    }

    fn names(&self, elements: impl IntoIterator<Item = usize>) -> Value {
        let set: BTreeSet<&str> = elements.into_iter().map(|x| self.group.element_name(x)).collect();
        json!(set)
    }
}

/// `ceil((k-3)(k-4)/12)`; the product of consecutive integers is never negative.
fn euler_term(k: u64) -> u64 {
    let k = k as i64;
    ((k - 3) * (k - 4)).div_euclid(12) as u64 + u64::from((k - 3) * (k - 4) % 12 != 0)
}

fn pow2(t: u32) -> u64 {
    1 << t
}

fn ratio_json(r: Rational64) -> Value {
    if *r.denom() == 1 {
        json!(r.numer())
    } else {
        json!(format!("{}/{}", r.numer(), r.denom()))
    }
}

fn spectrum_json(roots: &[(i64, usize)]) -> Value {
    json!(IntegerSpectrum::new(roots.iter().copied()).roots)
}

fn computed_spectra(facts: &Facts) -> Value {
    let Some(report) = facts.spectrum() else { return Value::Null };
    let side = |m: &crate::spectra::MatrixSpectrum| m.spectrum.as_ref().map(|s| json!(s.roots)).unwrap_or(Value::Null);
    let energies = report.energies().ok();
    json!({
        "spec": side(&report.adjacency),
        "l_spec": side(&report.laplacian),
        "q_spec": side(&report.signless),
        "energy": energies.map(|e| ratio_json(e.energy)),
        "laplacian_energy": energies.map(|e| ratio_json(e.laplacian_energy)),
        "signless_laplacian_energy": energies.map(|e| ratio_json(e.signless_laplacian_energy)),
        "super_integral": report.super_integral,
    })
}

/// Spectra and energies of `K_{a*b}` written out from the family theorems:
/// zero multiplicity `a(b-1)`, `-b` with multiplicity `a-1` and so on.
fn expected_spectra(a: u64, b: u64) -> Value {
    let (ai, bi) = (a as i64, b as i64);
    let (au, bu) = (a as usize, b as usize);
    let energy = 2 * bi * (ai - 1);
    json!({
        "spec": spectrum_json(&[(0, au * (bu - 1)), (-bi, au - 1), (bi * (ai - 1), 1)]),
        "l_spec": spectrum_json(&[(0, 1), (bi * (ai - 1), au * (bu - 1)), (ai * bi, au - 1)]),
        "q_spec": spectrum_json(&[(bi * (ai - 1), au * (bu - 1)), (bi * (ai - 2), au - 1), (2 * bi * (ai - 1), 1)]),
        "energy": energy,
        "laplacian_energy": energy,
        "signless_laplacian_energy": energy,
        "super_integral": true,
    })
}

fn computed_energy_flags(facts: &Facts) -> Value {
    let Some(report) = facts.spectrum() else { return Value::Null };
    let Ok(e) = report.energies() else { return json!({ "energies": "unavailable" }) };
    let n = Rational64::from_integer(report.n_vertices as i64);
    json!({
        "hyperenergetic": e.hyperenergetic,
        "hypoenergetic": e.hypoenergetic,
        "e_minus_complete": ratio_json(e.energy - (n - 1) * 2),
        "e_minus_n": ratio_json(e.energy - n),
        "ele_holds": e.ele_holds,
        "e_equals_le": e.energy == e.laplacian_energy,
    })
}

fn expected_energy_flags(e_minus_complete: i64, e_minus_n: i64) -> Value {
    json!({
        "hyperenergetic": false,
        "hypoenergetic": false,
        "e_minus_complete": e_minus_complete,
        "e_minus_n": e_minus_n,
        "ele_holds": true,
        "e_equals_le": true,
    })
}

fn computed_zagreb(facts: &Facts) -> Value {
    let Some(graph) = &facts.reduced else { return Value::Null };
    let z = zagreb_report(graph);
    let hv = z.hv.as_ref();
    json!({
        "m1": z.m1,
        "m2": z.m2,
        "m2_over_e": hv.map(|h| ratio_json(h.lhs)),
        "m1_over_v": hv.map(|h| ratio_json(h.rhs)),
        "hv_holds": hv.map(|h| h.holds),
    })
}

fn expected_zagreb(m1: u64, m2: u64, ratio: u64) -> Value {
    json!({ "m1": m1, "m2": m2, "m2_over_e": ratio, "m1_over_v": ratio, "hv_holds": true })
}

fn classification_json(c: Classification) -> Value {
    serde_json::to_value(c).expect("classification serializes")
}

fn computed_class(facts: &Facts) -> Value {
    classification_json(surface_class_of_reduced(&facts.group).classification)
}

/// A subgroup generated by named elements, as sorted names.
fn generated_names(facts: &Facts, generator: &str) -> Value {
    let g = facts.group.generator(generator).expect("builder names its generators");
    facts.names(subgroup_generated(&facts.group, &[g]).members().iter().copied())
}

fn computed_left_engel(facts: &Facts) -> Value {
    let left = facts.table.left_engel_set();
    let valid = validate_left_engel_set(&facts.group, &left).is_ok();
    json!({ "elements": facts.names(left), "fitting_valid": valid })
}

fn has_single_arc(facts: &Facts) -> Value {
    let digraph = directed_engel_graph_from(&facts.group, &facts.table);
    json!({ "has_single_arc": !single_arc_pairs(&digraph).is_empty() })
}

fn single_arcs_outside(facts: &Facts) -> Vec<(usize, usize)> {
    let digraph = directed_engel_graph_from(&facts.group, &facts.table);
    single_arc_pairs(&digraph)
        .into_iter()
        .filter(|&(x, y)| !facts.table.is_left_engel(x) && !facts.table.is_left_engel(y))
        .collect()
}

/// Checks the three arc rules for `D_{2n}` with cyclic part `C = <y>`.
fn dihedral_arc_rules(facts: &Facts) -> Value {
    let g = &facts.group;
    let n = g.order() / 2;
    let in_c = |x: usize| x < n;
    let power_of_two = |k: usize| k.is_power_of_two();
    let arc = |x: usize, y: usize| facts.table.terminates(y, x);
    let (mut both_in_c, mut mixed, mut both_out) = (true, true, true);
    for x in g.elements() {
        for y in g.elements() {
            if x == y {
                continue;
            }
            match (in_c(x), in_c(y)) {
                (true, true) => both_in_c &= arc(x, y) && arc(y, x),
                (true, false) => {
                    mixed &= arc(x, y) && arc(y, x) == power_of_two(g.element_order(g.commutator(y, x)));
                }
                (false, true) => {}
                (false, false) => {
                    let two_way = power_of_two(g.element_order(g.mul(x, y)));
                    both_out &= if two_way { arc(x, y) && arc(y, x) } else { !arc(x, y) && !arc(y, x) };
                }
            }
        }
    }
    json!({ "inside_cyclic": both_in_c, "cyclic_to_outside": mixed, "outside": both_out })
}

type Job = (SweepFamily, GroupSpec);

fn jobs(families: &[SweepFamily]) -> Vec<Job> {
    let mut out = vec![];
    for &family in families {
        match family {
            SweepFamily::Dihedral => {
                out.extend(SWEEP_DIHEDRAL_M.map(|m| (family, GroupSpec::Dihedral(2 * m as usize))));
            }
            SweepFamily::DihedralQuaternion => {
                for t in SWEEP_T {
                    for m in SWEEP_M {
                        let order = (pow2(t + 1) * m) as usize;
                        out.push((family, GroupSpec::Dihedral(order)));
                        out.push((family, GroupSpec::Quaternion(order)));
                    }
                }
            }
            SweepFamily::Frobenius => {
                out.extend(SWEEP_PQ.map(|(p, q)| (family, GroupSpec::Frobenius { p: p as usize, q: q as usize, r: None })));
            }
            SweepFamily::Products => {
                let engel = [GroupSpec::Cyclic(2), GroupSpec::Cyclic(3), GroupSpec::Cyclic(4), GroupSpec::Quaternion(8)];
                let bases = [GroupSpec::Dihedral(12), GroupSpec::Quaternion(12), GroupSpec::Frobenius { p: 3, q: 7, r: None }];
                for h in &engel {
                    for g in &bases {
                        out.push((family, GroupSpec::Product(vec![h.clone(), g.clone()])));
                    }
                }
            }
            SweepFamily::Other => {
                for spec in [
                    GroupSpec::Symmetric(4),
                    GroupSpec::Alternating(4),
                    GroupSpec::Product(vec![GroupSpec::Cyclic(3), GroupSpec::Dihedral(6)]),
                    GroupSpec::Quaternion(8),
                    GroupSpec::Cyclic(5),
                    GroupSpec::Cyclic(6),
                    GroupSpec::Dihedral(8),
                ] {
                    out.push((family, spec));
                }
            }
        }
    }
    out
}

/// Claim ids a job contributes, used for "skipped" records.
fn claims_for(family: SweepFamily, spec: &GroupSpec) -> Vec<&'static str> {
    match (family, spec) {
        (SweepFamily::Dihedral, _) => vec![
            "thm-dihed",
            "genus-formula",
            "genus-class-D",
            "energy-d2m",
            "hyper-hypo",
            "directed-single-arcs",
        ],
        (SweepFamily::DihedralQuaternion, GroupSpec::Dihedral(_)) => vec![
            "thm-dihed",
            "left-engel",
            "genus-formula",
            "genus-class-DQ",
            "energy-d2m",
            "hyper-hypo",
            "zagreb-dq",
            "directed-single-arcs",
            "directed-dihedral-prop",
            "single-arcs-outside-L",
        ],
        (SweepFamily::DihedralQuaternion, _) => vec![
            "thm-dihed",
            "genus-formula",
            "genus-class-DQ",
            "energy-d2m",
            "hyper-hypo",
            "zagreb-dq",
            "directed-single-arcs",
        ],
        (SweepFamily::Frobenius, _) => vec![
            "thm-pq",
            "left-engel",
            "genus-formula",
            "genus-class-F",
            "energy-fpq",
            "hyper-hypo",
            "zagreb-fpq",
            "directed-single-arcs",
        ],
        (SweepFamily::Products, _) => vec!["thm-bipar"],
        (SweepFamily::Other, _) => vec!["other"],
    }
}

fn dihedral_records(facts: &Facts, m: u64) -> Vec<VerificationRecord> {
    let name = facts.name();
    let mu = m as usize;
    let mut out = vec![
        VerificationRecord::new("thm-dihed", &name, json!({ "parts": vec![1; mu] }), json!({ "parts": facts.parts() })),
        VerificationRecord::new(
            "genus-formula",
            &name,
            json!(genus_complete(m)),
            json!(genus_from_shape(facts)),
        ),
    ];
    let class = match m {
        3 => Classification::Planar,
        5 | 7 => Classification::Toroidal,
        9 => Classification::TripleToroidal,
        _ => Classification::GenusAtLeastFive,
    };
    out.push(VerificationRecord::new("genus-class-D", &name, classification_json(class), computed_class(facts)));
    if m <= 4 {
        out.push(projective_record(facts, true));
    }
    out.push(VerificationRecord::new("energy-d2m", &name, expected_spectra(m, 1), computed_spectra(facts)));
    let mi = m as i64;
    out.push(VerificationRecord::new("hyper-hypo", &name, expected_energy_flags(0, mi - 2), computed_energy_flags(facts)));
    out.push(VerificationRecord::new("directed-single-arcs", &name, json!({ "has_single_arc": true }), has_single_arc(facts)));
    out
}

/// The projective classification covers reduced graphs of clique number at
/// most 4 only; callers filter on that.
fn projective_record(facts: &Facts, expected: bool) -> VerificationRecord {
    let computed = surface_class_of_reduced(&facts.group).projective;
    VerificationRecord::new("projective", facts.name(), json!(expected), json!(computed))
}

/// Formula genus for the recognised shape: `K_a` or `K_{a*b}`.
fn genus_from_shape(facts: &Facts) -> Option<u64> {
    let shape = facts.reduced.as_ref().and_then(recognize_complete_multipartite)?;
    let b = shape.b? as u64;
    if shape.a < 3 {
        return None;
    }
    genus_uniform_multipartite(shape.a as u64, b).ok()
}

fn dq_records(facts: &Facts, t: u32, m: u64) -> Vec<VerificationRecord> {
    let name = facts.name();
    let b = pow2(t);
    let mut out = vec![];
    let mut parts = json!({ "parts": vec![b; m as usize] });
    let mut computed_parts = json!({ "parts": facts.parts() });
    if let GroupSpec::Quaternion(order) = facts.spec {
        // the quaternion graph must match the dihedral graph of the same order
        let dihedral = GroupSpec::Dihedral(order).build().ok();
        let iso = match (dihedral.as_ref().and_then(|d| crate::engel::reduced_co_engel_graph(d).ok()), &facts.reduced) {
            (Some(d), Some(q)) => graphs_isomorphic_small(&d, q).ok(),
            _ => None,
        };
        parts["isomorphic_to_dihedral"] = json!(true);
        computed_parts["isomorphic_to_dihedral"] = json!(iso);
    }
    out.push(VerificationRecord::new("thm-dihed", &name, parts, computed_parts));

    let theorem_genus = m * (m - 1) * (pow2(t - 1) - 1).pow(2) / 2 + euler_term(m);
    out.push(VerificationRecord::new("genus-formula", &name, json!(theorem_genus), json!(genus_from_shape(facts))));
    let class = match (t, m) {
        (1, 3) => Classification::Planar,
        (1, 5) | (1, 7) => Classification::Toroidal,
        (1, 9) | (2, 3) => Classification::TripleToroidal,
        _ => Classification::GenusAtLeastFive,
    };
    out.push(VerificationRecord::new("genus-class-DQ", &name, classification_json(class), computed_class(facts)));
    if m <= 4 {
        out.push(projective_record(facts, t == 1));
    }
    out.push(VerificationRecord::new("energy-d2m", &name, expected_spectra(m, b), computed_spectra(facts)));
    let (bi, mi) = (b as i64, m as i64);
    out.push(VerificationRecord::new(
        "hyper-hypo",
        &name,
        expected_energy_flags(-2 * (bi - 1), bi * (mi - 2)),
        computed_energy_flags(facts),
    ));
    let m1 = pow2(3 * t) * m * (m - 1).pow(2);
    let m2 = pow2(4 * t - 1) * m * (m - 1).pow(3);
    out.push(VerificationRecord::new("zagreb-dq", &name, expected_zagreb(m1, m2, pow2(2 * t) * (m - 1).pow(2)), computed_zagreb(facts)));
    out.push(VerificationRecord::new("directed-single-arcs", &name, json!({ "has_single_arc": true }), has_single_arc(facts)));

    if let GroupSpec::Dihedral(_) = facts.spec {
        out.push(VerificationRecord::new(
            "left-engel",
            &name,
            json!({ "elements": generated_names(facts, "y"), "fitting_valid": true }),
            computed_left_engel(facts),
        ));
        out.push(VerificationRecord::new(
            "directed-dihedral-prop",
            &name,
            json!({ "inside_cyclic": true, "cyclic_to_outside": true, "outside": true }),
            dihedral_arc_rules(facts),
        ));
        out.push(VerificationRecord::new(
            "single-arcs-outside-L",
            &name,
            json!({ "count": 0 }),
            json!({ "count": single_arcs_outside(facts).len() }),
        ));
    }
    out
}

fn frobenius_records(facts: &Facts, p: u64, q: u64) -> Vec<VerificationRecord> {
    let name = facts.name();
    let mut out = vec![VerificationRecord::new(
        "thm-pq",
        &name,
        json!({ "parts": vec![p - 1; q as usize] }),
        json!({ "parts": facts.parts() }),
    )];
    out.push(VerificationRecord::new(
        "left-engel",
        &name,
        json!({ "elements": generated_names(facts, "b"), "fitting_valid": true }),
        computed_left_engel(facts),
    ));
    let theorem_genus = if p == 2 {
        genus_complete(q)
    } else {
        q * (q - 1) / 2 * (p - 3).pow(2).div_ceil(4) + euler_term(q)
    };
    out.push(VerificationRecord::new("genus-formula", &name, json!(theorem_genus), json!(genus_from_shape(facts))));
    let class = match (p, q) {
        (2, 3) => Classification::Planar,
        (2, 5) | (2, 7) | (3, 7) => Classification::Toroidal,
        _ => Classification::GenusAtLeastFive,
    };
    out.push(VerificationRecord::new("genus-class-F", &name, classification_json(class), computed_class(facts)));
    if q <= 4 {
        // F_{2,3} is D_6
        out.push(projective_record(facts, p == 2));
    }
    out.push(VerificationRecord::new("energy-fpq", &name, expected_spectra(q, p - 1), computed_spectra(facts)));
    let (pi, qi) = (p as i64, q as i64);
    out.push(VerificationRecord::new(
        "hyper-hypo",
        &name,
        expected_energy_flags(-2 * (pi - 2), (pi - 1) * (qi - 2)),
        computed_energy_flags(facts),
    ));
    let m1 = q * (q - 1).pow(2) * (p - 1).pow(3);
    let m2 = q * (q - 1).pow(3) * (p - 1).pow(4) / 2;
    out.push(VerificationRecord::new("zagreb-fpq", &name, expected_zagreb(m1, m2, (q - 1).pow(2) * (p - 1).pow(2)), computed_zagreb(facts)));
    out.push(VerificationRecord::new("directed-single-arcs", &name, json!({ "has_single_arc": true }), has_single_arc(facts)));
    out
}

/// `H x G` with `H` nilpotent of order `l` and `G` of shape `K_{m*n}`: the
/// claimed shape is `lm` parts of size `n`.
fn product_records(facts: &Facts) -> Vec<VerificationRecord> {
    let name = facts.name();
    let GroupSpec::Product(factors) = &facts.spec else { return vec![] };
    let l = factors[0].order();
    let base = factors[1].build().ok();
    let base_shape = base
        .as_ref()
        .and_then(|g| crate::engel::reduced_co_engel_graph(g).ok())
        .and_then(|g| recognize_complete_multipartite(&g));
    let Some(shape) = base_shape.filter(|s| s.is_uniform) else {
        return vec![VerificationRecord::new("thm-bipar", &name, Value::Null, json!("base group shape not uniform"))];
    };
    let (m, n) = (shape.a, shape.b.expect("uniform"));
    vec![VerificationRecord::new("thm-bipar", &name, json!({ "parts": vec![n; l * m] }), json!({ "parts": facts.parts() }))]
}

fn other_records(facts: &Facts) -> Vec<VerificationRecord> {
    let name = facts.name();
    let g = &facts.group;
    match &facts.spec {
        GroupSpec::Symmetric(4) => {
            let double_transpositions = ["()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"];
            let mut out = vec![VerificationRecord::new(
                "left-engel",
                &name,
                json!({ "elements": BTreeSet::from(double_transpositions), "fitting_valid": true }),
                computed_left_engel(facts),
            )];
            out.push(VerificationRecord::new("directed-single-arcs", &name, json!({ "has_single_arc": true }), has_single_arc(facts)));
            let arcs = single_arcs_outside(facts);
            let pattern = arcs.iter().all(|&(x, y)| g.element_order(x) == 3 && g.element_order(y) == 2);
            out.push(VerificationRecord::new(
                "single-arcs-outside-L",
                &name,
                json!({ "nonempty": true, "order_3_to_order_2": true }),
                json!({ "nonempty": !arcs.is_empty(), "order_3_to_order_2": pattern }),
            ));
            out
        }
        GroupSpec::Alternating(4) => {
            let class = surface_class_of_reduced(g);
            let mut out = vec![VerificationRecord::new(
                "genus-gen",
                &name,
                classification_json(Classification::Toroidal),
                classification_json(class.classification),
            )];
            out.push(VerificationRecord::new("projective", &name, json!(false), json!(class.projective)));
            let computed = facts.reduced.as_ref().map(|graph| {
                let index = |names: &[&str]| -> Option<Vec<usize>> {
                    names
                        .iter()
                        .map(|n| g.element_by_name(n).and_then(|x| graph.origin().iter().position(|&o| o == x)))
                        .collect()
                };
                let biclique = match (index(&A4_BICLIQUE.0), index(&A4_BICLIQUE.1)) {
                    (Some(h), Some(k)) => verify_biclique(graph, &h, &k).unwrap_or(false),
                    _ => false,
                };
                json!({
                    "vertices": graph.n_vertices(),
                    "biclique": biclique,
                    "clique_at_most_4": clique_number(graph).map(|w| w <= 4).ok(),
                    "planar": is_planar(graph),
                })
            });
            out.push(VerificationRecord::new(
                "a4-structure",
                &name,
                json!({ "vertices": 8, "biclique": true, "clique_at_most_4": true, "planar": false }),
                computed.unwrap_or(Value::Null),
            ));
            out
        }
        GroupSpec::Product(_) => {
            let class = surface_class_of_reduced(g);
            vec![
                VerificationRecord::new(
                    "genus-gen",
                    &name,
                    classification_json(Classification::Toroidal),
                    classification_json(class.classification),
                ),
                VerificationRecord::new("projective", &name, json!(false), json!(class.projective)),
            ]
        }
        _ => {
            let digraph = directed_engel_graph_from(g, &facts.table);
            vec![VerificationRecord::new(
                "directed-nilpotent-complete",
                &name,
                json!({ "complete": true }),
                json!({ "complete": digraph.is_complete() }),
            )]
        }
    }
}

/// Closed-form facts that need no group.
fn formula_records() -> Vec<VerificationRecord> {
    vec![
        VerificationRecord::new("projective", "K_3", json!({ "crosscap": 1 }), json!({ "crosscap": crosscap_complete(3).ok() })),
        VerificationRecord::new(
            "projective",
            "K_{4,4}",
            json!({ "crosscap": 2, "genus": 1 }),
            json!({ "crosscap": crosscap_complete_bipartite(4, 4).ok(), "genus": genus_complete_bipartite(4, 4).ok() }),
        ),
        VerificationRecord::new("projective", "K_{6,3}", json!({ "crosscap": 2 }), json!({ "crosscap": crosscap_complete_bipartite(6, 3).ok() })),
        VerificationRecord::new("projective", "K_7", json!({ "crosscap": 3 }), json!({ "crosscap": crosscap_complete(7).ok() })),
        VerificationRecord::new("genus-gen", "K_{8,8}", json!({ "genus": 9 }), json!({ "genus": genus_complete_bipartite(8, 8).ok() })),
        VerificationRecord::new(
            "genus-gen",
            "K_{3,3,3}",
            json!({ "genus": 1 }),
            json!({ "genus": crate::genus::genus_k_mnn(1, 3).ok() }),
        ),
    ]
}

fn records_for(family: SweepFamily, spec: &GroupSpec, options: &VerifyOptions) -> Vec<VerificationRecord> {
    if spec.order() > options.max_order {
        let reason = format!("order {} exceeds --max-order {}", spec.order(), options.max_order);
        return claims_for(family, spec)
            .into_iter()
            .map(|claim| VerificationRecord::skipped(claim, spec.to_string(), Value::Null, reason.clone()))
            .collect();
    }
    let facts = match Facts::new(spec, &options.cache) {
        Ok(f) => f,
        Err(e) => return vec![VerificationRecord::new("build", spec.to_string(), json!("ok"), json!(e.to_string()))],
    };
    match (family, spec) {
        (SweepFamily::Dihedral, GroupSpec::Dihedral(order)) => dihedral_records(&facts, *order as u64 / 2),
        (SweepFamily::DihedralQuaternion, GroupSpec::Dihedral(order) | GroupSpec::Quaternion(order)) => {
            let order = *order as u64;
            let t = (order / 2).trailing_zeros();
            dq_records(&facts, t, order >> (t + 1))
        }
        (SweepFamily::Frobenius, GroupSpec::Frobenius { p, q, .. }) => frobenius_records(&facts, *p as u64, *q as u64),
        (SweepFamily::Products, _) => product_records(&facts),
        _ => other_records(&facts),
    }
}

/// Runs the sweep; records come back sorted by `(claim_id, group)`.
pub fn cmd_verify_paper(options: &VerifyOptions) -> Vec<VerificationRecord> {
    let mut records: Vec<VerificationRecord> = jobs(&options.families)
        .par_iter()
        .flat_map_iter(|(family, spec)| records_for(*family, spec, options))
        .collect();
    if options.families.contains(&SweepFamily::Other) {
        records.extend(formula_records());
    }
    records.sort_by(|a, b| (&a.claim_id, &a.group).cmp(&(&b.claim_id, &b.group)));
    records
}

pub fn any_failed(records: &[VerificationRecord]) -> bool {
    records.iter().any(|r| r.status == Status::Fail)
}

/// `claim_id,group,expected,computed,status`, LF line endings.
pub fn records_to_csv(records: &[VerificationRecord]) -> Result<String, CliError> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
    writer.write_record(["claim_id", "group", "expected", "computed", "status"]).map_err(|e| CliError::Io(e.to_string()))?;
    for r in records {
        writer
            .write_record([
                r.claim_id.as_str(),
                r.group.as_str(),
                &r.expected.to_string(),
                &r.computed.to_string(),
                &r.status.to_string(),
            ])
            .map_err(|e| CliError::Io(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of UTF-8 fields is UTF-8"))
}

pub fn records_to_json(records: &[VerificationRecord]) -> String {
    let doc = json!({ "schema": super::SCHEMA, "records": records });
    serde_json::to_string_pretty(&doc).expect("records serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_equality() {
        assert_eq!(VerificationRecord::new("x", "C:2", json!(1), json!(1)).status, Status::Pass);
        assert_eq!(VerificationRecord::new("x", "C:2", json!(1), json!(2)).status, Status::Fail);
    }

    #[test]
    fn frobenius_sweep_passes() {
        let options = VerifyOptions { families: vec![SweepFamily::Frobenius], ..Default::default() };
        let records = cmd_verify_paper(&options);
        let failed: Vec<_> = records.iter().filter(|r| r.status != Status::Pass).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert!(records.windows(2).all(|w| (&w[0].claim_id, &w[0].group) <= (&w[1].claim_id, &w[1].group)));
    }

    #[test]
    fn max_order_skips() {
        let options = VerifyOptions { families: vec![SweepFamily::Frobenius], max_order: 20, ..Default::default() };
        let records = cmd_verify_paper(&options);
        assert!(records.iter().any(|r| r.status == Status::Skipped && r.group == "F:3:13"));
        assert!(records.iter().all(|r| r.status != Status::Fail));
    }

    #[test]
    fn csv_layout() {
        let records = vec![VerificationRecord::new("thm-pq", "F:2:3", json!({"parts": [1, 1, 1]}), json!({"parts": [1, 1, 1]}))];
        let csv = records_to_csv(&records).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("claim_id,group,expected,computed,status"));
        assert_eq!(lines.next(), Some(r#"thm-pq,F:2:3,"{""parts"":[1,1,1]}","{""parts"":[1,1,1]}",pass"#));
        assert!(!csv.contains('\r'));
    }
}
