//! Reports behind the `group`, `graph`, `analyze` and `sweep-single-arcs`
//! subcommands. Each returns a serializable value; printing is the caller's job.

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::spec::GroupSpec;
use super::{CliError, SCHEMA};
use crate::analysis::{clique_number_with_limit, is_planar, recognize_complete_multipartite, MultipartiteShape};
use crate::engel::{
    directed_engel_graph_from, reduced_co_engel_graph_from, co_engel_graph_from, single_arc_pairs,
    validate_left_engel_set, EngelTable,
};
use crate::genus::{surface_class_of_reduced, zagreb_report, SurfaceClass, ZagrebReport};
use crate::group::{default_frobenius_residue, hypercenter, is_nilpotent, is_soluble, FiniteGroup};
use crate::spectra::{spectrum_report, SpectrumReportJson};

#[derive(Debug, Clone, Serialize)]
pub struct FittingCheck {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub schema: &'static str,
    pub group: String,
    pub label: String,
    pub order: usize,
    /// `(element order, count)`, ascending.
    pub order_census: Vec<(usize, usize)>,
    pub left_engel: Vec<String>,
    pub fitting: FittingCheck,
    pub nilpotent: bool,
    pub soluble: bool,
    pub hypercenter_order: usize,
}

pub fn cmd_group(spec: &GroupSpec, group: &FiniteGroup) -> GroupSummary {
    let table = EngelTable::build(group);
    let left = table.left_engel_set();
    let fitting = match validate_left_engel_set(group, &left) {
        Ok(_) => FittingCheck { valid: true, violation: None },
        Err(e) => FittingCheck { valid: false, violation: Some(e.to_string()) },
    };
    GroupSummary {
        schema: SCHEMA,
        group: spec.to_string(),
        label: group.label().to_string(),
        order: group.order(),
        order_census: group.order_census(),
        left_engel: left.iter().map(|&x| group.element_name(x).to_string()).collect(),
        fitting,
        nilpotent: is_nilpotent(group),
        soluble: is_soluble(group),
        hypercenter_order: hypercenter(group).order(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Co-Engel graph on `G \ L(G)`.
    Reduced,
    /// Co-Engel graph on all of `G`.
    Full,
    Directed,
}

impl FromStr for GraphKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "reduced" => Ok(Self::Reduced),
            "full" => Ok(Self::Full),
            "directed" => Ok(Self::Directed),
            _ => Err(CliError::Usage(format!("unknown graph kind {s:?}; expected reduced, full or directed"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

impl FromStr for GraphFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "dot" => Ok(Self::Dot),
            "json" => Ok(Self::Json),
            _ => Err(CliError::Usage(format!("unknown format {s:?}; expected dot or json"))),
        }
    }
}

#[derive(Serialize)]
struct GraphDocument<T> {
    schema: &'static str,
    group: String,
    kind: &'static str,
    #[serde(flatten)]
    graph: T,
}

/// Renders one of the three graphs. JSON output carries the schema tag and
/// the group spec next to `n`, `edges`/`arcs` and `labels`.
pub fn cmd_graph(spec: &GroupSpec, group: &FiniteGroup, kind: GraphKind, format: GraphFormat) -> Result<String, CliError> {
    let table = EngelTable::build(group);
    let name = spec.to_string();
    Ok(match kind {
        GraphKind::Directed => {
            let digraph = directed_engel_graph_from(group, &table);
            match format {
                GraphFormat::Dot => digraph.to_dot(&name),
                GraphFormat::Json => graph_document(&name, "directed", digraph.to_json()),
            }
        }
        GraphKind::Full | GraphKind::Reduced => {
            let (graph, tag) = if kind == GraphKind::Full {
                (co_engel_graph_from(group, &table), "full")
            } else {
                (reduced_co_engel_graph_from(group, &table)?, "reduced")
            };
            match format {
                GraphFormat::Dot => graph.to_dot(&name),
                GraphFormat::Json => graph_document(&name, tag, graph.to_json()),
            }
        }
    })
}

fn graph_document<T: Serialize>(group: &str, kind: &'static str, graph: T) -> String {
    let doc = GraphDocument { schema: SCHEMA, group: group.to_string(), kind, graph };
    serde_json::to_string_pretty(&doc).expect("graph serializes")
}

#[derive(Debug, Clone, Serialize)]
pub struct CliqueResult {
    pub value: Option<usize>,
    /// `shape` when read off the multipartite shape, `search` otherwise.
    pub source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisDocument {
    pub schema: &'static str,
    pub group: String,
    pub order: usize,
    pub left_engel_order: usize,
    pub reduced_vertices: usize,
    pub reduced_edges: usize,
    pub shape: Option<MultipartiteShape>,
    pub shape_text: Option<String>,
    pub clique_number: CliqueResult,
    pub planar: bool,
    pub surface: SurfaceClass,
    pub spectrum: Option<SpectrumReportJson>,
    pub zagreb: ZagrebReport,
}

/// Full analysis of the reduced co-Engel graph. Clique search is bounded by
/// `clique_limit` vertices unless the shape already gives the answer.
pub fn cmd_analyze(spec: &GroupSpec, group: &FiniteGroup, clique_limit: usize) -> Result<AnalysisDocument, CliError> {
    let table = EngelTable::build(group);
    let graph = reduced_co_engel_graph_from(group, &table)?;
    let shape = recognize_complete_multipartite(&graph);
    let clique = match &shape {
        Some(s) => CliqueResult { value: Some(s.a), source: "shape", skipped: None },
        None => match clique_number_with_limit(&graph, clique_limit) {
            Ok(w) => CliqueResult { value: Some(w), source: "search", skipped: None },
            Err(e) => CliqueResult { value: None, source: "search", skipped: Some(e.to_string()) },
        },
    };
    let spectrum = spectrum_report(&graph).ok().map(|r| r.to_json_model());
    Ok(AnalysisDocument {
        schema: SCHEMA,
        group: spec.to_string(),
        order: group.order(),
        left_engel_order: table.left_engel_set().len(),
        reduced_vertices: graph.n_vertices(),
        reduced_edges: graph.edge_count(),
        shape_text: shape.as_ref().map(|s| s.to_string()),
        shape,
        clique_number: clique,
        planar: is_planar(&graph),
        surface: surface_class_of_reduced(group),
        spectrum,
        zagreb: zagreb_report(&graph),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub group: String,
    pub order: usize,
    pub nilpotent: bool,
    pub single_arcs: usize,
    pub single_arcs_outside_left_engel: usize,
}

/// Built-in soluble groups of order at most `max_order`: dihedral,
/// generalized quaternion and Frobenius `F_{p,q}` families, plus `S_4`
/// and `A_4`.
pub fn soluble_catalogue(max_order: usize) -> Vec<GroupSpec> {
    let mut out = vec![];
    for order in (6..=max_order).step_by(2) {
        out.push(GroupSpec::Dihedral(order));
    }
    for order in (8..=max_order).step_by(4) {
        out.push(GroupSpec::Quaternion(order));
    }
    let primes: Vec<usize> = (2..=max_order).filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)).collect();
    for &p in &primes {
        for &q in &primes {
            if p < q && p * q <= max_order && default_frobenius_residue(p as u64, q as u64).is_some() {
                out.push(GroupSpec::Frobenius { p, q, r: None });
            }
        }
    }
    for spec in [GroupSpec::Symmetric(4), GroupSpec::Alternating(4)] {
        if spec.order() <= max_order {
            out.push(spec);
        }
    }
    out
}

pub fn cmd_sweep_single_arcs(max_order: usize, cache: &super::GroupCache) -> Result<Vec<SweepRow>, CliError> {
    soluble_catalogue(max_order)
        .par_iter()
        .map(|spec| {
            let group = cache.get_or_build(spec)?;
            let table = EngelTable::build(&group);
            let arcs = single_arc_pairs(&directed_engel_graph_from(&group, &table));
            let outside = arcs.iter().filter(|&&(x, y)| !table.is_left_engel(x) && !table.is_left_engel(y)).count();
            Ok(SweepRow {
                group: spec.to_string(),
                order: group.order(),
                nilpotent: is_nilpotent(&group),
                single_arcs: arcs.len(),
                single_arcs_outside_left_engel: outside,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> (GroupSpec, FiniteGroup) {
        let spec: GroupSpec = s.parse().unwrap();
        let g = spec.build().unwrap();
        (spec, g)
    }

    #[test]
    fn group_summary_of_s3() {
        let (spec, g) = build("D:6");
        let s = cmd_group(&spec, &g);
        assert_eq!(s.order, 6);
        assert_eq!(s.left_engel.len(), 3);
        assert!(s.fitting.valid && !s.nilpotent && s.soluble);
        assert_eq!(s.hypercenter_order, 1);
        assert_eq!(s.order_census, vec![(1, 1), (2, 3), (3, 2)]);
    }

    #[test]
    fn graph_json_for_s3() {
        let (spec, g) = build("D:6");
        let text = cmd_graph(&spec, &g, GraphKind::Reduced, GraphFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["n"], 3);
        assert_eq!(v["edges"], serde_json::json!([[0, 1], [0, 2], [1, 2]]));
        let dot = cmd_graph(&spec, &g, GraphKind::Directed, GraphFormat::Dot).unwrap();
        assert!(dot.starts_with("digraph"));
    }

    #[test]
    fn reduced_graph_of_nilpotent_group_is_an_error() {
        let (spec, g) = build("Q:8");
        assert!(matches!(
            cmd_graph(&spec, &g, GraphKind::Reduced, GraphFormat::Json),
            Err(CliError::Engel(_))
        ));
        assert!(cmd_graph(&spec, &g, GraphKind::Full, GraphFormat::Json).is_ok());
    }

    #[test]
    fn analysis_of_f37() {
        let (spec, g) = build("F:3:7");
        let doc = cmd_analyze(&spec, &g, 64).unwrap();
        assert_eq!(doc.shape_text.as_deref(), Some("K_{7*2}"));
        assert_eq!(doc.clique_number.value, Some(7));
        assert!(!doc.planar);
        assert_eq!(doc.surface.genus, Some(1));
        assert!(doc.spectrum.is_some());
    }

    #[test]
    fn sweep_over_small_soluble_groups() {
        let rows = cmd_sweep_single_arcs(24, &crate::cli::GroupCache::disabled()).unwrap();
        let s4 = rows.iter().find(|r| r.group == "S:4").unwrap();
        assert!(s4.single_arcs_outside_left_engel > 0);
        for r in rows.iter().filter(|r| r.group.starts_with("D:") || r.group.starts_with("F:")) {
            assert_eq!(r.single_arcs_outside_left_engel, 0, "{}", r.group);
        }
    }
}
