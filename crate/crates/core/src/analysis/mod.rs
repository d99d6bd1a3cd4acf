//! Structural measurements of undirected graphs: complete-multipartite
//! recognition, clique number, planarity, biclique checks and small-graph
//! isomorphism.

pub mod clique;
pub mod multipartite;
pub mod planarity;

use thiserror::Error;

use crate::graph::SimpleGraph;

pub use clique::{clique_number, clique_number_with_limit, maximum_clique_with_limit, DEFAULT_CLIQUE_LIMIT};
pub use multipartite::{multipartite_classes, recognize_complete_multipartite, MultipartiteShape};
pub use planarity::is_planar;

/// Vertex limit for general (non-multipartite) isomorphism testing.
pub const SMALL_ISOMORPHISM_LIMIT: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("{what} limited to {limit} vertices, graph has {n}")]
    SizeLimit { n: usize, limit: usize, what: &'static str },
    #[error("vertex {0} appears in both sides of the biclique")]
    OverlappingSides(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
}

/// Whether every left-right pair is an edge.
pub fn verify_biclique(graph: &SimpleGraph, left: &[usize], right: &[usize]) -> Result<bool, AnalysisError> {
    for &v in left.iter().chain(right) {
        if v >= graph.n_vertices() {
            return Err(AnalysisError::VertexOutOfRange(v));
        }
    }
    if let Some(&v) = left.iter().find(|v| right.contains(v)) {
        return Err(AnalysisError::OverlappingSides(v));
    }
    Ok(left.iter().all(|&u| right.iter().all(|&v| graph.has_edge(u, v))))
}

/// Isomorphism for graphs that are both complete multipartite (compared by
/// shape) or both have at most [`SMALL_ISOMORPHISM_LIMIT`] vertices
/// (backtracking with degree pruning).
pub fn graphs_isomorphic_small(a: &SimpleGraph, b: &SimpleGraph) -> Result<bool, AnalysisError> {
    if a.n_vertices() != b.n_vertices() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let (sa, sb) = (recognize_complete_multipartite(a), recognize_complete_multipartite(b));
    match (&sa, &sb) {
        (Some(x), Some(y)) => return Ok(x == y),
        (Some(_), None) | (None, Some(_)) => return Ok(false),
        (None, None) => {}
    }
    let n = a.n_vertices();
    if n > SMALL_ISOMORPHISM_LIMIT {
        return Err(AnalysisError::SizeLimit { n, limit: SMALL_ISOMORPHISM_LIMIT, what: "graph isomorphism" });
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    let (deg_a, deg_b) = (da.clone(), db.clone());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_mapping(a, b, &deg_a, &deg_b, 0, &mut map, &mut used))
}

fn extend_mapping(
    a: &SimpleGraph,
    b: &SimpleGraph,
    deg_a: &[usize],
    deg_b: &[usize],
    u: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if u == a.n_vertices() {
        return true;
    }
    for v in 0..b.n_vertices() {
        if used[v] || deg_a[u] != deg_b[v] {
            continue;
        }
        if (0..u).all(|w| a.has_edge(u, w) == b.has_edge(v, map[w])) {
            map[u] = v;
            used[v] = true;
            if extend_mapping(a, b, deg_a, deg_b, u + 1, map, used) {
                return true;
            }
            used[v] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn biclique_checks() {
        let g = SimpleGraph::complete_multipartite(&[2, 2, 2]);
        assert_eq!(verify_biclique(&g, &[], &[1, 2]), Ok(true));
        assert_eq!(verify_biclique(&g, &[0, 1], &[2, 3]), Ok(true));
        // 0 and 1 share a part
        assert_eq!(verify_biclique(&g, &[0], &[1]), Ok(false));
        assert_eq!(verify_biclique(&g, &[0, 2], &[2]), Err(AnalysisError::OverlappingSides(2)));
        assert_eq!(verify_biclique(&g, &[9], &[]), Err(AnalysisError::VertexOutOfRange(9)));
    }

    #[test]
    fn small_isomorphism() {
        let k3 = SimpleGraph::complete(3);
        let p3 = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(graphs_isomorphic_small(&k3, &p3), Ok(false));
        let c6 = SimpleGraph::cycle(6);
        let relabelled = SimpleGraph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]);
        assert_eq!(graphs_isomorphic_small(&c6, &relabelled), Ok(true));
        // two triangles vs a hexagon: same degrees, not isomorphic
        let two_triangles = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(graphs_isomorphic_small(&c6, &two_triangles), Ok(false));
        let big = SimpleGraph::cycle(13);
        assert!(graphs_isomorphic_small(&big, &big).is_err());
        let k = SimpleGraph::complete_multipartite(&[5, 5, 5]);
        assert_eq!(graphs_isomorphic_small(&k, &k), Ok(true));
    }
}
