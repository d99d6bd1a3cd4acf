//! Exact maximum clique by branch and bound with greedy-colouring bounds.

use super::AnalysisError;
use crate::bitset::Bitset;
use crate::graph::SimpleGraph;

pub const DEFAULT_CLIQUE_LIMIT: usize = 64;

struct Search {
    adj: Vec<Bitset>,
    best: Vec<usize>,
}

impl Search {
    /// Greedy colouring of `cand` in vertex order; returns vertices with their
    /// colour number, colours non-decreasing.
    fn colour_sort(&self, cand: &Bitset) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(cand.count());
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncoloured.remove(v);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut cand: Bitset) {
        let ordered = self.colour_sort(&cand);
        for &(v, bound) in ordered.iter().rev() {
            if current.len() + bound <= self.best.len() {
                return;
            }
            current.push(v);
            let next = cand.intersection(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            cand.remove(v);
        }
    }
}

/// A maximum clique (vertex indices ascending). Vertices are searched in
/// descending degree order, ties by index.
pub fn maximum_clique_with_limit(graph: &SimpleGraph, limit: usize) -> Result<Vec<usize>, AnalysisError> {
    let n = graph.n_vertices();
    if n > limit {
        return Err(AnalysisError::SizeLimit { n, limit, what: "clique search" });
    }
    if n == 0 {
        return Ok(vec![]);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let mut rank = vec![0; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let adj = order
        .iter()
        .map(|&v| {
            let mut row = Bitset::new(n);
            for w in graph.neighbors(v).iter() {
                row.insert(rank[w]);
            }
            row
        })
        .collect();
    // any single vertex is a clique
    let mut search = Search { adj, best: vec![0] };
    search.expand(&mut vec![], Bitset::full(n));
    let mut clique: Vec<usize> = search.best.iter().map(|&r| order[r]).collect();
    clique.sort_unstable();
    Ok(clique)
}

pub fn clique_number_with_limit(graph: &SimpleGraph, limit: usize) -> Result<usize, AnalysisError> {
    maximum_clique_with_limit(graph, limit).map(|c| c.len())
}

/// `omega(graph)` for graphs up to [`DEFAULT_CLIQUE_LIMIT`] vertices.
pub fn clique_number(graph: &SimpleGraph) -> Result<usize, AnalysisError> {
    clique_number_with_limit(graph, DEFAULT_CLIQUE_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_omega(g: &SimpleGraph) -> usize {
        let n = g.n_vertices();
        (0u32..1 << n)
            .filter(|mask| {
                let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                vs.iter().enumerate().all(|(k, &u)| vs[k + 1..].iter().all(|&v| g.has_edge(u, v)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn multipartite_clique_is_part_count() {
        for a in 1..=8 {
            for b in 1..=4 {
                let g = SimpleGraph::complete_multipartite(&vec![b; a]);
                assert_eq!(clique_number_with_limit(&g, 100).unwrap(), a, "K_{{{a}*{b}}}");
            }
        }
    }

    #[test]
    fn edgeless_and_limit() {
        assert_eq!(clique_number(&SimpleGraph::empty(5)).unwrap(), 1);
        let big = SimpleGraph::empty(65);
        assert!(matches!(clique_number(&big), Err(AnalysisError::SizeLimit { .. })));
        assert_eq!(clique_number_with_limit(&big, 65).unwrap(), 1);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=11);
            let p: f64 = rng.gen_range(0.1..0.9);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = SimpleGraph::from_edges(n, edges);
            let clique = maximum_clique_with_limit(&g, 64).unwrap();
            assert_eq!(clique.len(), brute_force_omega(&g));
            for (k, &u) in clique.iter().enumerate() {
                for &v in &clique[k + 1..] {
                    assert!(g.has_edge(u, v));
                }
            }
        }
    }
}
