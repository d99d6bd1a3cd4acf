//! Undirected and directed graphs on `0..n` with bitset adjacency rows,
//! plus DOT and JSON export.

use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<Bitset>,
    labels: Vec<String>,
    origin: Vec<usize>,
}

/// `{n, edges}` with edges `i < j` sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

/// `{n, arcs}` with arcs sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphJson {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Bitset::new(n); n],
            labels: (0..n).map(|i| i.to_string()).collect(),
            origin: (0..n).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Self::complete_multipartite(&vec![1; n])
    }

    /// `K_{n_1, ..., n_k}`; vertices are numbered part by part.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (k, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat(k).take(size));
        }
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n_vertices());
        self.labels = labels;
        self
    }

    /// Panics on self-loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop at {u}");
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
    }

    pub fn n_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> &Bitset {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n_vertices()).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n_vertices())
            .flat_map(|u| self.adjacency[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    /// Index of each vertex in the graph this one was induced from.
    pub fn origin(&self) -> &[usize] {
        &self.origin
    }

    /// Induced subgraph on `vertices`, renumbered in the order given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = Self::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g.labels = vertices.iter().map(|&u| self.labels[u].clone()).collect();
        g.origin = vertices.iter().map(|&u| self.origin[u]).collect();
        g
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.n_vertices();
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.labels = self.labels.clone();
        g.origin = self.origin.clone();
        g
    }

    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n_vertices();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = vec![];
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.adjacency[u].iter() {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n_vertices(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", dot_escape(name));
        for (u, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  {u} [label=\"{}\"];\n", dot_escape(l)));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    out_arcs: Vec<Bitset>,
    labels: Vec<String>,
}

impl DirectedGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            out_arcs: vec![Bitset::new(n); n],
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n_vertices());
        self.labels = labels;
        self
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-arc at {u}");
        self.out_arcs[u].insert(v);
    }

    pub fn n_vertices(&self) -> usize {
        self.out_arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_arcs[u].contains(v)
    }

    pub fn out_neighbors(&self, u: usize) -> &Bitset {
        &self.out_arcs[u]
    }

    pub fn arc_count(&self) -> usize {
        self.out_arcs.iter().map(Bitset::count).sum()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n_vertices())
            .flat_map(|u| self.out_arcs[u].iter().map(move |v| (u, v)))
            .collect()
    }

    /// Whether every ordered pair of distinct vertices is an arc.
    pub fn is_complete(&self) -> bool {
        let n = self.n_vertices();
        self.arc_count() == n * n.saturating_sub(1)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn to_json(&self) -> DigraphJson {
        DigraphJson {
            n: self.n_vertices(),
            arcs: self.arcs().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n", dot_escape(name));
        for (u, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  {u} [label=\"{}\"];\n", dot_escape(l)));
        }
        for (u, v) in self.arcs() {
            out.push_str(&format!("  {u} -> {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multipartite_edge_count() {
        let g = SimpleGraph::complete_multipartite(&[2, 2, 2]);
        assert_eq!(g.n_vertices(), 6);
        assert_eq!(g.edge_count(), 12);
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn induced_subgraph_tracks_origin() {
        let g = SimpleGraph::cycle(5).with_labels(["a", "b", "c", "d", "e"].map(String::from).to_vec());
        let h = g.induced_subgraph(&[1, 2, 4]);
        assert_eq!(h.edges(), vec![(0, 1)]);
        assert_eq!(h.labels(), &["b", "c", "e"]);
        assert_eq!(h.origin(), &[1, 2, 4]);
        assert_eq!(h.induced_subgraph(&[0, 2]).origin(), &[1, 4]);
    }

    #[test]
    fn json_and_dot() {
        let g = SimpleGraph::complete(3);
        let json = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[0,1],[0,2],[1,2]],"labels":["0","1","2"]}"#);
        let dot = g.to_dot("K3");
        assert!(dot.starts_with("graph \"K3\" {"));
        assert!(dot.contains("  1 -- 2;"));

        let mut d = DirectedGraph::empty(2);
        d.add_arc(1, 0);
        assert!(d.to_dot("d").contains("1 -> 0;"));
        assert_eq!(d.to_json().arcs, vec![[1, 0]]);
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = SimpleGraph::from_edges(5, [(0, 3), (1, 2)]);
        assert_eq!(g.components(), vec![vec![0, 3], vec![1, 2], vec![4]]);
    }
}
