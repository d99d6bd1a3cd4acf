use serde::{Deserialize, Serialize};

use crate::graph::SimpleGraph;

/// Certificate that a graph is `K_{n_1, ..., n_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteShape {
    /// Part sizes, descending.
    pub parts: Vec<usize>,
    pub is_uniform: bool,
    /// Number of parts.
    pub a: usize,
    /// Common part size when uniform.
    pub b: Option<usize>,
}

impl MultipartiteShape {
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|x, y| y.cmp(x));
        let is_uniform = parts.windows(2).all(|w| w[0] == w[1]);
        let b = if is_uniform { parts.first().copied() } else { None };
        Self { a: parts.len(), b, is_uniform, parts }
    }

    pub fn uniform(a: usize, b: usize) -> Self {
        Self::from_parts(vec![b; a])
    }

    pub fn n_vertices(&self) -> usize {
        self.parts.iter().sum()
    }

    /// True for `K_n` (every part a singleton).
    pub fn is_complete(&self) -> bool {
        self.b == Some(1)
    }
}

impl std::fmt::Display for MultipartiteShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.b {
            Some(b) => write!(f, "K_{{{}*{}}}", self.a, b),
            None => {
                let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
                write!(f, "K_{{{}}}", parts.join(","))
            }
        }
    }
}

/// The parts of a complete multipartite graph: classes of "equal or
/// non-adjacent", ordered by least vertex. `None` if that relation is not an
/// equivalence with completely joined classes.
pub fn multipartite_classes(graph: &SimpleGraph) -> Option<Vec<Vec<usize>>> {
    let n = graph.n_vertices();
    if n == 0 {
        return None;
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = vec![];
    for u in 0..n {
        // closed non-neighbourhood of u
        let closed: Vec<usize> = (0..n).filter(|&v| v == u || !graph.has_edge(u, v)).collect();
        if class_of[u] == usize::MAX {
            let id = classes.len();
            for &v in &closed {
                if class_of[v] != usize::MAX {
                    return None;
                }
                class_of[v] = id;
            }
            classes.push(closed);
        } else if classes[class_of[u]] != closed {
            return None;
        }
    }
    Some(classes)
}

pub fn recognize_complete_multipartite(graph: &SimpleGraph) -> Option<MultipartiteShape> {
    multipartite_classes(graph).map(|classes| MultipartiteShape::from_parts(classes.iter().map(Vec::len).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_constructed_shapes() {
        let g = SimpleGraph::complete_multipartite(&[1, 3, 2]);
        let s = recognize_complete_multipartite(&g).unwrap();
        assert_eq!(s.parts, vec![3, 2, 1]);
        assert!(!s.is_uniform);
        assert_eq!(s.b, None);
        assert_eq!(s.n_vertices(), 6);

        let k4 = recognize_complete_multipartite(&SimpleGraph::complete(4)).unwrap();
        assert!(k4.is_complete());
        assert_eq!(k4.to_string(), "K_{4*1}");
    }

    #[test]
    fn rejects_five_cycle_and_path() {
        assert!(recognize_complete_multipartite(&SimpleGraph::cycle(5)).is_none());
        assert!(recognize_complete_multipartite(&SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)])).is_none());
    }

    #[test]
    fn edgeless_graph_is_one_part() {
        let s = recognize_complete_multipartite(&SimpleGraph::empty(4)).unwrap();
        assert_eq!(s, MultipartiteShape::uniform(1, 4));
    }
}
