//! Exact planarity testing.
//!
//! The graph is split into biconnected blocks, and each block is tested with
//! the Demoucron–Malgrange–Pertuiset path-embedding procedure: start from a
//! cycle, then repeatedly embed a path of some fragment into a face that
//! contains all of that fragment's attachment vertices. A fragment with no
//! admissible face proves non-planarity; embedding every edge proves
//! planarity. A fragment with a single admissible face is always served first.

use std::collections::HashSet;

use crate::graph::SimpleGraph;

/// Whether the graph has a plane embedding.
pub fn is_planar(graph: &SimpleGraph) -> bool {
    let n = graph.n_vertices();
    let e = graph.edge_count();
    if n >= 3 && e > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(graph).iter().all(|block| block_is_planar(block))
}

/// Edge sets of the biconnected components (bridges are single-edge blocks).
fn biconnected_blocks(graph: &SimpleGraph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        graph: &'a SimpleGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<(usize, usize)>>,
    }

    fn visit(s: &mut State<'_>, u: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        let neighbours: Vec<usize> = s.graph.neighbors(u).iter().collect();
        for v in neighbours {
            if s.disc[v] == 0 {
                s.stack.push((u, v));
                visit(s, v, Some(u));
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut block = vec![];
                    while let Some(edge) = s.stack.pop() {
                        block.push(edge);
                        if edge == (u, v) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if Some(v) != parent && s.disc[v] < s.disc[u] {
                s.stack.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }

    let n = graph.n_vertices();
    let mut state = State {
        graph,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: vec![],
        blocks: vec![],
    };
    for u in 0..n {
        if state.disc[u] == 0 {
            visit(&mut state, u, None);
        }
    }
    state.blocks
}

struct Block {
    adj: Vec<Vec<usize>>,
    n_edges: usize,
}

impl Block {
    fn from_edges(edges: &[(usize, usize)]) -> (Self, usize) {
        let mut ids: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        ids.sort_unstable();
        ids.dedup();
        let local = |x: usize| ids.binary_search(&x).expect("endpoint listed");
        let mut adj = vec![vec![]; ids.len()];
        for &(u, v) in edges {
            let (a, b) = (local(u), local(v));
            adj[a].push(b);
            adj[b].push(a);
        }
        for row in adj.iter_mut() {
            row.sort_unstable();
        }
        (Self { adj, n_edges: edges.len() }, ids.len())
    }

    fn find_cycle(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![usize::MAX; n];
        let mut stack = vec![(0usize, 0usize)];
        depth[0] = 0;
        while let Some((u, k)) = stack.pop() {
            if k < self.adj[u].len() {
                stack.push((u, k + 1));
                let v = self.adj[u][k];
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    stack.push((v, 0));
                } else if v != parent[u] && depth[v] < depth[u] {
                    let mut cycle = vec![u];
                    let mut w = u;
                    while w != v {
                        w = parent[w];
                        cycle.push(w);
                    }
                    return cycle;
                }
            }
        }
        unreachable!("biconnected block with >= 3 vertices has a cycle")
    }
}

fn edge_key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

struct Fragment {
    attachments: Vec<usize>,
    /// Vertices not yet embedded; empty for a single chord.
    interior: Vec<usize>,
}

fn block_is_planar(edges: &[(usize, usize)]) -> bool {
    let (block, n) = Block::from_edges(edges);
    if n < 5 || block.n_edges < 9 {
        return true;
    }
    if block.n_edges > 3 * n - 6 {
        return false;
    }
    let cycle = block.find_cycle();
    let mut embedded_vertex = vec![false; n];
    let mut embedded_edges: HashSet<(usize, usize)> = HashSet::new();
    for (k, &v) in cycle.iter().enumerate() {
        embedded_vertex[v] = true;
        embedded_edges.insert(edge_key(v, cycle[(k + 1) % cycle.len()]));
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, reversed];

    while embedded_edges.len() < block.n_edges {
        let fragments = fragments(&block, &embedded_vertex, &embedded_edges);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| frag.attachments.iter().all(|a| face.contains(a)))
                .map(|(k, _)| k)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let path = fragment_path(&block, &fragments[fi], &embedded_vertex);
        for w in path.windows(2) {
            embedded_edges.insert(edge_key(w[0], w[1]));
        }
        for &v in &path {
            embedded_vertex[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    true
}

fn fragments(block: &Block, embedded_vertex: &[bool], embedded_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = block.adj.len();
    let mut out = vec![];
    for u in 0..n {
        if !embedded_vertex[u] {
            continue;
        }
        for &v in &block.adj[u] {
            if v > u && embedded_vertex[v] && !embedded_edges.contains(&edge_key(u, v)) {
                out.push(Fragment { attachments: vec![u, v], interior: vec![] });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if embedded_vertex[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut interior = vec![];
        let mut attachments = vec![];
        while let Some(u) = stack.pop() {
            interior.push(u);
            for &v in &block.adj[u] {
                if embedded_vertex[v] {
                    attachments.push(v);
                } else if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment { attachments, interior });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(block: &Block, frag: &Fragment, embedded_vertex: &[bool]) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let start_attach = frag.attachments[0];
    let n = block.adj.len();
    let in_fragment = {
        let mut mask = vec![false; n];
        for &v in &frag.interior {
            mask[v] = true;
        }
        mask
    };
    let start = *block.adj[start_attach]
        .iter()
        .find(|&&v| in_fragment[v])
        .expect("attachment touches the fragment");
    let mut prev = vec![usize::MAX; n];
    prev[start] = start;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if let Some(&end) = block.adj[u].iter().find(|&&w| embedded_vertex[w] && w != start_attach) {
            let mut path = vec![end, u];
            let mut w = u;
            while w != start {
                w = prev[w];
                path.push(w);
            }
            path.push(start_attach);
            path.reverse();
            return path;
        }
        for &w in &block.adj[u] {
            if in_fragment[w] && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

/// Splits a face cycle along a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = face.len();
    let first = path[0];
    let last = *path.last().expect("path has endpoints");
    let i = face.iter().position(|&v| v == first).expect("endpoint on face");
    let j = face.iter().position(|&v| v == last).expect("endpoint on face");
    let interior = &path[1..path.len() - 1];

    let mut f1 = vec![];
    let mut k = i;
    loop {
        f1.push(face[k]);
        if k == j {
            break;
        }
        k = (k + 1) % len;
    }
    f1.extend(interior.iter().rev());

    let mut f2 = vec![];
    let mut k = j;
    loop {
        f2.push(face[k]);
        if k == i {
            break;
        }
        k = (k + 1) % len;
    }
    f2.extend(interior.iter());
    (f1, f2)
}
