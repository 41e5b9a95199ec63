//! Finite graph metric spaces.
//!
//! A [`MetricGraph`] is a connected, unweighted, undirected graph with its
//! all-pairs hop-distance table precomputed. It stands in for a proper
//! geodesic space at desk scale: paths are vertex sequences, geodesics are
//! shortest paths, and every derived quantity (Gromov product, slimness
//! constant, Hausdorff distance) is exact integer or half-integer
//! arithmetic.
//!
//! Graphs are immutable after construction and all operations are pure.

mod geodesic;
mod path;
mod qg;
mod slim;

pub use geodesic::{geodesics, GeodesicMode, GeodesicSet};
pub use path::DiscretePath;
pub use qg::{is_quasi_geodesic, QgCheck, QgParams};
pub use slim::{
    gromov_product, hausdorff_distance, slim_delta, triangle_slimness, SlimReport, SlimSample,
    TriangleSlimness,
};

use std::collections::BTreeSet;
use thiserror::Error;

/// Vertex identifier inside a [`MetricGraph`].
pub type Vertex = u32;

/// Hard cap on vertex count so the distance table stays in memory.
pub const MAX_GRAPH_VERTICES: usize = 8192;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("edge list is empty")]
    EmptyEdgeList,
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is disconnected; component not containing vertex {base}: {component:?}")]
    Disconnected { base: Vertex, component: Vec<Vertex> },
    #[error("graph too large: {vertices} vertices exceeds cap {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("vertex {0} out of range (vertex count {1})")]
    VertexOutOfRange(Vertex, usize),
    #[error("malformed graph file: {0}")]
    Malformed(String),
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("path is not connected at index {0}")]
    BrokenPath(usize),
}

/// Finite connected graph with unit edge lengths and an all-pairs distance
/// table.
#[derive(Clone)]
pub struct MetricGraph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    edges: BTreeSet<(Vertex, Vertex)>,
    dist: Vec<u16>,
}

impl MetricGraph {
    /// Builds a graph from an undirected edge list.
    ///
    /// Rejects empty input, self-loops, duplicate edges, and disconnected
    /// input. Vertex ids must be dense: the vertex set is `0..=max_id`.
    pub fn from_edges(edge_list: &[(Vertex, Vertex)]) -> Result<MetricGraph, GraphError> {
        if edge_list.is_empty() {
            return Err(GraphError::EmptyEdgeList);
        }
        let mut edges = BTreeSet::new();
        let mut max_id = 0;
        for &(u, v) in edge_list {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !edges.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            max_id = max_id.max(u).max(v);
        }
        let n = max_id as usize + 1;
        Self::from_edge_set(n, edges)
    }

    fn from_edge_set(n: usize, edges: BTreeSet<(Vertex, Vertex)>) -> Result<MetricGraph, GraphError> {
        if n > MAX_GRAPH_VERTICES {
            return Err(GraphError::TooLarge {
                vertices: n,
                cap: MAX_GRAPH_VERTICES,
            });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        // Connectivity check from the smallest vertex id; on failure report
        // the component that does not contain it.
        let reached = bfs_reach(&adj, 0);
        if let Some(stray) = (0..n as Vertex).find(|&v| !reached[v as usize]) {
            let component = bfs_reach(&adj, stray);
            let members: Vec<Vertex> = (0..n as Vertex).filter(|&v| component[v as usize]).collect();
            return Err(GraphError::Disconnected {
                base: 0,
                component: members,
            });
        }

        let dist = all_pairs(&adj);
        Ok(MetricGraph { n, adj, edges, dist })
    }

    /// Parses the plain-text graph format: first line `n m`, then `m` lines
    /// `u v` with 0-based vertex ids.
    pub fn from_text(text: &str) -> Result<MetricGraph, GraphError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| GraphError::Malformed("missing header line".into()))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| GraphError::Malformed("bad vertex count".into()))?;
        let m: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| GraphError::Malformed("bad edge count".into()))?;
        if parts.next().is_some() {
            return Err(GraphError::Malformed("trailing tokens on header".into()));
        }

        let mut edges = BTreeSet::new();
        let mut seen = 0usize;
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let u: Vertex = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| GraphError::Malformed(format!("bad edge line: {line:?}")))?;
            let v: Vertex = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| GraphError::Malformed(format!("bad edge line: {line:?}")))?;
            if it.next().is_some() {
                return Err(GraphError::Malformed(format!("trailing tokens: {line:?}")));
            }
            if u as usize >= n || v as usize >= n {
                return Err(GraphError::VertexOutOfRange(u.max(v), n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !edges.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            seen += 1;
        }
        if seen != m {
            return Err(GraphError::Malformed(format!(
                "header promised {m} edges, found {seen}"
            )));
        }
        if edges.is_empty() {
            return Err(GraphError::EmptyEdgeList);
        }
        Self::from_edge_set(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (v as usize) < self.n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange(v, self.n))
        }
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Hop distance between two vertices.
    #[inline]
    pub fn dist(&self, u: Vertex, v: Vertex) -> u32 {
        u32::from(self.dist[u as usize * self.n + v as usize])
    }

    /// Distance from a vertex to a nonempty vertex set.
    pub fn dist_to_set(&self, v: Vertex, set: &[Vertex]) -> u32 {
        set.iter().map(|&u| self.dist(v, u)).min().unwrap_or(u32::MAX)
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.dist(u, v) == 1
    }
}

impl std::fmt::Debug for MetricGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MetricGraph({} vertices, {} edges)", self.n, self.edges.len())
    }
}

fn bfs_reach(adj: &[Vec<Vertex>], start: Vertex) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue = std::collections::VecDeque::new();
    seen[start as usize] = true;
    queue.push_back(start);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

fn all_pairs(adj: &[Vec<Vertex>]) -> Vec<u16> {
    let n = adj.len();
    let mut dist = vec![u16::MAX; n * n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s as Vertex);
        while let Some(u) = queue.pop_front() {
            let du = row[u as usize];
            for &w in &adj[u as usize] {
                if row[w as usize] == u16::MAX {
                    row[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path_graph(n: u32) -> MetricGraph {
        let edges: Vec<(Vertex, Vertex)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        MetricGraph::from_edges(&edges).unwrap()
    }

    pub(crate) fn cycle_graph(n: u32) -> MetricGraph {
        let edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MetricGraph::from_edges(&edges).unwrap()
    }

    #[test]
    fn path_graph_distances() {
        let g = path_graph(3);
        assert_eq!(g.dist(0, 2), 2);
        assert_eq!(g.dist(2, 0), 2);
    }

    #[test]
    fn single_edge() {
        let g = MetricGraph::from_edges(&[(0, 1)]).unwrap();
        assert_eq!(g.dist(0, 1), 1);
        assert_eq!(g.dist(0, 0), 0);
    }

    #[test]
    fn cycle_distances_match_bfs_oracle() {
        let g = cycle_graph(6);
        // Independent oracle: plain BFS from vertex 0.
        let mut oracle = vec![u32::MAX; 6];
        oracle[0] = 0;
        let mut frontier = vec![0u32];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for v in [(u + 1) % 6, (u + 5) % 6] {
                    if oracle[v as usize] == u32::MAX {
                        oracle[v as usize] = d;
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        assert_eq!(g.dist(0, 3), 3);
        assert_eq!(g.dist(0, 4), 2);
        for v in 0..6 {
            assert_eq!(g.dist(0, v), oracle[v as usize]);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            MetricGraph::from_edges(&[]),
            Err(GraphError::EmptyEdgeList)
        ));
        assert!(matches!(
            MetricGraph::from_edges(&[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        ));
        assert!(matches!(
            MetricGraph::from_edges(&[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
        // Two components: {0,1} and {2,3}; the one without vertex 0 is reported.
        match MetricGraph::from_edges(&[(0, 1), (2, 3)]) {
            Err(GraphError::Disconnected { base: 0, component }) => {
                assert_eq!(component, vec![2, 3]);
            }
            other => panic!("expected Disconnected, got {other:?}"),
        }
    }

    #[test]
    fn parses_text_format() {
        let g = MetricGraph::from_text("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.dist(0, 2), 2);
        assert!(MetricGraph::from_text("3 2\n0 1\n0 1\n").is_err());
        assert!(MetricGraph::from_text("2 1\n0 5\n").is_err());
        assert!(MetricGraph::from_text("3 1\n0 1\n").is_err());
    }
}
