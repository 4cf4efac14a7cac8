use std::collections::BTreeSet;

use crate::{Error, Result, Vertex};

/// Simple undirected graph on the vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and endpoints `>= n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInstance(format!(
                    "edge {{{u}, {v}}} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInstance(format!("self-loop on vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidInstance(format!("duplicate edge {{{u}, {v}}}")));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    pub fn edgeless(n: usize) -> Self {
        Self::from_edge_set(n, BTreeSet::new())
    }

    fn from_edge_set(n: usize, edges: BTreeSet<(Vertex, Vertex)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { n, edges, adjacency }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_vertex_cover(&self, cover: &BTreeSet<Vertex>) -> bool {
        self.edges
            .iter()
            .all(|(u, v)| cover.contains(u) || cover.contains(v))
    }

    /// Subgraph induced by `keep` (ascending), relabelled to `0..keep.len()`.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            position[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| position[*u] != usize::MAX && position[*v] != usize::MAX)
            .map(|&(u, v)| {
                let (a, b) = (position[u], position[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        Self::from_edge_set(keep.len(), edges)
    }
}
