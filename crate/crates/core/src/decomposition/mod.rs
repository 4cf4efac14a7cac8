//! Rooted tree decompositions: structure, validation, normalization, and the
//! path decomposition obtained from a vertex cover.
//!
//! Conventions: the root bag is empty, `forg(t) = X_t \ X_parent(t)` (empty at
//! the root) and `new(t) = X_t` minus the union of the children's bags.

mod normalize;
mod td_format;
mod vertex_cover;

use std::collections::BTreeSet;
use std::fmt;

pub use normalize::normalize;
pub use td_format::{parse_td, write_td};
pub use vertex_cover::{find_vertex_cover, minimum_vertex_cover, pd_from_vertex_cover};

use crate::instances::Graph;
use crate::{Error, Result, Vertex};

pub type NodeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTreeDecomposition {
    bags: Vec<Vec<Vertex>>,
    parent: Vec<Option<NodeId>>,
    children: Vec<Vec<NodeId>>,
    root: NodeId,
}

impl RootedTreeDecomposition {
    /// Builds a decomposition from bags and parent links. Exactly one node
    /// must be parentless and every node must reach it.
    pub fn new(bags: Vec<Vec<Vertex>>, parent: Vec<Option<NodeId>>) -> Result<Self> {
        if bags.len() != parent.len() {
            return Err(Error::MalformedTree(format!(
                "{} bags but {} parent links",
                bags.len(),
                parent.len()
            )));
        }
        if bags.is_empty() {
            return Err(Error::MalformedTree("a decomposition needs at least one node".into()));
        }
        let roots: Vec<NodeId> = (0..parent.len()).filter(|&t| parent[t].is_none()).collect();
        let root = match roots.as_slice() {
            [r] => *r,
            _ => {
                return Err(Error::MalformedTree(format!(
                    "expected exactly one root, found {}",
                    roots.len()
                )))
            }
        };
        let mut children = vec![Vec::new(); bags.len()];
        for (t, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= bags.len() {
                    return Err(Error::MalformedTree(format!("node {t} has unknown parent {p}")));
                }
                children[p].push(t);
            }
        }
        let td = RootedTreeDecomposition {
            bags: bags
                .into_iter()
                .map(|b| b.into_iter().collect::<BTreeSet<_>>().into_iter().collect())
                .collect(),
            parent,
            children,
            root,
        };
        if td.post_order().len() != td.len() {
            return Err(Error::MalformedTree("parent links contain a cycle".into()));
        }
        Ok(td)
    }

    /// Builds a decomposition from undirected tree edges, rooted at `root`.
    pub fn from_tree_edges(
        bags: Vec<Vec<Vertex>>,
        edges: &[(NodeId, NodeId)],
        root: NodeId,
    ) -> Result<Self> {
        let n = bags.len();
        if root >= n {
            return Err(Error::MalformedTree(format!("root {root} out of range")));
        }
        if edges.len() + 1 != n {
            return Err(Error::MalformedTree(format!(
                "a tree on {n} nodes has {} edges, got {}",
                n.saturating_sub(1),
                edges.len()
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::MalformedTree(format!("bad tree edge ({a}, {b})")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(t) = queue.pop_front() {
            adjacency[t].sort_unstable();
            for &s in &adjacency[t] {
                if !seen[s] {
                    seen[s] = true;
                    parent[s] = Some(t);
                    queue.push_back(s);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::MalformedTree("tree edges do not connect all nodes".into()));
        }
        Self::new(bags, parent)
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    /// Sorted bag of node `t`.
    pub fn bag(&self, t: NodeId) -> &[Vertex] {
        &self.bags[t]
    }

    pub fn parent(&self, t: NodeId) -> Option<NodeId> {
        self.parent[t]
    }

    pub fn children(&self, t: NodeId) -> &[NodeId] {
        &self.children[t]
    }

    pub fn delta(&self, t: NodeId) -> usize {
        self.children[t].len()
    }

    /// Largest bag size minus one (0 when every bag is empty).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Vertices of `X_t` absent from the parent bag; empty at the root.
    pub fn forg(&self, t: NodeId) -> Vec<Vertex> {
        match self.parent[t] {
            None => Vec::new(),
            Some(p) => difference(&self.bags[t], &self.bags[p]),
        }
    }

    /// Vertices of `X_t` absent from every child bag.
    pub fn new_vertices(&self, t: NodeId) -> Vec<Vertex> {
        self.bags[t]
            .iter()
            .copied()
            .filter(|v| self.children[t].iter().all(|&c| self.bags[c].binary_search(v).is_err()))
            .collect()
    }

    /// Nodes ordered so that every child precedes its parent.
    pub fn post_order(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.len());
        let mut stack = vec![(self.root, false)];
        let mut visited = vec![false; self.len()];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                order.push(t);
                continue;
            }
            if visited[t] {
                // only reachable through a cycle
                return Vec::new();
            }
            visited[t] = true;
            stack.push((t, true));
            for &c in self.children[t].iter().rev() {
                stack.push((c, false));
            }
        }
        order
    }

    /// Height of each node (leaves have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let mut height = vec![0; self.len()];
        for t in self.post_order() {
            height[t] = self.children[t].iter().map(|&c| height[c] + 1).max().unwrap_or(0);
        }
        height
    }

    pub fn annotations(&self) -> NodeAnnotations {
        let forg = (0..self.len()).map(|t| self.forg(t)).collect();
        let new = (0..self.len()).map(|t| self.new_vertices(t)).collect();
        let delta: Vec<usize> = (0..self.len()).map(|t| self.delta(t)).collect();
        NodeAnnotations {
            max_delta: delta.iter().copied().max().unwrap_or(0),
            width: self.width(),
            forg,
            new,
            delta,
        }
    }

    /// Root bag empty, at most two children and at most one new vertex per node.
    pub fn is_normalized(&self) -> bool {
        self.bags[self.root].is_empty()
            && (0..self.len()).all(|t| self.delta(t) <= 2 && self.new_vertices(t).len() <= 1)
    }

    /// Nodes whose bag contains `v` but whose parent's does not. The
    /// occurrence set of `v` is connected iff there is at most one.
    fn occurrence_tops(&self, v: Vertex) -> Vec<NodeId> {
        (0..self.len())
            .filter(|&t| {
                self.bags[t].binary_search(&v).is_ok()
                    && self.parent[t].is_none_or(|p| self.bags[p].binary_search(&v).is_err())
            })
            .collect()
    }
}

pub(crate) fn difference(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    a.iter().copied().filter(|v| b.binary_search(v).is_err()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeAnnotations {
    pub forg: Vec<Vec<Vertex>>,
    pub new: Vec<Vec<Vertex>>,
    pub delta: Vec<usize>,
    pub width: usize,
    pub max_delta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange { node: NodeId, vertex: Vertex },
    VertexUncovered(Vertex),
    EdgeUncovered(Vertex, Vertex),
    /// The nodes containing `vertex` do not form a connected subtree; `tops`
    /// are the highest node of each component.
    Disconnected { vertex: Vertex, tops: Vec<NodeId> },
    RootBagNotEmpty(NodeId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { node, vertex } => {
                write!(f, "bag {node} contains unknown vertex {vertex}")
            }
            Violation::VertexUncovered(v) => write!(f, "vertex {v} is in no bag"),
            Violation::EdgeUncovered(u, v) => write!(f, "edge {{{u}, {v}}} uncovered"),
            Violation::Disconnected { vertex, tops } => {
                write!(f, "bags containing vertex {vertex} are disconnected (components at {tops:?})")
            }
            Violation::RootBagNotEmpty(t) => write!(f, "root bag {t} is not empty"),
        }
    }
}

/// Checks the decomposition axioms and the empty-root convention.
pub fn validate(graph: &Graph, td: &RootedTreeDecomposition) -> Vec<Violation> {
    let mut violations = Vec::new();
    let n = graph.n();
    let mut covered = vec![false; n];
    for t in 0..td.len() {
        for &v in td.bag(t) {
            if v >= n {
                violations.push(Violation::VertexOutOfRange { node: t, vertex: v });
            } else {
                covered[v] = true;
            }
        }
    }
    violations.extend(
        (0..n)
            .filter(|&v| !covered[v])
            .map(Violation::VertexUncovered),
    );
    for (u, v) in graph.edges() {
        let inside = (0..td.len()).any(|t| {
            let bag = td.bag(t);
            bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok()
        });
        if !inside {
            violations.push(Violation::EdgeUncovered(u, v));
        }
    }
    for v in 0..n {
        let tops = td.occurrence_tops(v);
        if tops.len() > 1 {
            violations.push(Violation::Disconnected { vertex: v, tops });
        }
    }
    if !td.bag(td.root()).is_empty() {
        violations.push(Violation::RootBagNotEmpty(td.root()));
    }
    violations
}

/// Like [`validate`] but as a `Result`.
pub fn ensure_valid(graph: &Graph, td: &RootedTreeDecomposition) -> Result<()> {
    let violations = validate(graph, td);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidDecomposition(violations))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn single_bag_is_valid() {
        let td = RootedTreeDecomposition::new(vec![vec![], vec![0, 1, 2]], vec![None, Some(0)]).unwrap();
        assert!(validate(&triangle(), &td).is_empty());
        assert_eq!(td.width(), 2);
        assert_eq!(td.forg(1), vec![0, 1, 2]);
        assert!(td.forg(0).is_empty());
        assert_eq!(td.new_vertices(1), vec![0, 1, 2]);
    }

    #[test]
    fn split_occurrence_is_reported() {
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let td = RootedTreeDecomposition::new(
            vec![vec![], vec![0, 1], vec![1, 2]],
            vec![None, Some(0), Some(0)],
        )
        .unwrap();
        let violations = validate(&path, &td);
        assert_eq!(violations, vec![Violation::Disconnected { vertex: 1, tops: vec![1, 2] }]);
    }

    #[test]
    fn uncovered_edge_is_reported() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let td = RootedTreeDecomposition::new(
            vec![vec![], vec![0], vec![1]],
            vec![None, Some(0), Some(0)],
        )
        .unwrap();
        assert_eq!(validate(&g, &td), vec![Violation::EdgeUncovered(0, 1)]);
    }

    #[test]
    fn root_bag_and_range_checks() {
        let g = Graph::edgeless(1);
        let td = RootedTreeDecomposition::new(vec![vec![0, 4]], vec![None]).unwrap();
        let violations = validate(&g, &td);
        assert!(violations.contains(&Violation::VertexOutOfRange { node: 0, vertex: 4 }));
        assert!(violations.contains(&Violation::RootBagNotEmpty(0)));
    }

    #[test]
    fn malformed_trees_are_rejected() {
        assert!(RootedTreeDecomposition::new(vec![vec![], vec![]], vec![None, None]).is_err());
        assert!(RootedTreeDecomposition::new(
            vec![vec![], vec![], vec![]],
            vec![None, Some(2), Some(1)]
        )
        .is_err());
        assert!(RootedTreeDecomposition::from_tree_edges(vec![vec![], vec![]], &[], 0).is_err());
    }

    #[test]
    fn tree_edges_are_oriented_from_the_root() {
        let td = RootedTreeDecomposition::from_tree_edges(
            vec![vec![], vec![0], vec![0, 1]],
            &[(2, 1), (1, 0)],
            0,
        )
        .unwrap();
        assert_eq!(td.parent(1), Some(0));
        assert_eq!(td.parent(2), Some(1));
        assert_eq!(td.post_order(), vec![2, 1, 0]);
    }
}
