use std::collections::BTreeSet;

use crate::{Error, Result, Vertex};

/// Hypergraph on `0..n` whose hyperedges have at most `d` members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    d: usize,
    edges: Vec<Vec<Vertex>>,
}

impl Hypergraph {
    pub fn new(n: usize, d: usize, edges: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, edge) in edges.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::InvalidInstance(format!("hyperedge {i} is empty")));
            }
            if edge.len() > d {
                return Err(Error::InvalidInstance(format!(
                    "hyperedge {i} has {} members, arity bound is {d}",
                    edge.len()
                )));
            }
            if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidInstance(format!(
                    "hyperedge {i} contains vertex {v} outside 0..{n}"
                )));
            }
            let set: BTreeSet<Vertex> = edge.iter().copied().collect();
            if set.len() != edge.len() {
                return Err(Error::InvalidInstance(format!(
                    "hyperedge {i} repeats a vertex"
                )));
            }
            normalized.push(set.into_iter().collect());
        }
        Ok(Hypergraph { n, d, edges: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Maximum hyperedge arity.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Hyperedges in input order, each sorted ascending.
    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn is_hitting_set(&self, set: &BTreeSet<Vertex>) -> bool {
        self.edges
            .iter()
            .all(|e| e.iter().any(|v| set.contains(v)))
    }
}
