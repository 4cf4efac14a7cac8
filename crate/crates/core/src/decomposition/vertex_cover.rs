use std::collections::BTreeSet;

use super::RootedTreeDecomposition;
use crate::instances::Graph;
use crate::{Error, Result, Vertex};

/// Path decomposition with bags `Z ∪ {v}` for every `v ∉ Z`, hung below an
/// empty root. Its width is `|Z|` whenever some vertex lies outside `Z`.
pub fn pd_from_vertex_cover(graph: &Graph, cover: &BTreeSet<Vertex>) -> Result<RootedTreeDecomposition> {
    if let Some(&v) = cover.iter().find(|&&v| v >= graph.n()) {
        return Err(Error::InvalidArgument(format!("vertex {v} is not in the graph")));
    }
    if !graph.is_vertex_cover(cover) {
        let uncovered = graph
            .edges()
            .find(|(u, v)| !cover.contains(u) && !cover.contains(v))
            .map(|(u, v)| vec![u, v])
            .unwrap_or_default();
        return Err(Error::NotAVertexCover(uncovered));
    }
    let base: Vec<Vertex> = cover.iter().copied().collect();
    let mut bags = vec![Vec::new()];
    let outside: Vec<Vertex> = graph.vertices().filter(|v| !cover.contains(v)).collect();
    if outside.is_empty() {
        if !base.is_empty() {
            bags.push(base);
        }
    } else {
        for v in outside {
            let mut bag = base.clone();
            bag.push(v);
            bag.sort_unstable();
            bags.push(bag);
        }
    }
    let parent = (0..bags.len()).map(|t| t.checked_sub(1)).collect();
    RootedTreeDecomposition::new(bags, parent)
}

/// Bounded search tree: branch on the lowest uncovered edge, depth at most `k`.
pub fn find_vertex_cover(graph: &Graph, k: usize) -> Option<BTreeSet<Vertex>> {
    fn search(graph: &Graph, k: usize, chosen: &mut Vec<bool>) -> bool {
        let Some((u, v)) = graph.edges().find(|&(u, v)| !chosen[u] && !chosen[v]) else {
            return true;
        };
        if k == 0 {
            return false;
        }
        for w in [u, v] {
            chosen[w] = true;
            if search(graph, k - 1, chosen) {
                return true;
            }
            chosen[w] = false;
        }
        false
    }
    let mut chosen = vec![false; graph.n()];
    search(graph, k, &mut chosen).then(|| (0..graph.n()).filter(|&v| chosen[v]).collect())
}

pub fn minimum_vertex_cover(graph: &Graph) -> BTreeSet<Vertex> {
    (0..=graph.n())
        .find_map(|k| find_vertex_cover(graph, k))
        .expect("the full vertex set is a cover")
}
