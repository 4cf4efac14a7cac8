use std::collections::BTreeSet;

use super::{KernelOutcome, LosslessKernelResult};
use crate::instances::{Graph, ProblemInstance};
use crate::{Error, Result};

/// High-degree vertices are forced, then isolated vertices are allowed.
pub fn vc_lossless_kernel(instance: &ProblemInstance, k: usize) -> Result<KernelOutcome> {
    let ProblemInstance::VertexCover { graph, labels } = instance else {
        return Err(Error::InvalidArgument("expected a vertex cover instance".into()));
    };
    let n = graph.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
    let mut budget = k as i64;
    let mut forced = BTreeSet::new();
    while let Some(v) = (0..n).find(|&v| alive[v] && degree[v] as i64 > budget) {
        alive[v] = false;
        forced.insert(labels[v]);
        for &u in graph.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
            }
        }
        budget -= 1;
        if budget < 0 {
            return Ok(KernelOutcome::No(format!("more than {k} vertices of too high degree")));
        }
    }
    let budget = budget as usize;
    let mut allowed = BTreeSet::new();
    for v in 0..n {
        if alive[v] && degree[v] == 0 {
            alive[v] = false;
            allowed.insert(labels[v]);
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let reduced_graph: Graph = graph.induced(&keep);
    if reduced_graph.edge_count() > budget * budget || keep.len() > budget * budget + budget {
        return Ok(KernelOutcome::No(format!(
            "{} vertices and {} edges remain, too many for budget {budget}",
            keep.len(),
            reduced_graph.edge_count()
        )));
    }
    let reduced = ProblemInstance::labeled_vertex_cover(reduced_graph, keep.iter().map(|&v| labels[v]).collect())?;
    Ok(KernelOutcome::Reduced(LosslessKernelResult { reduced, forced, allowed, k, k_reduced: budget }))
}
