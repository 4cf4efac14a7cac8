//! Loss-less kernels, domain recovery and the diverse kernel transform.
//!
//! A loss-less kernel shrinks `(I, k)` to `(I', k - |F|)` while reporting the
//! removed domain elements as *forced* (`F`, in every solution of size at most
//! `k`) or *allowed* (`A`, addable to any solution without harm). Domain
//! recovery puts chosen allowed elements back, which is what lets the
//! reduction preserve diverse solution tuples.

mod fast;
mod hs;
mod plc;
mod vc;

use std::collections::BTreeSet;

use serde::Serialize;

pub use fast::fast_lossless_kernel;
pub use hs::{find_sunflower, hs_lossless_kernel, vertex_bound as hs_vertex_bound, Sunflower};
pub use plc::plc_lossless_kernel;
pub use vc::vc_lossless_kernel;

use crate::instances::{
    ArcInstance, ArcRecord, Graph, Hypergraph, InstanceSize, ProblemInstance, ProblemKind, Tournament,
};
use crate::{ElementId, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LosslessKernelResult {
    pub reduced: ProblemInstance,
    pub forced: BTreeSet<ElementId>,
    pub allowed: BTreeSet<ElementId>,
    pub k: usize,
    pub k_reduced: usize,
}

impl LosslessKernelResult {
    pub fn kind(&self) -> ProblemKind {
        self.reduced.kind()
    }

    /// Declared bound on the reduced instance's primary size (vertices, or
    /// points for Point Line Cover) in terms of the reduced budget.
    pub fn size_bound(&self) -> usize {
        size_bound(&self.reduced, self.k_reduced)
    }

    /// Declared growth of the primary size when `s` elements are recovered.
    pub fn recovery_cost(&self, s: usize) -> usize {
        recovery_cost(self.kind(), s)
    }
}

/// Primary-size bound `f` of each kernel, evaluated at budget `k`.
pub fn size_bound(instance: &ProblemInstance, k: usize) -> usize {
    match instance {
        ProblemInstance::VertexCover { .. } => k * k + k,
        ProblemInstance::HittingSet { hypergraph, .. } => hs::vertex_bound(hypergraph.d(), k),
        ProblemInstance::PointLineCover { .. } => k * k,
        ProblemInstance::FeedbackArcSet(_) => k * (k + 2),
    }
}

/// Recovery cost `g`: recovered vertices or lines add one each; a recovered
/// arc may bring back both endpoints.
pub fn recovery_cost(kind: ProblemKind, s: usize) -> usize {
    match kind {
        ProblemKind::Vc | ProblemKind::Hs | ProblemKind::Plc => s,
        ProblemKind::Fast => 2 * s,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutcome {
    /// The instance has no solution of size at most `k`.
    No(String),
    Reduced(LosslessKernelResult),
}

impl KernelOutcome {
    pub fn reduced(&self) -> Option<&LosslessKernelResult> {
        match self {
            KernelOutcome::Reduced(kernel) => Some(kernel),
            KernelOutcome::No(_) => None,
        }
    }
}

/// Runs the loss-less kernel matching the instance's problem.
pub fn lossless_kernel(instance: &ProblemInstance, k: usize) -> Result<KernelOutcome> {
    match instance.kind() {
        ProblemKind::Vc => vc_lossless_kernel(instance, k),
        ProblemKind::Hs => hs_lossless_kernel(instance, k),
        ProblemKind::Plc => plc_lossless_kernel(instance, k),
        ProblemKind::Fast => fast_lossless_kernel(instance, k),
    }
}

fn merge_labels(kept: &[ElementId], added: &BTreeSet<ElementId>) -> (Vec<ElementId>, Vec<usize>, Vec<usize>) {
    let labels: Vec<ElementId> = kept.iter().copied().chain(added.iter().copied()).collect::<BTreeSet<_>>().into_iter().collect();
    let old_pos = kept.iter().map(|l| labels.binary_search(l).unwrap()).collect();
    let new_pos = added.iter().map(|l| labels.binary_search(l).unwrap()).collect();
    (labels, old_pos, new_pos)
}

/// Reintroduces the domain elements `s` of `original` into `reduced`.
pub fn domain_recover(
    reduced: &ProblemInstance,
    original: &ProblemInstance,
    s: &BTreeSet<ElementId>,
) -> Result<ProblemInstance> {
    if reduced.kind() != original.kind() {
        return Err(Error::InvalidArgument("instances are of different problems".into()));
    }
    let kept: BTreeSet<ElementId> = reduced.domain().into_iter().collect();
    let full: BTreeSet<ElementId> = original.domain().into_iter().collect();
    if let Some(e) = s.iter().find(|e| kept.contains(e)) {
        return Err(Error::InvalidArgument(format!("element {e} is already in the reduced domain")));
    }
    if let Some(e) = s.iter().find(|e| !full.contains(e)) {
        return Err(Error::InvalidArgument(format!("element {e} is not in the original domain")));
    }
    if s.is_empty() {
        return Ok(reduced.clone());
    }
    match (reduced, original) {
        (ProblemInstance::VertexCover { graph, labels }, _) => {
            let (merged, old_pos, _) = merge_labels(labels, s);
            let edges = graph.edges().map(|(u, v)| (old_pos[u], old_pos[v]));
            ProblemInstance::labeled_vertex_cover(Graph::new(merged.len(), edges)?, merged)
        }
        (ProblemInstance::HittingSet { hypergraph, labels }, _) => {
            let (merged, old_pos, _) = merge_labels(labels, s);
            let edges = hypergraph.edges().iter().map(|e| e.iter().map(|&v| old_pos[v]).collect()).collect();
            ProblemInstance::labeled_hitting_set(Hypergraph::new(merged.len(), hypergraph.d(), edges)?, merged)
        }
        (
            ProblemInstance::PointLineCover { points, lines, line_ids },
            ProblemInstance::PointLineCover { lines: all_lines, line_ids: all_ids, .. },
        ) => {
            let mut entries: Vec<(ElementId, _)> = line_ids.iter().copied().zip(lines.iter().copied()).collect();
            for id in s {
                let at = all_ids.binary_search(id).expect("checked above");
                entries.push((*id, all_lines[at]));
            }
            entries.sort_by_key(|&(id, _)| id);
            let (ids, lines) = entries.into_iter().unzip();
            ProblemInstance::labeled_point_line_cover(points.clone(), lines, ids)
        }
        (ProblemInstance::FeedbackArcSet(small), ProblemInstance::FeedbackArcSet(big)) => {
            recover_arcs(small, big, s).map(ProblemInstance::FeedbackArcSet)
        }
        _ => unreachable!("kinds checked above"),
    }
}

/// Adds each recovered arc together with any missing endpoint and all arcs
/// between that endpoint and the vertices present, so the result is again a
/// tournament. Only recovered arcs become deletable.
fn recover_arcs(small: &ArcInstance, big: &ArcInstance, s: &BTreeSet<ElementId>) -> Result<ArcInstance> {
    // orientation of every input arc by id, as (tail label, head label)
    let mut by_id = std::collections::BTreeMap::new();
    for (&(u, v), record) in big.arcs() {
        let (tail, head) = (big.vertex_labels()[u], big.vertex_labels()[v]);
        let flip = small.reversed().contains(&record.id) && !big.reversed().contains(&record.id);
        by_id.insert(record.id, if flip { (head, tail) } else { (tail, head) });
    }
    let mut labels: BTreeSet<usize> = small.vertex_labels().iter().copied().collect();
    for id in s {
        let (a, b) = by_id[id];
        labels.insert(a);
        labels.insert(b);
    }
    let labels: Vec<usize> = labels.into_iter().collect();
    let deletable: BTreeSet<ElementId> = small.deletable_arcs().into_iter().map(|(_, id)| id).chain(s.iter().copied()).collect();
    let mut arcs = Vec::new();
    let mut records = std::collections::BTreeMap::new();
    for (&id, &(tail, head)) in &by_id {
        if let (Ok(u), Ok(v)) = (labels.binary_search(&tail), labels.binary_search(&head)) {
            arcs.push((u, v));
            records.insert((u, v), ArcRecord { id, deletable: deletable.contains(&id) });
        }
    }
    let tournament = Tournament::new(labels.len(), arcs)?;
    let reversed = small.reversed().clone();
    ArcInstance::new(tournament, labels, records, reversed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiverseKernelOutput {
    pub instance: ProblemInstance,
    pub k_reduced: usize,
    pub r: usize,
    pub d: u64,
    pub a_star: BTreeSet<ElementId>,
}

/// Recovers the first `min(|A|, k·r)` allowed elements (in domain order) into
/// the reduced instance.
pub fn diverse_kernel_transform(
    original: &ProblemInstance,
    k: usize,
    r: usize,
    d: u64,
    kernel: &LosslessKernelResult,
) -> Result<DiverseKernelOutput> {
    let a_star: BTreeSet<ElementId> = kernel.allowed.iter().copied().take(k * r).collect();
    let instance = domain_recover(&kernel.reduced, original, &a_star)?;
    Ok(DiverseKernelOutput { instance, k_reduced: kernel.k_reduced, r, d, a_star })
}

/// Kernel summary as shown by the command-line tool.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub verdict: &'static str,
    pub forced: Vec<ElementId>,
    pub allowed: Vec<ElementId>,
    pub k_reduced: Option<usize>,
    pub domain_before: usize,
    pub domain_after: Option<usize>,
    pub size_before: InstanceSize,
    pub size_after: Option<InstanceSize>,
}

impl KernelReport {
    pub fn new(original: &ProblemInstance, outcome: &KernelOutcome, recovered: Option<&ProblemInstance>) -> Self {
        match outcome {
            KernelOutcome::No(_) => KernelReport {
                verdict: "no",
                forced: Vec::new(),
                allowed: Vec::new(),
                k_reduced: None,
                domain_before: original.domain_len(),
                domain_after: None,
                size_before: original.size(),
                size_after: None,
            },
            KernelOutcome::Reduced(kernel) => {
                let after = recovered.unwrap_or(&kernel.reduced);
                KernelReport {
                    verdict: "reduced",
                    forced: kernel.forced.iter().copied().collect(),
                    allowed: kernel.allowed.iter().copied().collect(),
                    k_reduced: Some(kernel.k_reduced),
                    domain_before: original.domain_len(),
                    domain_after: Some(after.domain_len()),
                    size_before: original.size(),
                    size_after: Some(after.size()),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn empty_recovery_is_identity() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let inst = ProblemInstance::vertex_cover(g);
        let out = domain_recover(&inst, &inst, &BTreeSet::new()).unwrap();
        assert_eq!(out, inst);
    }

    #[test]
    fn vertex_recovery_adds_isolated_vertices() {
        let star = ProblemInstance::vertex_cover(Graph::new(6, (1..6).map(|v| (0, v))).unwrap());
        let KernelOutcome::Reduced(kernel) = vc_lossless_kernel(&star, 1).unwrap() else { panic!() };
        let out = domain_recover(&kernel.reduced, &star, &BTreeSet::from([2, 4, 5])).unwrap();
        assert_eq!(out.size().primary, kernel.reduced.size().primary + 3);
        assert_eq!(out.domain(), vec![2, 4, 5]);
        assert!(domain_recover(&out, &star, &BTreeSet::from([2])).is_err());
        assert!(domain_recover(&out, &star, &BTreeSet::from([9])).is_err());
    }

    #[test]
    fn star_transform_keeps_the_answer() {
        let star = ProblemInstance::vertex_cover(Graph::new(6, (1..6).map(|v| (0, v))).unwrap());
        let KernelOutcome::Reduced(kernel) = vc_lossless_kernel(&star, 1).unwrap() else { panic!() };
        assert_eq!(kernel.forced, BTreeSet::from([0]));
        assert_eq!(kernel.allowed, BTreeSet::from([1, 2, 3, 4, 5]));
        for d in 0..4 {
            let out = diverse_kernel_transform(&star, 1, 2, d, &kernel).unwrap();
            assert_eq!(out.a_star, BTreeSet::from([1, 2]));
            assert_eq!(
                oracle::decide_diverse(&star, 1, 2, d).unwrap(),
                oracle::decide_diverse(&out.instance, out.k_reduced, 2, d).unwrap()
            );
        }
    }

    #[test]
    fn no_allowed_elements_means_reduced_instance() {
        let k3 = ProblemInstance::vertex_cover(Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
        let KernelOutcome::Reduced(kernel) = vc_lossless_kernel(&k3, 2).unwrap() else { panic!() };
        assert!(kernel.allowed.is_empty());
        let out = diverse_kernel_transform(&k3, 2, 3, 4, &kernel).unwrap();
        assert_eq!(out.instance, kernel.reduced);
    }
}
