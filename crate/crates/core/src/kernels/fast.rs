use std::collections::BTreeSet;

use super::{KernelOutcome, LosslessKernelResult};
use crate::instances::{ArcInstance, ArcRecord, ProblemInstance};
use crate::{Error, Result};

/// Arcs on more than `k'` triangles are reversed, fixed and forced; vertices
/// on no triangle are dropped and their deletable arcs allowed.
pub fn fast_lossless_kernel(instance: &ProblemInstance, k: usize) -> Result<KernelOutcome> {
    let ProblemInstance::FeedbackArcSet(input) = instance else {
        return Err(Error::InvalidArgument("expected a feedback arc set instance".into()));
    };
    let mut tournament = input.tournament().clone();
    let mut records = input.arcs().clone();
    let mut reversed = input.reversed().clone();
    let mut budget = k as i64;
    let mut forced = BTreeSet::new();
    loop {
        let mut deletable: Vec<_> = records.iter().filter(|(_, r)| r.deletable).map(|(&arc, r)| (r.id, arc)).collect();
        deletable.sort_unstable();
        let heavy = deletable
            .into_iter()
            .find(|&(_, (u, v))| tournament.triangles_through(u, v) as i64 > budget);
        let Some((id, (u, v))) = heavy else { break };
        tournament.reverse(u, v);
        records.remove(&(u, v));
        records.insert((v, u), ArcRecord { id, deletable: false });
        reversed.insert(id);
        forced.insert(id);
        budget -= 1;
        if budget < 0 {
            return Ok(KernelOutcome::No(format!("more than {k} arcs lie on too many triangles")));
        }
    }
    if let Some((&(u, v), _)) = records
        .iter()
        .find(|(&(u, v), r)| !r.deletable && tournament.triangles_through(u, v) as i64 > budget)
    {
        return Ok(KernelOutcome::No(format!("fixed arc ({u}, {v}) lies on too many triangles")));
    }
    let budget = budget as usize;
    let n = tournament.n();
    let everyone = vec![true; n];
    let keep: Vec<usize> = (0..n).filter(|&v| tournament.in_triangle(v, &everyone)).collect();
    if keep.len() > budget * (budget + 2) {
        return Ok(KernelOutcome::No(format!("{} vertices remain, more than {budget}·{}", keep.len(), budget + 2)));
    }
    let kept = |v: usize| keep.binary_search(&v).is_ok();
    let allowed = records
        .iter()
        .filter(|(&(u, v), r)| r.deletable && !(kept(u) && kept(v)))
        .map(|(_, r)| r.id)
        .collect();
    let local = |v: usize| keep.binary_search(&v).expect("kept vertex");
    let reduced_records = records
        .iter()
        .filter(|(&(u, v), _)| kept(u) && kept(v))
        .map(|(&(u, v), &r)| ((local(u), local(v)), r))
        .collect();
    let labels = keep.iter().map(|&v| input.vertex_labels()[v]).collect();
    let arcs = ArcInstance::new(tournament.induced(&keep), labels, reduced_records, reversed)?;
    Ok(KernelOutcome::Reduced(LosslessKernelResult {
        reduced: ProblemInstance::FeedbackArcSet(arcs),
        forced,
        allowed,
        k,
        k_reduced: budget,
    }))
}
