use std::collections::BTreeSet;

use super::{KernelOutcome, LosslessKernelResult};
use crate::instances::{Hypergraph, ProblemInstance};
use crate::{Error, Result, Vertex};

/// Sets `petals` (indexes into the searched family) pairwise intersecting in
/// exactly `core`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sunflower {
    pub core: Vec<Vertex>,
    pub petals: Vec<usize>,
}

/// Greedy sunflower search: take a maximal family of pairwise disjoint sets;
/// if it is too small, fix its most frequent element into the core and
/// recurse on the sets containing it. Always succeeds on a family of more
/// than `j!·(petals-1)^j` sets of size `j`.
pub fn find_sunflower(family: &[Vec<Vertex>], petals: usize) -> Option<Sunflower> {
    if petals == 0 {
        return Some(Sunflower { core: Vec::new(), petals: Vec::new() });
    }
    let mut current: Vec<(usize, Vec<Vertex>)> = family.iter().cloned().enumerate().collect();
    let mut core = Vec::new();
    loop {
        current.retain(|(_, rest)| !rest.is_empty());
        if current.len() < petals {
            return None;
        }
        let mut used = BTreeSet::new();
        let mut chosen = Vec::new();
        for (i, rest) in &current {
            if rest.iter().all(|v| !used.contains(v)) {
                used.extend(rest.iter().copied());
                chosen.push(*i);
                if chosen.len() == petals {
                    core.sort_unstable();
                    return Some(Sunflower { core, petals: chosen });
                }
            }
        }
        let frequency = |v: &Vertex| current.iter().filter(|(_, rest)| rest.contains(v)).count();
        let pivot = *used.iter().max_by_key(|&v| (frequency(v), std::cmp::Reverse(*v)))?;
        core.push(pivot);
        current = current
            .into_iter()
            .filter(|(_, rest)| rest.contains(&pivot))
            .map(|(i, rest)| (i, rest.into_iter().filter(|&v| v != pivot).collect()))
            .collect();
    }
}

/// `Σ_{j=2}^{d} j·j!·k^j`: vertices left after the kernel with budget `k`.
pub fn vertex_bound(d: usize, k: usize) -> usize {
    let mut total = 0usize;
    let mut factorial = 1usize;
    for j in 1..=d {
        factorial = factorial.saturating_mul(j);
        if j >= 2 {
            let power = k.saturating_pow(j as u32);
            total = total.saturating_add(j.saturating_mul(factorial).saturating_mul(power));
        }
    }
    total
}

/// Singleton edges are forced; sunflowers with `k'+1` petals are replaced by
/// their core (or prove a no-instance when the core is empty); vertices left
/// in no edge are allowed.
pub fn hs_lossless_kernel(instance: &ProblemInstance, k: usize) -> Result<KernelOutcome> {
    let ProblemInstance::HittingSet { hypergraph, labels } = instance else {
        return Err(Error::InvalidArgument("expected a hitting set instance".into()));
    };
    let d = hypergraph.d();
    let mut edges: BTreeSet<Vec<Vertex>> = hypergraph.edges().iter().cloned().collect();
    let mut budget = k as i64;
    let mut forced = BTreeSet::new();
    'rules: loop {
        if let Some(y) = edges.iter().find(|e| e.len() == 1).map(|e| e[0]) {
            forced.insert(labels[y]);
            edges.retain(|e| !e.contains(&y));
            budget -= 1;
            if budget < 0 {
                return Ok(KernelOutcome::No(format!("more than {k} singleton hyperedges")));
            }
            continue;
        }
        for j in 2..=d {
            let family: Vec<Vec<Vertex>> = edges.iter().filter(|e| e.len() == j).cloned().collect();
            if let Some(flower) = find_sunflower(&family, budget as usize + 1) {
                if flower.core.is_empty() {
                    return Ok(KernelOutcome::No(format!(
                        "{} pairwise disjoint hyperedges exceed budget {budget}",
                        flower.petals.len()
                    )));
                }
                for &p in &flower.petals {
                    edges.remove(&family[p]);
                }
                edges.insert(flower.core);
                continue 'rules;
            }
        }
        break;
    }
    let budget = budget as usize;
    let used: BTreeSet<Vertex> = edges.iter().flatten().copied().collect();
    let allowed = (0..hypergraph.n())
        .filter(|v| !used.contains(v) && !forced.contains(&labels[*v]))
        .map(|v| labels[v])
        .collect();
    let keep: Vec<Vertex> = used.into_iter().collect();
    let local = |v: &Vertex| keep.binary_search(v).expect("used vertex");
    let reduced_edges = edges.iter().map(|e| e.iter().map(local).collect()).collect();
    let reduced = ProblemInstance::labeled_hitting_set(
        Hypergraph::new(keep.len(), d, reduced_edges)?,
        keep.iter().map(|&v| labels[v]).collect(),
    )?;
    Ok(KernelOutcome::Reduced(LosslessKernelResult { reduced, forced, allowed, k, k_reduced: budget }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(n: usize, d: usize, edges: &[&[usize]]) -> ProblemInstance {
        ProblemInstance::hitting_set(Hypergraph::new(n, d, edges.iter().map(|e| e.to_vec()).collect()).unwrap())
    }

    #[test]
    fn disjoint_edges_beyond_budget() {
        assert!(matches!(hs_lossless_kernel(&hs(4, 2, &[&[0, 1], &[2, 3]]), 1).unwrap(), KernelOutcome::No(_)));
    }

    #[test]
    fn sunflower_core_is_forced() {
        let KernelOutcome::Reduced(kernel) = hs_lossless_kernel(&hs(4, 2, &[&[0, 1], &[0, 2], &[0, 3]]), 1).unwrap()
        else {
            panic!()
        };
        assert_eq!(kernel.forced, BTreeSet::from([0]));
        assert_eq!(kernel.k_reduced, 0);
        assert_eq!(kernel.allowed, BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn greedy_sunflowers_are_sunflowers() {
        let family = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4], vec![0, 5, 6], vec![7, 8, 9]];
        let flower = find_sunflower(&family, 3).unwrap();
        assert_eq!(flower.core, vec![0, 1]);
        assert_eq!(flower.petals, vec![0, 1, 2]);
        assert!(find_sunflower(&family, 4).is_none());
    }

    #[test]
    fn bound_values() {
        assert_eq!(vertex_bound(2, 1), 4);
        assert_eq!(vertex_bound(3, 2), 2 * 2 * 4 + 3 * 6 * 8);
        assert_eq!(vertex_bound(1, 5), 0);
    }
}
