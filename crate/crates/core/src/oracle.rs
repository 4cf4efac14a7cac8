//! Brute-force reference solver for small instances.

use std::collections::BTreeSet;

use crate::instances::{ProblemInstance, ProblemKind};
use crate::{ElementId, Error, Result};

/// Largest domain [`enumerate_solutions`] accepts.
pub const MAX_DOMAIN: usize = 24;
/// Largest `|solutions|^r` [`max_diversity`] accepts.
pub const MAX_TUPLES: u128 = 10_000_000;

/// Every solution of size at most `k`, ordered by size and then
/// lexicographically by element id.
#[derive(Clone, Debug)]
pub struct SolutionSpace {
    kind: ProblemKind,
    k: usize,
    domain: Vec<ElementId>,
    masks: Vec<u32>,
}

impl SolutionSpace {
    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn domain(&self) -> &[ElementId] {
        &self.domain
    }

    fn decode(&self, mask: u32) -> BTreeSet<ElementId> {
        (0..self.domain.len()).filter(|&p| mask >> p & 1 == 1).map(|p| self.domain[p]).collect()
    }

    pub fn solution(&self, index: usize) -> BTreeSet<ElementId> {
        self.decode(self.masks[index])
    }

    pub fn solutions(&self) -> Vec<BTreeSet<ElementId>> {
        self.masks.iter().map(|&m| self.decode(m)).collect()
    }

    pub fn contains(&self, set: &BTreeSet<ElementId>) -> bool {
        let mut mask = 0u32;
        for e in set {
            match self.domain.binary_search(e) {
                Ok(p) => mask |= 1 << p,
                Err(_) => return false,
            }
        }
        self.masks.contains(&mask)
    }
}

enum Checker {
    /// Each mask must meet the chosen set.
    Hitting(Vec<u32>),
    /// Out-neighbour masks, and for every domain position the arc it deletes.
    Acyclic { out: Vec<u64>, arcs: Vec<(usize, usize)> },
    /// Anything else falls back to the instance predicate.
    General,
}

fn checker(instance: &ProblemInstance, domain: &[ElementId]) -> Checker {
    let position = |id: &ElementId| domain.binary_search(id).expect("element in domain");
    match instance {
        ProblemInstance::VertexCover { graph, labels } => Checker::Hitting(
            graph.edges().map(|(u, v)| 1 << position(&labels[u]) | 1 << position(&labels[v])).collect(),
        ),
        ProblemInstance::HittingSet { hypergraph, labels } => Checker::Hitting(
            hypergraph
                .edges()
                .iter()
                .map(|e| e.iter().fold(0, |m, &v| m | 1 << position(&labels[v])))
                .collect(),
        ),
        ProblemInstance::PointLineCover { points, lines, .. } => Checker::Hitting(
            points
                .points()
                .iter()
                .map(|&p| {
                    lines.iter().enumerate().filter(|(_, l)| l.contains(p)).fold(0, |m, (i, _)| m | 1 << i)
                })
                .collect(),
        ),
        ProblemInstance::FeedbackArcSet(arcs) if arcs.tournament().n() <= 64 => {
            let t = arcs.tournament();
            let out = (0..t.n())
                .map(|u| (0..t.n()).filter(|&v| t.has_arc(u, v)).fold(0u64, |m, v| m | 1 << v))
                .collect();
            let arcs = arcs.deletable_arcs().into_iter().map(|(arc, _)| arc).collect();
            Checker::Acyclic { out, arcs }
        }
        ProblemInstance::FeedbackArcSet(_) => Checker::General,
    }
}

fn acyclic(out: &[u64]) -> bool {
    let n = out.len();
    let mut alive: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    loop {
        if alive == 0 {
            return true;
        }
        // a vertex with no outgoing arc inside the alive set is a sink
        let sink = (0..n).find(|&v| alive >> v & 1 == 1 && out[v] & alive == 0);
        match sink {
            Some(v) => alive &= !(1 << v),
            None => return false,
        }
    }
}

/// Calls `f` on every subset of `0..n` of size at most `k`, by size and then
/// lexicographically.
fn for_each_small_subset(n: usize, k: usize, mut f: impl FnMut(u32)) {
    for size in 0..=k.min(n) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            f(pick.iter().fold(0, |m, &p| m | 1 << p));
            let Some(i) = (0..size).rev().find(|&i| pick[i] < n - size + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
}

pub fn enumerate_solutions(instance: &ProblemInstance, k: usize) -> Result<SolutionSpace> {
    let domain = instance.domain();
    if domain.len() > MAX_DOMAIN {
        return Err(Error::Guard(format!(
            "domain has {} elements, the oracle handles at most {MAX_DOMAIN}",
            domain.len()
        )));
    }
    let check = checker(instance, &domain);
    let mut masks = Vec::new();
    for_each_small_subset(domain.len(), k, |mask| {
        let ok = match &check {
            Checker::Hitting(constraints) => constraints.iter().all(|&c| c & mask != 0),
            Checker::Acyclic { out, arcs } => {
                let mut out = out.clone();
                for (p, &(u, v)) in arcs.iter().enumerate() {
                    if mask >> p & 1 == 1 {
                        out[u] &= !(1 << v);
                    }
                }
                acyclic(&out)
            }
            Checker::General => instance.is_solution(
                &(0..domain.len()).filter(|&p| mask >> p & 1 == 1).map(|p| domain[p]).collect(),
            ),
        };
        if ok {
            masks.push(mask);
        }
    });
    Ok(SolutionSpace { kind: instance.kind(), k, domain, masks })
}

/// Maximum diversity over all `r`-tuples of solutions (repetition allowed)
/// together with a maximizing tuple, or `None` when there are no solutions.
pub fn max_diversity(space: &SolutionSpace, r: usize) -> Result<Option<(u64, Vec<BTreeSet<ElementId>>)>> {
    search(space, r, None)
}

/// Whether some `r`-tuple of solutions reaches diversity `d`.
pub fn decide_diverse(instance: &ProblemInstance, k: usize, r: usize, d: u64) -> Result<bool> {
    let space = enumerate_solutions(instance, k)?;
    Ok(search(&space, r, Some(d))?.is_some_and(|(best, _)| best >= d))
}

/// Some `r`-tuple of solutions with diversity at least `d`, if one exists.
pub fn find_diverse(space: &SolutionSpace, r: usize, d: u64) -> Result<Option<Vec<BTreeSet<ElementId>>>> {
    Ok(search(space, r, Some(d))?.and_then(|(best, tuple)| (best >= d).then_some(tuple)))
}

/// Exhaustive search over multisets of solution indexes. With a `target`,
/// stops as soon as a tuple reaches it.
fn search(space: &SolutionSpace, r: usize, target: Option<u64>) -> Result<Option<(u64, Vec<BTreeSet<ElementId>>)>> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let m = space.len();
    let tuples = (m as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if tuples > MAX_TUPLES {
        return Err(Error::Guard(format!("{m} solutions give {tuples} {r}-tuples, more than {MAX_TUPLES}")));
    }
    if m == 0 {
        return Ok(None);
    }
    let distance: Vec<Vec<u64>> = space
        .masks
        .iter()
        .map(|&a| space.masks.iter().map(|&b| (a ^ b).count_ones() as u64).collect())
        .collect();

    struct Search<'a> {
        distance: &'a [Vec<u64>],
        r: usize,
        target: Option<u64>,
        current: Vec<usize>,
        best: u64,
        best_tuple: Vec<usize>,
    }
    impl Search<'_> {
        /// Returns true once the target is reached.
        fn extend(&mut self, from: usize, value: u64) -> bool {
            if self.current.len() == self.r {
                if value > self.best || self.best_tuple.is_empty() {
                    self.best = value;
                    self.best_tuple = self.current.clone();
                }
                return self.target.is_some_and(|t| self.best >= t);
            }
            for next in from..self.distance.len() {
                let gain: u64 = self.current.iter().map(|&i| self.distance[i][next]).sum();
                self.current.push(next);
                let done = self.extend(next, value + gain);
                self.current.pop();
                if done {
                    return true;
                }
            }
            false
        }
    }
    let mut s = Search { distance: &distance, r, target, current: Vec::with_capacity(r), best: 0, best_tuple: Vec::new() };
    s.extend(0, 0);
    let tuple = s.best_tuple.iter().map(|&i| space.solution(i)).collect();
    Ok(Some((s.best, tuple)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diversity::diversity;
    use crate::instances::{Graph, Tournament};

    fn vc(n: usize, edges: &[(usize, usize)]) -> ProblemInstance {
        ProblemInstance::vertex_cover(Graph::new(n, edges.iter().copied()).unwrap())
    }

    fn sets(list: &[&[usize]]) -> Vec<BTreeSet<usize>> {
        list.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn single_edge() {
        let space = enumerate_solutions(&vc(2, &[(0, 1)]), 1).unwrap();
        assert_eq!(space.solutions(), sets(&[&[0], &[1]]));
        assert_eq!(max_diversity(&space, 2).unwrap().unwrap().0, 2);
        assert_eq!(max_diversity(&space, 1).unwrap().unwrap().0, 0);
    }

    #[test]
    fn triangle_pairs_only() {
        let k3 = vc(3, &[(0, 1), (1, 2), (0, 2)]);
        let space = enumerate_solutions(&k3, 2).unwrap();
        assert_eq!(space.solutions(), sets(&[&[0, 1], &[0, 2], &[1, 2]]));
        assert!(!decide_diverse(&k3, 1, 2, 0).unwrap());
        assert!(decide_diverse(&k3, 2, 2, 2).unwrap());
        assert!(!decide_diverse(&k3, 2, 2, 5).unwrap());
    }

    #[test]
    fn four_cycle() {
        let c4 = vc(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let (best, tuple) = max_diversity(&enumerate_solutions(&c4, 2).unwrap(), 2).unwrap().unwrap();
        assert_eq!(best, 4);
        assert_eq!(diversity(&tuple), 4);
    }

    #[test]
    fn path_pair() {
        assert!(decide_diverse(&vc(3, &[(0, 1), (1, 2)]), 2, 2, 2).unwrap());
    }

    #[test]
    fn cyclic_triangle_arcs() {
        let t = Tournament::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let space = enumerate_solutions(&ProblemInstance::feedback_arc_set(t), 1).unwrap();
        assert_eq!(space.solutions(), sets(&[&[0], &[1], &[2]]));
    }

    #[test]
    fn guards_fail_loudly() {
        let big = ProblemInstance::vertex_cover(Graph::edgeless(25));
        assert!(matches!(enumerate_solutions(&big, 1), Err(Error::Guard(_))));
        let wide = enumerate_solutions(&ProblemInstance::vertex_cover(Graph::edgeless(20)), 3).unwrap();
        assert!(matches!(max_diversity(&wide, 3), Err(Error::Guard(_))));
        assert!(max_diversity(&wide, 0).is_err());
    }

    #[test]
    fn subsets_in_order() {
        let mut seen = Vec::new();
        for_each_small_subset(3, 2, |m| seen.push(m));
        assert_eq!(seen, vec![0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110]);
    }
}
