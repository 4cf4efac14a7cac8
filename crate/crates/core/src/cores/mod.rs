//! Concrete dynamic cores and the two diverse vertex cover solvers.

mod direct;
mod product;
mod vc;

use std::collections::BTreeSet;

pub use direct::{solve_diverse_vc_direct, table_bound, DirectNodeStats, DirectOutcome};
pub use product::{DiverseProductCore, DiverseState};
pub use vc::{VcCore, VcState};

use crate::decomposition::RootedTreeDecomposition;
use crate::engine::{self, DynamicCore, NodeStats, VertexMembership};
use crate::instances::Graph;
use crate::{diversity, Error, Result, Vertex};

/// A core that decodes vertex sets and knows the decomposition it was built on.
pub trait MembershipCore: DynamicCore + VertexMembership<<Self as DynamicCore>::State> {
    fn decomposition(&self) -> &RootedTreeDecomposition;
}

/// Largest number of vertices a bag may hold before subset masks overflow.
pub const MAX_BAG: usize = 62;

pub(crate) fn check_bags(td: &RootedTreeDecomposition) -> Result<()> {
    for t in 0..td.len() {
        if td.bag(t).len() > MAX_BAG {
            return Err(Error::BagTooLarge { node: t, size: td.bag(t).len(), limit: MAX_BAG });
        }
    }
    Ok(())
}

/// Calls `f` with every index vector below `lens`, last position fastest.
pub(crate) fn odometer(lens: &[usize], mut f: impl FnMut(&[usize])) {
    if lens.contains(&0) {
        return;
    }
    let mut index = vec![0; lens.len()];
    loop {
        f(&index);
        let mut i = lens.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            index[i] += 1;
            if index[i] < lens[i] {
                break;
            }
            index[i] = 0;
        }
    }
}

#[derive(Clone, Debug)]
pub struct DiverseOutcome {
    pub decision: bool,
    pub solutions: Option<Vec<BTreeSet<Vertex>>>,
    pub stats: Vec<NodeStats>,
    pub tuple_checks: u64,
}

/// Decides whether the components admit solutions of total diversity at
/// least `d` and, if so, extracts one solution per component.
pub fn solve_diverse<C: MembershipCore>(
    td: &RootedTreeDecomposition,
    components: &[&C],
    d: u64,
    threads: usize,
) -> Result<DiverseOutcome> {
    let product = DiverseProductCore::new(td, components.to_vec(), d)?;
    let evaluation = engine::evaluate_parallel(&product, td, threads)?;
    let solutions = match engine::extract_witness(&product, td, &evaluation) {
        None => None,
        Some(witness) => {
            let sets = (0..components.len())
                .map(|i| engine::solution_from_witness(components[i], td, &product.project(&witness, i)))
                .collect::<Result<Vec<_>>>()?;
            debug_assert!(diversity::diversity(&sets) >= d);
            Some(sets)
        }
    };
    Ok(DiverseOutcome {
        decision: evaluation.decision(),
        solutions,
        stats: evaluation.stats().to_vec(),
        tuple_checks: evaluation.tuple_checks(),
    })
}

/// [`solve_diverse`] with `r` copies of one shared vertex cover core.
pub fn solve_diverse_vc(
    graph: &Graph,
    td: &RootedTreeDecomposition,
    k: usize,
    r: usize,
    d: u64,
    threads: usize,
) -> Result<DiverseOutcome> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let core = VcCore::new(graph, td, k)?;
    let components = vec![&core; r];
    solve_diverse(td, &components, d, threads)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{normalize, pd_from_vertex_cover};

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn pd(g: &Graph) -> RootedTreeDecomposition {
        let cover = crate::decomposition::minimum_vertex_cover(g);
        normalize(&pd_from_vertex_cover(g, &cover).unwrap()).unwrap()
    }

    fn both(g: &Graph, k: usize, r: usize, d: u64) -> bool {
        let td = pd(g);
        let framework = solve_diverse_vc(g, &td, k, r, d, 1).unwrap();
        let direct = solve_diverse_vc_direct(g, &td, k, r, d).unwrap();
        assert_eq!(framework.decision, direct.decision);
        for sets in [framework.solutions, direct.solutions].into_iter().flatten() {
            assert_eq!(sets.len(), r);
            assert!(diversity::diversity(&sets) >= d);
            for s in &sets {
                assert!(s.len() <= k && g.is_vertex_cover(s));
            }
        }
        framework.decision
    }

    #[test]
    fn path_pair() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert!(both(&p3, 2, 2, 2));
    }

    #[test]
    fn four_cycle_pair() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert!(both(&c4, 2, 2, 4));
        assert!(!both(&c4, 2, 2, 5));
    }

    #[test]
    fn triangle_thresholds() {
        let k3 = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(both(&k3, 2, 2, 2));
        assert!(!both(&k3, 2, 2, 5));
        assert!(!both(&k3, 1, 2, 0));
    }

    #[test]
    fn single_edge_pair() {
        let edge = graph(2, &[(0, 1)]);
        assert!(both(&edge, 1, 2, 2));
        assert!(!both(&edge, 1, 2, 3));
        assert!(both(&edge, 1, 1, 0));
    }

    #[test]
    fn zero_diversity_needs_only_solvability() {
        let g = graph(5, &[(0, 1), (2, 3)]);
        assert!(both(&g, 2, 3, 0));
        assert!(!both(&g, 1, 3, 0));
    }

    #[test]
    fn r_zero_is_rejected() {
        let g = graph(2, &[(0, 1)]);
        assert!(solve_diverse_vc(&g, &pd(&g), 1, 0, 0, 1).is_err());
    }
}
