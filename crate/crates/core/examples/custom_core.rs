//! A user-defined dynamic core (independent sets) plugged into the diverse
//! product construction.

use std::collections::BTreeSet;

use diversekit::cores::{solve_diverse, MembershipCore};
use diversekit::diversity::diversity;
use diversekit::decomposition::{normalize, NodeId, RootedTreeDecomposition};
use diversekit::engine::{evaluate, extract_witness, is_witness, DynamicCore, ProcessTuple, VertexMembership};
use diversekit::instances::Graph;

/// States are the chosen subset of the bag, as sorted vertices.
struct IndependentSets<'a> {
    graph: &'a Graph,
    td: &'a RootedTreeDecomposition,
}

impl IndependentSets<'_> {
    fn subsets(&self, t: NodeId) -> Vec<Vec<usize>> {
        let bag = self.td.bag(t);
        (0u32..1 << bag.len())
            .map(|mask| (0..bag.len()).filter(|&i| mask >> i & 1 == 1).map(|i| bag[i]).collect::<Vec<_>>())
            .filter(|s| s.iter().all(|&u| s.iter().all(|&v| !self.graph.has_edge(u, v))))
            .collect()
    }
}

impl DynamicCore for IndependentSets<'_> {
    type State = Vec<usize>;

    fn accept(&self) -> BTreeSet<Vec<usize>> {
        BTreeSet::from([Vec::new()])
    }

    fn process(&self, t: NodeId) -> Vec<ProcessTuple<Vec<usize>>> {
        let mut tuples = Vec::new();
        for parent in self.subsets(t) {
            let mut partial: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
            for &c in self.td.children(t) {
                let agreeing: Vec<Vec<usize>> = self
                    .subsets(c)
                    .into_iter()
                    .filter(|s| self.td.bag(c).iter().all(|v| !self.td.bag(t).contains(v) || s.contains(v) == parent.contains(v)))
                    .collect();
                partial = partial
                    .into_iter()
                    .flat_map(|prefix| agreeing.iter().map(move |s| [prefix.clone(), vec![s.clone()]].concat()))
                    .collect();
            }
            tuples.extend(partial.into_iter().map(|children| ProcessTuple::new(parent.clone(), children)));
        }
        tuples
    }
}

impl VertexMembership<Vec<usize>> for IndependentSets<'_> {
    fn contains(&self, v: usize, state: &Vec<usize>) -> bool {
        state.contains(&v)
    }
}

impl MembershipCore for IndependentSets<'_> {
    fn decomposition(&self) -> &RootedTreeDecomposition {
        self.td
    }
}

fn main() -> diversekit::Result<()> {
    // path 0-1-2-3-4 with a pendant 5 on vertex 2
    let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])?;
    let td = normalize(&RootedTreeDecomposition::new(
        vec![vec![], vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![2, 5]],
        vec![None, Some(0), Some(1), Some(2), Some(3), Some(2)],
    )?)?;
    let core = IndependentSets { graph: &g, td: &td };

    let evaluation = evaluate(&core, &td)?;
    let witness = extract_witness(&core, &td, &evaluation).expect("the empty set is independent");
    println!("single core: accepts {}, witness valid {}", evaluation.decision(), is_witness(&core, &td, &witness));

    for d in 8.. {
        let outcome = solve_diverse(&td, &[&core, &core, &core], d, 1)?;
        match outcome.solutions {
            Some(sets) => println!("diversity >= {d}: {sets:?} reaches {}", diversity(&sets)),
            None => {
                println!("no three independent sets reach diversity {d}");
                break;
            }
        }
    }
    Ok(())
}
