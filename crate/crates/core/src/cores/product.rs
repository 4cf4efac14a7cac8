use std::collections::{BTreeSet, HashMap};

use smallvec::SmallVec;

use super::{odometer, MembershipCore};
use crate::decomposition::{NodeId, RootedTreeDecomposition};
use crate::diversity::influence;
use crate::engine::{DynamicCore, ProcessTuple, Table, Witness};
use crate::{Error, Result, Vertex};

/// One state per component plus the diversity `ell` accumulated over
/// forgotten vertices, capped at `d`.
/// Distinct child part vectors, each with the `ell` values seen for it.
type ChildKeys<'s, S> = Vec<(&'s SmallVec<[S; 4]>, Vec<u64>)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiverseState<S> {
    pub parts: SmallVec<[S; 4]>,
    pub ell: u64,
}

/// Product of `r` cores with a capped diversity accumulator. Accepting
/// states are accepting in every component and have `ell = d`.
pub struct DiverseProductCore<'a, C: MembershipCore> {
    td: &'a RootedTreeDecomposition,
    components: Vec<&'a C>,
    /// Components grouped by identity; each group's core is queried once.
    groups: Vec<Vec<usize>>,
    d: u64,
}

type ParentIndex<S> = HashMap<SmallVec<[S; 2]>, Vec<S>>;

impl<'a, C: MembershipCore> DiverseProductCore<'a, C> {
    pub fn new(td: &'a RootedTreeDecomposition, components: Vec<&'a C>, d: u64) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument("a product needs at least one component".into()));
        }
        for (i, c) in components.iter().enumerate() {
            let own = c.decomposition();
            if !std::ptr::eq(own, td) && own != td {
                return Err(Error::InvalidArgument(format!(
                    "component {i} was built over a different decomposition"
                )));
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for i in 0..components.len() {
            match groups.iter_mut().find(|g| std::ptr::eq(components[g[0]], components[i])) {
                Some(g) => g.push(i),
                None => groups.push(vec![i]),
            }
        }
        Ok(DiverseProductCore { td, components, groups, d })
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// The witness of component `i` inside a product witness.
    pub fn project(&self, witness: &Witness<DiverseState<C::State>>, i: usize) -> Witness<C::State> {
        Witness { assignment: witness.assignment.iter().map(|w| w.parts[i].clone()).collect() }
    }

    fn forgotten_influence(&self, forg: &[Vertex], parts: &[C::State]) -> u64 {
        let r = self.r();
        forg.iter()
            .map(|&v| {
                let p = (0..r).filter(|&i| self.components[i].contains(v, &parts[i])).count();
                influence(p, r).expect("count never exceeds r")
            })
            .sum()
    }

    /// Emits every product tuple built from per-component tuples indexed by
    /// their child states, for all combinations of the given child states.
    fn combine(
        &self,
        t: NodeId,
        child_keys: &[ChildKeys<'_, C::State>],
        index: &[ParentIndex<C::State>],
        group_of: &[usize],
    ) -> Vec<ProcessTuple<DiverseState<C::State>>> {
        let r = self.r();
        let forg = self.td.forg(t);
        let mut out = Vec::new();
        let key_lens: Vec<usize> = child_keys.iter().map(Vec::len).collect();
        odometer(&key_lens, |keys| {
            let mut parent_lists: Vec<&[C::State]> = Vec::with_capacity(r);
            for i in 0..r {
                let key: SmallVec<[C::State; 2]> =
                    keys.iter().enumerate().map(|(j, &kj)| child_keys[j][kj].0[i].clone()).collect();
                match index[group_of[i]].get(&key) {
                    Some(parents) => parent_lists.push(parents),
                    None => return,
                }
            }
            let ell_lens: Vec<usize> = keys.iter().enumerate().map(|(j, &kj)| child_keys[j][kj].1.len()).collect();
            let parent_lens: Vec<usize> = parent_lists.iter().map(|l| l.len()).collect();
            odometer(&parent_lens, |choice| {
                let parts: SmallVec<[C::State; 4]> =
                    choice.iter().enumerate().map(|(i, &c)| parent_lists[i][c].clone()).collect();
                let gained = self.forgotten_influence(&forg, &parts);
                odometer(&ell_lens, |ells| {
                    let mut total = gained;
                    let mut children = SmallVec::with_capacity(keys.len());
                    for (j, (&kj, &e)) in keys.iter().zip(ells).enumerate() {
                        let (child_parts, child_ells) = &child_keys[j][kj];
                        total += child_ells[e];
                        children.push(DiverseState { parts: (*child_parts).clone(), ell: child_ells[e] });
                    }
                    let parent = DiverseState { parts: parts.clone(), ell: total.min(self.d) };
                    out.push(ProcessTuple { parent, children });
                });
            });
        });
        out
    }

    fn group_of(&self) -> Vec<usize> {
        let mut group_of = vec![0; self.r()];
        for (g, members) in self.groups.iter().enumerate() {
            for &i in members {
                group_of[i] = g;
            }
        }
        group_of
    }

    fn index_tuples(tuples: Vec<ProcessTuple<C::State>>) -> ParentIndex<C::State> {
        let mut index: ParentIndex<C::State> = HashMap::new();
        for tuple in tuples {
            index.entry(tuple.children).or_default().push(tuple.parent);
        }
        index
    }
}

impl<C: MembershipCore> DynamicCore for DiverseProductCore<'_, C> {
    type State = DiverseState<C::State>;

    fn accept(&self) -> BTreeSet<Self::State> {
        let accepts: Vec<Vec<C::State>> =
            self.components.iter().map(|c| c.accept().into_iter().collect()).collect();
        let lens: Vec<usize> = accepts.iter().map(Vec::len).collect();
        let mut out = BTreeSet::new();
        odometer(&lens, |choice| {
            let parts = choice.iter().enumerate().map(|(i, &c)| accepts[i][c].clone()).collect();
            out.insert(DiverseState { parts, ell: self.d });
        });
        out
    }

    fn is_accepting(&self, state: &Self::State) -> bool {
        state.ell == self.d && state.parts.iter().zip(&self.components).all(|(w, c)| c.is_accepting(w))
    }

    fn process(&self, t: NodeId) -> Vec<ProcessTuple<Self::State>> {
        let index: Vec<ParentIndex<C::State>> =
            self.groups.iter().map(|g| Self::index_tuples(self.components[g[0]].process(t))).collect();
        let group_of = self.group_of();
        // every combination of component child states, with every ell in 0..=d
        let delta = self.td.delta(t);
        let mut per_child: Vec<BTreeSet<SmallVec<[C::State; 4]>>> = vec![BTreeSet::new(); delta];
        let component_children: Vec<Vec<BTreeSet<C::State>>> = (0..self.r())
            .map(|i| {
                let mut sets = vec![BTreeSet::new(); delta];
                for key in index[group_of[i]].keys() {
                    for (j, w) in key.iter().enumerate() {
                        sets[j].insert(w.clone());
                    }
                }
                sets
            })
            .collect();
        for (j, slot) in per_child.iter_mut().enumerate() {
            let options: Vec<Vec<C::State>> =
                (0..self.r()).map(|i| component_children[i][j].iter().cloned().collect()).collect();
            let lens: Vec<usize> = options.iter().map(Vec::len).collect();
            odometer(&lens, |choice| {
                slot.insert(choice.iter().enumerate().map(|(i, &c)| options[i][c].clone()).collect());
            });
        }
        let all_ells: Vec<u64> = (0..=self.d).collect();
        let child_keys: Vec<ChildKeys<'_, C::State>> =
            per_child.iter().map(|set| set.iter().map(|p| (p, all_ells.clone())).collect()).collect();
        self.combine(t, &child_keys, &index, &group_of)
    }

    fn process_reachable(&self, t: NodeId, children: &[&Table<Self::State>]) -> Vec<ProcessTuple<Self::State>> {
        let group_of = self.group_of();
        let index: Vec<ParentIndex<C::State>> = self
            .groups
            .iter()
            .map(|members| {
                let projected: Vec<Table<C::State>> = children
                    .iter()
                    .map(|table| {
                        Table::from_states(
                            table.states().flat_map(|w| members.iter().map(move |&i| w.parts[i].clone())),
                        )
                    })
                    .collect();
                let refs: Vec<&Table<C::State>> = projected.iter().collect();
                Self::index_tuples(self.components[members[0]].process_reachable(t, &refs))
            })
            .collect();
        let child_keys: Vec<ChildKeys<'_, C::State>> = children
            .iter()
            .map(|table| {
                let mut by_parts: indexmap::IndexMap<&SmallVec<[C::State; 4]>, Vec<u64>> = indexmap::IndexMap::new();
                for w in table.states() {
                    by_parts.entry(&w.parts).or_default().push(w.ell);
                }
                by_parts.into_iter().collect()
            })
            .collect();
        self.combine(t, &child_keys, &index, &group_of)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cores::VcCore;
    use crate::decomposition::{normalize, pd_from_vertex_cover};
    use crate::engine::{evaluate, extract_witness, is_witness, solution_from_witness};
    use crate::instances::Graph;

    fn edge_setup() -> (Graph, RootedTreeDecomposition) {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let td = normalize(&pd_from_vertex_cover(&g, &BTreeSet::from([0])).unwrap()).unwrap();
        (g, td)
    }

    #[test]
    fn single_edge_pair_reaches_two() {
        let (g, td) = edge_setup();
        let core = VcCore::new(&g, &td, 1).unwrap();
        let product = DiverseProductCore::new(&td, vec![&core, &core], 2).unwrap();
        assert_eq!(product.groups.len(), 1);
        let eval = evaluate(&product, &td).unwrap();
        assert!(eval.decision());
        let witness = extract_witness(&product, &td, &eval).unwrap();
        assert!(is_witness(&product, &td, &witness));
        let a = solution_from_witness(&core, &td, &product.project(&witness, 0)).unwrap();
        let b = solution_from_witness(&core, &td, &product.project(&witness, 1)).unwrap();
        assert_eq!(a.symmetric_difference(&b).count(), 2);
    }

    #[test]
    fn single_edge_pair_cannot_reach_three() {
        let (g, td) = edge_setup();
        let core = VcCore::new(&g, &td, 1).unwrap();
        let product = DiverseProductCore::new(&td, vec![&core, &core], 3).unwrap();
        assert!(!evaluate(&product, &td).unwrap().decision());
    }

    #[test]
    fn one_component_with_zero_target_is_the_base_problem() {
        let (g, td) = edge_setup();
        for k in 0..2 {
            let core = VcCore::new(&g, &td, k).unwrap();
            let product = DiverseProductCore::new(&td, vec![&core], 0).unwrap();
            assert_eq!(evaluate(&product, &td).unwrap().decision(), k == 1);
        }
    }

    #[test]
    fn reachable_tuples_agree_with_full_relation() {
        let (g, td) = edge_setup();
        let core = VcCore::new(&g, &td, 1).unwrap();
        let other = VcCore::new(&g, &td, 1).unwrap();
        let product = DiverseProductCore::new(&td, vec![&core, &other], 2).unwrap();
        assert_eq!(product.groups.len(), 2);
        let eval = evaluate(&product, &td).unwrap();
        for t in td.post_order() {
            let full: BTreeSet<_> = product.process(t).into_iter().collect();
            let tables: Vec<&Table<_>> = td.children(t).iter().map(|&c| eval.table(c)).collect();
            for tuple in product.process_reachable(t, &tables) {
                assert!(full.contains(&tuple));
            }
        }
    }

    #[test]
    fn mismatched_decompositions_are_rejected() {
        let (g, td) = edge_setup();
        let other_td = pd_from_vertex_cover(&g, &BTreeSet::from([1])).unwrap();
        let core = VcCore::new(&g, &other_td, 1).unwrap();
        assert!(DiverseProductCore::new(&td, vec![&core], 0).is_err());
    }
}
