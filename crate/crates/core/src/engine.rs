//! Dynamic cores and their bottom-up evaluation.
//!
//! A core supplies, for every node `t` of a rooted tree decomposition, a
//! relation of tuples `(w, w_1, …, w_δ)` linking a state at `t` to states at
//! its children, and a set of accepting root states. [`evaluate`] computes for
//! each node the states that admit a witness of the subtree below it.

use std::collections::BTreeSet;
use std::fmt::Debug;
use std::fmt::Write as _;
use std::hash::Hash;

use indexmap::IndexMap;
use smallvec::SmallVec;

use crate::decomposition::{NodeId, RootedTreeDecomposition};
use crate::{Error, Result, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProcessTuple<S> {
    pub parent: S,
    pub children: SmallVec<[S; 2]>,
}

impl<S> ProcessTuple<S> {
    pub fn new(parent: S, children: impl IntoIterator<Item = S>) -> Self {
        ProcessTuple { parent, children: children.into_iter().collect() }
    }
}

/// The states reachable at one node, each with the child-table indexes of the
/// first tuple that produced it.
#[derive(Clone, Debug)]
pub struct Table<S> {
    entries: IndexMap<S, SmallVec<[u32; 2]>>,
}

impl<S: Hash + Eq> Table<S> {
    pub fn from_states(states: impl IntoIterator<Item = S>) -> Self {
        Table { entries: states.into_iter().map(|s| (s, SmallVec::new())).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, state: &S) -> bool {
        self.entries.contains_key(state)
    }

    pub fn index_of(&self, state: &S) -> Option<usize> {
        self.entries.get_index_of(state)
    }

    pub fn state(&self, index: usize) -> &S {
        self.entries.get_index(index).expect("table index in range").0
    }

    pub fn states(&self) -> impl Iterator<Item = &S> {
        self.entries.keys()
    }

    /// Child-table indexes recorded for `state`.
    pub fn backpointer(&self, state: &S) -> Option<&[u32]> {
        self.entries.get(state).map(|b| b.as_slice())
    }
}

pub trait DynamicCore: Sync {
    type State: Clone + Ord + Hash + Debug + Send + Sync;

    fn accept(&self) -> BTreeSet<Self::State>;

    fn is_accepting(&self, state: &Self::State) -> bool {
        self.accept().contains(state)
    }

    /// Every tuple of the relation at node `t`.
    fn process(&self, t: NodeId) -> Vec<ProcessTuple<Self::State>>;

    /// The tuples at `t` whose child states all appear in `children`.
    fn process_reachable(
        &self,
        t: NodeId,
        children: &[&Table<Self::State>],
    ) -> Vec<ProcessTuple<Self::State>> {
        self.process(t)
            .into_iter()
            .filter(|tuple| {
                tuple.children.len() == children.len()
                    && tuple.children.iter().zip(children).all(|(w, table)| table.contains(w))
            })
            .collect()
    }
}

/// Decodes whether vertex `v` belongs to the solution described by a state.
pub trait VertexMembership<S> {
    fn contains(&self, v: Vertex, state: &S) -> bool;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct NodeStats {
    pub node: NodeId,
    pub delta: usize,
    pub states: usize,
    pub tuples: usize,
}

#[derive(Clone, Debug)]
pub struct Evaluation<S> {
    decision: bool,
    root: NodeId,
    tables: Vec<Table<S>>,
    stats: Vec<NodeStats>,
    tuple_checks: u64,
}

impl<S: Clone + Hash + Eq> Evaluation<S> {
    pub fn decision(&self) -> bool {
        self.decision
    }

    pub fn table(&self, t: NodeId) -> &Table<S> {
        &self.tables[t]
    }

    /// Per-node statistics in node order.
    pub fn stats(&self) -> &[NodeStats] {
        &self.stats
    }

    pub fn tuple_checks(&self) -> u64 {
        self.tuple_checks
    }

    pub fn max_states(&self) -> usize {
        self.stats.iter().map(|s| s.states).max().unwrap_or(0)
    }

    /// CSV with header `node,delta,states,tuples`.
    pub fn trace_csv(&self) -> String {
        let mut out = String::from("node,delta,states,tuples\n");
        for s in &self.stats {
            let _ = writeln!(out, "{},{},{},{}", s.node, s.delta, s.states, s.tuples);
        }
        out
    }
}

fn evaluate_node<C: DynamicCore>(
    core: &C,
    td: &RootedTreeDecomposition,
    t: NodeId,
    children: &[&Table<C::State>],
) -> Result<(Table<C::State>, NodeStats)> {
    let delta = td.delta(t);
    let tuples = core.process_reachable(t, children);
    let mut entries: IndexMap<C::State, SmallVec<[u32; 2]>> = IndexMap::new();
    'tuples: for tuple in &tuples {
        if tuple.children.len() != delta {
            return Err(Error::ArityMismatch { node: t, expected: delta + 1, found: tuple.children.len() + 1 });
        }
        if entries.contains_key(&tuple.parent) {
            continue;
        }
        let mut pointer = SmallVec::with_capacity(delta);
        for (w, table) in tuple.children.iter().zip(children) {
            match table.index_of(w) {
                Some(i) => pointer.push(i as u32),
                None => continue 'tuples,
            }
        }
        entries.insert(tuple.parent.clone(), pointer);
    }
    let stats = NodeStats { node: t, delta, states: entries.len(), tuples: tuples.len() };
    Ok((Table { entries }, stats))
}

/// Bottom-up evaluation on the current thread.
pub fn evaluate<C: DynamicCore>(core: &C, td: &RootedTreeDecomposition) -> Result<Evaluation<C::State>> {
    let mut slots: Vec<Option<(Table<C::State>, NodeStats)>> = vec![None; td.len()];
    for t in td.post_order() {
        let children: Vec<&Table<C::State>> =
            td.children(t).iter().map(|&c| &slots[c].as_ref().expect("child done").0).collect();
        let done = evaluate_node(core, td, t, &children)?;
        slots[t] = Some(done);
    }
    Ok(finish(core, td, slots))
}

/// Bottom-up evaluation where nodes of equal height run concurrently on a
/// pool of `threads` workers. Results are identical to [`evaluate`].
pub fn evaluate_parallel<C: DynamicCore>(
    core: &C,
    td: &RootedTreeDecomposition,
    threads: usize,
) -> Result<Evaluation<C::State>> {
    use rayon::prelude::*;
    if threads <= 1 {
        return evaluate(core, td);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let heights = td.heights();
    let top = heights.iter().copied().max().unwrap_or(0);
    let mut levels = vec![Vec::new(); top + 1];
    for t in 0..td.len() {
        levels[heights[t]].push(t);
    }
    let mut slots: Vec<Option<(Table<C::State>, NodeStats)>> = vec![None; td.len()];
    for level in levels {
        let done: Vec<Result<(Table<C::State>, NodeStats)>> = pool.install(|| {
            level
                .par_iter()
                .map(|&t| {
                    let children: Vec<&Table<C::State>> = td
                        .children(t)
                        .iter()
                        .map(|&c| &slots[c].as_ref().expect("child done").0)
                        .collect();
                    evaluate_node(core, td, t, &children)
                })
                .collect()
        });
        for (&t, result) in level.iter().zip(done) {
            slots[t] = Some(result?);
        }
    }
    Ok(finish(core, td, slots))
}

fn finish<C: DynamicCore>(
    core: &C,
    td: &RootedTreeDecomposition,
    slots: Vec<Option<(Table<C::State>, NodeStats)>>,
) -> Evaluation<C::State> {
    let (tables, stats): (Vec<_>, Vec<_>) =
        slots.into_iter().map(|slot| slot.expect("every node evaluated")).unzip();
    let tuple_checks = stats.iter().map(|s: &NodeStats| s.tuples as u64).sum();
    let decision = tables[td.root()].states().any(|w| core.is_accepting(w));
    Evaluation { decision, root: td.root(), tables, stats, tuple_checks }
}

/// A state per node, indexed by node id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<S> {
    pub assignment: Vec<S>,
}

/// Follows backpointers down from the smallest accepting root state.
pub fn extract_witness<C: DynamicCore>(
    core: &C,
    td: &RootedTreeDecomposition,
    evaluation: &Evaluation<C::State>,
) -> Option<Witness<C::State>> {
    let start = evaluation.tables[evaluation.root]
        .states()
        .filter(|w| core.is_accepting(w))
        .min()?
        .clone();
    let mut assignment: Vec<Option<C::State>> = vec![None; td.len()];
    assignment[td.root()] = Some(start);
    let mut stack = vec![td.root()];
    while let Some(t) = stack.pop() {
        let state = assignment[t].clone().expect("assigned before visit");
        let pointer = evaluation.tables[t].backpointer(&state).expect("state in table");
        for (&c, &i) in td.children(t).iter().zip(pointer) {
            assignment[c] = Some(evaluation.tables[c].state(i as usize).clone());
            stack.push(c);
        }
    }
    Some(Witness { assignment: assignment.into_iter().map(|w| w.expect("tree is connected")).collect() })
}

/// Checks a witness against the core directly, without any evaluator tables.
pub fn is_witness<C: DynamicCore>(core: &C, td: &RootedTreeDecomposition, witness: &Witness<C::State>) -> bool {
    if witness.assignment.len() != td.len() || !core.is_accepting(&witness.assignment[td.root()]) {
        return false;
    }
    (0..td.len()).all(|t| {
        let singles: Vec<Table<C::State>> = td
            .children(t)
            .iter()
            .map(|&c| Table::from_states([witness.assignment[c].clone()]))
            .collect();
        let refs: Vec<&Table<C::State>> = singles.iter().collect();
        let expected: Vec<&C::State> = td.children(t).iter().map(|&c| &witness.assignment[c]).collect();
        core.process_reachable(t, &refs).iter().any(|tuple| {
            tuple.parent == witness.assignment[t] && tuple.children.iter().eq(expected.iter().copied())
        })
    })
}

/// The vertices some node's state marks as members.
pub fn solution_from_witness<S, M: VertexMembership<S>>(
    membership: &M,
    td: &RootedTreeDecomposition,
    witness: &Witness<S>,
) -> Result<BTreeSet<Vertex>> {
    let mut solution = BTreeSet::new();
    for t in 0..td.len() {
        let state = &witness.assignment[t];
        if let Some(p) = td.parent(t) {
            for &v in td.bag(t) {
                if td.bag(p).binary_search(&v).is_ok()
                    && membership.contains(v, state) != membership.contains(v, &witness.assignment[p])
                {
                    return Err(Error::InconsistentMembership { vertex: v, child: t, parent: p });
                }
            }
        }
        solution.extend(td.bag(t).iter().copied().filter(|&v| membership.contains(v, state)));
    }
    Ok(solution)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A core given by explicit relations.
    struct TableCore {
        accept: BTreeSet<u8>,
        process: Vec<Vec<ProcessTuple<u8>>>,
    }

    impl DynamicCore for TableCore {
        type State = u8;
        fn accept(&self) -> BTreeSet<u8> {
            self.accept.clone()
        }
        fn process(&self, t: NodeId) -> Vec<ProcessTuple<u8>> {
            self.process[t].clone()
        }
    }

    struct Nothing;
    impl VertexMembership<u8> for Nothing {
        fn contains(&self, _: Vertex, _: &u8) -> bool {
            false
        }
    }

    fn lone_root() -> RootedTreeDecomposition {
        RootedTreeDecomposition::new(vec![vec![]], vec![None]).unwrap()
    }

    #[test]
    fn single_node_yes() {
        let core = TableCore { accept: BTreeSet::from([0]), process: vec![vec![ProcessTuple::new(0, [])]] };
        let td = lone_root();
        let eval = evaluate(&core, &td).unwrap();
        assert!(eval.decision());
        let witness = extract_witness(&core, &td, &eval).unwrap();
        assert_eq!(witness.assignment, vec![0]);
        assert!(is_witness(&core, &td, &witness));
        assert!(solution_from_witness(&Nothing, &td, &witness).unwrap().is_empty());
    }

    #[test]
    fn empty_accept_is_no() {
        let core = TableCore { accept: BTreeSet::new(), process: vec![vec![ProcessTuple::new(0, [])]] };
        let td = lone_root();
        let eval = evaluate(&core, &td).unwrap();
        assert!(!eval.decision());
        assert!(extract_witness(&core, &td, &eval).is_none());
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let core = TableCore { accept: BTreeSet::from([0]), process: vec![vec![ProcessTuple::new(0, [1])]] };
        let td = lone_root();
        struct Passthrough(TableCore);
        impl DynamicCore for Passthrough {
            type State = u8;
            fn accept(&self) -> BTreeSet<u8> {
                self.0.accept()
            }
            fn process(&self, t: NodeId) -> Vec<ProcessTuple<u8>> {
                self.0.process(t)
            }
            fn process_reachable(&self, t: NodeId, _: &[&Table<u8>]) -> Vec<ProcessTuple<u8>> {
                self.process(t)
            }
        }
        assert!(matches!(evaluate(&Passthrough(core), &td), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn trace_has_one_row_per_node() {
        let td = RootedTreeDecomposition::new(vec![vec![], vec![]], vec![None, Some(0)]).unwrap();
        let core = TableCore {
            accept: BTreeSet::from([1]),
            process: vec![vec![ProcessTuple::new(1, [2]), ProcessTuple::new(1, [3])], vec![ProcessTuple::new(2, [])]],
        };
        let eval = evaluate(&core, &td).unwrap();
        assert!(eval.decision());
        assert_eq!(eval.trace_csv(), "node,delta,states,tuples\n0,1,1,1\n1,0,1,1\n");
    }
}
