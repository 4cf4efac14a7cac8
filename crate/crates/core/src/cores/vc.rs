use std::collections::{BTreeMap, BTreeSet};

use super::{check_bags, odometer, MembershipCore};
use crate::decomposition::{NodeId, RootedTreeDecomposition};
use crate::engine::{DynamicCore, ProcessTuple, Table, VertexMembership};
use crate::instances::Graph;
use crate::{Result, Vertex};

/// `selected` is a mask over positions of the node's sorted bag; `count` is
/// the number of selected vertices forgotten at or below the node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VcState {
    pub node: u32,
    pub selected: u64,
    pub count: u32,
}

pub(crate) struct BagInfo {
    pub adjacency: Vec<u64>,
    pub forg: u64,
    pub full: u64,
    /// Per child: (child position, parent position) for shared vertices.
    pub links: Vec<Vec<(usize, usize)>>,
    pub known: Vec<u64>,
}

impl BagInfo {
    pub fn build(graph: &Graph, td: &RootedTreeDecomposition) -> Vec<BagInfo> {
        (0..td.len())
            .map(|t| {
                let bag = td.bag(t);
                let adjacency = bag
                    .iter()
                    .map(|&u| {
                        bag.iter()
                            .enumerate()
                            .filter(|&(_, &v)| graph.has_edge(u, v))
                            .fold(0u64, |m, (p, _)| m | 1 << p)
                    })
                    .collect();
                let forg = td.forg(t).iter().fold(0u64, |m, v| m | 1 << bag.binary_search(v).unwrap());
                let links: Vec<Vec<(usize, usize)>> = td
                    .children(t)
                    .iter()
                    .map(|&c| {
                        td.bag(c)
                            .iter()
                            .enumerate()
                            .filter_map(|(cp, v)| bag.binary_search(v).ok().map(|pp| (cp, pp)))
                            .collect()
                    })
                    .collect();
                let known = links.iter().map(|l| l.iter().fold(0u64, |m, &(_, pp)| m | 1 << pp)).collect();
                BagInfo { adjacency, forg, full: low_bits(bag.len()), links, known }
            })
            .collect()
    }

    pub fn project(&self, child: usize, mask: u64) -> u64 {
        self.links[child]
            .iter()
            .filter(|&&(cp, _)| mask >> cp & 1 == 1)
            .fold(0, |m, &(_, pp)| m | 1 << pp)
    }

    /// Whether no edge joins two positions in `outside`.
    pub fn independent(&self, outside: u64) -> bool {
        let mut rest = outside;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            if self.adjacency[p] & outside != 0 {
                return false;
            }
            rest &= rest - 1;
        }
        true
    }
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Calls `f` on every submask of `mask`, starting with 0.
pub(crate) fn for_each_submask(mask: u64, mut f: impl FnMut(u64)) {
    let mut sub = 0u64;
    loop {
        f(sub);
        if sub == mask {
            break;
        }
        sub = sub.wrapping_sub(mask) & mask;
    }
}

/// The vertex cover core: states are a selected subset of the bag plus a
/// count of selected forgotten vertices, kept at most `k`.
pub struct VcCore<'a> {
    td: &'a RootedTreeDecomposition,
    k: usize,
    info: Vec<BagInfo>,
}

impl<'a> VcCore<'a> {
    pub fn new(graph: &Graph, td: &'a RootedTreeDecomposition, k: usize) -> Result<Self> {
        check_bags(td)?;
        Ok(VcCore { td, k, info: BagInfo::build(graph, td) })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Every state of node `t`, ignoring reachability.
    pub fn all_states(&self, t: NodeId) -> Vec<VcState> {
        let info = &self.info[t];
        let mut states = Vec::new();
        for_each_submask(info.full, |selected| {
            if info.independent(info.full & !selected) {
                states.extend((0..=self.k as u32).map(|count| VcState { node: t as u32, selected, count }));
            }
        });
        states
    }

    /// Selected vertices of a state.
    pub fn selected_vertices(&self, state: &VcState) -> BTreeSet<Vertex> {
        let bag = self.td.bag(state.node as usize);
        (0..bag.len()).filter(|&p| state.selected >> p & 1 == 1).map(|p| bag[p]).collect()
    }
}

impl DynamicCore for VcCore<'_> {
    type State = VcState;

    fn accept(&self) -> BTreeSet<VcState> {
        let root = self.td.root() as u32;
        (0..=self.k as u32).map(|count| VcState { node: root, selected: 0, count }).collect()
    }

    fn is_accepting(&self, state: &VcState) -> bool {
        state.node as usize == self.td.root() && state.selected == 0 && state.count as usize <= self.k
    }

    fn process(&self, t: NodeId) -> Vec<ProcessTuple<VcState>> {
        let tables: Vec<Table<VcState>> =
            self.td.children(t).iter().map(|&c| Table::from_states(self.all_states(c))).collect();
        let refs: Vec<&Table<VcState>> = tables.iter().collect();
        self.process_reachable(t, &refs)
    }

    fn process_reachable(&self, t: NodeId, children: &[&Table<VcState>]) -> Vec<ProcessTuple<VcState>> {
        let info = &self.info[t];
        let groups: Vec<Vec<(u64, Vec<VcState>)>> = children
            .iter()
            .enumerate()
            .map(|(j, table)| {
                let mut by_value: BTreeMap<u64, Vec<VcState>> = BTreeMap::new();
                for w in table.states() {
                    by_value.entry(info.project(j, w.selected)).or_default().push(*w);
                }
                by_value.into_iter().collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut picked: Vec<usize> = Vec::with_capacity(children.len());
        self.expand(t, &groups, 0, 0, 0, &mut picked, &mut out);
        out
    }
}

impl VcCore<'_> {
    #[allow(clippy::too_many_arguments)]
    fn expand(
        &self,
        t: NodeId,
        groups: &[Vec<(u64, Vec<VcState>)>],
        j: usize,
        known: u64,
        value: u64,
        picked: &mut Vec<usize>,
        out: &mut Vec<ProcessTuple<VcState>>,
    ) {
        let info = &self.info[t];
        if j == groups.len() {
            let members: Vec<&[VcState]> =
                picked.iter().enumerate().map(|(i, &g)| groups[i][g].1.as_slice()).collect();
            let lens: Vec<usize> = members.iter().map(|m| m.len()).collect();
            for_each_submask(info.full & !known, |extra| {
                let selected = value | extra;
                if !info.independent(info.full & !selected) {
                    return;
                }
                let base = (selected & info.forg).count_ones() as usize;
                odometer(&lens, |choice| {
                    let count = base + choice.iter().enumerate().map(|(i, &c)| members[i][c].count as usize).sum::<usize>();
                    if count <= self.k {
                        let parent = VcState { node: t as u32, selected, count: count as u32 };
                        out.push(ProcessTuple::new(parent, choice.iter().enumerate().map(|(i, &c)| members[i][c])));
                    }
                });
            });
            return;
        }
        for (g, (projected, _)) in groups[j].iter().enumerate() {
            if (projected ^ value) & info.known[j] & known != 0 {
                continue;
            }
            picked.push(g);
            self.expand(t, groups, j + 1, known | info.known[j], value | projected, picked, out);
            picked.pop();
        }
    }
}

impl VertexMembership<VcState> for VcCore<'_> {
    fn contains(&self, v: Vertex, state: &VcState) -> bool {
        match self.td.bag(state.node as usize).binary_search(&v) {
            Ok(p) => state.selected >> p & 1 == 1,
            Err(_) => false,
        }
    }
}

impl MembershipCore for VcCore<'_> {
    fn decomposition(&self) -> &RootedTreeDecomposition {
        self.td
    }
}
