use std::collections::BTreeSet;

use indexmap::IndexMap;
use smallvec::{smallvec, SmallVec};

use super::{check_bags, odometer};
use crate::decomposition::{NodeId, RootedTreeDecomposition};
use crate::instances::Graph;
use crate::{Error, Result, Vertex};

/// One tuple `(S_1, …, S_r, s_1, …, s_r, ℓ)` of a node table, with each
/// `S_j` a mask over the node's sorted bag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Row {
    masks: SmallVec<[u64; 4]>,
    counts: SmallVec<[u32; 4]>,
    ell: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DirectNodeStats {
    pub node: NodeId,
    pub delta: usize,
    pub bag: usize,
    /// Distinct tuples kept in the node table.
    pub tuples: usize,
    /// Tuples generated before deduplication.
    pub generated: usize,
    /// `(2^|X_t| · (k+1))^r · (d+1)`, saturating.
    pub bound: u128,
}

#[derive(Clone, Debug)]
pub struct DirectOutcome {
    pub decision: bool,
    pub solutions: Option<Vec<BTreeSet<Vertex>>>,
    pub nodes: Vec<DirectNodeStats>,
}

impl DirectOutcome {
    pub fn max_tuples(&self) -> usize {
        self.nodes.iter().map(|n| n.tuples).max().unwrap_or(0)
    }

    /// CSV with header `node,delta,states,tuples`.
    pub fn trace_csv(&self) -> String {
        let mut out = String::from("node,delta,states,tuples\n");
        for n in &self.nodes {
            out.push_str(&format!("{},{},{},{}\n", n.node, n.delta, n.tuples, n.generated));
        }
        out
    }
}

pub fn table_bound(bag: usize, k: usize, r: usize, d: u64) -> u128 {
    1u128
        .checked_shl(bag as u32)
        .and_then(|b| b.checked_mul(k as u128 + 1))
        .and_then(|b| b.checked_pow(r as u32))
        .and_then(|b| b.checked_mul(d as u128 + 1))
        .unwrap_or(u128::MAX)
}

fn spread(bits: u64, positions: &[usize]) -> u64 {
    positions
        .iter()
        .enumerate()
        .filter(|&(i, _)| bits >> i & 1 == 1)
        .fold(0, |m, (_, &p)| m | 1 << p)
}

/// Table-based diverse vertex cover on a tree decomposition, written
/// independently of the generic core machinery.
pub fn solve_diverse_vc_direct(
    graph: &Graph,
    td: &RootedTreeDecomposition,
    k: usize,
    r: usize,
    d: u64,
) -> Result<DirectOutcome> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    check_bags(td)?;
    let mut tables: Vec<IndexMap<Row, SmallVec<[u32; 2]>>> = vec![IndexMap::new(); td.len()];
    let mut nodes = Vec::with_capacity(td.len());
    for t in td.post_order() {
        let bag = td.bag(t);
        let position = |v: &Vertex| bag.binary_search(v).ok();
        let mut inner_edges = Vec::new();
        for a in 0..bag.len() {
            for b in a + 1..bag.len() {
                if graph.has_edge(bag[a], bag[b]) {
                    inner_edges.push((a, b));
                }
            }
        }
        let forgotten: Vec<usize> = td.forg(t).iter().filter_map(position).collect();
        let forg_mask = forgotten.iter().fold(0u64, |m, &p| m | 1 << p);
        let children = td.children(t);
        let lifts: Vec<Vec<Option<usize>>> =
            children.iter().map(|&c| td.bag(c).iter().map(position).collect()).collect();
        let child_known: Vec<u64> =
            lifts.iter().map(|l| l.iter().flatten().fold(0u64, |m, &p| m | 1 << p)).collect();
        let covered = child_known.iter().fold(0u64, |m, &k| m | k);
        let free: Vec<usize> = (0..bag.len()).filter(|&p| covered >> p & 1 == 0).collect();
        if r * free.len() >= 64 {
            return Err(Error::Guard(format!(
                "node {t} introduces {} vertices at once; normalize the decomposition first",
                free.len()
            )));
        }

        let mut table: IndexMap<Row, SmallVec<[u32; 2]>> = IndexMap::new();
        let mut generated = 0;
        let lens: Vec<usize> = children.iter().map(|&c| tables[c].len()).collect();
        odometer(&lens, |choice| {
            let mut fixed: SmallVec<[u64; 4]> = smallvec![0; r];
            let mut known = 0u64;
            let mut base_counts: SmallVec<[u32; 4]> = smallvec![0; r];
            let mut base_ell = 0u64;
            for (j, &index) in choice.iter().enumerate() {
                let (row, _) = tables[children[j]].get_index(index).expect("index in range");
                for i in 0..r {
                    let lifted = lifts[j]
                        .iter()
                        .enumerate()
                        .filter(|&(cp, pp)| pp.is_some() && row.masks[i] >> cp & 1 == 1)
                        .fold(0u64, |m, (_, pp)| m | 1 << pp.unwrap());
                    if (lifted ^ fixed[i]) & known & child_known[j] != 0 {
                        return;
                    }
                    fixed[i] |= lifted;
                    base_counts[i] += row.counts[i];
                }
                known |= child_known[j];
                base_ell += row.ell;
            }
            let width = free.len();
            for combo in 0..1u64 << (r * width) {
                let masks: SmallVec<[u64; 4]> = (0..r)
                    .map(|i| fixed[i] | spread(combo >> (i * width) & ((1 << width) - 1), &free))
                    .collect();
                let covers = masks
                    .iter()
                    .all(|&m| inner_edges.iter().all(|&(a, b)| m >> a & 1 == 1 || m >> b & 1 == 1));
                if !covers {
                    continue;
                }
                let counts: SmallVec<[u32; 4]> =
                    (0..r).map(|i| base_counts[i] + (masks[i] & forg_mask).count_ones()).collect();
                if counts.iter().any(|&s| s as usize > k) {
                    continue;
                }
                let gain: u64 = forgotten
                    .iter()
                    .map(|&p| {
                        let inside = masks.iter().filter(|&&m| m >> p & 1 == 1).count() as u64;
                        inside * (r as u64 - inside)
                    })
                    .sum();
                generated += 1;
                let row = Row { masks, counts, ell: (base_ell + gain).min(d) };
                table.entry(row).or_insert_with(|| choice.iter().map(|&i| i as u32).collect());
            }
        });
        nodes.push(DirectNodeStats {
            node: t,
            delta: children.len(),
            bag: bag.len(),
            tuples: table.len(),
            generated,
            bound: table_bound(bag.len(), k, r, d),
        });
        tables[t] = table;
    }
    nodes.sort_by_key(|n| n.node);

    let root = td.root();
    let start = tables[root].keys().enumerate().filter(|(_, row)| row.ell == d).min_by(|a, b| a.1.cmp(b.1));
    let solutions = start.map(|(index, _)| {
        let mut sets = vec![BTreeSet::new(); r];
        let mut stack = vec![(root, index)];
        while let Some((t, index)) = stack.pop() {
            let (row, pointer) = tables[t].get_index(index).expect("index in range");
            for (i, set) in sets.iter_mut().enumerate() {
                set.extend(td.bag(t).iter().enumerate().filter(|&(p, _)| row.masks[i] >> p & 1 == 1).map(|(_, &v)| v));
            }
            stack.extend(td.children(t).iter().zip(pointer).map(|(&c, &i)| (c, i as usize)));
        }
        sets
    });
    Ok(DirectOutcome { decision: solutions.is_some(), solutions, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{normalize, pd_from_vertex_cover};

    #[test]
    fn triangle_pairs() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let td = normalize(&pd_from_vertex_cover(&g, &BTreeSet::from([0, 1])).unwrap()).unwrap();
        let yes = solve_diverse_vc_direct(&g, &td, 2, 2, 2).unwrap();
        assert!(yes.decision);
        let sets = yes.solutions.unwrap();
        assert!(sets.iter().all(|s| s.len() <= 2 && g.is_vertex_cover(s)));
        assert!(!solve_diverse_vc_direct(&g, &td, 2, 2, 5).unwrap().decision);
    }

    #[test]
    fn tables_respect_the_bound() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let td = normalize(&pd_from_vertex_cover(&g, &BTreeSet::from([0, 2])).unwrap()).unwrap();
        let out = solve_diverse_vc_direct(&g, &td, 2, 3, 6).unwrap();
        assert!(out.nodes.iter().all(|n| n.tuples as u128 <= n.bound));
    }

    #[test]
    fn bound_saturates() {
        assert_eq!(table_bound(2, 1, 1, 0), 8);
        assert_eq!(table_bound(62, 100, 8, 5), u128::MAX);
    }
}
