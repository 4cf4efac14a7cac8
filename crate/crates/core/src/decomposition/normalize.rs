use super::{difference, NodeId, RootedTreeDecomposition};
use crate::{Error, Result, Vertex};

struct Builder {
    bags: Vec<Vec<Vertex>>,
    children: Vec<Vec<NodeId>>,
}

impl Builder {
    fn push(&mut self, bag: Vec<Vertex>, children: Vec<NodeId>) -> NodeId {
        self.bags.push(bag);
        self.children.push(children);
        self.bags.len() - 1
    }

    /// Walks from node `from` to a node whose bag is `target`, forgetting and
    /// then introducing one vertex per step in ascending order.
    fn chain(&mut self, from: NodeId, target: &[Vertex]) -> NodeId {
        let mut current = from;
        let mut bag = self.bags[from].clone();
        for v in difference(&bag.clone(), target) {
            bag.retain(|&x| x != v);
            current = self.push(bag.clone(), vec![current]);
        }
        for v in difference(target, &bag.clone()) {
            let at = bag.binary_search(&v).unwrap_err();
            bag.insert(at, v);
            current = self.push(bag.clone(), vec![current]);
        }
        current
    }

    fn leaf(&mut self, target: &[Vertex]) -> NodeId {
        match target.split_first() {
            None => self.push(Vec::new(), Vec::new()),
            Some((&first, _)) => {
                let start = self.push(vec![first], Vec::new());
                self.chain(start, target)
            }
        }
    }
}

/// Rewrites `td` into an equivalent decomposition of the same width where every
/// node has at most two children, at most one new vertex, at most one
/// forgotten vertex, and the root bag is empty.
pub fn normalize(td: &RootedTreeDecomposition) -> Result<RootedTreeDecomposition> {
    let max_vertex = (0..td.len()).flat_map(|t| td.bag(t).iter().copied()).max();
    if let Some(max_vertex) = max_vertex {
        for v in 0..=max_vertex {
            let tops = td.occurrence_tops(v);
            if tops.len() > 1 {
                return Err(Error::InvalidDecomposition(vec![super::Violation::Disconnected {
                    vertex: v,
                    tops,
                }]));
            }
        }
    }

    let mut builder = Builder { bags: Vec::new(), children: Vec::new() };
    let mut top: Vec<NodeId> = vec![usize::MAX; td.len()];
    for t in td.post_order() {
        let target = td.bag(t);
        let tops: Vec<NodeId> = td
            .children(t)
            .iter()
            .map(|&c| builder.chain(top[c], target))
            .collect();
        top[t] = match tops.as_slice() {
            [] => builder.leaf(target),
            [only] => *only,
            [.., last] => {
                let mut acc = *last;
                for &left in tops[..tops.len() - 1].iter().rev() {
                    acc = builder.push(target.to_vec(), vec![left, acc]);
                }
                acc
            }
        };
    }
    let root = builder.chain(top[td.root()], &[]);

    let mut parent = vec![None; builder.bags.len()];
    for (t, cs) in builder.children.iter().enumerate() {
        for &c in cs {
            parent[c] = Some(t);
        }
    }
    debug_assert!(parent[root].is_none());
    RootedTreeDecomposition::new(builder.bags, parent)
}
