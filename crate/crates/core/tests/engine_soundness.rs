//! The vertex cover core against brute force: every small cover has a
//! witness, and every extracted witness decodes to a small cover.

use std::collections::BTreeSet;

use diversekit::cores::{VcCore, VcState};
use diversekit::decomposition::{normalize, pd_from_vertex_cover, NodeId, RootedTreeDecomposition};
use diversekit::engine::{evaluate, evaluate_parallel, extract_witness, is_witness, solution_from_witness, Witness};
use diversekit::instances::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_subsets(n: usize) -> impl Iterator<Item = BTreeSet<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

fn subtree(td: &RootedTreeDecomposition, t: NodeId) -> Vec<NodeId> {
    let mut out = vec![t];
    let mut i = 0;
    while i < out.len() {
        out.extend_from_slice(td.children(out[i]));
        i += 1;
    }
    out
}

/// The state assignment a cover induces at every node.
fn witness_for(td: &RootedTreeDecomposition, cover: &BTreeSet<usize>) -> Witness<VcState> {
    let assignment = (0..td.len())
        .map(|t| {
            let bag = td.bag(t);
            let selected = (0..bag.len()).filter(|&p| cover.contains(&bag[p])).map(|p| 1u64 << p).sum();
            let count = subtree(td, t).iter().flat_map(|&s| td.forg(s)).filter(|v| cover.contains(v)).count();
            VcState { node: t as u32, selected, count: count as u32 }
        })
        .collect();
    Witness { assignment }
}

fn random_instance(rng: &mut ChaCha8Rng) -> (Graph, RootedTreeDecomposition) {
    let n = rng.gen_range(1..=6);
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.4)).collect();
    let g = Graph::new(n, edges).unwrap();
    // any cover gives a decomposition, not only a minimum one
    let mut z: BTreeSet<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
    for (u, v) in g.edges() {
        if !z.contains(&u) && !z.contains(&v) {
            z.insert(v);
        }
    }
    let td = normalize(&pd_from_vertex_cover(&g, &z).unwrap()).unwrap();
    (g, td)
}

#[test]
fn covers_and_witnesses_correspond() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let (g, td) = random_instance(&mut rng);
        for k in 0..=g.n() {
            let core = VcCore::new(&g, &td, k).unwrap();
            let covers: Vec<BTreeSet<usize>> = all_subsets(g.n()).filter(|s| s.len() <= k && g.is_vertex_cover(s)).collect();
            for cover in &covers {
                assert!(is_witness(&core, &td, &witness_for(&td, cover)), "cover {cover:?} has no witness");
            }
            let larger = all_subsets(g.n()).find(|s| s.len() > k && g.is_vertex_cover(s));
            if let Some(big) = larger {
                assert!(!is_witness(&core, &td, &witness_for(&td, &big)));
            }
            let evaluation = evaluate(&core, &td).unwrap();
            assert_eq!(evaluation.decision(), !covers.is_empty());
            if let Some(w) = extract_witness(&core, &td, &evaluation) {
                assert!(is_witness(&core, &td, &w));
                let decoded = solution_from_witness(&core, &td, &w).unwrap();
                assert!(covers.contains(&decoded), "{decoded:?}");
            }
        }
    }
}

#[test]
fn parallel_evaluation_matches_sequential() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let (g, td) = random_instance(&mut rng);
        let core = VcCore::new(&g, &td, 2).unwrap();
        let a = evaluate(&core, &td).unwrap();
        let b = evaluate_parallel(&core, &td, 3).unwrap();
        assert_eq!(a.decision(), b.decision());
        assert_eq!(a.stats(), b.stats());
        for t in 0..td.len() {
            let sa: BTreeSet<_> = a.table(t).states().collect();
            let sb: BTreeSet<_> = b.table(t).states().collect();
            assert_eq!(sa, sb);
        }
    }
}
