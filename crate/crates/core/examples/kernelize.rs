//! Loss-less kernels for the four problems, and the diverse kernel transform.

use diversekit::instances::{Graph, Hypergraph, Point, PointSet, ProblemInstance, Tournament};
use diversekit::kernels::{diverse_kernel_transform, lossless_kernel, KernelOutcome};
use diversekit::oracle;

fn show(name: &str, instance: &ProblemInstance, k: usize, r: usize, d: u64) -> diversekit::Result<()> {
    println!("{name} with k = {k}: size {:?}", instance.size());
    match lossless_kernel(instance, k)? {
        KernelOutcome::No(reason) => println!("  no instance: {reason}"),
        KernelOutcome::Reduced(kernel) => {
            println!("  forced {:?}, allowed {:?}, budget {} -> {}", kernel.forced, kernel.allowed, kernel.k, kernel.k_reduced);
            println!("  reduced size {:?}, declared bound {}", kernel.reduced.size(), kernel.size_bound());
            let out = diverse_kernel_transform(instance, k, r, d, &kernel)?;
            println!("  recovered {:?}; diverse kernel size {:?}", out.a_star, out.instance.size());
            let before = oracle::decide_diverse(instance, k, r, d)?;
            let after = oracle::decide_diverse(&out.instance, out.k_reduced, r, d)?;
            println!("  r = {r}, d = {d}: input {before}, kernel {after}");
        }
    }
    Ok(())
}

fn main() -> diversekit::Result<()> {
    let star = Graph::new(8, (1..8).map(|v| (0, v)).chain([(1, 2)]))?;
    show("vertex cover, star plus an edge", &ProblemInstance::vertex_cover(star), 2, 3, 4)?;

    let edges = vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![4, 5, 6], vec![6]];
    show("hitting set", &ProblemInstance::hitting_set(Hypergraph::new(7, 3, edges)?), 3, 2, 2)?;

    let points = PointSet::new([(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (0, 2)].map(|(x, y)| Point::new(x, y)).to_vec())?;
    show("point line cover", &ProblemInstance::point_line_cover(points)?, 3, 2, 2)?;

    let mut t = Tournament::transitive(5);
    t.reverse(0, 4);
    show("feedback arc set", &ProblemInstance::feedback_arc_set(t), 2, 2, 2)?;

    show("vertex cover, matching of 3", &ProblemInstance::vertex_cover(Graph::new(6, [(0, 1), (2, 3), (4, 5)])?), 2, 1, 0)?;
    Ok(())
}
