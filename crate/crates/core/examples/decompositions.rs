//! Building, checking and normalizing rooted tree decompositions.

use std::collections::BTreeSet;

use diversekit::decomposition::{
    minimum_vertex_cover, normalize, parse_td, pd_from_vertex_cover, validate, write_td, RootedTreeDecomposition,
};
use diversekit::instances::Graph;

fn describe(name: &str, td: &RootedTreeDecomposition) {
    let notes = td.annotations();
    println!("{name}: {} nodes, width {}, max children {}, normalized {}", td.len(), notes.width, notes.max_delta, td.is_normalized());
}

fn main() -> diversekit::Result<()> {
    // a 6-cycle with a chord
    let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])?;

    let cover = minimum_vertex_cover(&g);
    println!("minimum vertex cover {cover:?}");
    let path = pd_from_vertex_cover(&g, &cover)?;
    describe("path from cover", &path);

    // a hand-made decomposition in PACE format, checked against the graph
    let text = "s td 4 3 6\nb 1 1 2 3\nb 2 1 3 4\nb 3 1 4 5\nb 4 1 5 6\n1 2\n2 3\n3 4\n";
    let (td, n) = parse_td(text)?;
    assert_eq!(n, g.n());
    println!("violations: {:?}", validate(&g, &td));
    describe("from file", &td);

    let nice = normalize(&td)?;
    describe("normalized", &nice);
    for t in nice.post_order().into_iter().take(6) {
        println!("  node {t}: bag {:?} new {:?} forg {:?}", nice.bag(t), nice.new_vertices(t), nice.forg(t));
    }

    // a broken decomposition: the chord {0, 3} never shares a bag
    let bad = RootedTreeDecomposition::new(
        vec![vec![], vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]],
        vec![None, Some(0), Some(1), Some(2)],
    )?;
    for violation in validate(&g, &bad) {
        println!("  {violation}");
    }

    let not_a_cover: BTreeSet<usize> = [0, 2].into();
    println!("{}", pd_from_vertex_cover(&g, &not_a_cover).unwrap_err());
    print!("{}", write_td(&nice, g.n()).lines().next().map(|l| format!("{l}\n")).unwrap_or_default());
    Ok(())
}
