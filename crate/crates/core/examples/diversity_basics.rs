//! Hamming diversity of a solution tuple, pairwise and element by element.

use std::collections::BTreeSet;

use diversekit::diversity::{diversity, hamming_distance, influence, max_possible_diversity, SolutionTuple};

fn main() -> diversekit::Result<()> {
    let sets: Vec<BTreeSet<usize>> = vec![[0, 1].into(), [1, 2].into(), [2, 3].into()];
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            println!("d(S{i}, S{j}) = {}", hamming_distance(&sets[i], &sets[j]));
        }
    }
    println!("Div = {}", diversity(&sets));

    let tuple = SolutionTuple::new(4, sets)?;
    let counts = tuple.membership_counts();
    for (v, &p) in counts.iter().enumerate() {
        println!("element {v}: in {p} of {} sets, influence {}", tuple.r(), influence(p, tuple.r())?);
    }
    println!("sum of influences = {}", tuple.diversity_by_influence());
    println!("best possible on 4 elements with r = 3: {}", max_possible_diversity(4, 3));
    Ok(())
}
