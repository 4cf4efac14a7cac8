//! Hamming distance, total diversity and per-element influence.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::{ElementId, Error, Result};

pub fn hamming_distance(a: &BTreeSet<ElementId>, b: &BTreeSet<ElementId>) -> u64 {
    a.symmetric_difference(b).count() as u64
}

/// Sum of pairwise Hamming distances.
pub fn diversity(sets: &[BTreeSet<ElementId>]) -> u64 {
    let mut total = 0;
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            total += hamming_distance(a, b);
        }
    }
    total
}

/// Contribution `p·(r−p)` of an element lying in `p` of `r` sets.
pub fn influence(p: usize, r: usize) -> Result<u64> {
    if p > r {
        return Err(Error::InvalidArgument(format!("membership count {p} exceeds r = {r}")));
    }
    Ok((p * (r - p)) as u64)
}

/// Largest diversity `r` sets over `universe` elements can reach.
pub fn max_possible_diversity(universe: usize, r: usize) -> u64 {
    (universe * (r / 2) * r.div_ceil(2)) as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionTuple {
    universe: usize,
    sets: Vec<BTreeSet<ElementId>>,
}

impl SolutionTuple {
    /// Every element must be below `universe`.
    pub fn new(universe: usize, sets: Vec<BTreeSet<ElementId>>) -> Result<Self> {
        if let Some(e) = sets.iter().flatten().find(|&&e| e >= universe) {
            return Err(Error::InvalidArgument(format!(
                "element {e} outside universe of size {universe}"
            )));
        }
        Ok(SolutionTuple { universe, sets })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[BTreeSet<ElementId>] {
        &self.sets
    }

    pub fn r(&self) -> usize {
        self.sets.len()
    }

    pub fn diversity(&self) -> u64 {
        diversity(&self.sets)
    }

    /// Number of sets containing each element of the universe.
    pub fn membership_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.universe];
        for &e in self.sets.iter().flatten() {
            counts[e] += 1;
        }
        counts
    }

    /// Diversity computed element by element.
    pub fn diversity_by_influence(&self) -> u64 {
        let r = self.r();
        self.membership_counts()
            .into_iter()
            .map(|p| influence(p, r).expect("count never exceeds r"))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(items: &[usize]) -> BTreeSet<usize> {
        items.iter().copied().collect()
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming_distance(&set(&[1, 2]), &set(&[2, 3])), 2);
        assert_eq!(hamming_distance(&set(&[1, 2]), &set(&[1, 2])), 0);
        assert_eq!(hamming_distance(&set(&[]), &set(&[1, 2, 3])), 3);
    }

    #[test]
    fn diversity_examples() {
        let s = set(&[4, 5]);
        assert_eq!(diversity(&[s.clone(), s.clone(), s]), 0);
        assert_eq!(diversity(&[set(&[1]), set(&[2])]), 2);
        assert_eq!(diversity(&[set(&[1, 2]), set(&[2, 3]), set(&[3, 1])]), 6);
    }

    #[test]
    fn influence_examples() {
        assert_eq!(influence(0, 5).unwrap(), 0);
        assert_eq!(influence(1, 2).unwrap(), 1);
        assert_eq!(influence(2, 5).unwrap(), 6);
        assert!(influence(3, 2).is_err());
    }

    #[test]
    fn tuple_rejects_foreign_elements() {
        assert!(SolutionTuple::new(3, vec![set(&[3])]).is_err());
    }

    fn tuples() -> impl Strategy<Value = SolutionTuple> {
        (1usize..=30, 1usize..=6).prop_flat_map(|(universe, r)| {
            prop::collection::vec(prop::collection::btree_set(0..universe, 0..=universe), r)
                .prop_map(move |sets| SolutionTuple::new(universe, sets).unwrap())
        })
    }

    proptest! {
        #[test]
        fn influence_sums_to_diversity(t in tuples()) {
            prop_assert_eq!(t.diversity(), t.diversity_by_influence());
            prop_assert!(t.diversity() <= max_possible_diversity(t.universe(), t.r()));
        }

        #[test]
        fn hamming_is_a_metric(
            a in prop::collection::btree_set(0usize..20, 0..20),
            b in prop::collection::btree_set(0usize..20, 0..20),
            c in prop::collection::btree_set(0usize..20, 0..20),
        ) {
            prop_assert_eq!(hamming_distance(&a, &b), hamming_distance(&b, &a));
            prop_assert_eq!(hamming_distance(&a, &b) == 0, a == b);
            prop_assert!(hamming_distance(&a, &c) <= hamming_distance(&a, &b) + hamming_distance(&b, &c));
        }
    }
}
