use itertools::Itertools;

use crate::model::{ArchDiagram, Permutation};

/// All meandric permutations of order `n`, found by testing each of the `n!`
/// permutations against the pairwise arc criterion. Independent of the
/// pruned search; meant for small `n`.
pub fn brute_force_open(n: usize) -> Vec<Vec<u32>> {
    (1..=n as u32)
        .permutations(n)
        .filter(|p| {
            ArchDiagram::from_permutation(&Permutation::new_unchecked(p.clone()))
                .violations()
                .is_empty()
        })
        .collect()
}

pub fn brute_force_count(n: usize) -> u64 {
    brute_force_open(n).len() as u64
}
