//! Exhaustive enumeration and counting.
//!
//! [`enumerate_open`] streams every meandric permutation of a given order in
//! lexicographic order; the counting functions, the parallel driver and the
//! calibration against published meandric numbers are all built on it.

mod cache;
mod calibrate;
mod closed;
mod oracle;
mod parallel;
mod search;
mod table;

use serde::{Deserialize, Serialize};

use crate::classify::{prime_witness, reducibility_witness, PrimeVariant};
use crate::model::{Convention, OpenMeander, Permutation};
use search::Search;

pub use cache::{CacheRecord, CountCache};
pub use calibrate::{
    calibrate, CalibrationRow, ConventionMatch, ConventionReport, IdentityCheck, ReferenceTable,
    SandwichCheck, ORACLE_LIMIT,
};
pub use closed::{closed_meanders, count_closed, noncrossing_matchings};
pub use oracle::{brute_force_count, brute_force_open};
pub use parallel::{
    feasible_prefixes, parallel_count, parallel_count_cached, parallel_count_order, partition_counts,
    SearchConfig,
};
pub use search::MAX_ORDER;
pub use table::{CountRow, CountTable, ENGINE};

/// Calls `visit` with every meandric permutation of order `n`, in
/// lexicographic order.
pub fn enumerate_open<F: FnMut(&[u32])>(n: usize, mut visit: F) {
    Search::new(n).run(&mut visit);
}

/// Like [`enumerate_open`], restricted to permutations starting with `prefix`.
/// Nothing is visited when the prefix is not the start of any meander.
pub fn enumerate_with_prefix<F: FnMut(&[u32])>(n: usize, prefix: &[u32], mut visit: F) {
    let mut s = Search::new(n);
    if s.replay(prefix) {
        debug_assert_eq!(s.path(), prefix);
        s.run(&mut visit);
    }
}

pub fn open_meanders(n: usize) -> Vec<OpenMeander> {
    let mut out = Vec::new();
    enumerate_open(n, |p| {
        out.push(OpenMeander::new_unchecked(Permutation::new_unchecked(p.to_vec())))
    });
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenCount {
    pub order: usize,
    pub raw: u64,
    pub canonical: u64,
}

pub fn count_open(n: usize, convention: Convention) -> OpenCount {
    let t = tally(n, &[], convention, None);
    OpenCount {
        order: n,
        raw: t.raw,
        canonical: t.canonical,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedCount {
    pub order: usize,
    pub irreducible: u64,
    pub prime: u64,
}

/// Irreducible and prime class representatives (prime in the paper variant).
pub fn count_classified(n: usize, convention: Convention) -> ClassifiedCount {
    let t = tally(n, &[], convention, Some(PrimeVariant::Paper));
    ClassifiedCount {
        order: n,
        irreducible: t.irreducible,
        prime: t.prime,
    }
}

/// Per-partition counts; summed with `+`, so aggregation order is irrelevant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Tally {
    pub raw: u64,
    pub canonical: u64,
    pub irreducible: u64,
    pub prime: u64,
}

impl std::ops::Add for Tally {
    type Output = Tally;

    fn add(self, o: Tally) -> Tally {
        Tally {
            raw: self.raw + o.raw,
            canonical: self.canonical + o.canonical,
            irreducible: self.irreducible + o.irreducible,
            prime: self.prime + o.prime,
        }
    }
}

pub(crate) fn tally(
    n: usize,
    prefix: &[u32],
    convention: Convention,
    classify: Option<PrimeVariant>,
) -> Tally {
    let mut t = Tally::default();
    enumerate_with_prefix(n, prefix, |p| {
        t.raw += 1;
        if !convention.is_representative(p) {
            return;
        }
        t.canonical += 1;
        if let Some(variant) = classify {
            t.irreducible += u64::from(reducibility_witness(p).is_none());
            t.prime += u64::from(prime_witness(p, variant).is_none());
        }
    });
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let raw: Vec<u64> = (1..=9).map(|n| count_open(n, Convention::Raw).raw).collect();
        assert_eq!(raw, vec![1, 2, 2, 6, 8, 28, 42, 162, 262]);
        assert_eq!(count_open(4, Convention::EvenRoadReversal).canonical, 3);
        assert_eq!(count_open(1, Convention::EvenRoadReversal).canonical, 1);
    }

    #[test]
    fn classified_examples() {
        let c = Convention::EvenRoadReversal;
        let four = count_classified(4, c);
        assert_eq!(four.irreducible, 3);
        assert_eq!(count_classified(1, c), ClassifiedCount { order: 1, irreducible: 1, prime: 1 });
        assert!(count_classified(5, c).irreducible < count_open(5, c).canonical);
    }

    #[test]
    fn prefix_restriction() {
        let mut got = Vec::new();
        enumerate_with_prefix(4, &[1], |p| got.push(p.to_vec()));
        assert_eq!(got, vec![vec![1, 2, 3, 4], vec![1, 4, 3, 2]]);
        let mut none = 0;
        enumerate_with_prefix(4, &[1, 3], |_| none += 1);
        assert_eq!(none, 0);
    }
}
