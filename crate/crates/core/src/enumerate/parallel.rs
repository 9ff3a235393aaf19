use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cache::{CacheRecord, CountCache};
use super::search::{Search, MAX_ORDER};
use super::table::{CountRow, CountTable};
use super::{tally, Tally};
use crate::classify::PrimeVariant;
use crate::error::{MeanderError, Result};
use crate::model::Convention;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub max_order: usize,
    /// Length of the road prefixes the search tree is split on.
    pub prefix_depth: usize,
    pub workers: usize,
    pub convention: Convention,
    /// Also count irreducible and prime representatives.
    pub classify: bool,
}

impl SearchConfig {
    pub fn new(max_order: usize) -> SearchConfig {
        SearchConfig {
            max_order,
            prefix_depth: 3.min(max_order.saturating_sub(1)),
            workers: 1,
            convention: Convention::EvenRoadReversal,
            classify: true,
        }
    }

    pub fn check(&self) -> Result<()> {
        if self.max_order == 0 || self.max_order > MAX_ORDER {
            return Err(MeanderError::Precondition(format!(
                "max order {} outside 1..={MAX_ORDER}",
                self.max_order
            )));
        }
        if self.prefix_depth >= self.max_order {
            return Err(MeanderError::Precondition(format!(
                "prefix depth {} must be below the max order {}",
                self.prefix_depth, self.max_order
            )));
        }
        if self.workers == 0 {
            return Err(MeanderError::Precondition("need at least one worker".into()));
        }
        Ok(())
    }
}

/// Every prefix of length `depth` that survives pruning, in lexicographic
/// order. Some of them may still have no completion.
pub fn feasible_prefixes(n: usize, depth: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    Search::new(n).prefixes(depth.min(n), &mut out);
    out
}

/// Raw count below each prefix that extends to at least one meander.
pub fn partition_counts(n: usize, depth: usize) -> Vec<(Vec<u32>, u64)> {
    feasible_prefixes(n, depth)
        .into_iter()
        .map(|p| {
            let raw = tally(n, &p, Convention::Raw, None).raw;
            (p, raw)
        })
        .filter(|&(_, raw)| raw > 0)
        .collect()
}

fn count_row(n: usize, config: &SearchConfig) -> CountRow {
    let classify = config.classify.then_some(PrimeVariant::Paper);
    let t = feasible_prefixes(n, config.prefix_depth)
        .par_iter()
        .map(|p| tally(n, p, config.convention, classify))
        .reduce(Tally::default, |a, b| a + b);
    CountRow {
        order: n,
        raw: t.raw,
        canonical: t.canonical,
        irreducible: config.classify.then_some(t.irreducible),
        prime: config.classify.then_some(t.prime),
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| MeanderError::Precondition(format!("thread pool: {e}")))
}

/// Counts every order `1..=max_order`, splitting each search tree on its
/// feasible prefixes. Partition totals are integers combined by addition, so
/// the table is identical for any worker count and schedule.
pub fn parallel_count(config: &SearchConfig) -> Result<CountTable> {
    config.check()?;
    let rows = pool(config.workers)?
        .install(|| (1..=config.max_order).map(|n| count_row(n, config)).collect());
    CountTable::new(config.convention, rows)
}

/// A single row of [`parallel_count`]: only order `n` is counted.
pub fn parallel_count_order(n: usize, config: &SearchConfig) -> Result<CountRow> {
    SearchConfig { max_order: n, ..*config }.check()?;
    Ok(pool(config.workers)?.install(|| count_row(n, config)))
}

/// [`parallel_count`] that reads and appends the JSON-lines cache.
pub fn parallel_count_cached(config: &SearchConfig, cache: &CountCache) -> Result<CountTable> {
    config.check()?;
    let workers = pool(config.workers)?;
    let mut rows = Vec::with_capacity(config.max_order);
    for n in 1..=config.max_order {
        if let Some(rec) = cache.lookup(n, config.convention, config.classify)? {
            let mut row = rec.row();
            if !config.classify {
                row.irreducible = None;
                row.prime = None;
            }
            rows.push(row);
            continue;
        }
        let row = workers.install(|| count_row(n, config));
        cache.append(&CacheRecord::from_row(&row, config.convention))?;
        rows.push(row);
    }
    CountTable::new(config.convention, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_examples() {
        let four: Vec<u64> = partition_counts(4, 1).into_iter().map(|(_, c)| c).collect();
        assert_eq!(four, vec![2, 1, 1, 2]);
        assert_eq!(
            partition_counts(3, 2),
            vec![(vec![1, 2], 1), (vec![3, 2], 1)]
        );
    }

    #[test]
    fn config_checks() {
        let mut c = SearchConfig::new(5);
        assert!(c.check().is_ok());
        c.prefix_depth = 5;
        assert!(c.check().is_err());
        c.prefix_depth = 1;
        c.workers = 0;
        assert!(c.check().is_err());
        assert!(SearchConfig::new(1).check().is_ok());
    }

    #[test]
    fn worker_count_does_not_matter() {
        let mut c = SearchConfig::new(10);
        let one = parallel_count(&c).unwrap();
        c.workers = 4;
        c.prefix_depth = 2;
        assert_eq!(parallel_count(&c).unwrap().rows, one.rows);
    }

    #[test]
    fn cache_is_used() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CountCache::new(dir.path().join("c.jsonl"));
        let c = SearchConfig::new(6);
        let first = parallel_count_cached(&c, &cache).unwrap();
        assert_eq!(cache.records().unwrap().len(), 6);
        let second = parallel_count_cached(&c, &cache).unwrap();
        assert_eq!(cache.records().unwrap().len(), 6);
        assert_eq!(first.rows, second.rows);
    }
}
