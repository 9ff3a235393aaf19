use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::table::{CountRow, ENGINE};
use crate::error::Result;
use crate::model::Convention;

/// One line of the count cache.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub n: usize,
    pub convention: Convention,
    pub raw: u64,
    pub canonical: u64,
    pub irreducible: Option<u64>,
    pub prime: Option<u64>,
    pub engine: String,
}

impl CacheRecord {
    pub fn from_row(row: &CountRow, convention: Convention) -> CacheRecord {
        CacheRecord {
            n: row.order,
            convention,
            raw: row.raw,
            canonical: row.canonical,
            irreducible: row.irreducible,
            prime: row.prime,
            engine: ENGINE.to_string(),
        }
    }

    pub fn row(&self) -> CountRow {
        CountRow {
            order: self.n,
            raw: self.raw,
            canonical: self.canonical,
            irreducible: self.irreducible,
            prime: self.prime,
        }
    }
}

/// Append-only JSON-lines cache. Lines written by other engine versions and
/// lines that fail to parse are ignored; nothing is ever rewritten.
#[derive(Clone, Debug)]
pub struct CountCache {
    path: PathBuf,
}

impl CountCache {
    pub fn new(path: impl AsRef<Path>) -> CountCache {
        CountCache {
            path: path.as_ref().to_path_buf(),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn records(&self) -> Result<Vec<CacheRecord>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for line in BufReader::new(file).lines() {
            let line = line?;
            if let Ok(rec) = serde_json::from_str::<CacheRecord>(&line) {
                if rec.engine == ENGINE {
                    out.push(rec);
                }
            }
        }
        Ok(out)
    }

    /// Latest record for `(n, convention)`; with `classified`, only records
    /// that carry irreducible and prime counts qualify.
    pub fn lookup(&self, n: usize, convention: Convention, classified: bool) -> Result<Option<CacheRecord>> {
        Ok(self.records()?.into_iter().rev().find(|r| {
            r.n == n
                && r.convention == convention
                && (!classified || (r.irreducible.is_some() && r.prime.is_some()))
        }))
    }

    pub fn append(&self, rec: &CacheRecord) -> Result<()> {
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(f, "{}", serde_json::to_string(rec)?)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_engine_filter() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CountCache::new(dir.path().join("counts.jsonl"));
        assert!(cache.records().unwrap().is_empty());
        let row = CountRow { order: 4, raw: 6, canonical: 3, irreducible: None, prime: None };
        let rec = CacheRecord::from_row(&row, Convention::EvenRoadReversal);
        cache.append(&rec).unwrap();
        let mut stale = rec.clone();
        stale.engine = "other/0".into();
        cache.append(&stale).unwrap();
        assert_eq!(cache.records().unwrap(), vec![rec.clone()]);
        assert_eq!(cache.lookup(4, Convention::EvenRoadReversal, false).unwrap(), Some(rec));
        assert_eq!(cache.lookup(4, Convention::EvenRoadReversal, true).unwrap(), None);
        assert_eq!(cache.lookup(4, Convention::Raw, false).unwrap(), None);

        let line = std::fs::read_to_string(cache.path()).unwrap();
        assert!(line.starts_with(
            r#"{"n":4,"convention":"even-reversal","raw":6,"canonical":3,"irreducible":null,"prime":null,"engine":"meander-dfs/1"}"#
        ));
    }
}
