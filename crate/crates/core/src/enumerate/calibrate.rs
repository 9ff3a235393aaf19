use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::closed::count_closed;
use super::oracle::brute_force_count;
use super::{count_open, OpenCount};
use crate::error::{MeanderError, Result};
use crate::model::Convention;

/// Reference entries up to this order are re-derived by brute force.
pub const ORACLE_LIMIT: usize = 8;

/// Published open and closed meandric numbers. `open[n]` counts open
/// meanders with `n` crossings, `closed[n]` closed meanders with `2n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceTable {
    pub provenance: String,
    pub open: BTreeMap<usize, u64>,
    pub closed: BTreeMap<usize, u64>,
}

impl ReferenceTable {
    pub fn embedded() -> ReferenceTable {
        serde_json::from_str(include_str!("../../data/reference_counts.json"))
            .expect("embedded reference table parses")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<ReferenceTable> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    fn open_at(&self, n: usize) -> Result<u64> {
        self.open.get(&n).copied().ok_or(MeanderError::MissingCounts(n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionMatch {
    Raw,
    Halved,
    Both,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationRow {
    pub order: usize,
    pub raw: u64,
    pub halved: Option<u64>,
    pub reference: u64,
    pub matches: ConventionMatch,
}

/// `M_{2n-1} = closed(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub n: usize,
    pub open_order: usize,
    pub open: u64,
    pub closed: u64,
    pub holds: bool,
}

/// `closed(n) <= M_{2n} <= n * closed(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SandwichCheck {
    pub n: usize,
    pub closed: u64,
    pub open_even: u64,
    pub upper: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionReport {
    pub max_order: usize,
    pub convention: Convention,
    pub provenance: String,
    /// Reference entries re-derived by brute force: open orders, closed half-orders.
    pub oracle_checked_open: usize,
    pub oracle_checked_closed: usize,
    pub rows: Vec<CalibrationRow>,
    pub identities: Vec<IdentityCheck>,
    pub sandwiches: Vec<SandwichCheck>,
    pub confirmed: bool,
}

/// Checks the counting convention against `reference` for orders `1..=max_n`.
///
/// The convention under test counts raw permutations at odd orders and
/// halves them at even orders. It is confirmed when every order matches the
/// reference, every `M_{2n-1}` equals the closed count `closed(n)`, and every
/// `M_{2n}` lies between `closed(n)` and `n * closed(n)`. Before any of that,
/// the small reference entries are re-derived by brute force. The first
/// disagreement is returned as an error naming its order.
pub fn calibrate(max_n: usize, reference: &ReferenceTable) -> Result<ConventionReport> {
    if max_n == 0 {
        return Err(MeanderError::Precondition("calibration needs max order >= 1".into()));
    }
    let convention = Convention::EvenRoadReversal;
    let mismatch = |order: usize, detail: String| MeanderError::Calibration { order, detail };

    let oracle_open = ORACLE_LIMIT;
    for n in 1..=oracle_open {
        let Some(&r) = reference.open.get(&n) else { continue };
        let derived = convention.classes(n, brute_force_count(n));
        if derived != r {
            return Err(mismatch(
                n,
                format!("reference open count {r} but brute force gives {derived}"),
            ));
        }
    }
    let oracle_closed = ORACLE_LIMIT / 2;
    for n in 1..=oracle_closed {
        let Some(&r) = reference.closed.get(&n) else { continue };
        let derived = count_closed(n);
        if derived != r {
            return Err(mismatch(
                2 * n,
                format!("reference closed count {r} (half-order {n}) but matchings give {derived}"),
            ));
        }
    }

    let counts: Vec<OpenCount> = (1..=max_n).map(|n| count_open(n, Convention::Raw)).collect();
    let m = |n: usize| convention.classes(n, counts[n - 1].raw);

    let mut rows = Vec::with_capacity(max_n);
    for c in &counts {
        let n = c.order;
        let reference = reference.open_at(n)?;
        let halved = (n % 2 == 0).then_some(c.raw / 2);
        if n % 2 == 0 && c.raw % 2 == 1 {
            return Err(mismatch(n, format!("raw count {} is odd", c.raw)));
        }
        let matches = match (c.raw == reference, halved == Some(reference)) {
            (true, true) => ConventionMatch::Both,
            (true, false) => ConventionMatch::Raw,
            (false, true) => ConventionMatch::Halved,
            (false, false) => ConventionMatch::None,
        };
        let expected = if n % 2 == 1 {
            matches == ConventionMatch::Raw
        } else {
            matches == ConventionMatch::Halved
        };
        if !expected {
            return Err(mismatch(
                n,
                format!(
                    "raw {} (halved {:?}) against reference {reference}: {matches:?}",
                    c.raw, halved
                ),
            ));
        }
        rows.push(CalibrationRow { order: n, raw: c.raw, halved, reference, matches });
    }

    let mut closed_cache = BTreeMap::new();
    let mut closed = |n: usize| -> Result<u64> {
        if let Some(&v) = closed_cache.get(&n) {
            return Ok(v);
        }
        let v = count_closed(n);
        if let Some(&r) = reference.closed.get(&n) {
            if r != v {
                return Err(mismatch(
                    2 * n,
                    format!("closed count {v} (half-order {n}) disagrees with reference {r}"),
                ));
            }
        }
        closed_cache.insert(n, v);
        Ok(v)
    };

    let mut identities = Vec::new();
    for n in (1..).take_while(|n| 2 * n - 1 <= max_n) {
        let c = closed(n)?;
        let open = m(2 * n - 1);
        let holds = open == c;
        if !holds {
            return Err(mismatch(2 * n - 1, format!("M_{} = {open} but closed({n}) = {c}", 2 * n - 1)));
        }
        identities.push(IdentityCheck { n, open_order: 2 * n - 1, open, closed: c, holds });
    }

    let mut sandwiches = Vec::new();
    for n in (1..).take_while(|n| 2 * n <= max_n) {
        let c = closed(n)?;
        let open_even = m(2 * n);
        let upper = n as u64 * c;
        let holds = c <= open_even && open_even <= upper;
        if !holds {
            return Err(mismatch(
                2 * n,
                format!("M_{} = {open_even} outside [{c}, {upper}]", 2 * n),
            ));
        }
        sandwiches.push(SandwichCheck { n, closed: c, open_even, upper, holds });
    }

    Ok(ConventionReport {
        max_order: max_n,
        convention,
        provenance: reference.provenance.clone(),
        oracle_checked_open: oracle_open,
        oracle_checked_closed: oracle_closed,
        rows,
        identities,
        sandwiches,
        confirmed: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_calibrations() {
        let r = ReferenceTable::embedded();
        let one = calibrate(1, &r).unwrap();
        assert_eq!(one.identities[0].open, 1);
        assert_eq!(one.identities[0].closed, 1);
        let four = calibrate(4, &r).unwrap();
        let s = four.sandwiches.iter().find(|s| s.n == 2).unwrap();
        assert_eq!((s.closed, s.open_even, s.upper), (2, 3, 4));
        assert_eq!(four.rows[3].matches, ConventionMatch::Halved);
        assert_eq!(four.rows[2].matches, ConventionMatch::Raw);
    }

    #[test]
    fn corrupted_reference_names_order() {
        let mut r = ReferenceTable::embedded();
        r.open.insert(10, 539);
        match calibrate(10, &r) {
            Err(MeanderError::Calibration { order, .. }) => assert_eq!(order, 10),
            other => panic!("unexpected {other:?}"),
        }
        let mut r = ReferenceTable::embedded();
        r.open.insert(6, 15);
        assert!(matches!(calibrate(3, &r), Err(MeanderError::Calibration { order: 6, .. })));
    }

    #[test]
    fn missing_reference_order() {
        let mut r = ReferenceTable::embedded();
        r.open.remove(&9);
        assert!(matches!(calibrate(9, &r), Err(MeanderError::MissingCounts(9))));
    }
}
