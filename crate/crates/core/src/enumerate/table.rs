use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::classify::PrimeVariant;
use crate::error::{MeanderError, Result};
use crate::model::Convention;

/// Version tag of the counting engine; cached counts from another engine are
/// never reused.
pub const ENGINE: &str = "meander-dfs/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub order: usize,
    pub raw: u64,
    pub canonical: u64,
    pub irreducible: Option<u64>,
    pub prime: Option<u64>,
}

impl CountRow {
    pub fn irreducible_ratio(&self) -> Option<f64> {
        self.irreducible.map(|i| i as f64 / self.canonical as f64)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountTable {
    pub engine: String,
    pub convention: Convention,
    pub prime_variant: PrimeVariant,
    pub rows: Vec<CountRow>,
    pub generated_unix: u64,
}

impl CountTable {
    pub fn new(convention: Convention, rows: Vec<CountRow>) -> Result<CountTable> {
        let table = CountTable {
            engine: ENGINE.to_string(),
            convention,
            prime_variant: PrimeVariant::Paper,
            rows,
            generated_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        };
        table.check()?;
        Ok(table)
    }

    /// Checks the table invariants. An odd raw count at an even order would
    /// mean road reversal has a fixed point, which breaks the convention.
    pub fn check(&self) -> Result<()> {
        for r in &self.rows {
            let fail = |detail: String| MeanderError::Calibration {
                order: r.order,
                detail,
            };
            if r.order % 2 == 0 && r.raw % 2 == 1 {
                return Err(fail(format!("raw count {} is odd", r.raw)));
            }
            if r.canonical != self.convention.classes(r.order, r.raw) {
                return Err(fail(format!(
                    "canonical count {} disagrees with raw {} under {}",
                    r.canonical, r.raw, self.convention
                )));
            }
            for (name, v) in [("irreducible", r.irreducible), ("prime", r.prime)] {
                if v.is_some_and(|v| v > r.canonical) {
                    return Err(fail(format!("{name} count exceeds canonical count")));
                }
            }
        }
        Ok(())
    }

    pub fn row(&self, order: usize) -> Option<&CountRow> {
        self.rows.iter().find(|r| r.order == order)
    }

    pub fn max_order(&self) -> usize {
        self.rows.iter().map(|r| r.order).max().unwrap_or(0)
    }

    /// `order,total,irreducible,prime,irr_ratio`; missing classification
    /// counts are left empty.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["order", "total", "irreducible", "prime", "irr_ratio"])?;
        let opt = |v: Option<u64>| v.map(|v| v.to_string()).unwrap_or_default();
        for r in &self.rows {
            out.write_record([
                r.order.to_string(),
                r.canonical.to_string(),
                opt(r.irreducible),
                opt(r.prime),
                r.irreducible_ratio()
                    .map(|x| format!("{x:.6}"))
                    .unwrap_or_default(),
            ])?;
        }
        out.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(order: usize, raw: u64, canonical: u64) -> CountRow {
        CountRow { order, raw, canonical, irreducible: Some(canonical), prime: None }
    }

    #[test]
    fn invariants() {
        let c = Convention::EvenRoadReversal;
        assert!(CountTable::new(c, vec![row(4, 6, 3), row(5, 8, 8)]).is_ok());
        assert!(CountTable::new(c, vec![row(4, 7, 3)]).is_err());
        assert!(CountTable::new(c, vec![row(4, 6, 6)]).is_err());
        let mut r = row(3, 2, 2);
        r.prime = Some(3);
        assert!(CountTable::new(c, vec![r]).is_err());
    }

    #[test]
    fn csv_header_and_blanks() {
        let mut r = row(4, 6, 3);
        r.prime = None;
        let t = CountTable::new(Convention::EvenRoadReversal, vec![r]).unwrap();
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "order,total,irreducible,prime,irr_ratio\n4,3,3,,1.000000\n"
        );
    }
}
