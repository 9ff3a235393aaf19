//! Growth-rate bounds for irreducible meanders.
//!
//! Inserting order-3 curls at `n/k` of the crossings of an irreducible meander
//! of order `n` gives `binomial(n, n/k) * M^Irr_n` distinct meanders of order
//! `n + 2n/k`. Taking `n`-th roots and the closed-meander growth bound gives,
//! for every `k > 1`,
//!
//! ```text
//! limsup (M^Irr_n)^(1/n) <= (k-1)^((k-1)/k) / k * mu^((k+2)/(2k))
//! ```
//!
//! with `mu` an upper bound for the closed growth constant. The lower bound
//! comes from the irreducible constructions: `liminf >= (lower^2)^(1/4)`.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::compose::{binomial, injection_image};
use crate::enumerate::CountTable;
use crate::error::{MeanderError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundConstants {
    /// Upper bound for the closed-meander growth constant.
    pub mu_closed_upper: f64,
    /// Square of the lower bound for the open-meander growth constant.
    pub mu_open_lower_sq: f64,
    /// Lower bound for the open-meander growth constant.
    pub mu_open_lower: f64,
}

impl Default for BoundConstants {
    fn default() -> Self {
        BoundConstants {
            mu_closed_upper: 12.901,
            mu_open_lower_sq: 11.38,
            mu_open_lower: 3.37343,
        }
    }
}

impl BoundConstants {
    pub fn check(&self) -> Result<()> {
        let all = [self.mu_closed_upper, self.mu_open_lower_sq, self.mu_open_lower];
        if all.iter().any(|c| !(c.is_finite() && *c > 0.0)) {
            return Err(MeanderError::Precondition(format!(
                "bound constants must be positive, got {all:?}"
            )));
        }
        Ok(())
    }
}

fn check_k(k: f64) -> Result<()> {
    if k.is_nan() || k <= 1.0 {
        return Err(MeanderError::Precondition(format!("need k > 1, got {k}")));
    }
    Ok(())
}

/// `k / (k-1)^((k-1)/k)`, the limit of `binomial(n, n/k)^(1/n)`.
pub fn binomial_growth(k: f64) -> Result<f64> {
    check_k(k)?;
    Ok(k / (k - 1.0).powf((k - 1.0) / k))
}

pub fn upper_bound_at(k: f64, c: &BoundConstants) -> Result<f64> {
    check_k(k)?;
    let mu_part = c.mu_closed_upper.powf((k + 2.0) / (2.0 * k));
    Ok(mu_part / binomial_growth(k)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinimizationMethod {
    GoldenSection,
    /// The grid scan did not look unimodal; the best grid point is returned.
    GridScan { resolution: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Minimum {
    pub k_star: f64,
    pub upper_min: f64,
    pub method: MinimizationMethod,
}

const K_MAX: f64 = 1000.0;
const GRID: usize = 20_000;
const K_TOL: f64 = 1e-6;

/// Minimizes [`upper_bound_at`] over `k` in `(1, 1000]`.
///
/// A log-spaced grid is scanned first; if the sampled values fall and then
/// rise (one sign change of the differences) golden-section search runs on
/// the bracket around the best grid point until it is narrower than `1e-6`.
/// Otherwise the best grid point is returned.
pub fn minimize_upper_bound(c: &BoundConstants) -> Result<Minimum> {
    c.check()?;
    let f = |k: f64| upper_bound_at(k, c).expect("k > 1 on the grid");
    let lo = 1.0 + 1e-9;
    let ks: Vec<f64> = (0..=GRID)
        .map(|i| lo * (K_MAX / lo).powf(i as f64 / GRID as f64))
        .collect();
    let vals: Vec<f64> = ks.iter().map(|&k| f(k)).collect();
    let best = (0..vals.len())
        .min_by(|&a, &b| vals[a].total_cmp(&vals[b]))
        .expect("grid is non-empty");

    let falls = vals[..=best].windows(2).all(|w| w[1] <= w[0]);
    let rises = vals[best..].windows(2).all(|w| w[1] >= w[0]);
    if !(falls && rises) {
        let resolution = ks[best.min(GRID - 1) + 1] - ks[best.min(GRID - 1)];
        return Ok(Minimum {
            k_star: ks[best],
            upper_min: vals[best],
            method: MinimizationMethod::GridScan { resolution },
        });
    }

    let (mut a, mut b) = (ks[best.saturating_sub(1)], ks[(best + 1).min(GRID)]);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while b - a > K_TOL {
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    let k_star = (a + b) / 2.0;
    Ok(Minimum {
        k_star,
        upper_min: f(k_star),
        method: MinimizationMethod::GoldenSection,
    })
}

/// `mu_open_lower_sq^(1/4)`.
pub fn lower_bound(c: &BoundConstants) -> Result<f64> {
    if !(c.mu_open_lower_sq.is_finite() && c.mu_open_lower_sq > 0.0) {
        return Err(MeanderError::Precondition(format!(
            "need a positive lower constant, got {}",
            c.mu_open_lower_sq
        )));
    }
    Ok(c.mu_open_lower_sq.sqrt().sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub k_star: f64,
    pub upper_min: f64,
    pub lower: f64,
    pub open_upper: f64,
    pub corollary_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper_at_k: Option<f64>,
}

/// Everything the bounds module derives from the constants. `k` optionally
/// evaluates the bound at one extra point.
pub fn bound_report(c: &BoundConstants, k: Option<f64>) -> Result<BoundReport> {
    let min = minimize_upper_bound(c)?;
    Ok(BoundReport {
        k_star: min.k_star,
        upper_min: min.upper_min,
        lower: lower_bound(c)?,
        open_upper: c.mu_closed_upper.sqrt(),
        corollary_holds: min.upper_min < c.mu_open_lower,
        upper_at_k: k.map(|k| upper_bound_at(k, c)).transpose()?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionReport {
    pub n: usize,
    pub k: u32,
    pub subset_size: usize,
    pub target_order: usize,
    /// Meander classes of the target order.
    pub lhs: u64,
    /// `binomial(n, subset_size) * M^Irr_n`.
    pub rhs: u64,
    /// Distinct images certified by materializing the insertions.
    pub certified: u64,
    pub holds: bool,
}

/// Checks `M_{n + 2 floor(n/k)} >= binomial(n, floor(n/k)) * M^Irr_n` against
/// the table and cross-checks the right side by building the images.
pub fn check_insertion_inequality(n: usize, k: u32, table: &CountTable) -> Result<InsertionReport> {
    let cert = injection_image(n, k, table.convention)?;
    let irr = table
        .row(n)
        .and_then(|r| r.irreducible)
        .ok_or(MeanderError::MissingCounts(n))?;
    let lhs = table
        .row(cert.target_order)
        .map(|r| r.canonical)
        .ok_or(MeanderError::MissingCounts(cert.target_order))?;
    let rhs = binomial(n as u64, cert.subset_size as u64) * irr;
    if cert.certified != rhs {
        return Err(MeanderError::Injectivity(format!(
            "order {n}, k={k}: {} certified images but the table predicts {rhs}",
            cert.certified
        )));
    }
    Ok(InsertionReport {
        n,
        k,
        subset_size: cert.subset_size,
        target_order: cert.target_order,
        lhs,
        rhs,
        certified: cert.certified,
        holds: lhs >= rhs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub order: usize,
    pub irreducible: u64,
    pub total: u64,
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioTable {
    pub rows: Vec<RatioRow>,
    pub upper_min: f64,
    pub open_lower: f64,
    /// `upper_min < open_lower`: irreducible meanders grow strictly slower,
    /// so their share tends to zero.
    pub corollary_holds: bool,
}

impl RatioTable {
    pub fn ratio(&self, order: usize) -> Option<f64> {
        self.rows.iter().find(|r| r.order == order).map(|r| r.ratio)
    }

    pub fn gap_statement(&self) -> String {
        let rel = if self.corollary_holds { "<" } else { ">=" };
        format!("{:.5} {rel} {:.5}", self.upper_min, self.open_lower)
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["order", "irreducible", "total", "ratio"])?;
        for r in &self.rows {
            out.write_record([
                r.order.to_string(),
                r.irreducible.to_string(),
                r.total.to_string(),
                format!("{:.6}", r.ratio),
            ])?;
        }
        out.flush()?;
        Ok(())
    }
}

pub fn ratio_table(table: &CountTable, max_n: usize, c: &BoundConstants) -> Result<RatioTable> {
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let row = table.row(n).ok_or(MeanderError::MissingCounts(n))?;
        let irreducible = row.irreducible.ok_or(MeanderError::MissingCounts(n))?;
        rows.push(RatioRow {
            order: n,
            irreducible,
            total: row.canonical,
            ratio: irreducible as f64 / row.canonical as f64,
        });
    }
    let upper_min = minimize_upper_bound(c)?.upper_min;
    Ok(RatioTable {
        rows,
        upper_min,
        open_lower: c.mu_open_lower,
        corollary_holds: upper_min < c.mu_open_lower,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthRow {
    pub order: usize,
    pub open_root: f64,
    pub irreducible_root: Option<f64>,
}

/// `M_n^(1/n)` and `(M^Irr_n)^(1/n)` per order. Descriptive only.
pub fn empirical_growth(table: &CountTable) -> Vec<GrowthRow> {
    table
        .rows
        .iter()
        .map(|r| {
            let root = |v: u64| (v as f64).powf(1.0 / r.order as f64);
            GrowthRow {
                order: r.order,
                open_root: root(r.canonical),
                irreducible_root: r.irreducible.map(root),
            }
        })
        .collect()
}

pub fn write_growth_csv<W: Write>(rows: &[GrowthRow], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["order", "open_root", "irreducible_root"])?;
    for r in rows {
        out.write_record([
            r.order.to_string(),
            format!("{:.6}", r.open_root),
            r.irreducible_root.map(|x| format!("{x:.6}")).unwrap_or_default(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Stationary point of the bound: `d/dk ln f = (ln(k-1) - ln mu) / k^2`.
    fn closed_form(mu: f64) -> (f64, f64) {
        (mu + 1.0, mu.powf(1.5) / (mu + 1.0))
    }

    #[test]
    fn formula_points() {
        let c = BoundConstants::default();
        assert!((upper_bound_at(2.0, &c).unwrap() - 6.4505).abs() < 1e-12);
        let far = upper_bound_at(1e7, &c).unwrap();
        assert!((far - c.mu_closed_upper.sqrt()).abs() < 1e-4);
        assert!(upper_bound_at(1.0, &c).is_err());
        assert!(binomial_growth(0.5).is_err());
    }

    #[test]
    fn minimum_matches_closed_form() {
        for mu in [12.901, 1.0, 4.0, 50.0] {
            let c = BoundConstants { mu_closed_upper: mu, ..Default::default() };
            let m = minimize_upper_bound(&c).unwrap();
            let (k, v) = closed_form(mu);
            assert_eq!(m.method, MinimizationMethod::GoldenSection);
            assert!((m.k_star - k).abs() < 1e-4, "mu={mu}: {} vs {k}", m.k_star);
            assert!((m.upper_min - v).abs() < 1e-9);
            for dk in [-1e-3, 1e-3] {
                assert!(upper_bound_at(m.k_star + dk, &c).unwrap() >= m.upper_min);
            }
        }
    }

    #[test]
    fn unit_mu_case() {
        let c = BoundConstants { mu_closed_upper: 1.0, ..Default::default() };
        let m = minimize_upper_bound(&c).unwrap();
        assert!(m.upper_min < 1.0);
        assert!((m.upper_min - 0.5).abs() < 1e-9);
    }

    #[test]
    fn lower_bound_roots() {
        let with = |x: f64| BoundConstants { mu_open_lower_sq: x, ..Default::default() };
        assert!((lower_bound(&with(16.0)).unwrap() - 2.0).abs() < 1e-15);
        assert_eq!(lower_bound(&with(1.0)).unwrap(), 1.0);
        let l = lower_bound(&with(11.38)).unwrap();
        assert!((l.powi(4) / 11.38 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn report_json_keys() {
        let r = bound_report(&BoundConstants::default(), None).unwrap();
        let v = serde_json::to_value(r).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 5);
        for k in ["k_star", "upper_min", "lower", "open_upper", "corollary_holds"] {
            assert!(v.get(k).is_some());
        }
        assert_eq!(v["corollary_holds"], true);
    }
}
