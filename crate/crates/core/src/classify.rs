//! Irreducibility and primality of open meanders.
//!
//! A window `(k1, k2)` of road positions is an *interval window* when the
//! values `a_k1..=a_k2` are consecutive integers, i.e. `max - min = k2 - k1`.
//! A meander is irreducible when it has no interval window of width
//! `3 <= k2 - k1 <= n - 2`. Widths 1 and 2 never disqualify, and the full
//! window `(1, n)` is excluded since every permutation has it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::MeanderError;
use crate::model::Permutation;

/// 1-based road positions `k1 < k2` with the value span over that window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalWindow {
    pub k1: usize,
    pub k2: usize,
    #[serde(skip)]
    pub span: u32,
}

impl IntervalWindow {
    pub fn width(&self) -> usize {
        self.k2 - self.k1
    }

    /// Re-derives the interval property from the permutation.
    pub fn holds_in(&self, values: &[u32]) -> bool {
        if self.k1 == 0 || self.k1 >= self.k2 || self.k2 > values.len() {
            return false;
        }
        let w = &values[self.k1 - 1..self.k2];
        let (lo, hi) = w
            .iter()
            .fold((u32::MAX, 0), |(lo, hi), &v| (lo.min(v), hi.max(v)));
        (hi - lo) as usize == self.width()
    }
}

/// All interval windows, including the trivial widths, ordered by `k1` then `k2`.
pub fn interval_windows(perm: &Permutation) -> Vec<IntervalWindow> {
    let a = perm.values();
    let n = a.len();
    let mut out = Vec::new();
    for k1 in 0..n {
        let (mut lo, mut hi) = (a[k1], a[k1]);
        for k2 in k1 + 1..n {
            lo = lo.min(a[k2]);
            hi = hi.max(a[k2]);
            if (hi - lo) as usize == k2 - k1 {
                out.push(IntervalWindow {
                    k1: k1 + 1,
                    k2: k2 + 1,
                    span: hi - lo,
                });
            }
        }
    }
    out
}

/// The first interval window (by `k1`, then `k2`) of width in `3..=n-2`.
pub fn reducibility_witness(values: &[u32]) -> Option<IntervalWindow> {
    let n = values.len();
    if n < 5 {
        return None;
    }
    for k1 in 0..n {
        let (mut lo, mut hi) = (values[k1], values[k1]);
        for k2 in k1 + 1..n {
            let width = k2 - k1;
            if width > n - 2 {
                break;
            }
            lo = lo.min(values[k2]);
            hi = hi.max(values[k2]);
            if width >= 3 && (hi - lo) as usize == width {
                return Some(IntervalWindow {
                    k1: k1 + 1,
                    k2: k2 + 1,
                    span: hi - lo,
                });
            }
        }
    }
    None
}

pub fn is_irreducible(perm: &Permutation) -> bool {
    reducibility_witness(perm.values()).is_none()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimeVariant {
    /// A meander starting at crossing 1 is prime; otherwise no prefix of
    /// length `2..n` may be a low block.
    #[default]
    Paper,
    /// No prefix of length `1..n` may be a low block.
    Strict,
}

impl PrimeVariant {
    pub fn name(self) -> &'static str {
        match self {
            PrimeVariant::Paper => "paper",
            PrimeVariant::Strict => "strict",
        }
    }
}

impl fmt::Display for PrimeVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PrimeVariant {
    type Err = MeanderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(PrimeVariant::Paper),
            "strict" => Ok(PrimeVariant::Strict),
            other => Err(MeanderError::Precondition(format!(
                "unknown prime variant {other:?} (expected paper or strict)"
            ))),
        }
    }
}

/// Smallest `k` in the variant's range with `{a_1..a_k} = {1..k}`.
pub fn prime_witness(values: &[u32], variant: PrimeVariant) -> Option<usize> {
    let n = values.len();
    let start = match variant {
        PrimeVariant::Strict => 1,
        PrimeVariant::Paper => {
            if values[0] == 1 {
                return None;
            }
            2
        }
    };
    let mut max = 0;
    for (i, &v) in values.iter().enumerate().take(n.saturating_sub(1)) {
        max = max.max(v);
        let k = i + 1;
        if k >= start && max as usize == k {
            return Some(k);
        }
    }
    None
}

pub fn is_prime(perm: &Permutation, variant: PrimeVariant) -> bool {
    prime_witness(perm.values(), variant).is_none()
}

/// Auditable classification: every negative verdict carries its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub perm: Permutation,
    pub order: usize,
    pub irreducible: bool,
    pub prime: bool,
    pub prime_variant: PrimeVariant,
    /// Interval window refuting irreducibility.
    pub witness: Option<IntervalWindow>,
    /// Length of the low-block prefix refuting primality.
    pub prime_witness: Option<usize>,
}

pub fn classify(perm: &Permutation, variant: PrimeVariant) -> ClassificationRecord {
    let witness = reducibility_witness(perm.values());
    let prime_witness = prime_witness(perm.values(), variant);
    ClassificationRecord {
        perm: perm.clone(),
        order: perm.order(),
        irreducible: witness.is_none(),
        prime: prime_witness.is_none(),
        prime_variant: variant,
        witness,
        prime_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn windows_of_figure_one() {
        let w: Vec<_> = interval_windows(&p("3,2,1,6,5,4"))
            .into_iter()
            .filter(|w| w.width() >= 2)
            .map(|w| (w.k1, w.k2))
            .collect();
        // width 2 at (1,3) and (4,6); the full window (1,6) has width 5
        assert_eq!(w, vec![(1, 3), (1, 6), (4, 6)]);
        assert!(interval_windows(&p("1")).is_empty());
    }

    #[test]
    fn identity_windows_are_everything() {
        let n = 6;
        assert_eq!(interval_windows(&Permutation::identity(n)).len(), n * (n - 1) / 2);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&p("3,2,1,6,5,4")));
        let w = reducibility_witness(&[1, 2, 3, 4, 5]).unwrap();
        assert_eq!((w.k1, w.k2), (1, 4));
        assert!(is_irreducible(&p("1,2,3")));
        assert!(is_irreducible(&p("1,2,3,4")));
    }

    #[test]
    fn primality_examples() {
        let fig = p("3,2,1,6,5,4");
        assert_eq!(prime_witness(fig.values(), PrimeVariant::Paper), Some(3));
        assert_eq!(prime_witness(fig.values(), PrimeVariant::Strict), Some(3));
        assert!(is_prime(&p("3,2,1"), PrimeVariant::Paper));
        assert!(is_prime(&p("3,2,1"), PrimeVariant::Strict));
        assert!(is_prime(&p("1,2,3"), PrimeVariant::Paper));
        assert_eq!(prime_witness(&[1, 2, 3], PrimeVariant::Strict), Some(1));
    }

    #[test]
    fn record_json_shape() {
        let r = classify(&p("1,2,3,4,5"), PrimeVariant::Paper);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["perm"], serde_json::json!([1, 2, 3, 4, 5]));
        assert_eq!(v["witness"], serde_json::json!({"k1": 1, "k2": 4}));
        assert_eq!(v["prime_variant"], "paper");
        assert_eq!(v["irreducible"], false);
    }
}
