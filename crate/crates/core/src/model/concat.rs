use serde::{Deserialize, Serialize};

use super::arch::OpenMeander;
use super::perm::Permutation;
use crate::error::{MeanderError, Result};

/// Which form of an operand an operation ended up using.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Literal,
    Mirrored,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Concatenation {
    pub meander: OpenMeander,
    /// `Mirrored` when the river-reversed right operand was used.
    pub branch: Branch,
    /// The even-order left operand was traversed backwards.
    pub left_reversed: bool,
}

fn append(a: &[u32], b: &[u32]) -> Permutation {
    let shift = a.len() as u32;
    Permutation::new_unchecked(a.iter().copied().chain(b.iter().map(|v| v + shift)).collect())
}

/// Joins `q` after `p` along the river: `(a_1, ..., a_n, b_1 + n, ..., b_m + n)`.
///
/// The joining arc leaves `a_n` on the side of `p`'s exit ray and covers
/// everything right of it up to `b_1 + n`. Two things can go wrong:
///
/// * `n` even and `a_1 > a_n`: both rays of `p` point up and the arc covers
///   the entry ray. The road reversal of `p` (the same class for even `n`)
///   has `a_1 < a_n` and is used instead.
/// * `m` even and `b_m < b_1`: the arc covers the exit ray of `q`; the
///   river-mirrored `q` is used instead.
///
/// Attempts run in that order, so the plain append is returned whenever it
/// is meandric.
pub fn concatenate(p: &OpenMeander, q: &OpenMeander) -> Result<Concatenation> {
    let reversed = p.perm().road_reverse();
    let mirrored = q.perm().river_reverse();
    let mut lefts = vec![(false, p.values())];
    if p.order() % 2 == 0 {
        lefts.push((true, reversed.values()));
    }
    let mut tried = Vec::new();
    for (left_reversed, a) in lefts {
        for (branch, b) in [(Branch::Literal, q.values()), (Branch::Mirrored, mirrored.values())] {
            let joined = append(a, b);
            if joined.is_meandric() {
                return Ok(Concatenation {
                    meander: OpenMeander::new_unchecked(joined),
                    branch,
                    left_reversed,
                });
            }
            tried.push(joined.to_string());
        }
    }
    Err(MeanderError::Construction {
        operation: "concatenate",
        detail: format!("none of {} is meandric", tried.join(" / ")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> OpenMeander {
        s.parse().unwrap()
    }

    #[test]
    fn figure_one() {
        let c = concatenate(&m("3,2,1"), &m("3,2,1")).unwrap();
        assert_eq!(c.meander, m("3,2,1,6,5,4"));
        assert_eq!(c.branch, Branch::Literal);
    }

    #[test]
    fn covered_entry_ray() {
        // (4,3,2,5,6,1): exit at 1 is left of the entry at 4, both above
        let c = concatenate(&m("4,3,2,5,6,1"), &m("1")).unwrap();
        assert!(c.left_reversed);
        assert_eq!(c.branch, Branch::Literal);
        assert_eq!(c.meander, m("1,6,5,2,3,4,7"));
    }

    #[test]
    fn covered_exit_ray() {
        let c = concatenate(&m("1"), &m("2,1")).unwrap();
        assert!(!c.left_reversed);
        assert_eq!(c.branch, Branch::Mirrored);
        assert_eq!(c.meander, m("1,2,3"));
    }

    #[test]
    fn small_cases() {
        assert_eq!(concatenate(&m("1"), &m("1")).unwrap().meander, m("1,2"));
        assert_eq!(concatenate(&m("1,2"), &m("1")).unwrap().meander, m("1,2,3"));
    }
}
