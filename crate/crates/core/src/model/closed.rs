use serde::{Deserialize, Serialize};

use crate::error::{MeanderError, Result};

/// A closed meander on `2n` crossings: two noncrossing perfect matchings
/// (arcs above and below the river) whose union is a single cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedMeander {
    half_order: usize,
    upper: Vec<(u32, u32)>,
    lower: Vec<(u32, u32)>,
}

impl ClosedMeander {
    pub fn new(upper: Vec<(u32, u32)>, lower: Vec<(u32, u32)>) -> Result<Self> {
        if !is_closed_meander(&upper, &lower)? {
            return Err(MeanderError::MalformedMatching(
                "matchings do not form a closed meander".into(),
            ));
        }
        Ok(ClosedMeander {
            half_order: upper.len(),
            upper,
            lower,
        })
    }

    pub fn half_order(&self) -> usize {
        self.half_order
    }

    pub fn upper(&self) -> &[(u32, u32)] {
        &self.upper
    }

    pub fn lower(&self) -> &[(u32, u32)] {
        &self.lower
    }
}

/// Partner array (index 0 unused) of a set of disjoint pairs on `1..=points`.
/// Overlapping pairs or out-of-range points are errors; missing points are
/// left as 0.
pub(crate) fn partner_array(pairs: &[(u32, u32)], points: usize) -> Result<Vec<u32>> {
    let mut partner = vec![0u32; points + 1];
    for &(p, q) in pairs {
        for x in [p, q] {
            if x == 0 || x as usize > points {
                return Err(MeanderError::MalformedMatching(format!(
                    "point {x} outside 1..={points}"
                )));
            }
        }
        if p == q || partner[p as usize] != 0 || partner[q as usize] != 0 {
            return Err(MeanderError::MalformedMatching(format!(
                "pair ({p},{q}) overlaps another pair"
            )));
        }
        partner[p as usize] = q;
        partner[q as usize] = p;
    }
    Ok(partner)
}

pub(crate) fn is_noncrossing(partner: &[u32]) -> bool {
    let mut stack = Vec::new();
    for x in 1..partner.len() as u32 {
        let q = partner[x as usize];
        if q > x {
            stack.push(x);
        } else if stack.pop() != Some(q) {
            return false;
        }
    }
    stack.is_empty()
}

/// Length of the cycle through point 1 alternating upper and lower partners.
pub(crate) fn cycle_length(upper: &[u32], lower: &[u32]) -> usize {
    let mut x = 1u32;
    let mut len = 0;
    loop {
        x = upper[x as usize];
        x = lower[x as usize];
        len += 2;
        if x == 1 {
            return len;
        }
    }
}

/// True iff both matchings are perfect on `1..=2n`, each is noncrossing, and
/// their union is one `2n`-cycle.
pub fn is_closed_meander(upper: &[(u32, u32)], lower: &[(u32, u32)]) -> Result<bool> {
    let points = 2 * upper.len().max(lower.len());
    if points == 0 {
        return Err(MeanderError::MalformedMatching("empty matching".into()));
    }
    let up = partner_array(upper, points)?;
    let lo = partner_array(lower, points)?;
    let perfect = |m: &[u32]| m[1..].iter().all(|&q| q != 0);
    if !perfect(&up) || !perfect(&lo) {
        return Ok(false);
    }
    Ok(is_noncrossing(&up) && is_noncrossing(&lo) && cycle_length(&up, &lo) == points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(is_closed_meander(&[(1, 2)], &[(1, 2)]).unwrap());
        assert!(is_closed_meander(&[(1, 2), (3, 4)], &[(2, 3), (1, 4)]).unwrap());
        assert!(!is_closed_meander(&[(1, 2), (3, 4)], &[(1, 2), (3, 4)]).unwrap());
    }

    #[test]
    fn crossing_matching_rejected() {
        assert!(!is_closed_meander(&[(1, 3), (2, 4)], &[(1, 2), (3, 4)]).unwrap());
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            is_closed_meander(&[(1, 2), (2, 3)], &[(1, 2), (3, 4)]),
            Err(MeanderError::MalformedMatching(_))
        ));
        assert!(is_closed_meander(&[(1, 9)], &[(1, 2)]).is_err());
    }

    #[test]
    fn all_pairs_at_half_order_two() {
        let matchings = [vec![(1, 2), (3, 4)], vec![(1, 4), (2, 3)]];
        let mut count = 0;
        for u in &matchings {
            for l in &matchings {
                if is_closed_meander(u, l).unwrap() {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 2);
    }
}
