use std::collections::BTreeSet;

use super::insert::replace_crossing;
use crate::error::{MeanderError, Result};
use crate::model::{OpenMeander, Permutation};

/// The order-3 curl and its mirror image.
pub const CURL: [u32; 3] = [3, 2, 1];
pub const MIRRORED_CURL: [u32; 3] = [1, 2, 3];

/// Chooses which curl replaces the crossing at 0-based road index `i`.
///
/// `(3,2,1)` is the default. It would merge into a descending run through
/// `v = a_i` (predecessor `v+1` or successor `v-1`), so the mirror is used
/// there; the two road ends need the extra cases below to keep images of
/// distinct subsets apart. The table was certified exhaustively: images are
/// distinct per host for every meander up to order 8, and distinct across
/// irreducible hosts (up to road reversal) up to order 8.
pub fn curl_orientation(values: &[u32], i: usize) -> [u32; 3] {
    let v = values[i];
    let prev = i.checked_sub(1).map(|j| values[j]);
    let next = values.get(i + 1).copied();
    let adjacent = |x: u32| x.abs_diff(v) == 1;
    let mirror = prev == Some(v + 1)
        || next == Some(v - 1)
        || (prev.is_none() && next == Some(v + 1))
        || (next.is_none() && prev.is_some_and(|p| !adjacent(p)));
    if mirror {
        MIRRORED_CURL
    } else {
        CURL
    }
}

/// Replaces every crossing whose value lies in `targets` by an order-3 curl.
///
/// Targets are processed in decreasing value order: replacing `v` only moves
/// values above `v`, so the remaining targets keep their labels. The output
/// has order `n + 2|targets|`.
pub fn insert_trefoil_set(host: &OpenMeander, targets: &BTreeSet<u32>) -> Result<OpenMeander> {
    let n = host.order() as u32;
    if let Some(bad) = targets.iter().find(|&&v| v == 0 || v > n) {
        return Err(MeanderError::Precondition(format!(
            "{bad} is not a crossing of an order-{n} meander"
        )));
    }
    let mut cur = host.values().to_vec();
    for &v in targets.iter().rev() {
        let i = cur.iter().position(|&a| a == v).expect("target present");
        let curl = curl_orientation(&cur, i);
        cur = replace_crossing(&cur, i, &curl);
    }
    let perm = Permutation::new_unchecked(cur);
    if !perm.is_meandric() {
        return Err(MeanderError::Construction {
            operation: "insert_trefoil_set",
            detail: format!("{perm} is not meandric"),
        });
    }
    Ok(OpenMeander::new_unchecked(perm))
}
