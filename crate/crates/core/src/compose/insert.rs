use serde::{Deserialize, Serialize};

use crate::error::{MeanderError, Result};
use crate::model::{OpenMeander, Permutation};

/// Host, guest and the 1-based road position in the host where the guest goes.
#[derive(Clone, Copy, Debug)]
pub struct InsertSpec<'a> {
    pub host: &'a OpenMeander,
    pub guest: &'a OpenMeander,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GuestOrientation {
    AsGiven,
    RoadReversed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Insertion {
    pub meander: OpenMeander,
    pub orientation: GuestOrientation,
}

/// Splices the odd-order guest in place of the host crossing at `position`.
///
/// With `v = a_k`, the crossing `v` becomes the block `v-1+b_1, ..., v-1+b_m`
/// and every host value above `v` moves up by `m-1`, so the result has order
/// `n + m - 1`. An odd guest enters and leaves on opposite sides of the river,
/// exactly like the crossing it replaces, which is why the result is always
/// meandric.
pub fn insert_odd(spec: InsertSpec<'_>) -> Result<Insertion> {
    let n = spec.host.order();
    let m = spec.guest.order();
    if m % 2 == 0 {
        return Err(MeanderError::Precondition(format!(
            "odd insert needs an odd guest, got order {m}"
        )));
    }
    if spec.position == 0 || spec.position > n {
        return Err(MeanderError::Precondition(format!(
            "position {} outside 1..={n}",
            spec.position
        )));
    }
    let values = replace_crossing(spec.host.values(), spec.position - 1, spec.guest.values());
    let perm = Permutation::new_unchecked(values);
    if !perm.is_meandric() {
        return Err(MeanderError::Construction {
            operation: "insert_odd",
            detail: format!("{perm} is not meandric"),
        });
    }
    Ok(Insertion {
        meander: OpenMeander::new_unchecked(perm),
        orientation: GuestOrientation::AsGiven,
    })
}

pub(crate) fn replace_crossing(host: &[u32], index: usize, guest: &[u32]) -> Vec<u32> {
    let v = host[index];
    let grow = guest.len() as u32 - 1;
    let mut out = Vec::with_capacity(host.len() + guest.len() - 1);
    for (i, &a) in host.iter().enumerate() {
        if i == index {
            out.extend(guest.iter().map(|b| v - 1 + b));
        } else {
            out.push(if a < v { a } else { a + grow });
        }
    }
    out
}

fn splice_after(host: &[u32], index: usize, guest: &[u32]) -> Vec<u32> {
    let v = host[index];
    let grow = guest.len() as u32;
    let mut out = Vec::with_capacity(host.len() + guest.len());
    for (i, &a) in host.iter().enumerate() {
        out.push(if a <= v { a } else { a + grow });
        if i == index {
            out.extend(guest.iter().map(|b| v + b));
        }
    }
    out
}

/// Splices the even-order guest into the road arc between positions `k` and
/// `k+1`, which must join neighbouring river points. The block
/// `a_k + b'_1, ..., a_k + b'_m` goes right after position `k` and host values
/// above `a_k` move up by `m`; the order grows by `m`.
///
/// `b'` is the guest or its road reversal. The ascending/descending case split
/// picks the first candidate; the other is tried when it is not meandric. In
/// practice exactly one orientation works for every legal position.
pub fn insert_even(spec: InsertSpec<'_>) -> Result<Insertion> {
    let a = spec.host.values();
    let n = a.len();
    let m = spec.guest.order();
    let k = spec.position;
    if m % 2 == 1 {
        return Err(MeanderError::Precondition(format!(
            "even insert needs an even guest, got order {m}"
        )));
    }
    if k == 0 || k >= n {
        return Err(MeanderError::Precondition(format!(
            "position {k} outside 1..{n}"
        )));
    }
    if a[k - 1].abs_diff(a[k]) != 1 {
        return Err(MeanderError::Precondition(format!(
            "|a_{k} - a_{}| = |{} - {}| is not 1",
            k + 1,
            a[k - 1],
            a[k]
        )));
    }
    let reversed = spec.guest.perm().road_reverse();
    let mut candidates = [
        (GuestOrientation::AsGiven, spec.guest.values()),
        (GuestOrientation::RoadReversed, reversed.values()),
    ];
    if a[k - 1] > a[k] {
        candidates.swap(0, 1);
    }
    for (orientation, guest) in candidates {
        let perm = Permutation::new_unchecked(splice_after(a, k - 1, guest));
        if perm.is_meandric() {
            return Ok(Insertion {
                meander: OpenMeander::new_unchecked(perm),
                orientation,
            });
        }
    }
    Err(MeanderError::Construction {
        operation: "insert_even",
        detail: format!(
            "no orientation of {} fits between positions {k} and {} of {}",
            spec.guest,
            k + 1,
            spec.host
        ),
    })
}

/// Dispatches on the parity of the guest.
pub fn insert(spec: InsertSpec<'_>) -> Result<Insertion> {
    if spec.guest.order() % 2 == 1 {
        insert_odd(spec)
    } else {
        insert_even(spec)
    }
}
