use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use crate::error::MeanderError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    RoadReverse,
    RiverReverse,
}

impl Permutation {
    pub fn apply_symmetry(&self, op: Symmetry) -> Permutation {
        match op {
            Symmetry::RoadReverse => self.road_reverse(),
            Symmetry::RiverReverse => self.river_reverse(),
        }
    }
}

/// How permutations are grouped into counted classes.
///
/// `EvenRoadReversal` identifies an even-order permutation with its road
/// reversal and leaves odd orders alone. It is the convention under which raw
/// enumeration reproduces the published open-meander numbers (see
/// [`crate::enumerate::calibrate`]).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    #[serde(rename = "raw")]
    Raw,
    #[default]
    #[serde(rename = "even-reversal")]
    EvenRoadReversal,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Raw => "raw",
            Convention::EvenRoadReversal => "even-reversal",
        }
    }

    /// Whether `values` is the representative of its class. For even orders
    /// under `EvenRoadReversal` the smaller of `p` and its reversal wins; they
    /// differ at the first entry since `a_1 != a_n`.
    pub fn is_representative(self, values: &[u32]) -> bool {
        match self {
            Convention::Raw => true,
            Convention::EvenRoadReversal => {
                values.len() % 2 == 1 || values[0] < values[values.len() - 1]
            }
        }
    }

    /// Number of classes given the raw count at order `n`.
    pub fn classes(self, n: usize, raw: u64) -> u64 {
        match self {
            Convention::EvenRoadReversal if n % 2 == 0 => raw / 2,
            _ => raw,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = MeanderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "raw" => Ok(Convention::Raw),
            "even-reversal" | "even-road-reversal" => Ok(Convention::EvenRoadReversal),
            other => Err(MeanderError::Precondition(format!(
                "unknown convention {other:?} (expected raw or even-reversal)"
            ))),
        }
    }
}

pub fn canonicalize(perm: &Permutation, convention: Convention) -> Permutation {
    if convention.is_representative(perm.values()) {
        perm.clone()
    } else {
        perm.road_reverse()
    }
}
