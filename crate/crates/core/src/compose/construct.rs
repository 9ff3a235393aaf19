use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::reducibility_witness;
use crate::error::{MeanderError, Result};
use crate::model::{canonicalize, Branch, Convention, OpenMeander, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructionVariant {
    Plus32,
    Plus35,
}

impl ConstructionVariant {
    pub fn extra(self) -> usize {
        match self {
            ConstructionVariant::Plus32 => 32,
            ConstructionVariant::Plus35 => 35,
        }
    }

    pub fn target_order(self, n: usize) -> usize {
        2 * n + self.extra()
    }
}

impl fmt::Display for ConstructionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionVariant::Plus32 => "plus32",
            ConstructionVariant::Plus35 => "plus35",
        })
    }
}

impl FromStr for ConstructionVariant {
    type Err = MeanderError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "32" | "plus32" => Ok(ConstructionVariant::Plus32),
            "35" | "plus35" => Ok(ConstructionVariant::Plus35),
            other => Err(MeanderError::Precondition(format!(
                "unknown construction variant {other:?} (expected 32 or 35)"
            ))),
        }
    }
}

/// One frame of the construction, loaded from `templates/*.json`.
#[derive(Clone, Debug, Deserialize)]
pub struct Template {
    pub name: String,
    pub version: u32,
    pub parity: String,
    pub extra: usize,
    pub offset: u32,
    pub head: Vec<u32>,
    pub turn: Vec<u32>,
    pub tail: Vec<u32>,
    pub trailer_top: bool,
    pub trailer: Vec<u32>,
    pub changelog: Vec<String>,
}

const TEMPLATE_SOURCES: [&str; 4] = [
    include_str!("templates/odd_plus32.json"),
    include_str!("templates/odd_plus35.json"),
    include_str!("templates/even_plus32.json"),
    include_str!("templates/even_plus35.json"),
];

impl Template {
    pub fn load(odd: bool, variant: ConstructionVariant) -> Result<Template> {
        let idx = match (odd, variant) {
            (true, ConstructionVariant::Plus32) => 0,
            (true, ConstructionVariant::Plus35) => 1,
            (false, ConstructionVariant::Plus32) => 2,
            (false, ConstructionVariant::Plus35) => 3,
        };
        let t: Template = serde_json::from_str(TEMPLATE_SOURCES[idx])
            .map_err(|e| MeanderError::Template(e.to_string()))?;
        let parity = if odd { "odd" } else { "even" };
        if t.parity != parity || t.extra != variant.extra() {
            return Err(MeanderError::Template(format!(
                "{} does not describe the {parity} {variant} frame",
                t.name
            )));
        }
        let frame = t.head.len() + t.turn.len() + t.tail.len() + t.trailer.len();
        if frame + usize::from(t.trailer_top) != t.extra {
            return Err(MeanderError::Template(format!(
                "{}: frame has {frame} entries",
                t.name
            )));
        }
        Ok(t)
    }

    pub fn expand(&self, values: &[u32]) -> Vec<u32> {
        let n = values.len();
        let mut out = Vec::with_capacity(2 * n + self.extra);
        out.extend_from_slice(&self.head);
        out.extend(
            values
                .iter()
                .enumerate()
                .map(|(i, &a)| self.offset + 2 * a - u32::from(i % 2 == 1)),
        );
        out.extend_from_slice(&self.turn);
        out.extend(
            values
                .iter()
                .enumerate()
                .rev()
                .map(|(i, &a)| self.offset + 2 * a - u32::from(i % 2 == 0)),
        );
        out.extend_from_slice(&self.tail);
        if self.trailer_top {
            out.push((2 * n + self.extra) as u32);
        }
        out.extend_from_slice(&self.trailer);
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionChecks {
    pub valid: bool,
    pub order: bool,
    pub irreducible: bool,
}

impl ConstructionChecks {
    fn all(&self) -> bool {
        self.valid && self.order && self.irreducible
    }

    fn first_failure(&self) -> &'static str {
        if !self.valid {
            "valid"
        } else if !self.order {
            "order"
        } else {
            "irreducible"
        }
    }
}

/// Construction metadata, serialized as the construction JSON record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub input: Permutation,
    pub variant: ConstructionVariant,
    pub output: Permutation,
    pub branch: Branch,
    pub checks: ConstructionChecks,
}

impl Construction {
    pub fn meander(&self) -> OpenMeander {
        OpenMeander::new_unchecked(self.output.clone())
    }
}

fn run_checks(values: &[u32], target: usize) -> (Option<Permutation>, ConstructionChecks) {
    let perm = Permutation::new(values.to_vec()).ok();
    let checks = ConstructionChecks {
        valid: perm.as_ref().is_some_and(Permutation::is_meandric),
        order: values.len() == target,
        irreducible: reducibility_witness(values).is_none(),
    };
    (perm, checks)
}

/// Builds an irreducible meander of order `2n+32` or `2n+35` from `input`.
///
/// The frame template is expanded around the doubled input. Even inputs are
/// used in even-reversal canonical form (reported as the mirrored branch when
/// that differs from the input); if the first candidate fails any check the
/// other orientation is tried before giving up with the failing check named.
pub fn build_irreducible(input: &OpenMeander, variant: ConstructionVariant) -> Result<Construction> {
    let n = input.order();
    let template = Template::load(n % 2 == 1, variant)?;
    let target = variant.target_order(n);
    let canonical = canonicalize(input.perm(), Convention::EvenRoadReversal);
    let mut candidates = vec![(Branch::Literal, input.perm().clone())];
    if canonical != *input.perm() {
        candidates.insert(0, (Branch::Mirrored, canonical));
    } else if n % 2 == 0 {
        candidates.push((Branch::Mirrored, input.perm().road_reverse()));
    }
    let mut failure = "valid";
    for (branch, source) in candidates {
        let values = template.expand(source.values());
        let (perm, checks) = run_checks(&values, target);
        if checks.all() {
            return Ok(Construction {
                input: input.perm().clone(),
                variant,
                output: perm.expect("valid output is a permutation"),
                branch,
                checks,
            });
        }
        failure = checks.first_failure();
    }
    Err(MeanderError::Construction {
        operation: "build_irreducible",
        detail: format!("{variant} frame for {input} fails the {failure} check"),
    })
}
