use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{MeanderError, Result};

/// A permutation of `1..=n`, read as the river positions of the crossings in
/// road order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Checks that `values` is a permutation of `1..=n` with `n >= 1`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        check_permutation(&values)?;
        Ok(Permutation(values))
    }

    pub(crate) fn new_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(check_permutation(&values).is_ok(), "{values:?}");
        Permutation(values)
    }

    /// The identity `(1, 2, ..., n)`: the zigzag meander.
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    /// Traverses the road backwards: `(a_n, ..., a_1)`.
    pub fn road_reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// Mirrors the river: `(n+1-a_1, ..., n+1-a_n)`.
    pub fn river_reverse(&self) -> Self {
        let top = self.0.len() as u32 + 1;
        Permutation(self.0.iter().map(|&a| top - a).collect())
    }

    /// Position (0-based) of the crossing carrying `value`.
    pub fn position_of(&self, value: u32) -> Option<usize> {
        self.0.iter().position(|&a| a == value)
    }
}

pub(crate) fn check_permutation(values: &[u32]) -> Result<()> {
    if values.is_empty() {
        return Err(MeanderError::MalformedPermutation("empty sequence".into()));
    }
    let n = values.len();
    let mut seen = vec![false; n + 1];
    for &v in values {
        let idx = v as usize;
        if idx == 0 || idx > n {
            return Err(MeanderError::MalformedPermutation(format!(
                "value {v} outside 1..={n}"
            )));
        }
        if std::mem::replace(&mut seen[idx], true) {
            return Err(MeanderError::MalformedPermutation(format!(
                "value {v} repeated"
            )));
        }
    }
    Ok(())
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = MeanderError;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.0
    }
}

impl AsRef<[u32]> for Permutation {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses `"3,2,1"` or `"(3, 2, 1)"`.
impl FromStr for Permutation {
    type Err = MeanderError;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: String| MeanderError::Parse {
            input: s.to_string(),
            reason,
        };
        let mut body = s.trim();
        if let Some(inner) = body.strip_prefix('(') {
            body = inner
                .strip_suffix(')')
                .ok_or_else(|| parse_err("unbalanced parenthesis".into()))?;
        }
        let values = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>()
                    .map_err(|e| parse_err(format!("bad integer {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}

/// Reads one permutation per line; blank lines and `#` comments are skipped.
pub fn parse_permutation_lines(text: &str) -> Result<Vec<Permutation>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_text_forms() {
        let a: Permutation = "3,2,1".parse().unwrap();
        let b: Permutation = " (3, 2, 1) ".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "3,2,1");
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(matches!(
            "1,1,2".parse::<Permutation>(),
            Err(MeanderError::MalformedPermutation(_))
        ));
        assert!(matches!(
            "1,4".parse::<Permutation>(),
            Err(MeanderError::MalformedPermutation(_))
        ));
        assert!(matches!(
            "1,x".parse::<Permutation>(),
            Err(MeanderError::Parse { .. })
        ));
        assert!("(1,2".parse::<Permutation>().is_err());
        assert!(Permutation::new(vec![]).is_err());
    }

    #[test]
    fn symmetries() {
        let p: Permutation = "3,2,1,6,5,4".parse().unwrap();
        assert_eq!(p.road_reverse().values(), &[4, 5, 6, 1, 2, 3]);
        let z = Permutation::identity(3);
        assert_eq!(z.river_reverse().values(), &[3, 2, 1]);
        assert_eq!(p.road_reverse().road_reverse(), p);
        assert_eq!(p.river_reverse().river_reverse(), p);
    }

    #[test]
    fn line_format() {
        let ps = parse_permutation_lines("# header\n1,2\n\n(3,2,1)\n").unwrap();
        assert_eq!(ps.len(), 2);
    }
}
