use serde::Serialize;

use crate::classify::{is_prime, PrimeVariant};
use crate::error::{MeanderError, Result};
use crate::model::{Branch, OpenMeander, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeClosure {
    pub meander: OpenMeander,
    pub branch: Branch,
}

fn closure_template(values: &[u32]) -> Permutation {
    let n = values.len() as u32;
    let mut out: Vec<u32> = values.iter().map(|a| a + 2).collect();
    if n % 2 == 0 {
        out.push(n + 3);
    }
    out.extend([2, 1]);
    Permutation::new_unchecked(out)
}

/// Wraps `m` into a prime meander: `(a_1+2, ..., a_n+2, 2, 1)` for odd `n`,
/// `(a_1+2, ..., a_n+2, n+3, 2, 1)` for even `n`. When the template does not
/// give a meander (e.g. `(2,1)`), it is applied to the river mirror of `m`.
pub fn prime_closure(m: &OpenMeander) -> Result<PrimeClosure> {
    let mirrored = m.perm().river_reverse();
    for (branch, source) in [(Branch::Literal, m.perm()), (Branch::Mirrored, &mirrored)] {
        let candidate = closure_template(source.values());
        if candidate.is_meandric() && is_prime(&candidate, PrimeVariant::Paper) {
            return Ok(PrimeClosure {
                meander: OpenMeander::new_unchecked(candidate),
                branch,
            });
        }
    }
    Err(MeanderError::Construction {
        operation: "prime_closure",
        detail: format!("no branch of the closure of {m} is a prime meander"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> OpenMeander {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let c = prime_closure(&m("1,2,3")).unwrap();
        assert_eq!(c.meander, m("3,4,5,2,1"));
        assert_eq!(c.branch, Branch::Literal);

        assert!(!closure_template(&[2, 1]).is_meandric());
        let c = prime_closure(&m("2,1")).unwrap();
        assert_eq!(c.meander, m("3,4,5,2,1"));
        assert_eq!(c.branch, Branch::Mirrored);

        let c = prime_closure(&m("1")).unwrap();
        assert_eq!(c.meander, m("3,2,1"));
    }
}
