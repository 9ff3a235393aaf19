use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::{check_permutation, Permutation};
use crate::error::{MeanderError, Result};

/// Side of the river (the horizontal baseline).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Upper => Side::Lower,
            Side::Lower => Side::Upper,
        }
    }

    /// Side of road segment `i` (1-based, joining crossings `i` and `i+1`).
    /// The entry ray sits on the upper side, so segment 1 is below.
    pub fn of_segment(i: usize) -> Side {
        if i % 2 == 1 {
            Side::Lower
        } else {
            Side::Upper
        }
    }

    /// Side of the exit ray of an order-`n` meander.
    pub fn of_exit(n: usize) -> Side {
        Side::of_segment(n)
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Upper => "upper",
            Side::Lower => "lower",
        })
    }
}

/// An unordered pair of river positions, stored with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub lo: u32,
    pub hi: u32,
}

impl Arc {
    pub fn new(p: u32, q: u32) -> Arc {
        Arc {
            lo: p.min(q),
            hi: p.max(q),
        }
    }

    pub fn covers(&self, point: u32) -> bool {
        self.lo < point && point < self.hi
    }

    pub fn crosses(&self, other: &Arc) -> bool {
        (self.lo < other.lo && other.lo < self.hi && self.hi < other.hi)
            || (other.lo < self.lo && self.lo < other.hi && other.hi < self.hi)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ray {
    pub point: u32,
    pub side: Side,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RayEnd {
    Entry,
    Exit,
}

/// A reason an arch diagram is not planar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// V1: two arcs on the same side cross.
    Crossing { side: Side, first: Arc, second: Arc },
    /// V2: a ray is strictly covered by an arc on its own side.
    CoveredRay { end: RayEnd, ray: Ray, arc: Arc },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Crossing {
                side,
                first,
                second,
            } => write!(f, "{side} arcs {first} and {second} cross"),
            Violation::CoveredRay { end, ray, arc } => write!(
                f,
                "{} ray at {} covered by {} arc {arc}",
                match end {
                    RayEnd::Entry => "entry",
                    RayEnd::Exit => "exit",
                },
                ray.point,
                ray.side
            ),
        }
    }
}

/// The road split into arcs above and below the river plus its two rays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArchDiagram {
    pub order: usize,
    pub upper: Vec<Arc>,
    pub lower: Vec<Arc>,
    pub entry: Ray,
    pub exit: Ray,
}

impl ArchDiagram {
    /// Unfolds the alternation rule: entry ray above `a_1`, segment `i` below
    /// when `i` is odd, exit ray after `a_n` on the alternating side. Always
    /// succeeds; planarity is queried with [`ArchDiagram::violations`].
    pub fn from_permutation(perm: &Permutation) -> ArchDiagram {
        let a = perm.values();
        let n = a.len();
        let mut upper = Vec::with_capacity(n / 2);
        let mut lower = Vec::with_capacity(n / 2 + 1);
        for (i, w) in a.windows(2).enumerate() {
            let arc = Arc::new(w[0], w[1]);
            match Side::of_segment(i + 1) {
                Side::Upper => upper.push(arc),
                Side::Lower => lower.push(arc),
            }
        }
        ArchDiagram {
            order: n,
            upper,
            lower,
            entry: Ray {
                point: a[0],
                side: Side::Upper,
            },
            exit: Ray {
                point: a[n - 1],
                side: Side::of_exit(n),
            },
        }
    }

    pub fn arcs(&self, side: Side) -> &[Arc] {
        match side {
            Side::Upper => &self.upper,
            Side::Lower => &self.lower,
        }
    }

    /// Every V1 and V2 violation, in a deterministic order.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for side in [Side::Upper, Side::Lower] {
            let arcs = self.arcs(side);
            for (i, x) in arcs.iter().enumerate() {
                for y in &arcs[i + 1..] {
                    if x.crosses(y) {
                        out.push(Violation::Crossing {
                            side,
                            first: *x,
                            second: *y,
                        });
                    }
                }
            }
        }
        for (end, ray) in [(RayEnd::Entry, self.entry), (RayEnd::Exit, self.exit)] {
            for arc in self.arcs(ray.side) {
                if arc.covers(ray.point) {
                    out.push(Violation::CoveredRay {
                        end,
                        ray,
                        arc: *arc,
                    });
                }
            }
        }
        out
    }

    /// Degree invariant: every point is the endpoint of exactly two road
    /// pieces (arcs or rays), one on each side.
    pub fn degrees_ok(&self) -> bool {
        let mut deg = vec![[0u8; 2]; self.order + 1];
        let mut bump = |p: u32, side: Side| {
            deg[p as usize][side as usize] += 1;
        };
        for side in [Side::Upper, Side::Lower] {
            for arc in self.arcs(side) {
                bump(arc.lo, side);
                bump(arc.hi, side);
            }
        }
        bump(self.entry.point, self.entry.side);
        bump(self.exit.point, self.exit.side);
        deg[1..].iter().all(|d| *d == [1, 1])
    }

    pub fn is_planar(&self) -> bool {
        side_is_planar(self.order, &self.upper, self.rays_on(Side::Upper))
            && side_is_planar(self.order, &self.lower, self.rays_on(Side::Lower))
    }

    fn rays_on(&self, side: Side) -> impl Iterator<Item = u32> + '_ {
        [self.entry, self.exit]
            .into_iter()
            .filter(move |r| r.side == side)
            .map(|r| r.point)
    }
}

/// Linear scan: arcs are properly nested iff every closing endpoint matches
/// the innermost open arc, and a ray point must not sit inside any open arc.
fn side_is_planar(n: usize, arcs: &[Arc], rays: impl Iterator<Item = u32>) -> bool {
    const NONE: u32 = 0;
    const RAY: u32 = u32::MAX;
    let mut partner = vec![NONE; n + 1];
    for arc in arcs {
        partner[arc.lo as usize] = arc.hi;
        partner[arc.hi as usize] = arc.lo;
    }
    for p in rays {
        partner[p as usize] = RAY;
    }
    let mut stack: Vec<u32> = Vec::new();
    for x in 1..=n as u32 {
        match partner[x as usize] {
            NONE => {}
            RAY => {
                if !stack.is_empty() {
                    return false;
                }
            }
            q if q > x => stack.push(x),
            q => {
                if stack.pop() != Some(q) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `values` is a meandric permutation. A sequence that is not a
/// permutation of `1..=n` is an error, not `false`.
pub fn validate(values: &[u32]) -> Result<bool> {
    check_permutation(values)?;
    Ok(is_meandric_unchecked(values))
}

pub(crate) fn is_meandric_unchecked(values: &[u32]) -> bool {
    ArchDiagram::from_permutation(&Permutation::new_unchecked(values.to_vec())).is_planar()
}

impl Permutation {
    pub fn arch_diagram(&self) -> ArchDiagram {
        ArchDiagram::from_permutation(self)
    }

    pub fn is_meandric(&self) -> bool {
        self.arch_diagram().is_planar()
    }
}

/// A permutation known to be meandric.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct OpenMeander(Permutation);

impl OpenMeander {
    pub fn new(perm: Permutation) -> Result<Self> {
        let diagram = perm.arch_diagram();
        if diagram.is_planar() {
            return Ok(OpenMeander(perm));
        }
        let violation = diagram
            .violations()
            .into_iter()
            .next()
            .expect("non-planar diagram has a violation");
        Err(MeanderError::NotMeandric {
            perm: perm.to_string(),
            violation,
        })
    }

    pub fn from_values(values: Vec<u32>) -> Result<Self> {
        OpenMeander::new(Permutation::new(values)?)
    }

    pub(crate) fn new_unchecked(perm: Permutation) -> Self {
        debug_assert!(perm.is_meandric(), "{perm}");
        OpenMeander(perm)
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn values(&self) -> &[u32] {
        self.0.values()
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn into_perm(self) -> Permutation {
        self.0
    }
}

impl std::str::FromStr for OpenMeander {
    type Err = MeanderError;

    fn from_str(s: &str) -> Result<Self> {
        OpenMeander::new(s.parse()?)
    }
}

impl fmt::Display for OpenMeander {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn diagram_of_321() {
        let d = p("3,2,1").arch_diagram();
        assert_eq!(d.entry, Ray { point: 3, side: Side::Upper });
        assert_eq!(d.lower, vec![Arc::new(3, 2)]);
        assert_eq!(d.upper, vec![Arc::new(2, 1)]);
        assert_eq!(d.exit, Ray { point: 1, side: Side::Lower });
    }

    #[test]
    fn diagrams_of_small_orders() {
        let d = p("1").arch_diagram();
        assert!(d.upper.is_empty() && d.lower.is_empty());
        assert_eq!(d.entry, Ray { point: 1, side: Side::Upper });
        assert_eq!(d.exit, Ray { point: 1, side: Side::Lower });

        let d = p("1,2").arch_diagram();
        assert_eq!(d.lower, vec![Arc::new(1, 2)]);
        assert_eq!(d.exit, Ray { point: 2, side: Side::Upper });
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&[1, 2, 3]).unwrap());
        assert!(!validate(&[2, 1, 3]).unwrap());
        assert!(validate(&[3, 2, 1, 6, 5, 4]).unwrap());
        assert!(!validate(&[1, 3, 2]).unwrap());
        assert!(validate(&[1, 1, 2]).is_err());
    }

    #[test]
    fn violations_are_named() {
        let v = p("2,1,3").arch_diagram().violations();
        assert_eq!(
            v,
            vec![Violation::CoveredRay {
                end: RayEnd::Entry,
                ray: Ray { point: 2, side: Side::Upper },
                arc: Arc::new(1, 3),
            }]
        );
        let v = p("1,3,2").arch_diagram().violations();
        assert!(matches!(v[0], Violation::CoveredRay { end: RayEnd::Exit, .. }));
        // 1,3,2,4 has crossing lower arcs {1,3} and {2,4}
        let v = p("1,3,2,4").arch_diagram().violations();
        assert!(v.iter().any(|x| matches!(x, Violation::Crossing { side: Side::Lower, .. })));
    }

    #[test]
    fn open_meander_rejects_invalid() {
        assert!(OpenMeander::from_values(vec![2, 1, 3]).is_err());
        assert!(OpenMeander::from_values(vec![3, 2, 1]).is_ok());
    }
}
