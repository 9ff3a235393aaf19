//! Permutation-level model of open and closed meanders.

mod arch;
mod closed;
mod concat;
mod perm;
mod symmetry;

pub use arch::{validate, Arc, ArchDiagram, OpenMeander, Ray, RayEnd, Side, Violation};
pub use closed::{is_closed_meander, ClosedMeander};
pub(crate) use closed::cycle_length;
#[cfg(test)]
pub(crate) use closed::is_noncrossing;
pub use concat::{concatenate, Branch, Concatenation};
pub use perm::{parse_permutation_lines, Permutation};
pub use symmetry::{canonicalize, Convention, Symmetry};
