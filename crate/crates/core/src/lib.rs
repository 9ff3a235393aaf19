//! Combinatorics of open and closed meanders.
//!
//! An open meander of order `n` is recorded as the permutation `(a_1, ..., a_n)`
//! listing the river positions of its crossings in the order the road meets
//! them. Everything in this crate works on that encoding:
//!
//! * [`model`]: permutations, arch diagrams, validity, symmetries, concatenation
//!   and closed meanders as pairs of noncrossing matchings.
//! * [`classify`]: irreducibility (interval windows) and primality.
//! * [`compose`]: inserts, prime closure and the doubling construction of
//!   irreducible meanders.
//! * [`enumerate`]: pruned depth-first enumeration, parallel counting,
//!   closed-meander counts and convention calibration.
//! * [`bounds`]: growth-rate bounds for irreducible meanders.
//! * [`render`]: SVG / TikZ arc diagrams.
//! * [`verify`]: the end-to-end acceptance checks, shared by the CLI and tests.

pub mod bounds;
pub mod classify;
pub mod cli;
pub mod compose;
pub mod enumerate;
mod error;
pub mod model;
pub mod render;
pub mod verify;

pub use error::{MeanderError, Result};
pub use model::{
    concatenate, validate, ArchDiagram, ClosedMeander, Convention, OpenMeander, Permutation,
    Side, Symmetry,
};
