//! Building meanders from smaller ones.

mod construct;
mod injection;
mod insert;
mod prime;
pub mod recipe;
mod trefoil;

pub use construct::{build_irreducible, Construction, ConstructionChecks, ConstructionVariant, Template};
pub use injection::{binomial, injection_image, subset_injection, InjectionCertificate, EXHAUSTIVE_LIMIT};
pub use insert::{insert, insert_even, insert_odd, GuestOrientation, InsertSpec, Insertion};
pub use prime::{prime_closure, PrimeClosure};
pub use trefoil::{curl_orientation, insert_trefoil_set, CURL, MIRRORED_CURL};
