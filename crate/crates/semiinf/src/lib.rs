//! Exact combinatorics of semi-infinite intersection cohomology fibers on
//! the affine Grassmannian.
//!
//! The library computes, in exact arbitrary-precision arithmetic:
//!
//! * root data of finite type from a Cartan matrix ([`root_datum`]),
//! * irreducible characters, weight multiplicities and tensor product
//!   decompositions ([`characters`]),
//! * graded partition counts: the q-Kostant partition function, Lusztig
//!   q-analogs of weight multiplicities, and the graded dimensions of the
//!   symmetric and exterior algebras on the nilpotent radical
//!   ([`q_gradings`]),
//! * stable values of !- and *-fibers of the semi-infinite IC object along
//!   a cofinal chain of dominant weights, together with the filtration
//!   polynomial of the !-restriction to the zero semi-infinite orbit
//!   ([`fibers`]),
//! * the colimit presentation of the same object through spaces of
//!   homomorphisms out of an irreducible representation, with observed
//!   stabilization thresholds compared against an a-priori bound
//!   ([`plucker`]).
//!
//! Every numeric claim made by the high-level routines is checked against an
//! independently computed closed form; nothing is estimated or truncated.

pub mod characters;
pub mod error;
pub mod fibers;
pub mod plucker;
pub mod q_gradings;
pub mod qpoly;
pub mod root_datum;

pub use error::Error;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
