//! Hybrid Grothendieck polynomials of skew shapes.
//!
//! The combinatorial core is [`svrpp`]: set-valued reverse plane partitions
//! and their statistics. On top of it sit the Bender–Knuth type involutions
//! ([`involution`]), a crystal structure with Schur expansions ([`crystal`]),
//! Newton polytope checks ([`newton`]), marked multiset-valued tableaux for
//! the omega image ([`omega`]) and column-adding operators ([`fomin_greene`]).

pub mod crystal;
pub mod error;
pub mod fomin_greene;
pub mod involution;
pub mod newton;
pub mod omega;
pub mod polyring;
pub mod shapes;
pub mod svrpp;
pub mod verify;

pub use error::Error;
pub use shapes::{Partition, SkewShape};
pub use svrpp::Svrpp;

/// Polynomials with big-integer coefficients.
pub type Poly = polyring::SparsePoly<num_bigint::BigInt>;

/// Schur expansions with big-integer coefficients.
pub type Expansion = polyring::SchurExpansion<num_bigint::BigInt>;
