//! Exact algebra of the shape algebra and the reduced shape algebra of `sl(n)`.
//!
//! The coordinate ring of `SL(n)` restricted to the leading-column minors
//! `δ_I` is a polynomial ring modulo the Plücker ideal. Setting the minors on
//! the first rows to one gives the reduced shape algebra, whose normal forms
//! are indexed by quasi-standard Young tableaux. Everything here is exact
//! (arbitrary precision rationals) and allocation-only, so the crate builds
//! without `std`.
#![no_std]

extern crate alloc;

mod error;
pub mod groebner;
mod index_set;
pub mod matrix_oracle;
pub mod plucker_ideals;
pub mod polyring;
pub mod representation;
pub mod tableaux;
mod weight;

pub use error::{Error, Result};
pub use index_set::IndexSet;
pub use weight::Weight;

/// Exact rational coefficient used throughout.
pub type Rational = num_rational::BigRational;

/// Largest supported rank: indices are stored in a `u32` bitmask.
pub const MAX_N: usize = 31;
