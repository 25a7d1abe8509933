//! Numerical invariants of noncommutative curves.
//!
//! Everything here works on numerical shadows: an orbifold curve is its
//! [`CurveSignature`] (coarse genus plus stacky orders), a sheaf is its
//! [`KClass`] (rank, rational degree, local character multiplicities), and
//! a Harder–Narasimhan filtration is the list of its graded pieces. No
//! derived category is ever materialized.
//!
//! The crate is `no_std` and only needs `alloc`. Exact arithmetic uses
//! [`Rational`]; phases are the one genuinely transcendental quantity and
//! use `f64` through `libm`.
//!
//! Modules:
//!  - [`curve`]: signatures, `deg ω`, Chen–Ruan rank, the dimension classifier.
//!  - [`classes`]: Weil divisors and the K-theory ring in local coordinates.
//!  - [`stability`]: central charges `Z_{β,H}`, phases, the support property.
//!  - [`hn`]: HN-graded objects, duals, twists and the generator split.
//!  - [`quiver`]: Tits-form recognition of Dynkin and extended quivers.

#![no_std]

extern crate alloc;

pub mod classes;
pub mod curve;
mod error;
pub mod hn;
pub mod quiver;
pub mod stability;

pub use classes::{CrVector, KClass, PointId, Slope, WeilDivisor};
pub use curve::{CurveSignature, DimensionReport, NegativeFamily};
pub use error::{Error, Result};
pub use hn::FilteredObject;
pub use quiver::{AdeType, Quiver, QuiverClassification, QuiverKind};
pub use stability::{ChargeValue, StabParams, SupportReport};

/// Exact rational number used throughout the crate.
pub type Rational = num_rational::Ratio<i64>;

/// Integer floor division, rounding toward negative infinity.
pub(crate) fn floor_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_floor(&a, &b)
}

/// Least non-negative residue.
pub(crate) fn modulo(a: i64, b: i64) -> i64 {
    num_integer::Integer::mod_floor(&a, &b)
}
