//! The ring of bicomplex numbers.
//!
//! An element is stored as four real components over the basis
//! `{1, i1, i2, j}` with `i1² = i2² = -1`, `j² = 1` and `i1·i2 = j`.
//! The equivalent view `z1 + z2·i2` with `z1, z2` in ℂ(i1) is available
//! through [`Bicomplex::z1`], [`Bicomplex::z2`] and
//! [`Bicomplex::from_complex_pair`], and the idempotent view through
//! [`Bicomplex::to_idempotent`].

mod bicomplex;
mod conj;
mod text;

pub use bicomplex::{Axis, Bicomplex, IdempotentPair, RealModulus};
pub use conj::ConjKind;
pub use text::format_real;

/// An element `x + y·i1` of the subalgebra ℂ(i1).
pub type ComplexI1 = num_complex::Complex64;

/// Relative scale used to decide membership of the null cone:
/// `|z1² + z2²| <= NULL_CONE_RTOL · max(1, |w|₃²)`.
pub const NULL_CONE_RTOL: f64 = 1e-12;
