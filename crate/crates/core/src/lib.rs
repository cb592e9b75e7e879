//! Bicomplex numbers and the one-dimensional bicomplex Schrödinger equation.
//!
//! The crate provides the bicomplex ring with its conjugations and moduli,
//! wave fields on a uniform grid, a Crank–Nicolson solver working on the
//! idempotent components, and diagnostics for the continuity equations,
//! the discrete symmetries and the real-moduli densities.

pub mod algebra;
pub mod analytic;
pub mod born;
pub mod cli;
pub mod config;
pub mod conservation;
pub mod error;
pub mod evolution;
pub mod io;
pub mod report;
pub mod stencil;
pub mod symmetry;
pub mod tridiag;
pub mod verify;
pub mod wavefield;

pub use algebra::{Axis, Bicomplex, ComplexI1, ConjKind, IdempotentPair, RealModulus};
pub use error::{Error, Result};
pub use evolution::{evolve, step, Potential, SolverConfig, Trajectory};
pub use symmetry::{FieldClass, HyperPolarExponent, SymmetryOp};
pub use wavefield::{ComplexField, GridSpec, HyperPolarField, WaveField};
