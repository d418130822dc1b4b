//! Spectral toolkit for the complex Airy operator `L_c y = -y'' + c x y` on
//! `[0, inf)` with `y(0) = 0`.
//!
//! * [`airy`]: `Ai` and `U = Bi - sqrt(3) Ai` in the whole complex plane, with
//!   scaled variants that never overflow, Airy zeros and derivative polynomials.
//! * [`operator`]: spectrum, eigenfunctions, biorthogonality and the
//!   numerical-range sector of `L_c`.
//! * [`resolvent`]: Green kernels, resolvent norms and pseudospectra.
//! * [`completeness`]: expansions, Abel summation, the certificate function and
//!   the sector geometry.
//! * [`cli`]: the `airy-spectra` command line.

pub mod airy;
pub mod cli;
pub mod completeness;
mod dd;
pub mod error;
pub mod grid;
pub mod operator;
pub mod quadrature;
pub mod resolvent;
pub mod scaled;
pub mod sources;

pub use error::{Error, Result};
