//! Spectral stability of explicit `sech^2` waves of the Boussinesq abc system.
//!
//! The crate builds the waves, discretizes the linearized operators on a
//! periodic Fourier grid, evaluates the instability index in closed form and
//! numerically, and computes the spectra needed to confirm the parity count.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod discretization;
pub mod error;
pub mod hill;
pub mod index;
pub mod spectrum;
pub mod wave;

pub use error::{Result, StabilityError};
