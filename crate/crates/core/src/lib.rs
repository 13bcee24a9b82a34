//! Bound-state spectra and radial wavefunctions of the D-dimensional
//! Schrödinger equation for the Eckart plus modified deformed Hylleraas
//! potential.
//!
//! The closed-form route maps the reduced radial equation onto the
//! parametric Nikiforov–Uvarov form ([`nu_parametric`]) and reads off
//! energies ([`spectrum`]) and Jacobi-polynomial wavefunctions
//! ([`wavefunction`]). An independent finite-difference eigensolver
//! ([`oracle`]) validates every closed-form level and exposes the ones the
//! formula produces without a matching normalizable state.

pub mod error;
pub mod nu_parametric;
pub mod oracle;
pub mod potentials;
pub mod spectrum;
pub mod wavefunction;

pub use error::{Error, Result};
