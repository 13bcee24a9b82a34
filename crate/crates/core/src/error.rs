//! Error type shared by all solver modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Radial coordinate must be strictly positive.
    #[error("radius must be > 0, got {r}")]
    NonPositiveRadius { r: f64 },

    /// A square root argument came out negative where a real bound-state
    /// branch requires it non-negative.
    #[error("negative radicand in {what}: {value}")]
    NegativeRadicand { what: &'static str, value: f64 },

    /// c3 = 0 selects the Laguerre limit, which this solver does not support.
    #[error("c3 = 0 (Laguerre limit) is not supported")]
    DegenerateC3,

    /// phi < -1/4 makes v = sqrt(1 + 4*phi) imaginary: no real solution.
    #[error("phi = {phi} < -1/4: v is imaginary, no real bound-state solution")]
    ComplexV { phi: f64 },

    /// The quantization bracket vanished exactly: mu_bar = 0 gives a
    /// non-normalizable state.
    #[error("state (n={n}, l={l}, D={dim}) has zero bracket: not normalizable")]
    DegenerateState { n: u32, l: u32, dim: u32 },

    /// A special-function parameter left its admissible domain.
    #[error("parameter {name} = {value} out of domain ({constraint})")]
    ParameterOutOfDomain {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// Requested a wavefunction for a state flagged non-normalizable.
    #[error("state (n={n}, l={l}, D={dim}) is not normalizable: {reason}")]
    NotNormalizable {
        n: u32,
        l: u32,
        dim: u32,
        reason: String,
    },

    /// Adaptive quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge: residual {achieved} > tolerance {requested}")]
    QuadratureFailure { achieved: f64, requested: f64 },

    /// A model parameter violates its invariant (non-finite, b = 0, ...).
    #[error("invalid parameter {name}: {message}")]
    InvalidParameter { name: &'static str, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
