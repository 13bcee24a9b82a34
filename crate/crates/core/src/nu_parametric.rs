//! Parametric Nikiforov–Uvarov engine.
//!
//! Works on second-order equations of the generalized hypergeometric type
//!
//! ```text
//! psi'' + (c1 - c2 s)/(s (1 - c3 s)) psi'
//!       + (-xi1 s^2 + xi2 s - xi3)/(s^2 (1 - c3 s)^2) psi = 0
//! ```
//!
//! and produces the derived constants, the k branches that make the radical
//! a perfect square, the quantization condition, and the exponents of the
//! weight function and wavefunction prefactor. Everything here is plain
//! arithmetic on the six input coefficients; the physics lives in the caller
//! that maps a radial equation onto them.

use crate::error::{Error, Result};

/// Input coefficients (c1, c2, c3, xi1, xi2, xi3) of the hypergeometric-type
/// equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuCoefficients {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
}

/// Constants c4..c9 derived from [`NuCoefficients`].
///
/// c8 >= 0 and c9 >= 0 are required for real bound-state factors; negative
/// values signal that no real solution exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuDerived {
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
    pub c7: f64,
    pub c8: f64,
    pub c9: f64,
}

/// Weight-function and prefactor exponents c10..c13.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveFactors {
    pub c10: f64,
    pub c11: f64,
    pub c12: f64,
    pub c13: f64,
}

/// Derive c4..c9 from the input coefficients.
pub fn derive_constants(coeffs: &NuCoefficients) -> NuDerived {
    let c4 = 0.5 * (1.0 - coeffs.c1);
    let c5 = 0.5 * (coeffs.c2 - 2.0 * coeffs.c3);
    let c6 = c5 * c5 + coeffs.xi1;
    let c7 = 2.0 * c4 * c5 - coeffs.xi2;
    let c8 = c4 * c4 + coeffs.xi3;
    let c9 = coeffs.c3 * c7 + coeffs.c3 * coeffs.c3 * c8 + c6;
    NuDerived {
        c4,
        c5,
        c6,
        c7,
        c8,
        c9,
    }
}

/// The two k values that make the radical of pi(s) a perfect square.
///
/// Returns `(k_plus, k_minus)` with `k_plus >= k_minus`.
pub fn k_branches(coeffs: &NuCoefficients, derived: &NuDerived) -> Result<(f64, f64)> {
    let product = derived.c8 * derived.c9;
    if product < 0.0 {
        return Err(Error::NegativeRadicand {
            what: "k branches (c8*c9)",
            value: product,
        });
    }
    let base = -(derived.c7 + 2.0 * coeffs.c3 * derived.c8);
    let root = 2.0 * product.sqrt();
    Ok((base + root, base - root))
}

/// Coefficients (q2, q1, q0) of the quadratic under the pi(s) radical for a
/// given k. For k from [`k_branches`] the discriminant q1^2 - 4 q2 q0
/// vanishes.
pub fn radical_polynomial(
    coeffs: &NuCoefficients,
    derived: &NuDerived,
    k: f64,
) -> (f64, f64, f64) {
    let q2 = derived.c6 - coeffs.c3 * k;
    let q1 = derived.c7 + k;
    let q0 = derived.c8;
    (q2, q1, q0)
}

/// Left side of the quantization condition for level `n`.
///
/// The condition as written contains sqrt(c8) in two places; the sign of
/// that root decides normalizability and is the caller's policy, so the
/// signed value is taken as an explicit argument. The expression is affine
/// in `sqrt_c8_signed`.
pub fn energy_condition_lhs(
    n: u32,
    coeffs: &NuCoefficients,
    derived: &NuDerived,
    sqrt_c8_signed: f64,
) -> Result<f64> {
    if derived.c9 < 0.0 {
        return Err(Error::NegativeRadicand {
            what: "energy condition (c9)",
            value: derived.c9,
        });
    }
    let nf = f64::from(n);
    let sqrt_c9 = derived.c9.sqrt();
    let two_n_plus_1 = 2.0 * nf + 1.0;
    Ok((coeffs.c2 - coeffs.c3) * nf + coeffs.c3 * nf * nf - two_n_plus_1 * derived.c5
        + two_n_plus_1 * (sqrt_c9 + coeffs.c3 * sqrt_c8_signed)
        + derived.c7
        + 2.0 * coeffs.c3 * derived.c8
        + 2.0 * sqrt_c8_signed * sqrt_c9)
}

/// Slope of tau(s); must be negative for bound-state solutions.
pub fn tau_prime(coeffs: &NuCoefficients, derived: &NuDerived) -> Result<f64> {
    if derived.c8 < 0.0 || derived.c9 < 0.0 {
        return Err(Error::NegativeRadicand {
            what: "tau slope (c8 or c9)",
            value: derived.c8.min(derived.c9),
        });
    }
    Ok(-2.0 * coeffs.c3 - 2.0 * (derived.c9.sqrt() + coeffs.c3 * derived.c8.sqrt()))
}

/// Exponents c10..c13 of the weight function and the wavefunction prefactor.
pub fn wave_factors(coeffs: &NuCoefficients, derived: &NuDerived) -> Result<WaveFactors> {
    if coeffs.c3 == 0.0 {
        return Err(Error::DegenerateC3);
    }
    if derived.c8 < 0.0 {
        return Err(Error::NegativeRadicand {
            what: "wave factors (c8)",
            value: derived.c8,
        });
    }
    if derived.c9 < 0.0 {
        return Err(Error::NegativeRadicand {
            what: "wave factors (c9)",
            value: derived.c9,
        });
    }
    let sqrt_c8 = derived.c8.sqrt();
    let sqrt_c9 = derived.c9.sqrt();
    Ok(WaveFactors {
        c10: coeffs.c1 + 2.0 * derived.c4 + 2.0 * sqrt_c8,
        c11: 1.0 - coeffs.c1 - 2.0 * derived.c4 + 2.0 / coeffs.c3 * sqrt_c9,
        c12: derived.c4 + sqrt_c8,
        c13: -derived.c4 + (sqrt_c9 - derived.c5) / coeffs.c3,
    })
}
