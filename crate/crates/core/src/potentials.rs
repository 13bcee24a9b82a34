//! The combined Eckart plus modified deformed Hylleraas potential, its named
//! special cases, and the centrifugal term with its two approximation
//! schemes.
//!
//! Throughout, `s = exp(-2*alpha*r)` and `1 - s` is evaluated with `exp_m1`
//! so the `s/(1-s)` fractions stay accurate down to alpha*r ~ 1e-300.

use crate::error::{Error, Result};

/// Well depths and shape parameters of the combined potential
///
/// ```text
/// V(r) = (V0/b) (a - s)/(1 - s) - V1 s/(1 - s) + V2 s/(1 - s)^2
/// ```
///
/// Energies are in whatever consistent unit system the caller uses
/// (the reference tables label them MeV); `alpha` is an inverse length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub v0: f64,
    pub v1: f64,
    pub v2: f64,
    /// Hylleraas shape parameter a (dimensionless).
    pub a: f64,
    /// Hylleraas shape parameter b (dimensionless, nonzero).
    pub b: f64,
    /// Screening parameter (inverse length, positive).
    pub alpha: f64,
}

impl PotentialParams {
    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("V0", self.v0),
            ("V1", self.v1),
            ("V2", self.v2),
            ("a", self.a),
            ("b", self.b),
            ("alpha", self.alpha),
        ] {
            if !value.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    message: format!("must be finite, got {value}"),
                });
            }
        }
        if self.alpha <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "alpha",
                message: format!("must be > 0, got {}", self.alpha),
            });
        }
        if self.b == 0.0 {
            return Err(Error::InvalidParameter {
                name: "b",
                message: "must be nonzero".into(),
            });
        }
        Ok(())
    }
}

/// Adjustable coefficients of the two-term centrifugal approximation
/// `omega * s/(1-s) + lambda_adj * s/(1-s)^2`.
///
/// Negative values are accepted (the scheme is adjustable by construction);
/// callers that care should warn.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproximationParams {
    pub omega: f64,
    pub lambda_adj: f64,
}

impl ApproximationParams {
    pub fn validate(&self) -> Result<()> {
        if !self.omega.is_finite() {
            return Err(Error::InvalidParameter {
                name: "omega",
                message: format!("must be finite, got {}", self.omega),
            });
        }
        if !self.lambda_adj.is_finite() {
            return Err(Error::InvalidParameter {
                name: "lambda",
                message: format!("must be finite, got {}", self.lambda_adj),
            });
        }
        Ok(())
    }
}

/// Named members of the potential family, each a parameter restriction of
/// the combined form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Combined,
    /// V1 = V2 = 0.
    DeformedHylleraas,
    /// V0 = 0.
    Eckart,
    /// -V1 s/(1-s); strength taken from `v1`.
    Hulthen,
    /// -V0 (1+s)/(1-s), i.e. a = -1, b = 1; strength taken from `v0`.
    RosenMorse,
}

/// How the centrifugal 1/r^2 term is modeled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentrifugalScheme {
    /// The exact 1/r^2.
    Exact,
    /// Greene–Aldrich: 4 alpha^2 s/(1-s)^2.
    GreeneAldrich,
    /// Two-parameter form omega s/(1-s) + lambda_adj s/(1-s)^2.
    Improved,
}

/// 1 - exp(-x) without cancellation at small x.
#[inline]
pub(crate) fn one_minus_exp_neg(x: f64) -> f64 {
    -(-x).exp_m1()
}

#[inline]
fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositiveRadius { r })
    }
}

/// Angular factor L = (D-1)(D-3)/4 + l(l+D-2) multiplying 1/r^2 in the
/// reduced radial equation.
pub fn angular_factor(l: u32, dim: u32) -> f64 {
    let d = f64::from(dim);
    let lf = f64::from(l);
    (d - 1.0) * (d - 3.0) / 4.0 + lf * (lf + d - 2.0)
}

/// Combined potential at radius `r`.
pub fn eval_combined(p: &PotentialParams, r: f64) -> Result<f64> {
    check_radius(r)?;
    let x = 2.0 * p.alpha * r;
    let s = (-x).exp();
    let oms = one_minus_exp_neg(x);
    Ok(p.v0 / p.b * (p.a - s) / oms - p.v1 * s / oms + p.v2 * s / (oms * oms))
}

/// A named family member at radius `r`.
pub fn eval_family(family: Family, p: &PotentialParams, r: f64) -> Result<f64> {
    let restricted = match family {
        Family::Combined => *p,
        Family::DeformedHylleraas => PotentialParams {
            v1: 0.0,
            v2: 0.0,
            ..*p
        },
        Family::Eckart => PotentialParams { v0: 0.0, ..*p },
        Family::Hulthen => PotentialParams {
            v0: 0.0,
            v2: 0.0,
            ..*p
        },
        Family::RosenMorse => PotentialParams {
            a: -1.0,
            b: 1.0,
            v1: 0.0,
            v2: 0.0,
            ..*p
        },
    };
    eval_combined(&restricted, r)
}

/// Continuum threshold V(r -> infinity) = a V0 / b.
pub fn threshold(p: &PotentialParams) -> f64 {
    p.a * p.v0 / p.b
}

/// Exact centrifugal energy (hbar^2 / 2 mu) L / r^2.
pub fn centrifugal_exact(l: u32, dim: u32, mass: f64, hbar: f64, r: f64) -> Result<f64> {
    check_radius(r)?;
    Ok(hbar * hbar / (2.0 * mass) * angular_factor(l, dim) / (r * r))
}

/// Greene–Aldrich approximant to 1/r^2: 4 alpha^2 s/(1-s)^2.
pub fn approx_inverse_r2_ga(alpha: f64, r: f64) -> Result<f64> {
    check_radius(r)?;
    let x = 2.0 * alpha * r;
    let s = (-x).exp();
    let oms = one_minus_exp_neg(x);
    let strength = 4.0 * alpha * alpha;
    Ok(strength * (s / (oms * oms)))
}

/// Two-parameter approximant to 1/r^2: omega s/(1-s) + lambda_adj s/(1-s)^2.
pub fn approx_inverse_r2_improved(alpha: f64, ap: &ApproximationParams, r: f64) -> Result<f64> {
    check_radius(r)?;
    let x = 2.0 * alpha * r;
    let s = (-x).exp();
    let oms = one_minus_exp_neg(x);
    Ok(ap.omega * (s / oms) + ap.lambda_adj * (s / (oms * oms)))
}

/// Combined potential plus the centrifugal term under the given scheme.
pub fn effective_potential(
    p: &PotentialParams,
    ap: &ApproximationParams,
    l: u32,
    dim: u32,
    mass: f64,
    hbar: f64,
    scheme: CentrifugalScheme,
    r: f64,
) -> Result<f64> {
    let v = eval_combined(p, r)?;
    let pref = hbar * hbar / (2.0 * mass) * angular_factor(l, dim);
    let k = match scheme {
        CentrifugalScheme::Exact => 1.0 / (r * r),
        CentrifugalScheme::GreeneAldrich => approx_inverse_r2_ga(p.alpha, r)?,
        CentrifugalScheme::Improved => approx_inverse_r2_improved(p.alpha, ap, r)?,
    };
    Ok(v + pref * k)
}
