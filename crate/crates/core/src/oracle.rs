//! Independent finite-difference eigensolver for the reduced radial
//! equation.
//!
//! Three-point central differences on a uniform grid with Dirichlet
//! boundaries give a symmetric tridiagonal operator; its lowest eigenvalues
//! come from Sturm-sequence bisection. This path shares no algebra with the
//! closed-form spectrum, so agreement (or the absence of a bound state) is
//! evidence about the closed form, not a tautology.

use crate::error::Result;
use crate::potentials::{effective_potential, threshold, CentrifugalScheme};
use crate::spectrum::{bound_energy, ProblemSpec};

/// Uniform radial grid: `n` subintervals on [r_min, r_max], Dirichlet at
/// both ends, potential sampled only at the n-1 interior points.
///
/// `r_min = 0` is allowed (the reduced wavefunction vanishes at the origin);
/// the smallest sampled radius is then one step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub r_min: f64,
    pub r_max: f64,
    pub n: usize,
}

impl GridSpec {
    /// Default grid for screening parameter `alpha`: [0, 40/alpha] with
    /// 8000 subintervals.
    pub fn for_alpha(alpha: f64) -> Self {
        GridSpec {
            r_min: 0.0,
            r_max: 40.0 / alpha,
            n: 8000,
        }
    }

    pub fn step(&self) -> f64 {
        (self.r_max - self.r_min) / self.n as f64
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(crate::error::Error::InvalidParameter {
                name: "grid.n",
                message: format!("need at least 2 subintervals, got {}", self.n),
            });
        }
        if !(self.r_min >= 0.0 && self.r_max > self.r_min && self.r_max.is_finite()) {
            return Err(crate::error::Error::InvalidParameter {
                name: "grid",
                message: format!(
                    "need 0 <= r_min < r_max finite, got [{}, {}]",
                    self.r_min, self.r_max
                ),
            });
        }
        Ok(())
    }
}

/// Discretized radial Hamiltonian: symmetric tridiagonal with constant
/// off-diagonal -hbar^2 / (2 mu h^2).
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    pub diag: Vec<f64>,
    pub off: f64,
    pub grid: GridSpec,
}

/// Outcome of a closed-form vs. finite-difference comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Oracle eigenvalue found and it matches the closed form.
    Confirmed,
    /// The oracle finds no such bound state below threshold.
    Spurious,
    /// An oracle eigenvalue exists but differs beyond the confirmation
    /// tolerance (centrifugal model error and discretization mix here).
    ApproximationError,
}

/// Closed-form vs. oracle comparison for one (n, l, D) level.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub n: u32,
    pub l: u32,
    pub dim: u32,
    pub e_closed: f64,
    pub closed_physical: bool,
    /// `None` when fewer than n+1 eigenvalues sit below threshold.
    pub e_oracle: Option<f64>,
    pub delta: Option<f64>,
    pub threshold: f64,
    pub verdict: Verdict,
}

/// Relative agreement below which a comparison counts as Confirmed.
pub const CONFIRM_REL_TOL: f64 = 1e-3;

/// Margin below threshold for counting bound eigenvalues; grid artifacts
/// cluster at the continuum edge.
pub const THRESHOLD_MARGIN: f64 = 1e-9;

/// Build the finite-difference operator for the (l, D) channel.
pub fn discretize(
    spec: &ProblemSpec,
    l: u32,
    dim: u32,
    scheme: CentrifugalScheme,
    grid: GridSpec,
) -> Result<TridiagonalOperator> {
    grid.validate()?;
    let h = grid.step();
    let kinetic = spec.hbar * spec.hbar / (spec.mass * h * h);
    let mut diag = Vec::with_capacity(grid.n - 1);
    for i in 1..grid.n {
        let r = grid.r_min + h * i as f64;
        let v = effective_potential(
            &spec.potential,
            &spec.approx,
            l,
            dim,
            spec.mass,
            spec.hbar,
            scheme,
            r,
        )?;
        diag.push(kinetic + v);
    }
    Ok(TridiagonalOperator {
        diag,
        off: -0.5 * kinetic,
        grid,
    })
}

/// Number of eigenvalues strictly below `x` (Sturm sequence via the LDL^T
/// pivot signs).
pub fn count_below(op: &TridiagonalOperator, x: f64) -> usize {
    let off_sq = op.off * op.off;
    let mut count = 0;
    // off_sq / inf = 0, so the first pivot is just d - x.
    let mut q = f64::INFINITY;
    for &d in &op.diag {
        q = if q == 0.0 {
            // Shift a vanished pivot off zero; the count is unaffected.
            d - x - off_sq / f64::MIN_POSITIVE
        } else {
            d - x - off_sq / q
        };
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `k` smallest eigenvalues, ascending, by bisection on the Sturm
/// count.
pub fn lowest_eigenvalues(op: &TridiagonalOperator, k: usize) -> Vec<f64> {
    let n = op.diag.len();
    let k = k.min(n);
    // Gershgorin bounds.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (i, &d) in op.diag.iter().enumerate() {
        let reach = if i == 0 || i == n - 1 {
            op.off.abs() * if n == 1 { 0.0 } else { 1.0 }
        } else {
            2.0 * op.off.abs()
        };
        lo = lo.min(d - reach);
        hi = hi.max(d + reach);
    }
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let mut a = if let Some(&prev) = out.last() { prev } else { lo };
        let mut b = hi;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if (b - a) < 2.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if count_below(op, mid) <= j {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}

/// Compare the closed-form level against the finite-difference spectrum.
pub fn compare(
    spec: &ProblemSpec,
    n: u32,
    l: u32,
    dim: u32,
    scheme: CentrifugalScheme,
    grid: GridSpec,
) -> Result<ComparisonReport> {
    let closed = bound_energy(spec, n, l, dim)?;
    let op = discretize(spec, l, dim, scheme, grid)?;
    let thr = threshold(&spec.potential);
    let cutoff = thr - THRESHOLD_MARGIN;
    let bound_count = count_below(&op, cutoff);

    if bound_count < (n as usize) + 1 {
        return Ok(ComparisonReport {
            n,
            l,
            dim,
            e_closed: closed.energy,
            closed_physical: closed.physical,
            e_oracle: None,
            delta: None,
            threshold: thr,
            verdict: Verdict::Spurious,
        });
    }

    let eigenvalues = lowest_eigenvalues(&op, (n as usize) + 1);
    let e_oracle = eigenvalues[n as usize];
    let delta = closed.energy - e_oracle;
    let verdict = if delta.abs() <= CONFIRM_REL_TOL * 1.0f64.max(closed.energy.abs()) {
        Verdict::Confirmed
    } else {
        Verdict::ApproximationError
    };
    Ok(ComparisonReport {
        n,
        l,
        dim,
        e_closed: closed.energy,
        closed_physical: closed.physical,
        e_oracle: Some(e_oracle),
        delta: Some(delta),
        threshold: thr,
        verdict,
    })
}
