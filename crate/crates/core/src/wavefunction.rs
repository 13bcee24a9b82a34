//! Radial wavefunctions: Jacobi polynomial evaluation, the reduced radial
//! function U(r), numerical normalization, node counting, and a
//! finite-difference residual check that the closed-form energy and
//! wavefunction jointly solve the (approximated) radial equation.
//!
//! The printed forms of the wavefunction disagree among themselves on the
//! (1 +/- s) factor, the Jacobi parameters, and the argument. The form used
//! here,
//!
//! ```text
//! U(r) = s^mu_bar (1 - s)^((1+v)/2) P_n^(2 mu_bar, v)(1 - 2 s),   s = e^(-2 alpha r)
//! ```
//!
//! is the one consistent with the prefactor exponents c12/c13, with both
//! boundary conditions, and with the ODE residual test below.

use crate::error::{Error, Result};
use crate::potentials::{approx_inverse_r2_improved, eval_combined, one_minus_exp_neg};
use crate::spectrum::{BoundStateResult, ProblemSpec};

/// A normalizable closed-form level, ready for pointwise evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialState {
    pub n: u32,
    pub l: u32,
    pub dim: u32,
    /// Decay exponent sqrt(eps^2 + gamma a) > 0.
    pub mu_bar: f64,
    /// sqrt(1 + 4 phi) > 0.
    pub v: f64,
    pub energy: f64,
    /// Multiplicative normalization constant; `None` until normalized.
    pub normalization: Option<f64>,
}

impl RadialState {
    /// Build from a closed-form level; fails for non-normalizable states.
    pub fn from_bound(state: &BoundStateResult) -> Result<Self> {
        if !state.physical {
            return Err(Error::NotNormalizable {
                n: state.n,
                l: state.l,
                dim: state.dim,
                reason: state
                    .spurious_reason
                    .clone()
                    .unwrap_or_else(|| "signed bracket not positive".into()),
            });
        }
        if state.reduced.v <= 0.0 {
            return Err(Error::NotNormalizable {
                n: state.n,
                l: state.l,
                dim: state.dim,
                reason: format!("v = {} <= 0", state.reduced.v),
            });
        }
        Ok(RadialState {
            n: state.n,
            l: state.l,
            dim: state.dim,
            mu_bar: state.signed_bracket,
            v: state.reduced.v,
            energy: state.energy,
            normalization: None,
        })
    }
}

/// Jacobi polynomial P_n^(a, b)(x) by the degree recurrence.
///
/// Exact closed forms for n = 0, 1; the three-term recurrence above that.
pub fn jacobi(n: u32, a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a > -1.0) {
        return Err(Error::ParameterOutOfDomain {
            name: "a",
            value: a,
            constraint: "a > -1",
        });
    }
    if !(b > -1.0) {
        return Err(Error::ParameterOutOfDomain {
            name: "b",
            value: b,
            constraint: "b > -1",
        });
    }
    if n == 0 {
        return Ok(1.0);
    }
    let apb = a + b;
    let p1 = 0.5 * ((a - b) + (apb + 2.0) * x);
    if n == 1 {
        return Ok(p1);
    }
    let mut prev = 1.0;
    let mut cur = p1;
    for m in 2..=n {
        let mf = f64::from(m);
        let c = 2.0 * mf + apb;
        // 2m(m+a+b)(c-2) P_m = (c-1)[c(c-2)x + (a^2-b^2)] P_{m-1}
        //                      - 2(m+a-1)(m+b-1)c P_{m-2}
        // The grouping keeps every coefficient exactly (anti)symmetric
        // under (a, b, x) -> (b, a, -x), so the symmetry identity holds
        // bitwise, not just to rounding.
        let a1 = 2.0 * mf * (mf + apb) * (c - 2.0);
        let a2 = (c - 1.0) * (c * (c - 2.0) * x + (a * a - b * b));
        let a3 = 2.0 * (mf + a - 1.0) * (mf + b - 1.0) * c;
        let next = (a2 * cur - a3 * prev) / a1;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// P_n^(a, b)(1) = binom(n + a, n), computed as a product.
fn jacobi_at_one(n: u32, a: f64) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * (a + f64::from(k)) / f64::from(k))
}

/// Unnormalized reduced radial function U(r).
pub fn radial_u_unnormalized(spec: &ProblemSpec, state: &RadialState, r: f64) -> Result<f64> {
    if r <= 0.0 {
        return Err(Error::NonPositiveRadius { r });
    }
    let x = 2.0 * spec.potential.alpha * r;
    let s = (-x).exp();
    let oms = one_minus_exp_neg(x);
    let poly = jacobi(state.n, 2.0 * state.mu_bar, state.v, 1.0 - 2.0 * s)?;
    Ok(s.powf(state.mu_bar) * oms.powf(0.5 * (1.0 + state.v)) * poly)
}

/// U(r) scaled by the stored normalization constant (1 if not normalized).
pub fn radial_u(spec: &ProblemSpec, state: &RadialState, r: f64) -> Result<f64> {
    Ok(state.normalization.unwrap_or(1.0) * radial_u_unnormalized(spec, state, r)?)
}

/// Normalization constant N with integral of (N U)^2 over (0, infinity)
/// equal to 1.
///
/// Integrates on [0, R] with adaptive composite Gauss–Legendre panels; R is
/// chosen from the decay envelope |U| <= P_n(1) e^(-2 alpha mu_bar r) so the
/// discarded tail is far below the quadrature tolerance.
pub fn normalization(spec: &ProblemSpec, state: &RadialState) -> Result<f64> {
    let alpha = spec.potential.alpha;
    let rate = 4.0 * alpha * state.mu_bar;
    let peak = jacobi_at_one(state.n, 2.0 * state.mu_bar).abs().max(1.0);
    // Tail bound: peak^2 e^(-rate R) / rate <= ~1e-16 of the integral scale.
    let r_tail = (2.0 * peak.ln() + 40.0) / rate;
    let r_max = (60.0 / alpha).max(r_tail);
    // Panels must resolve the decay scale 1/(alpha (1 + mu_bar)) from the
    // first refinement level, or agreement between levels is meaningless.
    let resolution = (r_max * alpha * (1.0 + state.mu_bar) / 2.0).ceil();
    let start_panels = (resolution.max(32.0).min(32768.0) as usize).next_power_of_two();
    let integral = integrate_adaptive(
        |r| {
            let u = radial_u_unnormalized(spec, state, r).unwrap_or(0.0);
            u * u
        },
        0.0,
        r_max,
        NORMALIZATION_TOL,
        start_panels,
    )?;
    if !(integral > 0.0) {
        return Err(Error::QuadratureFailure {
            achieved: integral,
            requested: NORMALIZATION_TOL,
        });
    }
    Ok(1.0 / integral.sqrt())
}

/// Normalize a state in place, returning the updated copy.
pub fn normalized(spec: &ProblemSpec, state: &RadialState) -> Result<RadialState> {
    let n = normalization(spec, state)?;
    Ok(RadialState {
        normalization: Some(n),
        ..*state
    })
}

/// Relative quadrature tolerance for the normalization integral.
pub const NORMALIZATION_TOL: f64 = 1e-10;

const GL10_NODES: [(f64, f64); 10] = [
    (-0.9739065285171717, 0.06667134430868807),
    (-0.8650633666889845, 0.14945134915058036),
    (-0.6794095682990244, 0.219086362515982),
    (-0.4333953941292472, 0.2692667193099965),
    (-0.14887433898163122, 0.295524224714753),
    (0.14887433898163122, 0.295524224714753),
    (0.4333953941292472, 0.2692667193099965),
    (0.6794095682990244, 0.219086362515982),
    (0.8650633666889845, 0.14945134915058036),
    (0.9739065285171717, 0.06667134430868807),
];

fn gl10_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for (x, w) in GL10_NODES {
        sum += w * f(mid + half * x);
    }
    sum * half
}

/// Composite 10-point Gauss–Legendre with panel doubling until two
/// consecutive refinements both agree to `tol` relative.
fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    start_panels: usize,
) -> Result<f64> {
    let mut panels = start_panels.max(2);
    let mut prev = composite(&f, a, b, panels);
    let mut agreed_once = false;
    loop {
        panels *= 2;
        let cur = composite(&f, a, b, panels);
        let err = (cur - prev).abs();
        if err <= tol * 1.0f64.max(cur.abs()) {
            if agreed_once {
                return Ok(cur);
            }
            agreed_once = true;
        } else {
            agreed_once = false;
        }
        if panels >= 1 << 21 {
            return Err(Error::QuadratureFailure {
                achieved: err,
                requested: tol,
            });
        }
        prev = cur;
    }
}

fn composite<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|i| gl10_panel(f, a + i as f64 * h, a + (i + 1) as f64 * h))
        .sum()
}

/// Number of strict sign changes of U on the interior of `window`.
pub fn count_nodes(
    spec: &ProblemSpec,
    state: &RadialState,
    window: (f64, f64),
    samples: usize,
) -> usize {
    let (lo, hi) = window;
    let samples = samples.max(2);
    let step = (hi - lo) / (samples - 1) as f64;
    let mut nodes = 0;
    let mut last_sign = 0i8;
    for i in 0..samples {
        let r = lo + step * i as f64;
        let Ok(u) = radial_u_unnormalized(spec, state, r) else {
            continue;
        };
        let sign = if u > 0.0 {
            1
        } else if u < 0.0 {
            -1
        } else {
            0
        };
        if sign != 0 {
            if last_sign != 0 && sign != last_sign {
                nodes += 1;
            }
            last_sign = sign;
        }
    }
    nodes
}

/// Default node-counting window (1e-3 / alpha, 40 / alpha).
pub fn default_node_window(alpha: f64) -> (f64, f64) {
    (1e-3 / alpha, 40.0 / alpha)
}

/// Maximum relative residual of U against the radial equation it was built
/// under, using central differences of step `h` on [r_min, r_max].
///
/// The centrifugal model matches the construction: absent for l = 0, D = 3,
/// the two-parameter approximant otherwise.
pub fn ode_residual(
    spec: &ProblemSpec,
    state: &RadialState,
    r_min: f64,
    r_max: f64,
    h: f64,
) -> Result<f64> {
    let steps = ((r_max - r_min) / h).floor() as usize;
    let mut u = Vec::with_capacity(steps + 1);
    let mut grid = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        let r = r_min + h * i as f64;
        grid.push(r);
        u.push(radial_u(spec, state, r)?);
    }
    let two_mu_over_hbar2 = 2.0 * spec.mass / (spec.hbar * spec.hbar);
    let big_l = crate::potentials::angular_factor(state.l, state.dim);
    let centrifugal_free = state.l == 0 && state.dim == 3;

    let mut max_res = 0.0f64;
    let mut max_scale = 0.0f64;
    for i in 1..steps {
        let upp = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
        let r = grid[i];
        let t2 = two_mu_over_hbar2 * (state.energy - eval_combined(&spec.potential, r)?) * u[i];
        let t3 = if centrifugal_free {
            0.0
        } else {
            big_l * approx_inverse_r2_improved(spec.potential.alpha, &spec.approx, r)? * u[i]
        };
        let res = upp + t2 - t3;
        max_res = max_res.max(res.abs());
        max_scale = max_scale.max(upp.abs() + t2.abs() + t3.abs());
    }
    if max_scale == 0.0 {
        return Ok(0.0);
    }
    Ok(max_res / max_scale)
}
