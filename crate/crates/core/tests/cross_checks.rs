//! Cross-module consistency: the parametric engine, the closed-form
//! spectrum, the wavefunction factors, and the finite-difference oracle
//! must all tell the same story about the same instances.

use eckart_hylleraas::error::Error;
use eckart_hylleraas::nu_parametric::{energy_condition_lhs, wave_factors};
use eckart_hylleraas::oracle::{compare, GridSpec, Verdict};
use eckart_hylleraas::potentials::{ApproximationParams, CentrifugalScheme, PotentialParams};
use eckart_hylleraas::spectrum::{bound_energy, nu_instance, spectrum_table, Layout, ProblemSpec};
use eckart_hylleraas::wavefunction::RadialState;

fn hulthen_spec(v: f64, alpha: f64) -> ProblemSpec {
    ProblemSpec {
        potential: PotentialParams {
            v0: 0.0,
            v1: v,
            v2: 0.0,
            a: 0.0,
            b: 1.0,
            alpha,
        },
        approx: ApproximationParams {
            omega: 0.0,
            lambda_adj: 4.0 * alpha * alpha,
        },
        mass: 1.0,
        hbar: 1.0,
    }
}

#[test]
fn wave_factor_exponents_match_radial_state() {
    // c12 and c13 from the generic engine are exactly the exponents the
    // wavefunction module uses: mu_bar and (1 + v)/2; the Jacobi indices
    // are c10 - 1 = 2 mu_bar and c11 = v.
    let spec = hulthen_spec(2.0, 0.1);
    for n in 0..=3 {
        for l in 0..=2 {
            let bound = bound_energy(&spec, n, l, 3).unwrap();
            if !bound.physical {
                continue;
            }
            let state = RadialState::from_bound(&bound).unwrap();
            let (coeffs, derived) = nu_instance(&bound.reduced);
            let factors = wave_factors(&coeffs, &derived).unwrap();
            let tol = 1e-10 * (1.0 + state.mu_bar);
            assert!((factors.c12 - state.mu_bar).abs() < tol, "c12 (n={n}, l={l})");
            assert!(
                (factors.c13 - 0.5 * (1.0 + state.v)).abs() < tol,
                "c13 (n={n}, l={l})"
            );
            assert!(
                (factors.c10 - (1.0 + 2.0 * state.mu_bar)).abs() < tol,
                "c10 (n={n}, l={l})"
            );
            assert!((factors.c11 - state.v).abs() < tol, "c11 (n={n}, l={l})");
        }
    }
}

#[test]
fn quantization_condition_distinguishes_sign_branch() {
    // At the closed-form level the generic condition vanishes with the
    // positive root and misses by 2 (2 sqrt(c9) + 1) mu_bar with the
    // negative one.
    let spec = ProblemSpec {
        potential: PotentialParams {
            v0: 0.0,
            v1: 4.0,
            v2: 0.5,
            a: 2.0,
            b: 50.0,
            alpha: 0.5,
        },
        approx: ApproximationParams {
            omega: 0.0,
            lambda_adj: 0.0,
        },
        mass: 1.0,
        hbar: 1.0,
    };
    let bound = bound_energy(&spec, 0, 0, 3).unwrap();
    let (coeffs, derived) = nu_instance(&bound.reduced);
    let lhs_pos = energy_condition_lhs(0, &coeffs, &derived, bound.signed_bracket).unwrap();
    assert!(lhs_pos.abs() <= 1e-9, "lhs(+mu_bar) = {lhs_pos}");

    let lhs_neg = energy_condition_lhs(0, &coeffs, &derived, -bound.signed_bracket).unwrap();
    let expected_gap = 2.0 * (2.0 * derived.c9.sqrt() + 1.0) * bound.signed_bracket;
    assert!(
        (lhs_neg.abs() - expected_gap.abs()).abs() < 1e-9,
        "lhs(-mu_bar) = {lhs_neg}, gap = {expected_gap}"
    );
}

#[test]
fn oracle_flags_centrifugal_model_error() {
    // For l > 0 the closed form is built on the approximate centrifugal
    // term while the Exact-scheme oracle uses 1/r^2; the gap shows up as
    // ApproximationError, not Confirmed.
    let spec = hulthen_spec(2.0, 0.25);
    let grid = GridSpec {
        r_min: 0.0,
        r_max: 120.0,
        n: 24000,
    };
    let report = compare(&spec, 0, 1, 3, CentrifugalScheme::Exact, grid).unwrap();
    assert!(report.closed_physical);
    match report.verdict {
        Verdict::ApproximationError => {
            let delta = report.delta.unwrap();
            assert!(delta.abs() > 1e-4, "delta = {delta}");
        }
        Verdict::Confirmed => {
            // Acceptable only if the model error happens to be tiny here;
            // it is not for alpha = 0.25.
            panic!("expected a visible centrifugal model error");
        }
        Verdict::Spurious => panic!("state exists; verdict must not be Spurious"),
    }

    // The same level compared under the scheme it was built with is
    // confirmed.
    let report = compare(&spec, 0, 1, 3, CentrifugalScheme::Improved, grid).unwrap();
    assert_eq!(report.verdict, Verdict::Confirmed);
}

#[test]
fn spectrum_table_carries_row_errors() {
    // A strongly negative lambda_adj drives phi below -1/4 for l > 0;
    // those rows must come back as markers, not panic or vanish.
    let spec = ProblemSpec {
        potential: PotentialParams {
            v0: 1.0,
            v1: 0.01,
            v2: 0.5,
            a: 2.0,
            b: 50.0,
            alpha: 1.0,
        },
        approx: ApproximationParams {
            omega: 1.6,
            lambda_adj: -5.0,
        },
        mass: 1.0,
        hbar: 1.0,
    };
    let rows = spectrum_table(&spec, 2, Layout::Rectangular { l_max: 1 }, &[3]);
    assert_eq!(rows.len(), 6);
    let failed: Vec<_> = rows.iter().filter(|r| r.result.is_err()).collect();
    assert!(!failed.is_empty());
    for row in failed {
        assert!(row.l > 0, "l = 0 rows have phi >= 0 here");
        assert!(matches!(row.result, Err(Error::ComplexV { .. })));
    }
}

#[test]
fn closed_form_and_oracle_agree_across_hulthen_depths() {
    // s-wave levels are approximation-free, so everything down to the
    // discretization error must agree.
    for &(v, alpha, n) in &[(1.0f64, 0.5f64, 0u32), (2.0, 0.25, 1), (2.0, 0.1, 2)] {
        let spec = hulthen_spec(v, alpha);
        let closed = bound_energy(&spec, n, 0, 3).unwrap();
        assert!(closed.physical);
        let grid = GridSpec {
            r_min: 0.0,
            r_max: 60.0 / alpha.max(0.25),
            n: 24000,
        };
        let report = compare(&spec, n, 0, 3, CentrifugalScheme::Exact, grid).unwrap();
        assert_eq!(
            report.verdict,
            Verdict::Confirmed,
            "V={v}, alpha={alpha}, n={n}: {report:?}"
        );
    }
}
