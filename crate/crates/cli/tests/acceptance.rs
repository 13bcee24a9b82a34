//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured numbers (run with `-- --nocapture` to see them). Every
//! tolerance is pinned here, not calibrated.

use std::process::Command;
use std::time::Instant;

use eckart_hylleraas::error::Error;
use eckart_hylleraas::oracle::{compare, count_below, discretize, GridSpec, Verdict};
use eckart_hylleraas::potentials::{
    approx_inverse_r2_ga, approx_inverse_r2_improved, eval_combined, threshold,
    ApproximationParams, CentrifugalScheme, PotentialParams,
};
use eckart_hylleraas::spectrum::{
    bound_energy, hulthen_energy, rosen_morse_energy, spectrum_table, Layout, ProblemSpec,
};
use eckart_hylleraas::wavefunction::{
    count_nodes, default_node_window, jacobi, normalized, ode_residual, radial_u, RadialState,
};
use ehspec::reference::{reference_value, REFERENCE_DIMS, TABLE_1};

fn table1_spec() -> ProblemSpec {
    ProblemSpec {
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
            lambda_adj: 3.2,
        },
        mass: 1.0,
        hbar: 1.0,
    }
}

fn eckart_spec() -> ProblemSpec {
    ProblemSpec {
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
    }
}

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

fn rosen_morse_spec(v: f64, alpha: f64) -> ProblemSpec {
    ProblemSpec {
        potential: PotentialParams {
            v0: v,
            v1: 0.0,
            v2: 0.0,
            a: -1.0,
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

const GRID_ALPHAS: [f64; 3] = [0.1, 0.5, 1.0];
const GRID_STRENGTHS: [f64; 3] = [0.5, 1.0, 2.0];

#[test]
fn criterion_01_table1_reproduction() {
    let start = Instant::now();
    let spec = table1_spec();
    let rows = spectrum_table(&spec, 5, Layout::Paper, &REFERENCE_DIMS);
    let mut cells = 0;
    let mut max_err = 0.0f64;
    for entry in &rows {
        let reference = reference_value(&TABLE_1, entry.n, entry.l, entry.dim)
            .expect("layout matches the published table");
        let energy = entry.result.as_ref().unwrap().energy;
        let err = (energy - reference).abs();
        max_err = max_err.max(err);
        assert!(
            err <= 1e-5,
            "(n={}, l={}, D={}): {energy} vs {reference}",
            entry.n,
            entry.l,
            entry.dim
        );
        cells += 1;
    }
    let elapsed = start.elapsed();
    assert_eq!(cells, 48);
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "criterion 1: PASS - 48/48 reference energies within 1e-5 \
         (max |dE| = {max_err:.2e}, {elapsed:?})"
    );
}

#[test]
fn criterion_02_interdimensional_degeneracy() {
    let spec = table1_spec();
    let mut checked = 0;
    for n in 0..=5 {
        for l in 0..=4 {
            for dim in 3..=8 {
                let lhs = bound_energy(&spec, n, l, dim + 2).unwrap().energy;
                let rhs = bound_energy(&spec, n, l + 1, dim).unwrap().energy;
                let tol = 1e-12 * lhs.abs().max(1.0);
                assert!(
                    (lhs - rhs).abs() <= tol,
                    "(n={n}, l={l}, D={dim}): {lhs} vs {rhs}"
                );
                checked += 1;
            }
        }
    }
    // The published coincidence: (2,0,5) and (2,1,3) share a value.
    let a = bound_energy(&spec, 2, 0, 5).unwrap().energy;
    let b = bound_energy(&spec, 2, 1, 3).unwrap().energy;
    assert!((a + 8.583619961).abs() < 1e-8);
    assert_eq!(a, b);
    println!(
        "criterion 2: PASS - E(n,l,D+2) = E(n,l+1,D) to 1e-12 relative over {checked} channels"
    );
}

#[test]
fn criterion_03_hulthen_reduction() {
    let mut checked = 0;
    let mut worst = 0.0f64;
    for &alpha in &GRID_ALPHAS {
        for &v in &GRID_STRENGTHS {
            let spec = hulthen_spec(v, alpha);
            for n in 0..=5 {
                for l in 0..=4 {
                    let general = match bound_energy(&spec, n, l, 3) {
                        Ok(state) => state.energy,
                        // A vanished bracket is the threshold level; the
                        // formula value there is a V0 / b = 0.
                        Err(Error::DegenerateState { .. }) => 0.0,
                        Err(e) => panic!("{e}"),
                    };
                    let special = hulthen_energy(v, alpha, 1.0, 1.0, n, l);
                    let tol = 1e-12 * 1.0f64.max(special.abs());
                    let err = (general - special).abs();
                    worst = worst.max(err / 1.0f64.max(special.abs()));
                    assert!(err <= tol, "alpha={alpha}, V={v}, n={n}, l={l}");
                    checked += 1;
                }
            }
        }
    }
    println!(
        "criterion 3: PASS - {checked} Hulthen levels match the closed form \
         (worst rel = {worst:.2e})"
    );
}

#[test]
fn criterion_04_rosen_morse_reduction() {
    let mut checked = 0;
    let mut worst = 0.0f64;
    for &alpha in &GRID_ALPHAS {
        for &v in &GRID_STRENGTHS {
            let spec = rosen_morse_spec(v, alpha);
            for n in 0..=5 {
                for l in 0..=4 {
                    let general = match bound_energy(&spec, n, l, 3) {
                        Ok(state) => state.energy,
                        // Threshold level: a V0 / b = -V, the additive
                        // offset alone.
                        Err(Error::DegenerateState { .. }) => -v,
                        Err(e) => panic!("{e}"),
                    };
                    let special = rosen_morse_energy(v, alpha, 1.0, 1.0, n, l);
                    let tol = 1e-12 * 1.0f64.max(special.abs());
                    let err = (general - special).abs();
                    worst = worst.max(err / 1.0f64.max(special.abs()));
                    assert!(err <= tol, "alpha={alpha}, V={v}, n={n}, l={l}");
                    checked += 1;
                }
            }
        }
    }
    println!(
        "criterion 4: PASS - {checked} Rosen-Morse levels match the closed form \
         including the -V offset (worst rel = {worst:.2e})"
    );
}

#[test]
fn criterion_05_swave_exactness_against_oracle() {
    let start = Instant::now();
    let spec = eckart_spec();
    let closed = bound_energy(&spec, 0, 0, 3).unwrap();
    assert!(closed.physical);
    assert!((closed.energy + 1.382982338594578).abs() < 1e-9);

    let mut errors = Vec::new();
    for n in [8000usize, 16000] {
        let grid = GridSpec {
            r_min: 0.0,
            r_max: 40.0,
            n,
        };
        let op = discretize(&spec, 0, 3, CentrifugalScheme::Exact, grid).unwrap();
        let oracle = eckart_hylleraas::oracle::lowest_eigenvalues(&op, 1)[0];
        errors.push((oracle - closed.energy).abs());
    }
    assert!(errors[1] <= 5e-4, "delta at N=16000 is {}", errors[1]);
    let ratio = errors[0] / errors[1];
    assert!(
        (3.5..=4.5).contains(&ratio),
        "halving ratio = {ratio} ({errors:?})"
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!(
        "criterion 5: PASS - E = {:.10}, oracle delta {:.2e} at N=16000, \
         halving ratio {ratio:.2} ({elapsed:?})",
        closed.energy, errors[1]
    );
}

/// Every physical state of the criterion 3-5 grids.
fn physical_states() -> Vec<(ProblemSpec, u32, u32)> {
    let mut out = Vec::new();
    for &alpha in &GRID_ALPHAS {
        for &v in &GRID_STRENGTHS {
            for spec in [hulthen_spec(v, alpha), rosen_morse_spec(v, alpha)] {
                for n in 0..=5 {
                    for l in 0..=4 {
                        if let Ok(state) = bound_energy(&spec, n, l, 3) {
                            if state.physical {
                                out.push((spec, n, l));
                            }
                        }
                    }
                }
            }
        }
    }
    out.push((eckart_spec(), 0, 0));
    out
}

#[test]
fn criterion_06_ode_residual() {
    let start = Instant::now();
    let states = physical_states();
    let mut worst = 0.0f64;
    for (spec, n, l) in &states {
        let bound = bound_energy(spec, *n, *l, 3).unwrap();
        let state = RadialState::from_bound(&bound).unwrap();
        let res = ode_residual(spec, &state, 0.1, 15.0, 1e-4).unwrap();
        worst = worst.max(res);
        assert!(
            res <= 1e-5,
            "V1={}, V0={}, alpha={}, n={n}, l={l}: residual {res:.2e}",
            spec.potential.v1,
            spec.potential.v0,
            spec.potential.alpha
        );
    }
    println!(
        "criterion 6: PASS - max relative ODE residual {worst:.2e} over {} physical states \
         ({:?})",
        states.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_07_node_counts() {
    let spec = hulthen_spec(2.0, 0.1);
    for n in 0..=5u32 {
        let bound = bound_energy(&spec, n, 0, 3).unwrap();
        let state = RadialState::from_bound(&bound).unwrap();
        let nodes = count_nodes(&spec, &state, default_node_window(0.1), 20000);
        assert_eq!(nodes as u32, n, "n = {n}");
    }
    // A second instance with l > 0 channels.
    let spec = rosen_morse_spec(2.0, 0.1);
    for n in 0..=5u32 {
        let bound = bound_energy(&spec, n, 1, 3).unwrap();
        assert!(bound.physical);
        let state = RadialState::from_bound(&bound).unwrap();
        let nodes = count_nodes(&spec, &state, default_node_window(0.1), 20000);
        assert_eq!(nodes as u32, n, "l=1, n = {n}");
    }
    println!("criterion 7: PASS - count_nodes = n for n <= 5 on two physical instances");
}

#[test]
fn criterion_08_greene_aldrich_error_law() {
    let mut worst = 0.0f64;
    for &alpha in &[0.05f64, 0.2, 1.0, 3.0] {
        // alpha * r <= 0.05.
        for i in 1..=100 {
            let x = 0.05 * f64::from(i) / 100.0;
            let r = x / alpha;
            let ga = approx_inverse_r2_ga(alpha, r).unwrap();
            let rel = (ga - 1.0 / (r * r)).abs() * r * r;
            let law = x * x / 3.0;
            let dev = (rel / law - 1.0).abs();
            worst = worst.max(dev);
            assert!(dev <= 0.05, "alpha={alpha}, x={x}: deviation {dev}");
        }
        // Bit-identity of the improved scheme at the standard coefficients.
        let standard = ApproximationParams {
            omega: 0.0,
            lambda_adj: 4.0 * alpha * alpha,
        };
        for i in 1..=1000 {
            let r = 0.02 * f64::from(i);
            let ga = approx_inverse_r2_ga(alpha, r).unwrap();
            let imp = approx_inverse_r2_improved(alpha, &standard, r).unwrap();
            assert_eq!(ga.to_bits(), imp.to_bits(), "alpha={alpha}, r={r}");
        }
    }
    println!(
        "criterion 8: PASS - GA error law within 5% of (alpha r)^2/3 \
         (worst deviation {worst:.3}); improved(0, 4a^2) bit-identical to GA"
    );
}

#[test]
fn criterion_09_spurious_state_exposure() {
    let spec = table1_spec();
    let thr = threshold(&spec.potential);
    assert_eq!(thr, 0.04);

    // The potential sits strictly above its own asymptote everywhere. The
    // gap in factored, cancellation-free form is
    //   s/(1-s) * [(a-1) V0/b - V1 + V2/(1-s)],
    // strictly positive for every finite r; assert it on the dense grid,
    // and assert the subtracted form wherever the gap is representable
    // above one ulp of the threshold (it underflows past r ~ 19.6).
    let p = &spec.potential;
    let mut min_gap = f64::INFINITY;
    for i in 0..40000u32 {
        let r = 1e-3 + (60.0 - 1e-3) * f64::from(i) / 39999.0;
        let s = (-2.0 * p.alpha * r).exp();
        let oms = -(-2.0f64 * p.alpha * r).exp_m1();
        let gap = s / oms * ((p.a - 1.0) * p.v0 / p.b - p.v1 + p.v2 / oms);
        assert!(gap > 0.0, "gap({r}) = {gap}");
        min_gap = min_gap.min(gap);
        let v = eval_combined(p, r).unwrap();
        assert!(v >= thr, "V({r}) = {v} dipped below threshold {thr}");
        if r <= 19.0 {
            assert!(v > thr, "V({r}) = {v} not strictly above threshold {thr}");
        }
    }

    // The oracle finds no eigenvalue below threshold.
    let op = discretize(
        &spec,
        0,
        3,
        CentrifugalScheme::Exact,
        GridSpec::for_alpha(1.0),
    )
    .unwrap();
    assert_eq!(count_below(&op, thr - 1e-9), 0);
    let report = compare(
        &spec,
        0,
        0,
        3,
        CentrifugalScheme::Exact,
        GridSpec::for_alpha(1.0),
    )
    .unwrap();
    assert_eq!(report.verdict, Verdict::Spurious);
    assert_eq!(report.e_oracle, None);
    // The closed form still reproduces the published number (criterion 1).
    assert!((report.e_closed + 0.693561969).abs() < 1e-8);

    // And the CLI exit-code contract: validate exits 3.
    let out = Command::new(env!("CARGO_BIN_EXE_ehspec"))
        .args(["validate", "--n", "0", "--l", "0", "--dim", "3", "--grid-n", "4000"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    println!(
        "criterion 9: PASS - V > threshold on a dense grid (min gap {min_gap:.2e}), \
         oracle reports no bound state, validate exits 3"
    );
}

#[test]
fn criterion_10_published_tables_2_and_3_diff_only() {
    // Tables 2 and 3 are not numeric targets; the diff runs and shows the
    // documented gap.
    let out = Command::new(env!("CARGO_BIN_EXE_ehspec"))
        .args([
            "--alpha", "5", "--omega", "1.7", "--lambda", "3.3",
            "spectrum", "--diff-paper", "2",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let (header, rows) = ehspec::emit::parse_csv(&text).unwrap();
    assert_eq!(header, ["n", "l", "D", "energy", "physical", "mu_bar", "paper", "delta"]);
    let first = &rows[0];
    let computed: f64 = first[3].parse().unwrap();
    let published: f64 = first[6].parse().unwrap();
    assert!(
        (computed + 12.713774878).abs() < 1e-6,
        "computed (0,0,3) = {computed}"
    );
    assert_eq!(published, -113.1097402);
    assert!((computed - published).abs() > 100.0);

    let out = Command::new(env!("CARGO_BIN_EXE_ehspec"))
        .args([
            "--alpha", "5", "--omega", "12", "--lambda", "3.1",
            "spectrum", "--diff-paper", "3",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let (_, rows) = ehspec::emit::parse_csv(&text).unwrap();
    // The source prints "-" at (0,0,3): the paper cell stays empty.
    assert_eq!(rows[0][6], "");
    println!(
        "criterion 10: PASS - diff-paper runs for tables 2 and 3; table 2 (0,0,3): \
         computed {computed:.4} vs published -113.1097 (not reproducible, as documented)"
    );
}

#[test]
fn criterion_11_jacobi_identities() {
    // Symmetry on a deterministic parameter sweep.
    let params: Vec<f64> = (0..12).map(|i| -0.9 + 5.9 * f64::from(i) / 11.0).collect();
    let xs: Vec<f64> = (0..21).map(|i| -1.0 + 2.0 * f64::from(i) / 20.0).collect();
    let mut worst_sym = 0.0f64;
    for n in 0..=20u32 {
        for &a in &params {
            for &b in &params {
                for &x in &xs {
                    let lhs = jacobi(n, a, b, -x).unwrap();
                    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                    let rhs = sign * jacobi(n, b, a, x).unwrap();
                    let scale = lhs.abs().max(rhs.abs()).max(1.0);
                    let dev = (lhs - rhs).abs() / scale;
                    worst_sym = worst_sym.max(dev);
                    assert!(dev <= 1e-12, "n={n}, a={a}, b={b}, x={x}");
                }
            }
        }
    }
    // Endpoint value P_n(1) = binom(n + a, n).
    let mut worst_end = 0.0f64;
    for n in 0..=10u32 {
        for &a in &params {
            for &b in &params {
                let got = jacobi(n, a, b, 1.0).unwrap();
                let expect = (1..=n).fold(1.0, |acc, k| acc * (a + f64::from(k)) / f64::from(k));
                let dev = (got - expect).abs() / expect.abs().max(1e-300);
                worst_end = worst_end.max(dev);
                assert!(dev <= 1e-10, "n={n}, a={a}, b={b}: {got} vs {expect}");
            }
        }
    }
    println!(
        "criterion 11: PASS - Jacobi symmetry to 1e-12 (worst {worst_sym:.2e}, n <= 20), \
         endpoint to 1e-10 (worst {worst_end:.2e}, n <= 10)"
    );
}

#[test]
fn criterion_12_normalization() {
    // Normalize, then re-integrate with an independent composite Simpson
    // rule at two resolutions (the second doubled).
    let cases = [
        (eckart_spec(), 0u32, 0u32),
        (eckart_spec(), 1, 0),
        (hulthen_spec(2.0, 0.1), 3, 0),
        (hulthen_spec(2.0, 0.1), 1, 2),
    ];
    let mut worst = 0.0f64;
    for (spec, n, l) in &cases {
        let bound = bound_energy(spec, *n, *l, 3).unwrap();
        let state = normalized(spec, &RadialState::from_bound(&bound).unwrap()).unwrap();
        // Integrate out to where the e^(-4 alpha mu_bar r) envelope of U^2,
        // including the polynomial peak, is below ~1e-20.
        let rate = 4.0 * spec.potential.alpha * state.mu_bar;
        let peak = (1..=*n).fold(1.0f64, |acc, k| {
            acc * (2.0 * state.mu_bar + f64::from(k)) / f64::from(k)
        });
        let r_max = (46.0 + 2.0 * peak.max(1.0).ln()) / rate;
        for panels in [1 << 17, 1 << 18] {
            let integral = simpson(
                |r| {
                    let u = radial_u(spec, &state, r).unwrap_or(0.0);
                    u * u
                },
                1e-12,
                r_max,
                panels,
            );
            let dev = (integral - 1.0).abs();
            worst = worst.max(dev);
            assert!(
                dev <= 1e-8,
                "n={n}, l={l}, panels={panels}: integral = {integral}"
            );
        }
    }
    println!(
        "criterion 12: PASS - normalized integrals equal 1 within 1e-8 under independent \
         re-quadrature at doubled node count (worst |I-1| = {worst:.2e})"
    );
}

/// Plain composite Simpson rule, independent of the library quadrature.
fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut sum = f(a) + f(b);
    for i in 1..panels {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += weight * f(a + h * i as f64);
    }
    sum * h / 3.0
}
