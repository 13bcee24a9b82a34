//! Subcommand implementations, kept independent of the argument parser so
//! they can be driven directly from tests.
//!
//! Exit codes: 0 success, 1 invalid input, 2 no such bound state,
//! 3 spurious state detected by validate.

use std::io::Write;

use eckart_hylleraas::error::Error;
use eckart_hylleraas::oracle::{compare, GridSpec, Verdict};
use eckart_hylleraas::potentials::{
    effective_potential, eval_family, CentrifugalScheme, Family,
};
use eckart_hylleraas::spectrum::{bound_energy, spectrum_table, Layout};
use eckart_hylleraas::wavefunction::{normalized, radial_u, RadialState};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::emit::{fmt_f64, to_csv};
use crate::reference::{reference_table, reference_value, REFERENCE_DIMS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NO_BOUND_STATE: i32 = 2;
pub const EXIT_SPURIOUS: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub struct SpectrumArgs {
    pub n_max: u32,
    pub layout: Layout,
    pub dims: Vec<u32>,
    pub physical_only: bool,
    pub diff_paper: Option<u8>,
}

fn error_code(e: &Error) -> &'static str {
    match e {
        Error::ComplexV { .. } => "ERR:complex-v",
        Error::DegenerateState { .. } => "ERR:degenerate",
        _ => "ERR:failed",
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> i32 {
    match out.write_all(text.as_bytes()) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            EXIT_INVALID
        }
    }
}

pub fn run_spectrum(
    cfg: &RunConfig,
    args: &SpectrumArgs,
    format: OutputFormat,
    out: &mut dyn Write,
) -> i32 {
    let spec = cfg.problem();
    // Diffing against a published table pins the row set to that table's
    // layout and dimensions.
    let (n_max, layout, dims): (u32, Layout, Vec<u32>) = match args.diff_paper {
        Some(_) => (5, Layout::Paper, REFERENCE_DIMS.to_vec()),
        None => (args.n_max, args.layout, args.dims.clone()),
    };
    let reference = match args.diff_paper {
        Some(idx) => match reference_table(idx) {
            Some(t) => Some(t),
            None => {
                eprintln!("error: --diff-paper takes 1, 2, or 3 (got {idx})");
                return EXIT_INVALID;
            }
        },
        None => None,
    };
    if dims.iter().any(|&d| d < 2) {
        eprintln!("error: dimensions must be >= 2");
        return EXIT_INVALID;
    }

    let entries = spectrum_table(&spec, n_max, layout, &dims);
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut json_rows: Vec<Value> = Vec::new();
    for entry in &entries {
        if args.physical_only {
            if let Ok(state) = &entry.result {
                if !state.physical {
                    continue;
                }
            } else {
                continue;
            }
        }
        let paper = reference
            .and_then(|t| reference_value(t, entry.n, entry.l, entry.dim));
        match &entry.result {
            Ok(state) => {
                let delta = paper.map(|p| state.energy - p);
                let mut row = vec![
                    entry.n.to_string(),
                    entry.l.to_string(),
                    entry.dim.to_string(),
                    fmt_f64(state.energy),
                    state.physical.to_string(),
                    fmt_f64(state.reduced.mu_bar),
                ];
                if reference.is_some() {
                    row.push(paper.map(fmt_f64).unwrap_or_default());
                    row.push(delta.map(fmt_f64).unwrap_or_default());
                }
                rows.push(row);
                let mut obj = json!({
                    "n": entry.n,
                    "l": entry.l,
                    "D": entry.dim,
                    "energy": state.energy,
                    "physical": state.physical,
                    "mu_bar": state.reduced.mu_bar,
                });
                if reference.is_some() {
                    obj["paper"] = paper.map_or(Value::Null, |p| json!(p));
                    obj["delta"] = delta.map_or(Value::Null, |d| json!(d));
                }
                json_rows.push(obj);
            }
            Err(e) => {
                let mut row = vec![
                    entry.n.to_string(),
                    entry.l.to_string(),
                    entry.dim.to_string(),
                    error_code(e).to_string(),
                    String::new(),
                    String::new(),
                ];
                if reference.is_some() {
                    row.push(paper.map(fmt_f64).unwrap_or_default());
                    row.push(String::new());
                }
                rows.push(row);
                json_rows.push(json!({
                    "n": entry.n,
                    "l": entry.l,
                    "D": entry.dim,
                    "error": e.to_string(),
                }));
            }
        }
    }

    let text = match format {
        OutputFormat::Csv => {
            let header: &[&str] = if reference.is_some() {
                &["n", "l", "D", "energy", "physical", "mu_bar", "paper", "delta"]
            } else {
                &["n", "l", "D", "energy", "physical", "mu_bar"]
            };
            to_csv(header, &rows)
        }
        OutputFormat::Json => format!("{:#}\n", Value::Array(json_rows)),
    };
    write_out(out, &text)
}

/// Uniform sample points, inclusive of both ends; a single sample sits at
/// r_min.
fn sample_points(r_min: f64, r_max: f64, samples: usize) -> Vec<f64> {
    if samples == 1 {
        return vec![r_min];
    }
    let step = (r_max - r_min) / (samples - 1) as f64;
    (0..samples).map(|i| r_min + step * i as f64).collect()
}

fn check_range(r_min: f64, r_max: f64, samples: usize) -> Result<(), String> {
    if !(r_min > 0.0) {
        return Err(format!("r-min must be > 0, got {r_min}"));
    }
    if r_max < r_min {
        return Err(format!("r-max {r_max} < r-min {r_min}"));
    }
    if samples == 0 {
        return Err("samples must be >= 1".into());
    }
    Ok(())
}

pub fn run_potential(
    cfg: &RunConfig,
    family: Family,
    r_min: f64,
    r_max: f64,
    samples: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> i32 {
    if let Err(msg) = check_range(r_min, r_max, samples) {
        eprintln!("error: {msg}");
        return EXIT_INVALID;
    }
    let spec = cfg.problem();
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for r in sample_points(r_min, r_max, samples) {
        let v = match eval_family(family, &spec.potential, r) {
            Ok(v) => v,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INVALID;
            }
        };
        rows.push(vec![fmt_f64(r), fmt_f64(v)]);
        json_rows.push(json!({"r": r, "value": v}));
    }
    let text = match format {
        OutputFormat::Csv => to_csv(&["r", "value"], &rows),
        OutputFormat::Json => format!("{:#}\n", Value::Array(json_rows)),
    };
    write_out(out, &text)
}

pub fn run_effective(
    cfg: &RunConfig,
    schemes: &[CentrifugalScheme],
    l: u32,
    dim: u32,
    r_min: f64,
    r_max: f64,
    samples: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> i32 {
    if let Err(msg) = check_range(r_min, r_max, samples) {
        eprintln!("error: {msg}");
        return EXIT_INVALID;
    }
    if schemes.is_empty() {
        eprintln!("error: at least one scheme is required");
        return EXIT_INVALID;
    }
    let spec = cfg.problem();
    let names: Vec<&str> = schemes
        .iter()
        .map(|s| match s {
            CentrifugalScheme::Exact => "exact",
            CentrifugalScheme::GreeneAldrich => "ga",
            CentrifugalScheme::Improved => "improved",
        })
        .collect();
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for r in sample_points(r_min, r_max, samples) {
        let mut row = vec![fmt_f64(r)];
        let mut obj = json!({"r": r});
        for (scheme, name) in schemes.iter().zip(&names) {
            let v = match effective_potential(
                &spec.potential,
                &spec.approx,
                l,
                dim,
                spec.mass,
                spec.hbar,
                *scheme,
                r,
            ) {
                Ok(v) => v,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INVALID;
                }
            };
            row.push(fmt_f64(v));
            obj[*name] = json!(v);
        }
        rows.push(row);
        json_rows.push(obj);
    }
    let text = match format {
        OutputFormat::Csv => {
            let mut header = vec!["r"];
            header.extend(&names);
            to_csv(&header, &rows)
        }
        OutputFormat::Json => format!("{:#}\n", Value::Array(json_rows)),
    };
    write_out(out, &text)
}

pub fn run_wavefunction(
    cfg: &RunConfig,
    n: u32,
    l: u32,
    dim: u32,
    r_min: f64,
    r_max: f64,
    samples: usize,
    normalize: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> i32 {
    if let Err(msg) = check_range(r_min, r_max, samples) {
        eprintln!("error: {msg}");
        return EXIT_INVALID;
    }
    let spec = cfg.problem();
    let bound = match bound_energy(&spec, n, l, dim) {
        Ok(b) => b,
        Err(e @ (Error::ComplexV { .. } | Error::DegenerateState { .. })) => {
            eprintln!("no bound state: {e}");
            return EXIT_NO_BOUND_STATE;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID;
        }
    };
    let state = match RadialState::from_bound(&bound) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("no bound state: {e}");
            return EXIT_NO_BOUND_STATE;
        }
    };
    let state = if normalize {
        match normalized(&spec, &state) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INVALID;
            }
        }
    } else {
        state
    };
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for r in sample_points(r_min, r_max, samples) {
        let u = match radial_u(&spec, &state, r) {
            Ok(u) => u,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INVALID;
            }
        };
        rows.push(vec![fmt_f64(r), fmt_f64(u)]);
        json_rows.push(json!({"r": r, "u": u}));
    }
    let text = match format {
        OutputFormat::Csv => to_csv(&["r", "u"], &rows),
        OutputFormat::Json => format!("{:#}\n", Value::Array(json_rows)),
    };
    write_out(out, &text)
}

pub fn run_validate(
    cfg: &RunConfig,
    n: u32,
    l: u32,
    dim: u32,
    scheme: CentrifugalScheme,
    grid_n: usize,
    r_max: Option<f64>,
    out: &mut dyn Write,
) -> i32 {
    let spec = cfg.problem();
    let mut grid = GridSpec::for_alpha(spec.potential.alpha);
    grid.n = grid_n;
    if let Some(r_max) = r_max {
        grid.r_max = r_max;
    }
    let report = match compare(&spec, n, l, dim, scheme, grid) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID;
        }
    };
    let verdict = match report.verdict {
        Verdict::Confirmed => "confirmed",
        Verdict::Spurious => "spurious",
        Verdict::ApproximationError => "approximation_error",
    };
    let doc = json!({
        "n": report.n,
        "l": report.l,
        "D": report.dim,
        "scheme": match scheme {
            CentrifugalScheme::Exact => "exact",
            CentrifugalScheme::GreeneAldrich => "ga",
            CentrifugalScheme::Improved => "improved",
        },
        "e_closed": report.e_closed,
        "closed_physical": report.closed_physical,
        "e_oracle": report.e_oracle.map_or(Value::Null, |e| json!(e)),
        "delta": report.delta.map_or(Value::Null, |d| json!(d)),
        "threshold": report.threshold,
        "verdict": verdict,
        "grid": {"r_min": grid.r_min, "r_max": grid.r_max, "n": grid.n},
    });
    let code = write_out(out, &format!("{doc:#}\n"));
    if code != EXIT_OK {
        return code;
    }
    match report.verdict {
        Verdict::Spurious => EXIT_SPURIOUS,
        _ => EXIT_OK,
    }
}
