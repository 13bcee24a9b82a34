//! Run configuration: a flat JSON object of numbers, overridable from the
//! command line.
//!
//! Keys: V0, V1, V2, a, b, alpha, omega, lambda, mass, hbar. Unknown keys
//! are rejected. Missing keys fall back to the documented defaults (the
//! canonical Table-1 parameter set; mass = hbar = 1).

use std::fs;
use std::path::Path;

use eckart_hylleraas::potentials::{ApproximationParams, PotentialParams};
use eckart_hylleraas::spectrum::ProblemSpec;
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("config key {0}")]
    UnknownKey(String),
    #[error("config parse error: {0}")]
    Parse(String),
    #[error("invalid value for {key}: {message}")]
    InvalidValue { key: &'static str, message: String },
}

/// Documented defaults: the canonical parameter set of the reference
/// Table 1.
pub const DEFAULTS: RunConfig = RunConfig {
    v0: 1.0,
    v1: 0.01,
    v2: 0.5,
    a: 2.0,
    b: 50.0,
    alpha: 1.0,
    omega: 1.6,
    lambda: 3.2,
    mass: 1.0,
    hbar: 1.0,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub v0: f64,
    pub v1: f64,
    pub v2: f64,
    pub a: f64,
    pub b: f64,
    pub alpha: f64,
    pub omega: f64,
    pub lambda: f64,
    pub mass: f64,
    pub hbar: f64,
}

/// Per-key command-line overrides; `None` keeps the file/default value.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub v0: Option<f64>,
    pub v1: Option<f64>,
    pub v2: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub alpha: Option<f64>,
    pub omega: Option<f64>,
    pub lambda: Option<f64>,
    pub mass: Option<f64>,
    pub hbar: Option<f64>,
}

/// The flat config file schema; every key optional.
#[derive(Debug, Default, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(rename = "V0")]
    pub v0: Option<f64>,
    #[serde(rename = "V1")]
    pub v1: Option<f64>,
    #[serde(rename = "V2")]
    pub v2: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub alpha: Option<f64>,
    pub omega: Option<f64>,
    pub lambda: Option<f64>,
    pub mass: Option<f64>,
    pub hbar: Option<f64>,
}

/// Parse config bytes as a flat JSON object of numbers.
///
/// Never panics on malformed input; unknown keys and type errors come back
/// as errors carrying the offending key and position.
pub fn parse_config_bytes(bytes: &[u8]) -> Result<ConfigFile, ConfigError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| ConfigError::Parse(format!("not valid UTF-8: {e}")))?;
    serde_json::from_str(text).map_err(|e| {
        let message = e.to_string();
        if message.starts_with("unknown field") {
            ConfigError::UnknownKey(message)
        } else {
            ConfigError::Parse(message)
        }
    })
}

/// Load the config file (if any), apply overrides, validate.
///
/// Precedence: command-line flag > file value > default.
pub fn load_config(path: Option<&Path>, overrides: &Overrides) -> Result<RunConfig, ConfigError> {
    let file = match path {
        Some(p) => {
            let bytes = fs::read(p).map_err(|source| ConfigError::Io {
                path: p.display().to_string(),
                source,
            })?;
            parse_config_bytes(&bytes)?
        }
        None => ConfigFile::default(),
    };
    let cfg = RunConfig {
        v0: overrides.v0.or(file.v0).unwrap_or(DEFAULTS.v0),
        v1: overrides.v1.or(file.v1).unwrap_or(DEFAULTS.v1),
        v2: overrides.v2.or(file.v2).unwrap_or(DEFAULTS.v2),
        a: overrides.a.or(file.a).unwrap_or(DEFAULTS.a),
        b: overrides.b.or(file.b).unwrap_or(DEFAULTS.b),
        alpha: overrides.alpha.or(file.alpha).unwrap_or(DEFAULTS.alpha),
        omega: overrides.omega.or(file.omega).unwrap_or(DEFAULTS.omega),
        lambda: overrides.lambda.or(file.lambda).unwrap_or(DEFAULTS.lambda),
        mass: overrides.mass.or(file.mass).unwrap_or(DEFAULTS.mass),
        hbar: overrides.hbar.or(file.hbar).unwrap_or(DEFAULTS.hbar),
    };
    validate(&cfg)?;
    Ok(cfg)
}

fn validate(cfg: &RunConfig) -> Result<(), ConfigError> {
    let spec = cfg.problem();
    spec.validate().map_err(|e| match e {
        eckart_hylleraas::Error::InvalidParameter { name, message } => {
            ConfigError::InvalidValue { key: name, message }
        }
        other => ConfigError::InvalidValue {
            key: "config",
            message: other.to_string(),
        },
    })?;
    if cfg.omega < 0.0 || cfg.lambda < 0.0 {
        eprintln!(
            "warning: negative centrifugal coefficients (omega = {}, lambda = {}) \
             are unusual but accepted",
            cfg.omega, cfg.lambda
        );
    }
    Ok(())
}

impl RunConfig {
    pub fn problem(&self) -> ProblemSpec {
        ProblemSpec {
            potential: PotentialParams {
                v0: self.v0,
                v1: self.v1,
                v2: self.v2,
                a: self.a,
                b: self.b,
                alpha: self.alpha,
            },
            approx: ApproximationParams {
                omega: self.omega,
                lambda_adj: self.lambda,
            },
            mass: self.mass,
            hbar: self.hbar,
        }
    }
}
