use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eckart_hylleraas::potentials::{CentrifugalScheme, Family};
use eckart_hylleraas::spectrum::Layout;

use ehspec::commands::{
    self, OutputFormat, SpectrumArgs, EXIT_INVALID,
};
use ehspec::config::{load_config, Overrides};

/// Bound-state spectra, potentials, and wavefunctions of the Eckart plus
/// modified deformed Hylleraas potential in D dimensions, with an
/// independent finite-difference validator.
///
/// All parameters default to the canonical reference configuration
/// (alpha = 1, omega = 1.6, lambda = 3.2, a = 2, b = 50, V0 = 1, V1 = 0.01,
/// V2 = 0.5, mass = hbar = 1); a JSON config file and per-key flags
/// override them.
#[derive(Parser)]
#[command(name = "ehspec", version, max_term_width = 100)]
struct Cli {
    /// Flat JSON config file with keys V0, V1, V2, a, b, alpha, omega,
    /// lambda, mass, hbar.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(flatten)]
    params: ParamFlags,

    /// Output format for data tables.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

/// Per-key overrides of the config file / defaults.
#[derive(Args)]
struct ParamFlags {
    #[arg(long, global = true, value_name = "ENERGY")]
    v0: Option<f64>,
    #[arg(long, global = true, value_name = "ENERGY")]
    v1: Option<f64>,
    #[arg(long, global = true, value_name = "ENERGY")]
    v2: Option<f64>,
    /// Hylleraas shape parameter a.
    #[arg(long, global = true, value_name = "REAL")]
    a: Option<f64>,
    /// Hylleraas shape parameter b (nonzero).
    #[arg(long, global = true, value_name = "REAL")]
    b: Option<f64>,
    /// Screening parameter (inverse length, positive).
    #[arg(long, global = true, value_name = "REAL")]
    alpha: Option<f64>,
    /// Centrifugal coefficient on s/(1-s).
    #[arg(long, global = true, value_name = "REAL")]
    omega: Option<f64>,
    /// Centrifugal coefficient on s/(1-s)^2.
    #[arg(long, global = true, value_name = "REAL")]
    lambda: Option<f64>,
    #[arg(long, global = true, value_name = "MASS")]
    mass: Option<f64>,
    #[arg(long, global = true, value_name = "ACTION")]
    hbar: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LayoutArg {
    /// Rows (0,0) and l = 0..n-1 for n >= 1, as in the published tables.
    Paper,
    /// All l <= --l-max for every n.
    Rect,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Combined,
    Hylleraas,
    Eckart,
    Hulthen,
    RosenMorse,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Exact,
    Ga,
    Improved,
}

impl From<SchemeArg> for CentrifugalScheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Exact => CentrifugalScheme::Exact,
            SchemeArg::Ga => CentrifugalScheme::GreeneAldrich,
            SchemeArg::Improved => CentrifugalScheme::Improved,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit the closed-form energy table.
    Spectrum {
        #[arg(long, default_value_t = 5)]
        n_max: u32,
        /// Highest l in the rectangular layout.
        #[arg(long, default_value_t = 4)]
        l_max: u32,
        #[arg(long, value_enum, default_value_t = LayoutArg::Rect)]
        layout: LayoutArg,
        /// Dimensions to tabulate.
        #[arg(long, value_delimiter = ',', default_value = "3")]
        dims: Vec<u32>,
        /// Drop rows whose closed-form state is not normalizable.
        #[arg(long)]
        physical_only: bool,
        /// Append the published table's values and deltas (1, 2, or 3);
        /// pins the row set to that table's layout.
        #[arg(long, value_name = "TABLE")]
        diff_paper: Option<u8>,
    },
    /// Sample a potential-family curve V(r).
    Potential {
        #[arg(long, value_enum, default_value_t = FamilyArg::Combined)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0.01)]
        r_min: f64,
        #[arg(long, default_value_t = 10.0)]
        r_max: f64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Sample the effective potential under one or more centrifugal
    /// schemes.
    Effective {
        /// Schemes to emit, one column each.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "exact,ga,improved")]
        scheme: Vec<SchemeArg>,
        #[arg(long, default_value_t = 1)]
        l: u32,
        #[arg(long, default_value_t = 3)]
        dim: u32,
        #[arg(long, default_value_t = 0.01)]
        r_min: f64,
        #[arg(long, default_value_t = 10.0)]
        r_max: f64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Sample the radial wavefunction U(r) of one level.
    Wavefunction {
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long, default_value_t = 3)]
        dim: u32,
        #[arg(long, default_value_t = 0.01)]
        r_min: f64,
        #[arg(long, default_value_t = 20.0)]
        r_max: f64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Scale so the squared integral is 1.
        #[arg(long)]
        normalize: bool,
    },
    /// Compare one closed-form level against the finite-difference
    /// eigensolver; emits a JSON report.
    Validate {
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        l: u32,
        #[arg(long, default_value_t = 3)]
        dim: u32,
        /// Centrifugal model used by the eigensolver.
        #[arg(long, value_enum, default_value_t = SchemeArg::Exact)]
        scheme: SchemeArg,
        /// Number of grid subintervals.
        #[arg(long, default_value_t = 8000)]
        grid_n: usize,
        /// Grid extent (default 40 / alpha).
        #[arg(long)]
        r_max: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are successes; everything else is
            // invalid input (exit 1by contract, not clap's default 2).
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => EXIT_INVALID as u8,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let overrides = Overrides {
        v0: cli.params.v0,
        v1: cli.params.v1,
        v2: cli.params.v2,
        a: cli.params.a,
        b: cli.params.b,
        alpha: cli.params.alpha,
        omega: cli.params.omega,
        lambda: cli.params.lambda,
        mass: cli.params.mass,
        hbar: cli.params.hbar,
    };
    let cfg = match load_config(cli.config.as_deref(), &overrides) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INVALID as u8);
        }
    };

    let format = match cli.format {
        FormatArg::Csv => OutputFormat::Csv,
        FormatArg::Json => OutputFormat::Json,
    };

    let mut sink: Box<dyn Write> = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(EXIT_INVALID as u8);
            }
        },
        None => Box::new(io::stdout()),
    };

    let code = match cli.command {
        Command::Spectrum {
            n_max,
            l_max,
            layout,
            dims,
            physical_only,
            diff_paper,
        } => {
            let layout = match layout {
                LayoutArg::Paper => Layout::Paper,
                LayoutArg::Rect => Layout::Rectangular { l_max },
            };
            let args = SpectrumArgs {
                n_max,
                layout,
                dims,
                physical_only,
                diff_paper,
            };
            commands::run_spectrum(&cfg, &args, format, &mut sink)
        }
        Command::Potential {
            family,
            r_min,
            r_max,
            samples,
        } => {
            let family = match family {
                FamilyArg::Combined => Family::Combined,
                FamilyArg::Hylleraas => Family::DeformedHylleraas,
                FamilyArg::Eckart => Family::Eckart,
                FamilyArg::Hulthen => Family::Hulthen,
                FamilyArg::RosenMorse => Family::RosenMorse,
            };
            commands::run_potential(&cfg, family, r_min, r_max, samples, format, &mut sink)
        }
        Command::Effective {
            scheme,
            l,
            dim,
            r_min,
            r_max,
            samples,
        } => {
            let schemes: Vec<CentrifugalScheme> =
                scheme.into_iter().map(CentrifugalScheme::from).collect();
            commands::run_effective(
                &cfg, &schemes, l, dim, r_min, r_max, samples, format, &mut sink,
            )
        }
        Command::Wavefunction {
            n,
            l,
            dim,
            r_min,
            r_max,
            samples,
            normalize,
        } => commands::run_wavefunction(
            &cfg, n, l, dim, r_min, r_max, samples, normalize, format, &mut sink,
        ),
        Command::Validate {
            n,
            l,
            dim,
            scheme,
            grid_n,
            r_max,
        } => commands::run_validate(
            &cfg,
            n,
            l,
            dim,
            scheme.into(),
            grid_n,
            r_max,
            &mut sink,
        ),
    };
    let _ = sink.flush();
    ExitCode::from(code as u8)
}
