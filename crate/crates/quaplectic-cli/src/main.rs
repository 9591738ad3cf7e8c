//! `quaplectic` command-line front end.
//!
//! Exit status: 0 on success, 1 on invalid input, 2 when a verification
//! finds a residual above its tolerance.

mod fmt;
mod fockrep_cmd;
mod kinematics_cmd;
mod liealg_cmd;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quaplectic::fockrep::{Signature, Stencil, DEFAULT_BUDGET, DEFAULT_MARGIN};
use quaplectic::kinematics::{Constants, TransformKind};

#[derive(Debug, Parser)]
#[command(
    name = "quaplectic",
    version,
    about = "Reciprocal relativity kinematics, central extensions and oscillator representations"
)]
pub struct Cli {
    /// Speed of light.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub c: f64,
    /// Maximal force.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub b: f64,
    /// Reduced Planck constant.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub hbar: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a frame transform and report its invariants.
    Transform {
        #[arg(long)]
        kind: TransformKind,
        /// v,f,r
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        params: [f64; 3],
        /// dt,dq,dp,de frame to transform.
        #[arg(long, value_parser = parse_quad, allow_hyphen_values = true)]
        apply: Option<[f64; 4]>,
    },
    /// Closed-form composition; prints the combined v f r.
    Compose {
        #[arg(long)]
        kind: TransformKind,
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        p1: [f64; 3],
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        p2: [f64; 3],
    },
    /// Rates seen in the momentarily comoving frame.
    Rates {
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        params: [f64; 3],
        /// dv/dt,df/dt,dr/dt
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        rates: [f64; 3],
    },
    /// Null-surface residual and self-composition fixed point test.
    NullSurface {
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        params: [f64; 3],
    },
    /// Distance of Γ from its b → ∞ and b, c → ∞ limits.
    Limits {
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        params: [f64; 3],
        /// `b` (b = 10²..10⁶ at the given c) or `joint` (c = b = 10..10⁶).
        #[arg(long, default_value = "b")]
        schedule: String,
        /// CSV table `c,b,err_binf,err_hamilton`.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Integrate the Hamilton-group frame equations.
    Integrate {
        #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
        params: [f64; 3],
        /// t,q,p,e point to map.
        #[arg(long, value_parser = parse_quad, allow_hyphen_values = true)]
        point: Option<[f64; 4]>,
    },
    /// Dimensional scales of time, position, momentum and energy.
    Scales,
    /// Jacobi residual of an algebra.
    Jacobi {
        #[command(flatten)]
        source: AlgebraSource,
        /// Write the algebra as JSON.
        #[arg(long)]
        export: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Second cohomology (central extensions).
    Extend {
        #[command(flatten)]
        source: AlgebraSource,
        /// Write the cocycle basis as JSON.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Contract an algebra and print its fingerprint.
    Contract {
        #[command(flatten)]
        source: AlgebraSource,
        /// `sr` (b → ∞) or `nr` (b, c → ∞); needs a built-in algebra.
        #[arg(long, conflicts_with = "weights", required_unless_present = "weights")]
        preset: Option<String>,
        /// Comma-separated integer weights, one per generator.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weights: Option<Vec<i32>>,
        /// Write the contracted algebra as JSON.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Interior commutation residuals of the ladder representation.
    RepCheck {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Casimir operators, their commutators and the g_k identities.
    Casimir {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, default_value_t = 2)]
        order: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// CSV of the Casimir spectra.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Eigenvalues as CSV `index,eigenvalue,method`.
    Spectrum {
        /// number | c | d | wave | oscillator | oscillator-combined
        #[arg(long, default_value = "number")]
        operator: String,
        #[command(flatten)]
        rep: RepArgs,
        /// Order for c, d and wave.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Wave operator W_k.
    Wave {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Row-major CSV of the full matrix.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct AlgebraSource {
    /// Built-in algebra, e.g. poincare13, inhom_unitary(1,1), quaplectic13.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Algebra JSON file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RepArgs {
    /// Signature p,q (timelike, spacelike modes).
    #[arg(long, default_value = "1,1")]
    pub sig: Signature,
    /// Highest Fock level per mode.
    #[arg(long, default_value_t = 8)]
    pub cutoff: usize,
    /// Levels dropped from the top of each mode for interior checks.
    #[arg(long, default_value_t = DEFAULT_MARGIN)]
    pub margin: usize,
    /// ε block JSON file.
    #[arg(long)]
    pub eps: Option<PathBuf>,
    /// Largest allowed dim² of the representation.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 8.0)]
    pub half_width: f64,
    #[arg(long, default_value_t = 201)]
    pub points: usize,
    /// second | fourth
    #[arg(long, default_value = "fourth")]
    pub stencil: Stencil,
}

/// Printed report and whether every tolerance held.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    pub fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Tolerance(String),
}

impl From<quaplectic::Error> for Failure {
    fn from(e: quaplectic::Error) -> Self {
        match e {
            quaplectic::Error::Resolution { .. } => Failure::Tolerance(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

pub type CmdResult = Result<Outcome, Failure>;

fn parse_list<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let xs: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<_, _>>()?;
    let n = xs.len();
    xs.try_into()
        .map_err(|_| format!("expected {N} comma-separated numbers, got {n}"))
}

fn parse_triple(s: &str) -> Result<[f64; 3], String> {
    parse_list::<3>(s)
}

fn parse_quad(s: &str) -> Result<[f64; 4], String> {
    parse_list::<4>(s)
}

pub fn write_artifact(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> CmdResult {
    let k = Constants::new(cli.c, cli.b, cli.hbar)?;
    match cli.command {
        Command::Transform { kind, params, apply } => kinematics_cmd::transform(kind, params, apply, &k),
        Command::Compose { kind, p1, p2 } => kinematics_cmd::compose(kind, p1, p2, &k),
        Command::Rates { params, rates } => kinematics_cmd::rates(params, rates, &k),
        Command::NullSurface { params } => kinematics_cmd::null_surface(params, &k),
        Command::Limits {
            params,
            schedule,
            output,
        } => kinematics_cmd::limits(params, &schedule, output.as_ref(), &k),
        Command::Integrate { params, point } => kinematics_cmd::integrate(params, point),
        Command::Scales => kinematics_cmd::scales(&k),
        Command::Jacobi { source, export, tol } => liealg_cmd::jacobi(&source, export.as_ref(), tol),
        Command::Extend { source, output } => liealg_cmd::extend(&source, output.as_ref()),
        Command::Contract {
            source,
            preset,
            weights,
            output,
        } => liealg_cmd::contract(&source, preset.as_deref(), weights, output.as_ref()),
        Command::RepCheck { rep, tol } => fockrep_cmd::rep_check(&rep, tol),
        Command::Casimir {
            rep,
            order,
            tol,
            output,
        } => fockrep_cmd::casimir(&rep, order, tol, output.as_ref()),
        Command::Spectrum {
            operator,
            rep,
            k,
            grid,
            output,
        } => fockrep_cmd::spectrum(&operator, &rep, k, &grid, output.as_ref()),
        Command::Wave { rep, k, tol, output } => fockrep_cmd::wave(&rep, k, tol, output.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("tolerance check failed");
                ExitCode::from(2)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Tolerance(msg)) => {
            eprintln!("tolerance failure: {msg}");
            ExitCode::from(2)
        }
    }
}
