//! The `beurling` command line: argument validation and command execution.

mod args;
mod run;

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use beurling_core::construct::PhaseProfile;
use beurling_core::corefn::{FunctionSpec, LogGrid};
use beurling_core::dilate::LambdaSet;
use beurling_core::io::{parse_grid, read_phase_profile};
use beurling_core::Error;
use clap::Parser;
use num_complex::Complex64;

pub use args::{Format, Suite};
pub use run::{execute, run};

/// Exit statuses.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const IO: i32 = 3;
}

#[derive(Debug, Clone, PartialEq)]
pub enum TransformOp {
    Sample,
    Mellin,
    Inverse(PathBuf),
    Reciprocal,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Transform {
        f: Option<FunctionSpec>,
        op: TransformOp,
        out: PathBuf,
    },
    Correlate {
        f: FunctionSpec,
        g: Option<FunctionSpec>,
        n: usize,
        lambdas: LambdaSet,
        out: PathBuf,
        out2: Option<PathBuf>,
    },
    Construct {
        c0: f64,
        phase: PhaseProfile,
        c1: Option<Complex64>,
        out: PathBuf,
        out2: Option<PathBuf>,
        curve: Option<PathBuf>,
    },
    Verify {
        suite: Suite,
        f: Option<FunctionSpec>,
        g: Option<FunctionSpec>,
        c0: Option<f64>,
        c1: Option<Complex64>,
        beta: Option<Complex64>,
        n: usize,
        tol: Option<f64>,
        out: Option<PathBuf>,
    },
    Demo {
        out: Option<PathBuf>,
    },
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandConfig {
    pub grid: LogGrid,
    pub format: Format,
    pub command: Command,
}

/// Why an invocation could not be turned into a [`CommandConfig`].
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or values; the message names the flag.
    Usage(String),
    /// A file named on the command line could not be read.
    Io(String),
    /// `--help` / `--version` output, to be printed with success status.
    Display(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Io(_) => exit::IO,
            CliError::Display(_) => exit::SUCCESS,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Display(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

fn flag_error(flag: &str, e: Error) -> CliError {
    match e {
        Error::Io { .. } | Error::Format { .. } => CliError::Io(format!("--{flag}: {e}")),
        other => CliError::Usage(format!("invalid value for --{flag}: {other}")),
    }
}

fn spec(flag: &str, s: &str) -> Result<FunctionSpec, CliError> {
    s.parse::<FunctionSpec>().map_err(|e| flag_error(flag, e))
}

fn opt_spec(flag: &str, s: Option<String>) -> Result<Option<FunctionSpec>, CliError> {
    s.map(|s| spec(flag, &s)).transpose()
}

fn complex(flag: &str, s: &str) -> Result<Complex64, CliError> {
    let bad = || CliError::Usage(format!("invalid value for --{flag}: expected 're' or 're,im', got '{s}'"));
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|_| bad());
    let z = match parts.as_slice() {
        [re] => Complex64::new(num(re)?, 0.0),
        [re, im] => Complex64::new(num(re)?, num(im)?),
        _ => return Err(bad()),
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(bad());
    }
    Ok(z)
}

fn opt_complex(flag: &str, s: Option<String>) -> Result<Option<Complex64>, CliError> {
    s.map(|s| complex(flag, &s)).transpose()
}

fn phase_profile(s: &str) -> Result<PhaseProfile, CliError> {
    match s.trim() {
        "flat" => Ok(PhaseProfile::flat()),
        "gaussian" | "gaussian_phase" => Ok(PhaseProfile::GaussianPhase),
        path => read_phase_profile(path).map_err(|e| flag_error("phase", e)),
    }
}

fn dimension(n: usize) -> Result<usize, CliError> {
    if n == 0 {
        Err(CliError::Usage("invalid value for --n: dimension must be >= 1".into()))
    } else {
        Ok(n)
    }
}

/// Parses and validates `argv` (including the program name). The default
/// grid comes from `--grid`, then `BEURLING_GRID`, then `[-30, 30)` with 4096
/// nodes.
pub fn parse_args<I, T>(argv: I) -> Result<CommandConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = args::Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            CliError::Display(e.to_string())
        }
        _ => CliError::Usage(e.to_string()),
    })?;
    let grid = match &cli.grid {
        Some(g) => parse_grid(g).map_err(|e| CliError::Usage(format!("invalid value for --grid: {e}")))?,
        None => LogGrid::default(),
    };
    let command = match cli.command {
        args::Sub::Transform { f, mellin, inverse, reciprocal, out } => {
            let op = match (mellin, inverse, reciprocal) {
                (true, _, _) => TransformOp::Mellin,
                (_, Some(p), _) => TransformOp::Inverse(p),
                (_, _, true) => TransformOp::Reciprocal,
                _ => TransformOp::Sample,
            };
            let f = opt_spec("f", f)?;
            if f.is_none() && !matches!(op, TransformOp::Inverse(_)) {
                return Err(CliError::Usage("--f is required unless --inverse is given".into()));
            }
            Command::Transform { f, op, out }
        }
        args::Sub::Correlate { f, g, n, max_shift, lambdas, out, out2 } => {
            let n = dimension(n)?;
            let g = opt_spec("g", g)?;
            if g.is_some() && n > 1 {
                return Err(CliError::Usage("--g cannot be combined with --n > 1".into()));
            }
            if out2.is_some() && g.is_none() {
                return Err(CliError::Usage("--out2 needs --g".into()));
            }
            let lambdas = match (max_shift, lambdas) {
                (Some(m), _) => {
                    if m >= grid.count() {
                        return Err(CliError::Usage(format!(
                            "invalid value for --max-shift: must be below the grid size {}",
                            grid.count()
                        )));
                    }
                    LambdaSet::Lattice { max_shift: m }
                }
                (None, Some(list)) => {
                    let vals = list
                        .split(',')
                        .map(|v| v.trim().parse::<f64>())
                        .collect::<Result<Vec<f64>, _>>()
                        .map_err(|_| CliError::Usage(format!("invalid value for --lambdas: '{list}'")))?;
                    if vals.iter().any(|v| *v == 0.0 || !v.is_finite()) {
                        return Err(CliError::Usage("invalid value for --lambdas: values must be finite and nonzero".into()));
                    }
                    LambdaSet::Values(vals)
                }
                (None, None) => LambdaSet::DefaultLattice,
            };
            Command::Correlate { f: spec("f", &f)?, g, n, lambdas, out, out2 }
        }
        args::Sub::Construct { c0, phase, c1, out, out2, curve } => {
            if !(c0 >= 0.0 && c0.is_finite()) {
                return Err(CliError::Usage(format!("invalid value for --c0: must be >= 0, got {c0}")));
            }
            let c1 = opt_complex("c1", c1)?;
            if c1.is_some() && out2.is_none() {
                return Err(CliError::Usage("--c1 needs --out2 for the second function".into()));
            }
            Command::Construct { c0, phase: phase_profile(&phase)?, c1, out, out2, curve }
        }
        args::Sub::Verify { suite, f, g, c0, c1, beta, n, tol, out } => {
            if let Some(t) = tol {
                if !(t > 0.0 && t.is_finite()) {
                    return Err(CliError::Usage(format!("invalid value for --tol: must be > 0, got {t}")));
                }
            }
            if let Some(c) = c0 {
                if !(c >= 0.0 && c.is_finite()) {
                    return Err(CliError::Usage(format!("invalid value for --c0: must be >= 0, got {c}")));
                }
            }
            Command::Verify {
                suite,
                f: opt_spec("f", f)?,
                g: opt_spec("g", g)?,
                c0,
                c1: opt_complex("c1", c1)?,
                beta: opt_complex("beta", beta)?,
                n: dimension(n)?,
                tol,
                out,
            }
        }
        args::Sub::Demo { out } => Command::Demo { out },
    };
    Ok(CommandConfig { grid, format: cli.format, command })
}
