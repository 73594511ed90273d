//! Raw command-line surface. Values stay strings here; `parse_args` turns
//! them into a validated `CommandConfig` so errors name the offending flag.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "beurling",
    version,
    about = "Dilation correlations, Mellin transforms and extremal correlation curves"
)]
pub struct Cli {
    /// Log grid as u_min,u_max,count (count a power of two >= 16)
    #[arg(long, global = true, env = "BEURLING_GRID", value_name = "UMIN,UMAX,COUNT")]
    pub grid: Option<String>,

    /// Output format for curves, samples and spectra
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Theorem4,
    Identities,
    M0f,
    Strip,
    Falsify,
    Classify,
    Obstruction,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Sample a function, or apply the Mellin transform, its inverse, or the
    /// reciprocal involution
    Transform {
        /// Function spec, e.g. gaussian:1,0 or boxcar:1,2
        #[arg(long = "f", value_name = "SPEC")]
        f: Option<String>,
        /// Write M0 and M1 on the dual tau grid
        #[arg(long, conflicts_with_all = ["inverse", "reciprocal"])]
        mellin: bool,
        /// Invert a spectrum CSV back to samples
        #[arg(long, value_name = "SPECTRUM", conflicts_with = "reciprocal")]
        inverse: Option<PathBuf>,
        /// Apply f(t) -> |t|^-1 f(1/t)
        #[arg(long)]
        reciprocal: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Autocorrelation F of f, or the pair (F1, F2) of f and g
    Correlate {
        #[arg(long = "f", value_name = "SPEC")]
        f: String,
        #[arg(long = "g", value_name = "SPEC")]
        g: Option<String>,
        /// Dimension; n > 1 treats f as a radial profile
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Lattice points e^(m du) with |m| <= this (default: count/4)
        #[arg(long, conflicts_with = "lambdas")]
        max_shift: Option<usize>,
        /// Comma-separated lambda values instead of the lattice
        #[arg(long, value_name = "L1,L2,...")]
        lambdas: Option<String>,
        /// F, or F1 when --g is given
        #[arg(long)]
        out: PathBuf,
        /// F2 when --g is given
        #[arg(long)]
        out2: Option<PathBuf>,
    },
    /// Build an even function with F = c0 (1 + lambda^2)^(-1/2) from a phase
    /// profile, or the two-function family g = c1 f
    Construct {
        #[arg(long, default_value_t = 1.0)]
        c0: f64,
        /// flat, gaussian, or a CSV (tau,theta) / JSON profile file
        #[arg(long, default_value = "flat")]
        phase: String,
        /// Complex constant re,im of the two-function family
        #[arg(long, value_name = "RE,IM")]
        c1: Option<String>,
        /// Samples of f
        #[arg(long)]
        out: PathBuf,
        /// Samples of g (required with --c1)
        #[arg(long)]
        out2: Option<PathBuf>,
        /// Also write the autocorrelation of f
        #[arg(long)]
        curve: Option<PathBuf>,
    },
    /// Run verification checks; exit status 0 iff all pass
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// First function (default: gaussian:1)
        #[arg(long = "f", value_name = "SPEC")]
        f: Option<String>,
        /// Second function for the pair checks
        #[arg(long = "g", value_name = "SPEC")]
        g: Option<String>,
        /// Expected constant (default: sqrt(2) times the squared norm of f)
        #[arg(long)]
        c0: Option<f64>,
        /// Constant of the two-function family (default: 1)
        #[arg(long, value_name = "RE,IM")]
        c1: Option<String>,
        /// Gaussian parameter for falsify (default 1,1) and strip (default 1)
        #[arg(long, value_name = "RE,IM")]
        beta: Option<String>,
        /// Dimension for theorem1
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Override every check's tolerance
        #[arg(long)]
        tol: Option<f64>,
        /// Write the reports as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the shipped scenarios and print a summary table
    Demo {
        /// Write the reports as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
}
