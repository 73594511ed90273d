use std::f64::consts::PI;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;

use super::grid::LogGrid;
use super::sampled::SampledFunction;
use crate::construct::{build_from_phase, PhaseProfile};
use crate::error::{Error, Result};
use crate::io;

/// The function catalog.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    /// `e^{-πβx²}`, `Re β > 0`.
    Gaussian { beta: Complex64 },
    /// Monic Hermite–Gaussian `p_k(x) e^{-πβx²}` with `p_k(x) = x^k + …`,
    /// orthogonal for `β = 1`. Parity `(-1)^k`.
    Hermite { k: u32, beta: Complex64 },
    /// Indicator of `[a, b]`.
    Boxcar { a: f64, b: f64 },
    /// Samples read from a CSV file (`u,pos_re,pos_im,neg_re,neg_im`).
    Samples(PathBuf),
    /// Even function with `M₀[f] = √c₀ π^{-1/4} |Γ(1/4 + iτ/2)| e^{iθ(τ)}`.
    PhaseFamily { c0: f64, profile: PhaseProfile },
}

fn check_beta(beta: Complex64) -> Result<()> {
    if beta.re.is_nan() || beta.re <= 0.0 || !beta.im.is_finite() {
        return Err(Error::param(format!(
            "Gaussian parameter needs Re β > 0, got {beta}"
        )));
    }
    Ok(())
}

impl FunctionSpec {
    pub fn gaussian(beta: Complex64) -> Result<Self> {
        check_beta(beta)?;
        Ok(Self::Gaussian { beta })
    }

    pub fn hermite(k: u32, beta: Complex64) -> Result<Self> {
        check_beta(beta)?;
        Ok(Self::Hermite { k, beta })
    }

    pub fn boxcar(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::param(format!("boxcar needs a < b, got [{a}, {b}]")));
        }
        Ok(Self::Boxcar { a, b })
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Gaussian { beta } | Self::Hermite { beta, .. } => check_beta(*beta),
            Self::Boxcar { a, b } => Self::boxcar(*a, *b).map(|_| ()),
            Self::Samples(_) => Ok(()),
            Self::PhaseFamily { c0, .. } => {
                if *c0 >= 0.0 && c0.is_finite() {
                    Ok(())
                } else {
                    Err(Error::param(format!("c0 must be >= 0, got {c0}")))
                }
            }
        }
    }

    /// Pointwise value for the closed-form kinds.
    pub fn eval(&self, x: f64) -> Option<Complex64> {
        match self {
            Self::Gaussian { beta } => Some((-PI * beta * x * x).exp()),
            Self::Hermite { k, beta } => {
                Some(monic_hermite(*k, *beta, x) * (-PI * beta * x * x).exp())
            }
            Self::Boxcar { a, b } => Some(Complex64::new(
                if x >= *a && x <= *b { 1.0 } else { 0.0 },
                0.0,
            )),
            Self::Samples(_) | Self::PhaseFamily { .. } => None,
        }
    }
}

/// `H_k(s x) / (2s)^k` with `s² = 2πβ`, via
/// `p_{k+1} = x p_k - k/(4πβ) p_{k-1}`.
fn monic_hermite(k: u32, beta: Complex64, x: f64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if k == 0 {
        return one;
    }
    let c = (4.0 * PI * beta).inv();
    let (mut prev, mut cur) = (one, Complex64::new(x, 0.0));
    for j in 1..k {
        let next = cur * x - prev * c * j as f64;
        prev = cur;
        cur = next;
    }
    cur
}

/// Samples a catalog entry on `grid`.
pub fn sample(spec: &FunctionSpec, grid: &LogGrid) -> Result<SampledFunction> {
    spec.validate()?;
    match spec {
        FunctionSpec::Samples(path) => {
            let f = io::read_samples(path)?;
            if !f.grid().same_as(grid) {
                return Err(Error::GridMismatch);
            }
            Ok(f)
        }
        FunctionSpec::PhaseFamily { c0, profile } => build_from_phase(*c0, profile, grid),
        closed => Ok(SampledFunction::from_fn(*grid, |x| {
            closed.eval(x).expect("closed-form kind")
        })),
    }
}

fn parse_f64(s: &str, what: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| Error::param(format!("cannot parse {what} from '{s}'")))
}

fn parse_complex(parts: &[&str], what: &str) -> Result<Complex64> {
    match parts {
        [re] => Ok(Complex64::new(parse_f64(re, what)?, 0.0)),
        [re, im] => Ok(Complex64::new(parse_f64(re, what)?, parse_f64(im, what)?)),
        _ => Err(Error::param(format!("{what} takes 're' or 're,im'"))),
    }
}

/// Parses the command-line mini-language:
/// `gaussian:re,im` | `hermite:k,beta[,im]` | `boxcar:a,b` | `csv:path` |
/// `phase:c0,profile` where `profile` is `flat`, `gaussian` or a CSV/JSON path.
impl FromStr for FunctionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s
            .split_once(':')
            .ok_or_else(|| Error::param(format!("expected 'kind:args', got '{s}'")))?;
        match kind.trim() {
            "gaussian" => {
                let parts: Vec<&str> = args.split(',').collect();
                Self::gaussian(parse_complex(&parts, "gaussian β")?)
            }
            "hermite" => {
                let parts: Vec<&str> = args.split(',').collect();
                let (k, rest) = parts
                    .split_first()
                    .ok_or_else(|| Error::param("hermite takes 'k,beta'"))?;
                let k = k
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| Error::param(format!("hermite order must be a nonnegative integer, got '{k}'")))?;
                let beta = if rest.is_empty() {
                    Complex64::new(1.0, 0.0)
                } else {
                    parse_complex(rest, "hermite β")?
                };
                Self::hermite(k, beta)
            }
            "boxcar" => {
                let (a, b) = args
                    .split_once(',')
                    .ok_or_else(|| Error::param("boxcar takes 'a,b'"))?;
                Self::boxcar(parse_f64(a, "boxcar a")?, parse_f64(b, "boxcar b")?)
            }
            "csv" => {
                if args.trim().is_empty() {
                    return Err(Error::param("csv needs a path"));
                }
                Ok(Self::Samples(PathBuf::from(args.trim())))
            }
            "phase" => {
                let (c0, profile) = args
                    .split_once(',')
                    .ok_or_else(|| Error::param("phase takes 'c0,profile'"))?;
                let c0 = parse_f64(c0, "c0")?;
                let profile = match profile.trim() {
                    "flat" => PhaseProfile::flat(),
                    "gaussian" | "gaussian_phase" => PhaseProfile::GaussianPhase,
                    path => io::read_phase_profile(path)?,
                };
                let spec = Self::PhaseFamily { c0, profile };
                spec.validate()?;
                Ok(spec)
            }
            other => Err(Error::param(format!("unknown function kind '{other}'"))),
        }
    }
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Gaussian { beta } => write!(f, "gaussian:{},{}", beta.re, beta.im),
            Self::Hermite { k, beta } => write!(f, "hermite:{k},{},{}", beta.re, beta.im),
            Self::Boxcar { a, b } => write!(f, "boxcar:{a},{b}"),
            Self::Samples(p) => write!(f, "csv:{}", p.display()),
            Self::PhaseFamily { c0, profile } => write!(f, "phase:{c0},{}", profile.label()),
        }
    }
}
