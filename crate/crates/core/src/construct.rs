//! Building functions with a prescribed correlation curve.
//!
//! An even `f` has `F(λ) = c₀(1 + λ²)^{-1/2}` exactly when
//! `|M₀[f](τ)| = √c₀ π^{-1/4} |Γ(1/4 + iτ/2)|`; the phase of `M₀[f]` is free.
//! Every real phase profile `θ` therefore yields a solution, obtained by
//! inverting the Mellin transform of `√c₀ π^{-1/4} |Γ| e^{iθ}`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::corefn::{sample, FunctionSpec, LogGrid, SampledFunction};
use crate::error::{Error, Result};
use crate::mellin::{mellin_inverse, MellinSpectrum};
use crate::special::{gamma_abs_quarter, gaussian_phase};

/// Tail-mass fraction above which a constructed function is reported as
/// truncated by the grid.
pub const TAIL_WARN: f64 = 1e-8;

fn default_omega() -> f64 {
    1.0
}

/// A real phase `θ(τ)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PhaseProfile {
    /// `Σ_k cosine[k] cos(kωτ) + Σ_k sine[k] sin((k+1)ωτ)`: `cosine[0]` is the
    /// constant term and `sine` starts at the first harmonic.
    BandLimited {
        #[serde(default)]
        cosine: Vec<f64>,
        #[serde(default)]
        sine: Vec<f64>,
        #[serde(default = "default_omega")]
        omega: f64,
    },
    /// Piecewise-linear through `(taus[i], values[i])`, constant beyond the ends.
    Samples { taus: Vec<f64>, values: Vec<f64> },
    /// `arg Γ(1/4 + iτ/2) - (τ/2) ln π`, the phase of the Gaussian's `M₀`.
    GaussianPhase,
}

impl PhaseProfile {
    /// `θ ≡ 0`.
    pub fn flat() -> Self {
        Self::BandLimited {
            cosine: Vec::new(),
            sine: Vec::new(),
            omega: 1.0,
        }
    }

    pub fn band_limited(cosine: Vec<f64>, sine: Vec<f64>, omega: f64) -> Self {
        Self::BandLimited { cosine, sine, omega }
    }

    pub fn samples(taus: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if taus.is_empty() || taus.len() != values.len() {
            return Err(Error::param("phase samples need equal, nonempty τ and θ columns"));
        }
        if taus.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::param("phase sample τ values must be strictly increasing"));
        }
        if values.iter().chain(&taus).any(|v| !v.is_finite()) {
            return Err(Error::param("phase samples must be finite"));
        }
        Ok(Self::Samples { taus, values })
    }

    pub fn eval(&self, tau: f64) -> f64 {
        match self {
            Self::BandLimited { cosine, sine, omega } => {
                let c: f64 = cosine
                    .iter()
                    .enumerate()
                    .map(|(k, a)| a * (k as f64 * omega * tau).cos())
                    .sum();
                let s: f64 = sine
                    .iter()
                    .enumerate()
                    .map(|(k, b)| b * ((k + 1) as f64 * omega * tau).sin())
                    .sum();
                c + s
            }
            Self::Samples { taus, values } => {
                let i = taus.partition_point(|&t| t <= tau);
                if i == 0 {
                    values[0]
                } else if i == taus.len() {
                    values[taus.len() - 1]
                } else {
                    let w = (tau - taus[i - 1]) / (taus[i] - taus[i - 1]);
                    values[i - 1] * (1.0 - w) + values[i] * w
                }
            }
            Self::GaussianPhase => gaussian_phase(tau),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::BandLimited { cosine, sine, .. } if cosine.iter().chain(sine).all(|c| *c == 0.0) => {
                "flat".into()
            }
            Self::BandLimited { .. } => "band_limited".into(),
            Self::Samples { .. } => "samples".into(),
            Self::GaussianPhase => "gaussian".into(),
        }
    }
}

/// Share of `∫|h|² du` carried by the outer sixteenth of the grid at each end.
pub fn tail_mass_fraction(f: &SampledFunction) -> f64 {
    let (hp, hn) = f.weighted(0.5);
    let n = hp.len();
    let edge = n / 16;
    let mut total = 0.0;
    let mut tail = 0.0;
    for k in 0..n {
        let e = hp[k].norm_sqr() + hn[k].norm_sqr();
        total += e;
        if k < edge || k >= n - edge {
            tail += e;
        }
    }
    if total == 0.0 {
        0.0
    } else {
        tail / total
    }
}

/// The extremal spectrum `M₀ = √c₀ π^{-1/4} |Γ(1/4 + iτ/2)| e^{iθ(τ)}`, `M₁ = 0`.
pub fn phase_spectrum(c0: f64, theta: &PhaseProfile, grid: &LogGrid) -> Result<MellinSpectrum> {
    if c0.is_nan() || c0 < 0.0 || c0.is_infinite() {
        return Err(Error::param(format!("c0 must be >= 0, got {c0}")));
    }
    let amp = c0.sqrt() * PI.powf(-0.25);
    Ok(MellinSpectrum::from_fn(
        grid,
        |t| Complex64::from_polar(amp * gamma_abs_quarter(t), theta.eval(t)),
        |_| Complex64::new(0.0, 0.0),
    ))
}

/// Even `f` with `M₀[f] = √c₀ π^{-1/4} |Γ(1/4 + iτ/2)| e^{iθ(τ)}` and `M₁[f] = 0`,
/// so that `F(λ) = c₀ (1 + λ²)^{-1/2}`.
pub fn build_from_phase(c0: f64, theta: &PhaseProfile, grid: &LogGrid) -> Result<SampledFunction> {
    let spec = phase_spectrum(c0, theta, grid)?;
    let f = mellin_inverse(&spec, grid)?;
    let tail = tail_mass_fraction(&f);
    if tail > TAIL_WARN {
        log::warn!(
            "phase profile '{}' leaves a fraction {tail:.3e} of the mass at the grid ends; \
             widen the grid or smooth the phase",
            theta.label()
        );
    }
    Ok(f)
}

/// `(f, g)` with `M₀[f] = π^{-1/4}|Γ|e^{iθ}`, `M₀[g] = c₁ M₀[f]` and vanishing
/// odd channels, hence `F₁ = c₁(1 + λ²)^{-1/2}` and `F₂ = c̄₁(1 + λ²)^{-1/2}`.
pub fn build_two_function_family(
    c1: Complex64,
    theta: &PhaseProfile,
    grid: &LogGrid,
) -> Result<(SampledFunction, SampledFunction)> {
    let f = build_from_phase(1.0, theta, grid)?;
    let g = f.scale(c1);
    Ok((f, g))
}

/// An even/odd pair whose cross-correlations vanish identically:
/// `(e^{-πx²}, x e^{-πx²})`.
pub fn obstruction_pair(grid: &LogGrid) -> Result<(SampledFunction, SampledFunction)> {
    let one = Complex64::new(1.0, 0.0);
    Ok((
        sample(&FunctionSpec::gaussian(one)?, grid)?,
        sample(&FunctionSpec::hermite(1, one)?, grid)?,
    ))
}

/// Which of the two dilationally one-sided conditions a witness should meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OneSidedKind {
    /// bounded support only
    BoundedSupport,
    /// support inside `|x| >= 1` only
    SupportOffZero,
    Both,
}

pub fn one_sided_witness(kind: OneSidedKind, grid: &LogGrid) -> Result<SampledFunction> {
    match kind {
        OneSidedKind::Both => sample(&FunctionSpec::boxcar(1.0, 2.0)?, grid),
        OneSidedKind::BoundedSupport => sample(&FunctionSpec::boxcar(0.0, 1.0)?, grid),
        OneSidedKind::SupportOffZero => Ok(SampledFunction::from_fn(*grid, |x| {
            if x.abs() >= 1.0 {
                Complex64::new((-PI * x * x).exp(), 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })),
    }
}

/// Indicator of `a <= |x| <= b`.
pub fn even_boxcar(a: f64, b: f64, grid: &LogGrid) -> SampledFunction {
    SampledFunction::from_fn(*grid, |x| {
        Complex64::new(if (a..=b).contains(&x.abs()) { 1.0 } else { 0.0 }, 0.0)
    })
}

/// `sgn(x)` times the indicator of `a <= |x| <= b`.
pub fn odd_boxcar(a: f64, b: f64, grid: &LogGrid) -> SampledFunction {
    SampledFunction::from_fn(*grid, |x| {
        Complex64::new(if (a..=b).contains(&x.abs()) { x.signum() } else { 0.0 }, 0.0)
    })
}

/// Sampled support classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportClass {
    /// `supp f` is bounded
    pub bounded: bool,
    /// `supp f` stays away from `x = 0`
    pub off_zero: bool,
}

impl SupportClass {
    pub fn is_one_sided(&self) -> bool {
        self.bounded || self.off_zero
    }
}

/// Classifies the sampled support. A support edge is a jump from a
/// non-negligible value (`> 1e-12` of the peak of `e^{u/2}|f|`) straight to
/// exact zeros; smooth decay into underflow does not count, so a Gaussian is
/// neither bounded nor off zero.
pub fn support_class(f: &SampledFunction) -> SupportClass {
    let (hp, hn) = f.weighted(0.5);
    let mag: Vec<f64> = hp.iter().zip(&hn).map(|(a, b)| a.norm() + b.norm()).collect();
    let peak = mag.iter().copied().fold(0.0, f64::max);
    if peak == 0.0 {
        return SupportClass { bounded: true, off_zero: true };
    }
    let eps = 1e-12 * peak;
    let first = mag.iter().position(|&m| m > eps).unwrap_or(0);
    let last = mag.iter().rposition(|&m| m > eps).unwrap_or(mag.len() - 1);
    let bounded = last + 1 < mag.len() && mag[last + 1..].iter().all(|&m| m == 0.0);
    let off_zero = first > 0 && mag[..first].iter().all(|&m| m == 0.0);
    SupportClass { bounded, off_zero }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn band_limited_eval() {
        let p = PhaseProfile::band_limited(vec![0.5, 1.0], vec![2.0], 0.5);
        let t: f64 = 1.3;
        let want = 0.5 + (0.5 * t).cos() + 2.0 * (0.5 * t).sin();
        assert!((p.eval(t) - want).abs() < 1e-15);
        assert_eq!(PhaseProfile::flat().eval(7.0), 0.0);
        assert_eq!(PhaseProfile::flat().label(), "flat");
    }

    #[test]
    fn sampled_profile_interpolates() {
        let p = PhaseProfile::samples(vec![-1.0, 0.0, 2.0], vec![1.0, 0.0, 4.0]).unwrap();
        assert_eq!(p.eval(-5.0), 1.0);
        assert_eq!(p.eval(1.0), 2.0);
        assert_eq!(p.eval(9.0), 4.0);
        assert!(PhaseProfile::samples(vec![1.0, 0.0], vec![0.0, 0.0]).is_err());
    }

    #[test]
    fn profile_json() {
        let p: PhaseProfile =
            serde_json::from_str(r#"{"type":"band_limited","cosine":[0.0,0.3],"sine":[0.1]}"#).unwrap();
        assert_eq!(p, PhaseProfile::band_limited(vec![0.0, 0.3], vec![0.1], 1.0));
        let g: PhaseProfile = serde_json::from_str(r#"{"type":"gaussian_phase"}"#).unwrap();
        assert_eq!(g, PhaseProfile::GaussianPhase);
    }

    #[test]
    fn zero_constant_gives_zero_function() {
        let f = build_from_phase(0.0, &PhaseProfile::band_limited(vec![0.4], vec![1.0], 0.7), &LogGrid::default())
            .unwrap();
        assert_eq!(f.max_abs(), 0.0);
        assert!(build_from_phase(-1.0, &PhaseProfile::flat(), &LogGrid::default()).is_err());
    }

    #[test]
    fn flat_phase_gives_even_function() {
        let f = build_from_phase(1.0, &PhaseProfile::flat(), &LogGrid::default()).unwrap();
        assert_eq!(f.pos(), f.neg());
        assert!(tail_mass_fraction(&f) < TAIL_WARN);
    }

    #[test]
    fn support_classes() {
        let g = LogGrid::default();
        let both = support_class(&one_sided_witness(OneSidedKind::Both, &g).unwrap());
        assert_eq!(both, SupportClass { bounded: true, off_zero: true });
        let b = support_class(&one_sided_witness(OneSidedKind::BoundedSupport, &g).unwrap());
        assert_eq!(b, SupportClass { bounded: true, off_zero: false });
        let o = support_class(&one_sided_witness(OneSidedKind::SupportOffZero, &g).unwrap());
        assert_eq!(o, SupportClass { bounded: false, off_zero: true });
        let (gauss, _) = obstruction_pair(&g).unwrap();
        assert!(!support_class(&gauss).is_one_sided());
        assert!(support_class(&SampledFunction::zeros(g)).is_one_sided());
    }
}
