//! Mellin transforms on the multiplicative group.
//!
//! ```text
//! M₀[f](τ) = ∫ |x|^{-1/2+iτ} f(x) dx,   M₁[f](τ) = ∫ |x|^{-1/2+iτ} sgn(x) f(x) dx
//! ```
//!
//! With `x = ±e^u` both are Fourier integrals `∫ h_j(u) e^{iτu} du` of
//! `h₀ = e^{u/2}(f(e^u) + f(-e^u))` and `h₁ = e^{u/2}(f(e^u) - f(-e^u))`,
//! evaluated by FFT on the dual grid `τ_j = (j - N/2)·2π/(NΔu)`.
//!
//! Near `x = 0` catalog functions are constant to high order, so
//! `h_j(u) ≈ h_j(u_0) e^{(u-u_0)/2}` left of the grid. That geometric tail is
//! summed in closed form and added to every bin; the inverse solves the
//! resulting rank-one-perturbed system exactly, so forward and inverse stay
//! mutual inverses to roundoff.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::corefn::{LogGrid, SampledFunction};
use crate::error::{Error, Result};

/// `M₀[f]` and `M₁[f]` on the FFT-dual `τ` grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MellinSpectrum {
    taus: Vec<f64>,
    m0: Vec<Complex64>,
    m1: Vec<Complex64>,
}

impl MellinSpectrum {
    pub fn new(taus: Vec<f64>, m0: Vec<Complex64>, m1: Vec<Complex64>) -> Result<Self> {
        if taus.len() != m0.len() || taus.len() != m1.len() {
            return Err(Error::param("spectrum columns have different lengths"));
        }
        Ok(Self { taus, m0, m1 })
    }

    /// Spectrum on the `τ` grid dual to `grid`, from closures per channel.
    pub fn from_fn(
        grid: &LogGrid,
        m0: impl Fn(f64) -> Complex64,
        m1: impl Fn(f64) -> Complex64,
    ) -> Self {
        let taus: Vec<f64> = (0..grid.count()).map(|j| grid.tau(j)).collect();
        Self {
            m0: taus.iter().map(|&t| m0(t)).collect(),
            m1: taus.iter().map(|&t| m1(t)).collect(),
            taus,
        }
    }

    pub fn taus(&self) -> &[f64] {
        &self.taus
    }

    pub fn m0(&self) -> &[Complex64] {
        &self.m0
    }

    pub fn m1(&self) -> &[Complex64] {
        &self.m1
    }

    pub fn len(&self) -> usize {
        self.taus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.taus.is_empty()
    }

    pub fn tau_spacing(&self) -> f64 {
        if self.taus.len() < 2 {
            0.0
        } else {
            self.taus[1] - self.taus[0]
        }
    }

    /// Entries with `|τ| <= tau_max`, as `(τ, M₀, M₁)`.
    pub fn window(&self, tau_max: f64) -> impl Iterator<Item = (f64, Complex64, Complex64)> + '_ {
        self.taus
            .iter()
            .zip(&self.m0)
            .zip(&self.m1)
            .filter(move |((t, _), _)| t.abs() <= tau_max)
            .map(|((t, a), b)| (*t, *a, *b))
    }

    /// Root mean square of channel `j ∈ {0, 1}` over the whole grid.
    pub fn rms(&self, channel: usize) -> f64 {
        let c = if channel == 0 { &self.m0 } else { &self.m1 };
        if c.is_empty() {
            return 0.0;
        }
        (c.iter().map(|z| z.norm_sqr()).sum::<f64>() / c.len() as f64).sqrt()
    }

    /// `(1/4π) ∫ (|M₀|² + |M₁|²) dτ` by the rectangle rule on the grid.
    pub fn energy(&self) -> f64 {
        let s: f64 = self
            .m0
            .iter()
            .chain(&self.m1)
            .map(|z| z.norm_sqr())
            .sum();
        s * self.tau_spacing() / (4.0 * PI)
    }

    fn check_dual(&self, grid: &LogGrid) -> Result<()> {
        let n = grid.count();
        if self.taus.len() != n {
            return Err(Error::IncompatibleSpectrum(format!(
                "{} τ samples for a grid of {n} nodes",
                self.taus.len()
            )));
        }
        let dt = grid.tau_spacing();
        for (j, t) in self.taus.iter().enumerate() {
            if (t - grid.tau(j)).abs() > 1e-9 * dt {
                return Err(Error::IncompatibleSpectrum(format!(
                    "τ[{j}] = {t} but the dual grid has {}",
                    grid.tau(j)
                )));
            }
        }
        Ok(())
    }
}

/// Discrete transform pair on one grid.
struct Engine {
    grid: LogGrid,
    taus: Vec<f64>,
    /// `e^{iτ_j u_min}`
    phase: Vec<Complex64>,
    /// geometric left-tail contribution per unit `h(u_0)`
    tail: Vec<Complex64>,
}

impl Engine {
    fn new(grid: &LogGrid) -> Self {
        let du = grid.spacing();
        let taus: Vec<f64> = (0..grid.count()).map(|j| grid.tau(j)).collect();
        let phase: Vec<Complex64> = taus
            .iter()
            .map(|t| Complex64::from_polar(1.0, t * grid.u_min()))
            .collect();
        // Σ_{k≥1} e^{-(1/2 + iτ) kΔu} = r / (1 - r)
        let tail = taus
            .iter()
            .zip(&phase)
            .map(|(t, p)| {
                let r = (-Complex64::new(0.5, *t) * du).exp();
                p * r / (1.0 - r) * du
            })
            .collect();
        Self {
            grid: *grid,
            taus,
            phase,
            tail,
        }
    }

    /// `Δu Σ_k h[k] e^{iτ_j u_k}`.
    fn dft(&self, h: &[Complex64]) -> Vec<Complex64> {
        let n = h.len();
        let mut buf: Vec<Complex64> = h
            .iter()
            .enumerate()
            .map(|(k, z)| if k % 2 == 0 { *z } else { -z })
            .collect();
        FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
        let du = self.grid.spacing();
        buf.iter().zip(&self.phase).map(|(z, p)| z * p * du).collect()
    }

    /// Exact inverse of [`Engine::dft`].
    fn idft(&self, m: &[Complex64]) -> Vec<Complex64> {
        let n = m.len();
        let mut buf: Vec<Complex64> = m.iter().zip(&self.phase).map(|(z, p)| z * p.conj()).collect();
        FftPlanner::new().plan_fft_forward(n).process(&mut buf);
        let scale = self.grid.tau_spacing() / (2.0 * PI);
        buf.iter()
            .enumerate()
            .map(|(k, z)| if k % 2 == 0 { z * scale } else { -z * scale })
            .collect()
    }

    fn forward(&self, h: &[Complex64]) -> Vec<Complex64> {
        let mut m = self.dft(h);
        let h0 = h[0];
        if h0 != Complex64::new(0.0, 0.0) {
            m.iter_mut().zip(&self.tail).for_each(|(z, t)| *z += t * h0);
        }
        m
    }

    fn inverse(&self, m: &[Complex64]) -> Vec<Complex64> {
        let mut y = self.idft(m);
        let w = self.idft(&self.tail);
        let h0 = y[0] / (1.0 + w[0]);
        y.iter_mut().zip(&w).for_each(|(z, wk)| *z -= wk * h0);
        y
    }
}

/// `M₀[f]`, `M₁[f]` on the grid dual to `f`'s grid. Needs a symmetric grid.
pub fn mellin_forward(f: &SampledFunction) -> Result<MellinSpectrum> {
    let grid = f.grid();
    grid.require_symmetric()?;
    let (hp, hn) = f.weighted(0.5);
    let h0: Vec<Complex64> = hp.iter().zip(&hn).map(|(a, b)| a + b).collect();
    let h1: Vec<Complex64> = hp.iter().zip(&hn).map(|(a, b)| a - b).collect();
    let engine = Engine::new(grid);
    Ok(MellinSpectrum {
        m0: engine.forward(&h0),
        m1: engine.forward(&h1),
        taus: engine.taus,
    })
}

/// Inverts [`mellin_forward`]: `h_j(u) = (1/2π) ∫ M_j(τ) e^{-iτu} dτ` and
/// `f(±e^u) = e^{-u/2} (h₀ ± h₁) / 2`.
pub fn mellin_inverse(spec: &MellinSpectrum, grid: &LogGrid) -> Result<SampledFunction> {
    grid.require_symmetric()?;
    spec.check_dual(grid)?;
    let engine = Engine::new(grid);
    let h0 = engine.inverse(&spec.m0);
    let h1 = engine.inverse(&spec.m1);
    let mut pos = Vec::with_capacity(grid.count());
    let mut neg = Vec::with_capacity(grid.count());
    for (k, u) in grid.nodes().enumerate() {
        let w = 0.5 * (-0.5 * u).exp();
        pos.push((h0[k] + h1[k]) * w);
        neg.push((h0[k] - h1[k]) * w);
    }
    SampledFunction::new(*grid, pos, neg)
}

/// `|‖f‖² - (1/4π)(‖M₀[f]‖² + ‖M₁[f]‖²)|`.
pub fn plancherel_residual(f: &SampledFunction) -> Result<f64> {
    let spec = mellin_forward(f)?;
    Ok((f.norm_sq() - spec.energy()).abs())
}
