//! Dilation-correlation forms.
//!
//! `B[f,g](λ) = ∫ f(t) g(λt) dt` and everything built from it: the
//! autocorrelation `F = B[f̄, f]`, the two-function pair `(F₁, F₂)`, the
//! multiplicative convolution and the radial `n`-dimensional reduction.
//!
//! With `t = ±e^u` and `λ = σe^v` the form becomes
//! `B(λ) = e^{-v/2} Σ_± ∫ h_f(u) h_g(u + v) du` where `h = e^{u/2} f`, so on the
//! grid's dilation lattice `v = mΔu` every value is a shifted inner product
//! of sample vectors. Samples shifted past either end of the grid count as
//! zero.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corefn::{LogGrid, SampledFunction};
use crate::error::{Error, Result};
use crate::fourier;

const LATTICE_SNAP: f64 = 1e-9;

/// Samples of a correlation curve on a set of real, nonzero `λ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationCurve {
    lambdas: Vec<f64>,
    values: Vec<Complex64>,
    dim: usize,
}

impl CorrelationCurve {
    pub fn new(lambdas: Vec<f64>, values: Vec<Complex64>, dim: usize) -> Result<Self> {
        if lambdas.len() != values.len() {
            return Err(Error::param(format!(
                "curve has {} lambdas but {} values",
                lambdas.len(),
                values.len()
            )));
        }
        if dim == 0 {
            return Err(Error::param("curve dimension must be >= 1"));
        }
        if lambdas.iter().any(|l| *l == 0.0 || !l.is_finite())
            || values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::param("curve entries must be finite with λ ≠ 0"));
        }
        Ok(Self {
            lambdas,
            values,
            dim,
        })
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, Complex64)> + '_ {
        self.lambdas.iter().copied().zip(self.values.iter().copied())
    }

    /// Value at a stored `λ`, matched to relative precision `1e-12`.
    pub fn value_at(&self, lambda: f64) -> Option<Complex64> {
        let tol = 1e-12 * lambda.abs();
        let idx = self.lambdas.partition_point(|&l| l < lambda - tol);
        self.lambdas
            .get(idx)
            .filter(|l| (**l - lambda).abs() <= tol)
            .map(|_| self.values[idx])
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Points with `|ln|λ|| <= log_radius`.
    pub fn restrict_log(&self, log_radius: f64) -> CorrelationCurve {
        let (lambdas, values) = self
            .iter()
            .filter(|(l, _)| l.abs().ln().abs() <= log_radius + 1e-12)
            .unzip();
        Self {
            lambdas,
            values,
            dim: self.dim,
        }
    }

    pub fn max_log_radius(&self) -> f64 {
        self.lambdas
            .iter()
            .map(|l| l.abs().ln().abs())
            .fold(0.0, f64::max)
    }
}

/// Which `λ` to evaluate a form at.
#[derive(Debug, Clone, PartialEq)]
pub enum LambdaSet {
    /// `±e^{mΔu}` for `|m| <= count/4`: the central half of the grid span,
    /// where shifted samples stay clear of the grid ends.
    DefaultLattice,
    /// `±e^{mΔu}` for `|m| <= max_shift`.
    Lattice { max_shift: usize },
    /// Arbitrary nonzero values. Lattice points use exact shifts, others
    /// cubic interpolation of `g` in `u`.
    Values(Vec<f64>),
}

impl LambdaSet {
    fn max_shift(&self, grid: &LogGrid) -> Option<usize> {
        match self {
            Self::DefaultLattice => Some(grid.count() / 4),
            Self::Lattice { max_shift } => Some(*max_shift),
            Self::Values(_) => None,
        }
    }
}

/// `λ` values of the symmetric lattice, ascending: negatives first.
pub fn lattice_lambdas(grid: &LogGrid, max_shift: usize) -> Vec<f64> {
    let m = max_shift as i64;
    let du = grid.spacing();
    let neg = (-m..=m).rev().map(|s| -((s as f64) * du).exp());
    let pos = (-m..=m).map(|s| ((s as f64) * du).exp());
    neg.chain(pos).collect()
}

/// One bilinear evaluation plan: per result sign `σ`, the channel pairs
/// `(a_s, b_{sσ})` that feed it.
struct Channels<'a> {
    plus: [(&'a [Complex64], &'a [Complex64]); 2],
    minus: [(&'a [Complex64], &'a [Complex64]); 2],
}

fn channels<'a>(
    ap: &'a [Complex64],
    an: &'a [Complex64],
    bp: &'a [Complex64],
    bn: &'a [Complex64],
) -> Channels<'a> {
    Channels {
        plus: [(ap, bp), (an, bn)],
        minus: [(ap, bn), (an, bp)],
    }
}

/// Lattice evaluation shared by the one- and `n`-dimensional forms:
/// `scale · e^{-weight·mΔu} Σ_pairs Σ_k a[k] b[k+m]`.
fn lattice_eval(
    grid: &LogGrid,
    max_shift: usize,
    plan: &Channels<'_>,
    weight: f64,
    scale: f64,
) -> Result<(Vec<f64>, Vec<Complex64>)> {
    let n = grid.count();
    if max_shift >= n {
        return Err(Error::param(format!(
            "lattice shift {max_shift} exceeds grid size {n}"
        )));
    }
    let du = grid.spacing();
    let m = max_shift as i64;
    let weighted = |pairs: &[(&[Complex64], &[Complex64]); 2], s: i64| -> Complex64 {
        shifted_sum(pairs, s) * (scale * (-weight * s as f64 * du).exp())
    };
    // negative λ first, in ascending order, i.e. shifts m down to -m
    let mut values: Vec<Complex64> = (0..=2 * m)
        .into_par_iter()
        .map(|i| weighted(&plan.minus, m - i))
        .collect();
    values.par_extend((-m..=m).into_par_iter().map(|s| weighted(&plan.plus, s)));
    Ok((lattice_lambdas(grid, max_shift), values))
}

/// `Σ_pairs Σ_k a[k] b[k+s]` over the overlap of the two windows.
///
/// Summed directly rather than by FFT: every lattice value then carries
/// roundoff relative to its own size, which keeps the tiny values at large
/// `|ln λ|` meaningful when they are later rescaled by `|λ|^{-n}`.
fn shifted_sum(pairs: &[(&[Complex64], &[Complex64]); 2], s: i64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (a, b) in pairs {
        let n = a.len() as i64;
        let (lo, hi) = (0i64.max(-s), n.min(n - s));
        if lo >= hi {
            continue;
        }
        let (lo, hi) = (lo as usize, hi as usize);
        let bs = (lo as i64 + s) as usize;
        acc += a[lo..hi]
            .iter()
            .zip(&b[bs..bs + (hi - lo)])
            .map(|(x, y)| x * y)
            .sum::<Complex64>();
    }
    acc
}

/// Cubic Lagrange interpolation of a channel at fractional index `s`, zero
/// outside the grid.
fn cubic_at(x: &[Complex64], s: f64) -> Complex64 {
    let i = s.floor();
    let t = s - i;
    let i = i as i64;
    let w = [
        -t * (t - 1.0) * (t - 2.0) / 6.0,
        (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0,
        -(t + 1.0) * t * (t - 2.0) / 2.0,
        (t + 1.0) * t * (t - 1.0) / 6.0,
    ];
    let mut acc = Complex64::new(0.0, 0.0);
    for (j, wj) in w.iter().enumerate() {
        let idx = i - 1 + j as i64;
        if idx >= 0 && (idx as usize) < x.len() {
            acc += x[idx as usize] * wj;
        }
    }
    acc
}

/// Direct evaluation at one `λ`: `Σ_pairs Σ_k a[k] w_k b(u_k + v) Δu` where `a`
/// and `b` are unweighted samples and `w_k = e^{weight·u_k}`.
fn pointwise_eval(
    grid: &LogGrid,
    lambda: f64,
    a: (&[Complex64], &[Complex64]),
    b: (&[Complex64], &[Complex64]),
    weight: f64,
) -> Result<Complex64> {
    if lambda == 0.0 || !lambda.is_finite() {
        return Err(Error::ZeroLambda);
    }
    let v = lambda.abs().ln();
    let du = grid.spacing();
    let shift = v / du;
    let snapped = shift.round();
    let on_lattice = (shift - snapped).abs() < LATTICE_SNAP;
    let plan = if lambda > 0.0 {
        channels(a.0, a.1, b.0, b.1).plus
    } else {
        channels(a.0, a.1, b.0, b.1).minus
    };
    let n = grid.count() as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, u) in grid.nodes().enumerate() {
        let wk = (weight * u).exp();
        for (ac, bc) in plan.iter() {
            let bv = if on_lattice {
                let idx = k as i64 + snapped as i64;
                if (0..n).contains(&idx) {
                    bc[idx as usize]
                } else {
                    continue;
                }
            } else {
                cubic_at(bc, k as f64 + shift)
            };
            acc += ac[k] * bv * wk;
        }
    }
    Ok(acc * du)
}

/// `B[f,g](λ) = ∫ f(t) g(λt) dt`.
pub fn bilinear_form(
    f: &SampledFunction,
    g: &SampledFunction,
    lambdas: &LambdaSet,
) -> Result<CorrelationCurve> {
    f.check_same_grid(g)?;
    let grid = *f.grid();
    match lambdas.max_shift(&grid) {
        Some(max_shift) => {
            let (fp, fn_) = f.weighted(0.5);
            let (gp, gn) = g.weighted(0.5);
            let plan = channels(&fp, &fn_, &gp, &gn);
            let (l, v) = lattice_eval(&grid, max_shift, &plan, 0.5, grid.spacing())?;
            CorrelationCurve::new(l, v, 1)
        }
        None => {
            let LambdaSet::Values(ls) = lambdas else { unreachable!() };
            let mut pairs: Vec<(f64, Complex64)> = ls
                .iter()
                .map(|&l| {
                    pointwise_eval(&grid, l, (f.pos(), f.neg()), (g.pos(), g.neg()), 1.0)
                        .map(|v| (l, v))
                })
                .collect::<Result<_>>()?;
            pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
            let (l, v) = pairs.into_iter().unzip();
            CorrelationCurve::new(l, v, 1)
        }
    }
}

/// `F(λ) = ∫ f̄(x) f(λx) dx`. The value at `λ = 1` is set to the real sum
/// `Σ|f|²` so that `F(1) = ‖f‖²` holds without summation roundoff.
pub fn autocorrelation(f: &SampledFunction, lambdas: &LambdaSet) -> Result<CorrelationCurve> {
    let mut curve = bilinear_form(&f.conj(), f, lambdas)?;
    let norm = f.norm_sq();
    if let Some(i) = curve.lambdas.iter().position(|&l| l == 1.0) {
        curve.values[i] = Complex64::new(norm, 0.0);
    }
    Ok(curve)
}

/// `(F₁, F₂)` with `F₁(λ) = ∫ f̄(x) g(λx) dx`, `F₂(λ) = ∫ ḡ(x) f(λx) dx`.
pub fn cross_pair(
    f: &SampledFunction,
    g: &SampledFunction,
    lambdas: &LambdaSet,
) -> Result<(CorrelationCurve, CorrelationCurve)> {
    Ok((
        bilinear_form(&f.conj(), g, lambdas)?,
        bilinear_form(&g.conj(), f, lambdas)?,
    ))
}

/// Multiplicative convolution `(f₁ ⊛ f₂)(x) = ∫ f₁(t) f₂(x/t) dt/|t|` on the
/// grid of the operands. Needs the node `u = 0` on the grid.
pub fn mult_convolution(f1: &SampledFunction, f2: &SampledFunction) -> Result<SampledFunction> {
    f1.check_same_grid(f2)?;
    let grid = *f1.grid();
    let origin = grid.origin_index()?;
    let (ap, an) = f1.weighted(0.5);
    let (bp, bn) = f2.weighted(0.5);
    let plan = channels(&ap, &an, &bp, &bn);
    let cp = fourier::convolve_sum(&plan.plus);
    let cm = fourier::convolve_sum(&plan.minus);
    let du = grid.spacing();
    let pick = |c: &[Complex64], j: usize, u: f64| -> Complex64 {
        let idx = j as i64 + origin;
        if idx >= 0 && (idx as usize) < c.len() {
            c[idx as usize] * (du * (-0.5 * u).exp())
        } else {
            Complex64::new(0.0, 0.0)
        }
    };
    let pos = grid.nodes().enumerate().map(|(j, u)| pick(&cp, j, u)).collect();
    let neg = grid.nodes().enumerate().map(|(j, u)| pick(&cm, j, u)).collect();
    Ok(SampledFunction::from_parts_unchecked(grid, pos, neg))
}

/// Surface measure of the unit sphere `S^{n-1}`, `2π^{n/2} / Γ(n/2)`.
pub fn sphere_area(n: usize) -> f64 {
    // Γ(n/2) by recurrence from Γ(1/2) = √π, Γ(1) = 1
    let mut gamma = if n.is_multiple_of(2) { 1.0 } else { PI.sqrt() };
    let mut x = if n.is_multiple_of(2) { 1.0 } else { 0.5 };
    while x < n as f64 / 2.0 - 0.25 {
        gamma *= x;
        x += 1.0;
    }
    2.0 * PI.powf(n as f64 / 2.0) / gamma
}

/// `‖f‖²_{L²(ℝⁿ)}` of the radial function with profile `f.pos()`.
pub fn radial_norm_sq(profile: &SampledFunction, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::param("dimension n must be >= 1"));
    }
    let grid = profile.grid();
    let s: f64 = grid
        .nodes()
        .zip(profile.pos())
        .map(|(u, z)| z.norm_sqr() * (n as f64 * u).exp())
        .sum();
    Ok(sphere_area(n) * s * grid.spacing())
}

/// `F(λ) = ω_{n-1} ∫₀^∞ f̄(r) f(|λ|r) r^{n-1} dr` for the radial function on
/// `ℝⁿ` whose profile is the positive channel of `profile`.
pub fn radial_autocorrelation(
    profile: &SampledFunction,
    n: usize,
    lambdas: &LambdaSet,
) -> Result<CorrelationCurve> {
    if n == 0 {
        return Err(Error::param("dimension n must be >= 1"));
    }
    let grid = *profile.grid();
    let omega = sphere_area(n);
    let half = 0.5 * n as f64;
    let values = match lambdas.max_shift(&grid) {
        Some(max_shift) => {
            let h: Vec<Complex64> = grid
                .nodes()
                .zip(profile.pos())
                .map(|(u, z)| z * (half * u).exp())
                .collect();
            let hc: Vec<Complex64> = h.iter().map(|z| z.conj()).collect();
            let zero = vec![Complex64::new(0.0, 0.0); h.len()];
            // same profile on both signs of λ: reuse the plan with an empty
            // second channel
            let plan = Channels {
                plus: [(&hc, &h), (&zero, &zero)],
                minus: [(&hc, &h), (&zero, &zero)],
            };
            let (l, mut v) = lattice_eval(&grid, max_shift, &plan, half, omega * grid.spacing())?;
            let norm = radial_norm_sq(profile, n)?;
            for (li, vi) in l.iter().zip(v.iter_mut()) {
                if li.abs() == 1.0 {
                    *vi = Complex64::new(norm, 0.0);
                }
            }
            return CorrelationCurve::new(l, v, n);
        }
        None => {
            let LambdaSet::Values(ls) = lambdas else { unreachable!() };
            let fc: Vec<Complex64> = profile.pos().iter().map(|z| z.conj()).collect();
            let zero = vec![Complex64::new(0.0, 0.0); fc.len()];
            let mut sorted = ls.clone();
            sorted.sort_by(f64::total_cmp);
            let vals = sorted
                .iter()
                .map(|&l| {
                    pointwise_eval(
                        &grid,
                        l.abs(),
                        (&fc, &zero),
                        (profile.pos(), &zero),
                        n as f64,
                    )
                    .map(|v| v * omega)
                })
                .collect::<Result<Vec<_>>>()?;
            (sorted, vals)
        }
    };
    CorrelationCurve::new(values.0, values.1, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corefn::{sample, FunctionSpec};

    fn gauss(beta: f64) -> SampledFunction {
        sample(
            &FunctionSpec::gaussian(Complex64::new(beta, 0.0)).unwrap(),
            &LogGrid::default(),
        )
        .unwrap()
    }

    #[test]
    fn sphere_areas() {
        assert!((sphere_area(1) - 2.0).abs() < 1e-15);
        assert!((sphere_area(2) - 2.0 * PI).abs() < 1e-14);
        assert!((sphere_area(3) - 4.0 * PI).abs() < 1e-14);
        assert!((sphere_area(4) - 2.0 * PI * PI).abs() < 1e-13);
    }

    #[test]
    fn lattice_is_sorted_and_reciprocal() {
        let g = LogGrid::default();
        let l = lattice_lambdas(&g, 8);
        assert_eq!(l.len(), 34);
        assert!(l.windows(2).all(|w| w[0] < w[1]));
        for &x in &l {
            assert!(l.iter().any(|&y| (y * x - 1.0).abs() < 1e-14));
        }
    }

    #[test]
    fn gaussian_autocorrelation_at_two() {
        let f = gauss(1.0);
        let c = bilinear_form(&f, &f, &LambdaSet::Values(vec![2.0])).unwrap();
        assert!((c.values()[0].re - 5f64.powf(-0.5)).abs() < 1e-9);
    }

    #[test]
    fn zero_lambda_rejected() {
        let f = gauss(1.0);
        assert!(matches!(
            bilinear_form(&f, &f, &LambdaSet::Values(vec![0.0])),
            Err(Error::ZeroLambda)
        ));
    }

    #[test]
    fn unit_value_is_real_norm() {
        let f = sample(
            &FunctionSpec::gaussian(Complex64::new(1.0, 1.0)).unwrap(),
            &LogGrid::default(),
        )
        .unwrap();
        let c = autocorrelation(&f, &LambdaSet::DefaultLattice).unwrap();
        let v = c.value_at(1.0).unwrap();
        assert_eq!(v.im, 0.0);
        assert!((v.re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn radial_rejects_zero_dimension() {
        assert!(radial_autocorrelation(&gauss(1.0), 0, &LambdaSet::DefaultLattice).is_err());
    }

    #[test]
    fn cubic_reproduces_cubics() {
        let x: Vec<Complex64> = (0..10)
            .map(|k| {
                let t = k as f64;
                Complex64::new(t * t * t - 2.0 * t, 0.0)
            })
            .collect();
        let s = 4.37;
        let want = s * s * s - 2.0 * s;
        assert!((cubic_at(&x, s).re - want).abs() < 1e-10);
    }
}
