use std::f64::consts::PI;

use num_complex::Complex64;

use super::{CheckReport, TOL_CLOSED_FORM};
use crate::corefn::{l2_inner, SampledFunction};
use crate::dilate::{cross_pair, radial_norm_sq, CorrelationCurve, LambdaSet};
use crate::error::{Error, Result};
use crate::mellin::mellin_forward;
use crate::quad::{integrate_breaks, panels, Tolerance};
use crate::special::{gamma_abs_quarter, j_factor, target_curves};

/// Window of `τ` over which spectral identities are compared.
pub const TAU_WINDOW: f64 = 10.0;
/// The `τ` values of the Mellin identity for the extremal curve.
pub const M0F_TAUS: [f64; 9] = [0.0, 1.0, -1.0, 2.0, -2.0, 5.0, -5.0, 10.0, -10.0];

/// Maximum relative deviation `|F(λ) - target(λ)| / |target(λ)|` over the
/// curve's `λ` with `|ln|λ|| <= log_radius`.
pub fn check_curve_against(
    name: &str,
    curve: &CorrelationCurve,
    target: impl Fn(f64) -> Complex64,
    log_radius: f64,
    tolerance: f64,
) -> CheckReport {
    let mut worst = 0.0f64;
    let mut count = 0usize;
    for (l, v) in curve.restrict_log(log_radius).iter() {
        let t = target(l);
        let err = if t.norm() > 0.0 { (v - t).norm() / t.norm() } else { v.norm() };
        worst = worst.max(err);
        count += 1;
    }
    CheckReport::new(name, worst, tolerance)
        .with_num("log_radius", log_radius)
        .with("points", count as u64)
}

/// `‖f‖²` in dimension `n`; for `n > 1`, `f` is the radial profile.
fn norm_in_dim(f: &SampledFunction, n: usize) -> Result<f64> {
    if n == 1 {
        Ok(f.norm_sq())
    } else {
        radial_norm_sq(f, n)
    }
}

/// Constancy of `Φ = F·Jₙ` on the real lattice. `c₀` is estimated as the
/// mean of `Φ` over the central half (in `ln|λ|`) of the curve; the residual
/// combines the spread of `Φ` there with the cross-check
/// `|c₀ - 2^{n/2}‖f‖²|`, relative to `max(1, c₀)`.
pub fn check_theorem1(curve: &CorrelationCurve, f: &SampledFunction, n: usize) -> Result<CheckReport> {
    if curve.dim() != n {
        return Err(Error::DimensionMismatch { curve: curve.dim(), expected: n });
    }
    let central = curve.restrict_log(0.5 * curve.max_log_radius());
    let phi: Vec<Complex64> = central
        .iter()
        .map(|(l, v)| j_factor(Complex64::new(l, 0.0), n as u32).map(|j| v * j))
        .collect::<Result<_>>()?;
    if phi.is_empty() {
        return Err(Error::param("curve has no λ values"));
    }
    let mean = phi.iter().sum::<Complex64>() / phi.len() as f64;
    let spread = phi.iter().map(|p| (p - mean).norm()).fold(0.0, f64::max);
    let predicted = 2f64.powf(0.5 * n as f64) * norm_in_dim(f, n)?;
    let cross = (mean - predicted).norm();
    let scale = mean.re.max(1.0);
    Ok(CheckReport::new("theorem1_constancy", spread.max(cross) / scale, TOL_CLOSED_FORM)
        .with_num("c0", mean.re)
        .with_num("c0_im", mean.im)
        .with_num("c0_from_norm", predicted)
        .with_num("phi_spread", spread)
        .with_num("cross_check", cross)
        .with("dim", n as u64))
}

/// The modulus law: `|M₀[f](τ)| = √c₀ π^{-1/4} |Γ(1/4 + iτ/2)|` for
/// `|τ| <= 10` (pointwise relative error) and `M₁[f] ≡ 0` (relative to the
/// largest target value).
pub fn check_theorem2(f: &SampledFunction, c0: f64) -> Result<CheckReport> {
    let spec = mellin_forward(f)?;
    let mut rel = 0.0f64;
    let mut odd = 0.0f64;
    let mut peak = 0.0f64;
    for (t, m0, m1) in spec.window(TAU_WINDOW) {
        let (target, _) = target_curves(c0, t)?;
        peak = peak.max(target);
        rel = rel.max(if target > 0.0 { (m0.norm() - target).abs() / target } else { m0.norm() });
        odd = odd.max(m1.norm());
    }
    let odd_rel = if peak > 0.0 { odd / peak } else { odd };
    Ok(CheckReport::new("theorem2_modulus", rel.max(odd_rel), TOL_CLOSED_FORM)
        .with_num("c0", c0)
        .with_num("modulus_rel_error", rel)
        .with_num("m1_max", odd)
        .with_num("m1_rms", spec.rms(1)))
}

/// `M₀[c₀(1+λ²)^{-1/2}](τ) = 2√2 c₀ ∫₀^∞ cos(τu) cosh(u)^{-1/2} du` by
/// adaptive quadrature against `c₀ π^{-1/2} |Γ(1/4 + iτ/2)|²`, maximum
/// relative error over [`M0F_TAUS`].
pub fn check_m0f_identity(c0: f64) -> Result<CheckReport> {
    let breaks = panels(0.0, 80.0, 1.0);
    let tol = Tolerance { abs: 1e-16, rel: 1e-12, max_intervals: 20_000 };
    let mut worst = 0.0f64;
    let mut report = CheckReport::new("m0f_identity", 0.0, TOL_CLOSED_FORM);
    for &tau in &M0F_TAUS {
        let est = integrate_breaks(
            |u: f64| Complex64::new((tau * u).cos() / u.cosh().sqrt(), 0.0),
            &breaks,
            tol,
        );
        let quad = 2.0 * 2f64.sqrt() * c0 * est.value.re;
        let (_, target) = target_curves(c0, tau)?;
        let err = if target > 0.0 { (quad - target).abs() / target } else { quad.abs() };
        worst = worst.max(err);
        report = report.with_num(&format!("quad_tau_{tau}"), quad).with_num(&format!("target_tau_{tau}"), target);
    }
    report.residual = worst;
    Ok(report.with_tolerance(TOL_CLOSED_FORM))
}

/// The product identities `conj(M₀[f]) M₀[g] = (c₁/√π)|Γ(1/4+iτ/2)|²` and
/// `conj(M₁[f]) M₁[g] = 0` over `|τ| <= 10`, plus the constant of `F₂`:
/// `F₂(1)·√2 = conj(c₁)`.
pub fn check_theorem4(f: &SampledFunction, g: &SampledFunction, c1: Complex64) -> Result<CheckReport> {
    f.check_same_grid(g)?;
    let sf = mellin_forward(f)?;
    let sg = mellin_forward(g)?;
    let mut even = 0.0f64;
    let mut odd = 0.0f64;
    let mut scale = 0.0f64;
    for ((t, f0, f1), (_, g0, g1)) in sf.window(TAU_WINDOW).zip(sg.window(TAU_WINDOW)) {
        let gamma = gamma_abs_quarter(t);
        let target = c1 * (gamma * gamma / PI.sqrt());
        scale = scale.max(target.norm()).max(f0.norm() * g0.norm()).max(f1.norm() * g1.norm());
        even = even.max((f0.conj() * g0 - target).norm());
        odd = odd.max((f1.conj() * g1).norm());
    }
    let scale = if scale > 0.0 { scale } else { 1.0 };
    // F₂(1) = ∫ ḡ f
    let c2 = l2_inner(g, f)? * 2f64.sqrt();
    let c2_err = (c2 - c1.conj()).norm() / c1.norm().max(1.0);
    let residual = ((even + odd) / scale).max(c2_err);
    Ok(CheckReport::new("theorem4_products", residual, TOL_CLOSED_FORM)
        .with_num("c1_re", c1.re)
        .with_num("c1_im", c1.im)
        .with_num("c2_re", c2.re)
        .with_num("c2_im", c2.im)
        .with_num("even_product_error", even / scale)
        .with_num("odd_product_max", odd / scale)
        .with_num("c2_error", c2_err))
}

/// `max(|F₁|, |F₂|)` over the default lattice, normalized by `‖f‖‖g‖`.
pub fn check_obstruction(f: &SampledFunction, g: &SampledFunction) -> Result<CheckReport> {
    let (f1, f2) = cross_pair(f, g, &LambdaSet::DefaultLattice)?;
    let scale = (f.norm_sq() * g.norm_sq()).sqrt();
    let m = f1.max_abs().max(f2.max_abs());
    let residual = if scale > 0.0 { m / scale } else { m };
    Ok(CheckReport::new("obstruction_pair", residual, 1e-10)
        .with_num("f1_max", f1.max_abs())
        .with_num("f2_max", f2.max_abs()))
}

/// `F(λ) = |λ|^{-n} conj(F(1/λ))` for a real autocorrelation curve of
/// dimension `n`, normalized by `max|F|`.
pub fn check_radial_symmetry(curve: &CorrelationCurve) -> CheckReport {
    let n = curve.dim() as i32;
    let dev = curve
        .iter()
        .filter_map(|(l, v)| curve.value_at(1.0 / l).map(|w| (v - w.conj() * l.abs().powi(-n)).norm()))
        .fold(0.0, f64::max);
    let scale = curve.max_abs();
    CheckReport::new(
        "reciprocal_symmetry",
        if scale > 0.0 { dev / scale } else { dev },
        super::TOL_SYMMETRY,
    )
    .with("dim", n as u64)
}
