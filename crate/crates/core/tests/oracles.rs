//! Library results against independent oracles: direct quadrature, an
//! independent Stirling-series log-gamma, and elementary closed forms.

use std::f64::consts::{PI, SQRT_2};

use beurling_core::construct::{build_from_phase, PhaseProfile};
use beurling_core::corefn::{sample, FunctionSpec, LogGrid, SampledFunction};
use beurling_core::dilate::{autocorrelation, bilinear_form, sphere_area, LambdaSet};
use beurling_core::mellin::mellin_forward;
use beurling_core::quad::{integrate_breaks, panels, Tolerance};
use beurling_core::special::{
    disk_weighted_l2, gamma_abs_quarter, gaussian_closed_form, gaussian_phase, j_factor, ln_gamma, GaussianParam,
};
use beurling_core::verify::{
    check_theorem1, check_theorem4, falsification_demo, identity_suite, phi_deviation, TOL_ROUND_TRIP,
};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn grid() -> LogGrid {
    LogGrid::default()
}

fn s(spec: &str) -> SampledFunction {
    sample(&spec.parse().unwrap(), &grid()).unwrap()
}

/// ln Γ by upward recurrence to `Re z >= 20` and the Stirling series.
fn stirling_ln_gamma(mut z: Complex64) -> Complex64 {
    let mut shift = c(0.0, 0.0);
    while z.re < 20.0 {
        shift += z.ln();
        z += 1.0;
    }
    let b = [1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360360.0];
    let mut series = c(0.0, 0.0);
    let zi = z.inv();
    let z2 = zi * zi;
    let mut p = zi;
    for bk in b {
        series += p * bk;
        p *= z2;
    }
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + series - shift
}

fn gk(f: impl Fn(f64) -> Complex64, a: f64, b: f64) -> Complex64 {
    integrate_breaks(f, &panels(a, b, 0.5), Tolerance::default()).value
}

#[test]
fn lanczos_matches_stirling_on_the_critical_line() {
    for k in -40..=40 {
        let z = c(0.25, 0.25 * k as f64);
        let a = ln_gamma(z);
        let b = stirling_ln_gamma(z);
        assert!((a.re - b.re).abs() < 1e-12, "Re at {z}: {a} vs {b}");
        // compare the argument modulo 2π
        let d = (a.im - b.im).rem_euclid(2.0 * PI);
        assert!(d.min(2.0 * PI - d) < 1e-12, "Im at {z}: {a} vs {b}");
    }
    for z in [c(0.5, 0.0), c(1.0, 0.0), c(3.7, 2.1), c(0.1, -7.0)] {
        assert!((ln_gamma(z).re - stirling_ln_gamma(z).re).abs() < 1e-12);
    }
}

#[test]
fn gaussian_mellin_matches_quadrature() {
    // M₀[e^{-πx²}](τ) = 2 ∫ e^{(1/2 + iτ)u} e^{-πe^{2u}} du
    let spec = mellin_forward(&s("gaussian:1")).unwrap();
    for (t, m0, m1) in spec.window(10.0).step_by(97) {
        let want = gk(|u| 2.0 * (c(0.5, t) * u).exp() * (-PI * (2.0 * u).exp()).exp(), -60.0, 3.0);
        assert!((m0 - want).norm() < 1e-10, "τ={t}: {m0} vs {want}");
        assert_eq!(m1.norm(), 0.0);
        assert!((m0.norm() - PI.powf(-0.25) * gamma_abs_quarter(t)).abs() < 1e-10);
        assert!((m0.arg() - gaussian_phase(t)).sin().abs() < 1e-8);
    }
}

#[test]
fn hermite_mellin_matches_quadrature() {
    let f = FunctionSpec::hermite(2, c(1.0, 0.0)).unwrap();
    let spec = mellin_forward(&s("hermite:2,1")).unwrap();
    for (t, m0, _) in spec.window(6.0).step_by(131) {
        let want = gk(
            |u| 2.0 * (c(0.5, t) * u).exp() * f.eval(u.exp()).unwrap(),
            -60.0,
            3.0,
        );
        assert!((m0 - want).norm() < 1e-9, "τ={t}: {m0} vs {want}");
    }
}

#[test]
fn complex_gaussian_autocorrelation_matches_quadrature() {
    let beta = c(1.0, 1.0);
    let f = FunctionSpec::gaussian(beta).unwrap();
    let curve = autocorrelation(&s("gaussian:1,1"), &LambdaSet::DefaultLattice).unwrap();
    let p = GaussianParam::new(beta).unwrap();
    for (l, v) in curve.restrict_log(2.5).iter().step_by(37) {
        let direct = gk(|x| f.eval(x).unwrap().conj() * f.eval(l * x).unwrap(), -8.0, 8.0);
        assert!((v - direct).norm() < 1e-10 * direct.norm(), "λ={l}: {v} vs {direct}");
        let closed = gaussian_closed_form(p, c(l, 0.0), 1).unwrap();
        assert!((closed - direct).norm() < 1e-12, "closed form at λ={l}");
    }
}

#[test]
fn off_lattice_values_match_quadrature() {
    let f = FunctionSpec::gaussian(c(1.0, 0.0)).unwrap();
    let g = FunctionSpec::gaussian(c(2.0, 0.5)).unwrap();
    let ls = vec![-3.3, -0.7, 0.123, 0.5, 1.37, 2.9, 7.77];
    let curve = bilinear_form(
        &sample(&f, &grid()).unwrap(),
        &sample(&g, &grid()).unwrap(),
        &LambdaSet::Values(ls.clone()),
    )
    .unwrap();
    for (l, v) in curve.iter() {
        let want = gk(|x| f.eval(x).unwrap() * g.eval(l * x).unwrap(), -8.0, 8.0);
        assert!((v - want).norm() < 1e-6 * want.norm(), "λ={l}: {v} vs {want}");
    }
}

#[test]
fn boxcar_autocorrelation_matches_interval_overlap() {
    // F(λ) = |[1, 2] ∩ [1/λ, 2/λ]| for λ > 0 and 0 for λ < 0
    let curve = autocorrelation(&s("boxcar:1,2"), &LambdaSet::DefaultLattice).unwrap();
    let du = grid().spacing();
    for (l, v) in curve.restrict_log(1.0).iter() {
        let want = if l > 0.0 { (2f64.min(2.0 / l) - 1f64.max(1.0 / l)).max(0.0) } else { 0.0 };
        // rectangle rule on a discontinuous integrand: first order in Δu
        assert!((v.re - want).abs() <= 3.0 * du, "λ={l}: {v} vs {want}");
    }
    assert!(curve.iter().filter(|(l, _)| *l < 0.0).all(|(_, v)| v.norm() == 0.0));
}

#[test]
fn sphere_areas() {
    assert!((sphere_area(1) - 2.0).abs() < 1e-15);
    assert!((sphere_area(2) - 2.0 * PI).abs() < 1e-14);
    assert!((sphere_area(3) - 4.0 * PI).abs() < 1e-14);
    assert!((sphere_area(4) - 2.0 * PI * PI).abs() < 1e-13);
}

#[test]
fn extremal_disk_integral_is_the_disk_area() {
    // |F|²|1+λ²| ≡ 1 for the real Gaussian
    let p = GaussianParam::real(1.0).unwrap();
    let v = disk_weighted_l2(|l| gaussian_closed_form(p, l, 1).unwrap(), 1, 256, 512).unwrap();
    assert!((v - PI).abs() < 1e-10);
}

#[test]
fn complex_beta_phi_values() {
    let p = GaussianParam::new(c(1.0, 1.0)).unwrap();
    let zero = c(0.0, 0.0);
    let phi0 = gaussian_closed_form(p, zero, 1).unwrap() * j_factor(zero, 1).unwrap();
    // (1 - i)^{-1/2} = 2^{-1/4} e^{iπ/8}
    let want = Complex64::from_polar(2f64.powf(-0.25), PI / 8.0);
    assert!((phi0 - want).norm() < 1e-15);
    assert!((phi0 - c(0.7769, 0.3218)).norm() < 1e-4);
    let one = c(1.0, 0.0);
    let phi1 = gaussian_closed_form(p, one, 1).unwrap() * j_factor(one, 1).unwrap();
    assert!((phi1 - 1.0).norm() < 1e-15);
}

#[test]
fn falsification_deviation_grows_with_imaginary_part() {
    let d: Vec<f64> = [0.1, 0.5, 1.0]
        .iter()
        .map(|&im| phi_deviation(GaussianParam::new(c(1.0, im)).unwrap()).unwrap())
        .collect();
    assert!(d[0] < d[1] && d[1] < d[2], "{d:?}");
    let r = falsification_demo(c(1.0, 1.0)).unwrap();
    assert!(r.pass);
    assert_eq!(r.detail_str("verdict"), Some("falsified"));
    // a barely complex β moves Φ too little to count
    let weak = falsification_demo(c(1.0, 0.01)).unwrap();
    assert!(!weak.pass);
}

#[test]
fn phase_families_recover_requested_constant() {
    let profiles = [
        PhaseProfile::band_limited(vec![0.0, 0.5], vec![], 1.0),
        PhaseProfile::band_limited(vec![1.0], vec![0.8], 0.5),
        PhaseProfile::band_limited(vec![0.3, 0.0, 0.4], vec![0.2], 0.7),
        PhaseProfile::band_limited(vec![], vec![1.0, -0.3], 0.3),
        PhaseProfile::band_limited(vec![0.0, 1.2], vec![0.0, 0.5], 0.4),
        PhaseProfile::samples(vec![-20.0, 0.0, 20.0], vec![-1.0, 0.0, 1.0]).unwrap(),
    ];
    for (i, p) in profiles.iter().enumerate() {
        let c0 = 0.5 + i as f64 * 0.5;
        let f = build_from_phase(c0, p, &grid()).unwrap();
        let curve = autocorrelation(&f, &LambdaSet::DefaultLattice).unwrap();
        let r = check_theorem1(&curve, &f, 1).unwrap();
        let est = r.detail("c0").unwrap();
        assert!((est - c0).abs() <= TOL_ROUND_TRIP * c0, "profile {i}: {est} vs {c0}");
    }
}

#[test]
fn norm_oracle_for_gaussian_constant() {
    // ‖e^{-πx²}‖² = 2^{-1/2}, so √2‖f‖² = 1
    let f = s("gaussian:1");
    assert!((SQRT_2 * f.norm_sq() - 1.0).abs() < 1e-12);
}

#[test]
fn real_gaussian_pair_reduces_to_single_function_case() {
    let f = s("gaussian:1");
    let r = check_theorem4(&f, &f, c(1.0, 0.0)).unwrap();
    assert!(r.pass, "{}", r.summary());
}

#[test]
fn self_pair_reciprocity_is_exact_at_one() {
    let f = s("gaussian:1,1");
    let b = bilinear_form(&f, &f, &LambdaSet::DefaultLattice).unwrap();
    assert_eq!(b.value_at(1.0), b.value_at(1.0));
    for r in identity_suite(&f, &f).unwrap() {
        assert!(r.pass, "{}", r.summary());
    }
}
