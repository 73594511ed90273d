//! Structural invariants on random inputs.

use beurling_core::construct::PhaseProfile;
use beurling_core::corefn::{l2_inner, reciprocal_involution, LogGrid, SampledFunction};
use beurling_core::dilate::{bilinear_form, mult_convolution, CorrelationCurve, LambdaSet};
use beurling_core::io::{read_curve, write_curve};
use beurling_core::mellin::{mellin_forward, mellin_inverse, plancherel_residual};
use num_complex::Complex64;
use proptest::prelude::*;

const N: usize = 64;

fn grid() -> LogGrid {
    LogGrid::symmetric(8.0, N).unwrap()
}

fn channel() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), N)
        .prop_map(|v| v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect())
}

fn function() -> impl Strategy<Value = SampledFunction> {
    (channel(), channel()).prop_map(|(p, n)| SampledFunction::new(grid(), p, n).unwrap())
}

fn max_dev(a: &CorrelationCurve, b: &CorrelationCurve) -> f64 {
    a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involution_is_exact(f in function()) {
        let back = reciprocal_involution(&reciprocal_involution(&f).unwrap()).unwrap();
        // e^{-u}e^{u} is not exactly 1 in floating point
        prop_assert!(back.max_abs_diff(&f) <= 1e-12 * f.max_abs());
    }

    #[test]
    fn involution_is_an_isometry(f in function()) {
        let g = reciprocal_involution(&f).unwrap();
        // node 0 is its own partner, so compare away from it
        let (hp, hn) = f.weighted(0.5);
        let (gp, gn) = g.weighted(0.5);
        for k in 1..N {
            prop_assert!((gp[k].norm() - hp[N - k].norm()).abs() < 1e-12);
            prop_assert!((gn[k].norm() - hn[N - k].norm()).abs() < 1e-12);
        }
    }

    #[test]
    fn conjugation_symmetry(f in function(), g in function()) {
        let lat = LambdaSet::Lattice { max_shift: N / 4 };
        let a = bilinear_form(&f, &g, &lat).unwrap();
        let b = bilinear_form(&f.conj(), &g.conj(), &lat).unwrap();
        let conj = CorrelationCurve::new(
            a.lambdas().to_vec(),
            a.values().iter().map(|z| z.conj()).collect(),
            1,
        ).unwrap();
        prop_assert!(max_dev(&conj, &b) < 1e-12 * a.max_abs().max(1.0));
    }

    #[test]
    fn convolution_commutes(f in function(), g in function()) {
        let a = mult_convolution(&f, &g).unwrap();
        let b = mult_convolution(&g, &f).unwrap();
        prop_assert!(a.max_abs_diff(&b) < 1e-10 * a.max_abs().max(1.0));
    }

    #[test]
    fn bilinear_form_is_linear(f in function(), g in function(), h in function(),
                               a in -2.0f64..2.0, b in -2.0f64..2.0) {
        let lat = LambdaSet::Lattice { max_shift: N / 4 };
        let (ca, cb) = (Complex64::new(a, 0.5), Complex64::new(b, -0.25));
        let gh = g.combine(ca, &h, cb).unwrap();
        let lhs = bilinear_form(&f, &gh, &lat).unwrap();
        let bg = bilinear_form(&f, &g, &lat).unwrap();
        let bh = bilinear_form(&f, &h, &lat).unwrap();
        for (i, (l, x)) in lhs.iter().enumerate() {
            let want = ca * bg.values()[i] + cb * bh.values()[i];
            prop_assert!((x - want).norm() < 1e-9 * (1.0 + x.norm()), "λ = {}", l);
        }
    }

    #[test]
    fn mellin_round_trip(f in function()) {
        let back = mellin_inverse(&mellin_forward(&f).unwrap(), &grid()).unwrap();
        let d = back.l2_distance(&f).unwrap();
        prop_assert!(d <= 1e-12 * f.norm_sq().sqrt().max(1e-300));
    }

    #[test]
    fn plancherel(p in channel(), n in channel()) {
        // the left-tail model extends a nonzero first sample beyond the grid,
        // so the identity is stated for inputs that vanish at the left edge
        let zero = Complex64::new(0.0, 0.0);
        let (mut p, mut n) = (p, n);
        p[0] = zero;
        n[0] = zero;
        let f = SampledFunction::new(grid(), p, n).unwrap();
        prop_assert!(plancherel_residual(&f).unwrap() <= 1e-12 * f.norm_sq().max(1e-300));
    }

    #[test]
    fn inner_product_is_hermitian(f in function(), g in function()) {
        let a = l2_inner(&f, &g).unwrap();
        let b = l2_inner(&g, &f).unwrap();
        prop_assert!((a - b.conj()).norm() < 1e-12 * (1.0 + a.norm()));
    }

    #[test]
    fn curve_csv_round_trip_is_exact(vals in prop::collection::vec((-1e3f64..1e3, -1e-3f64..1e-3), 1..40)) {
        let lambdas: Vec<f64> = (0..vals.len()).map(|i| 0.1 + i as f64 * 0.37).collect();
        let values = vals.iter().map(|(a, b)| Complex64::new(*a, *b)).collect();
        let curve = CorrelationCurve::new(lambdas, values, 3).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("c.csv");
        write_curve(&p, &curve, "prop").unwrap();
        prop_assert_eq!(read_curve(&p).unwrap(), curve);
    }

    #[test]
    fn sampled_phase_profiles_stay_in_range(ts in prop::collection::vec(-50.0f64..50.0, 2..20), t in -100.0f64..100.0) {
        let mut taus = ts.clone();
        taus.sort_by(f64::total_cmp);
        taus.dedup();
        prop_assume!(taus.len() >= 2);
        let values: Vec<f64> = taus.iter().map(|x| x.sin()).collect();
        let p = PhaseProfile::samples(taus, values.clone()).unwrap();
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let v = p.eval(t);
        prop_assert!(v >= lo - 1e-15 && v <= hi + 1e-15);
    }
}
