use num_complex::Complex64;

use super::{
    check_obstruction, check_theorem1, check_theorem2, falsification_demo, CheckReport, Classification,
    TOL_ROUND_TRIP,
};
use crate::construct::{build_from_phase, even_boxcar, obstruction_pair, odd_boxcar, PhaseProfile};
use crate::corefn::{sample, FunctionSpec, LogGrid, SampledFunction};
use crate::dilate::{autocorrelation, radial_autocorrelation, LambdaSet};
use crate::error::Result;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Closed-form catalog entries used by whole-catalog checks.
pub fn full_catalog() -> Vec<FunctionSpec> {
    vec![
        FunctionSpec::Gaussian { beta: c(1.0, 0.0) },
        FunctionSpec::Gaussian { beta: c(2.0, 0.0) },
        FunctionSpec::Gaussian { beta: c(1.0, 1.0) },
        FunctionSpec::Hermite { k: 1, beta: c(1.0, 0.0) },
        FunctionSpec::Hermite { k: 2, beta: c(1.0, 0.0) },
        FunctionSpec::Hermite { k: 3, beta: c(0.5, 0.25) },
        FunctionSpec::Boxcar { a: 1.0, b: 2.0 },
        FunctionSpec::Boxcar { a: -2.0, b: 0.5 },
    ]
}

/// The fixed six-pair matrix for the bilinear identities.
pub fn catalog_pairs() -> Vec<(FunctionSpec, FunctionSpec)> {
    vec![
        (FunctionSpec::Gaussian { beta: c(1.0, 0.0) }, FunctionSpec::Gaussian { beta: c(2.0, 0.0) }),
        (FunctionSpec::Gaussian { beta: c(1.0, 1.0) }, FunctionSpec::Gaussian { beta: c(1.0, 0.0) }),
        (FunctionSpec::Gaussian { beta: c(1.0, 0.0) }, FunctionSpec::Hermite { k: 1, beta: c(1.0, 0.0) }),
        (FunctionSpec::Hermite { k: 2, beta: c(1.0, 0.0) }, FunctionSpec::Gaussian { beta: c(0.5, 0.0) }),
        (FunctionSpec::Boxcar { a: 1.0, b: 2.0 }, FunctionSpec::Gaussian { beta: c(1.0, 0.0) }),
        (FunctionSpec::Boxcar { a: -2.0, b: 0.5 }, FunctionSpec::Hermite { k: 1, beta: c(1.0, 0.5) }),
    ]
}

/// A pair with the classification it must receive.
#[derive(Debug, Clone)]
pub struct Witness {
    pub name: &'static str,
    pub f: SampledFunction,
    pub g: SampledFunction,
    pub expected: Classification,
}

/// One witness per case: even boxcar with an odd Hermite–Gaussian, odd boxcar
/// with a Gaussian, `f = 0`, and the one-sided boxcar with `g = 0`.
pub fn shipped_witnesses(grid: &LogGrid) -> Result<Vec<Witness>> {
    let gauss = sample(&FunctionSpec::Gaussian { beta: c(1.0, 0.0) }, grid)?;
    let odd = sample(&FunctionSpec::Hermite { k: 1, beta: c(1.0, 0.0) }, grid)?;
    let zero = SampledFunction::zeros(*grid);
    Ok(vec![
        Witness {
            name: "case_a",
            f: even_boxcar(1.0, 2.0, grid),
            g: odd,
            expected: Classification::CaseA,
        },
        Witness {
            name: "case_b",
            f: odd_boxcar(1.0, 2.0, grid),
            g: gauss.clone(),
            expected: Classification::CaseB,
        },
        Witness {
            name: "case_c_f_zero",
            f: zero.clone(),
            g: gauss,
            expected: Classification::CaseCZeroF,
        },
        Witness {
            name: "case_c_g_zero",
            f: sample(&FunctionSpec::Boxcar { a: 1.0, b: 2.0 }, grid)?,
            g: zero,
            expected: Classification::CaseCZeroG,
        },
    ])
}

/// The shipped demonstration: Gaussian extremal, a phase family member, the
/// obstruction pair, the complex-β falsification and the planar radial
/// Gaussian.
pub fn run_demo(grid: &LogGrid) -> Result<Vec<(String, CheckReport)>> {
    let mut out = Vec::new();

    let g = sample(&FunctionSpec::Gaussian { beta: c(1.0, 0.0) }, grid)?;
    let curve = autocorrelation(&g, &LambdaSet::DefaultLattice)?;
    out.push(("gaussian extremal".to_owned(), check_theorem1(&curve, &g, 1)?));

    let theta = PhaseProfile::band_limited(vec![0.0, 0.8], vec![0.5], 0.7);
    let f = build_from_phase(1.0, &theta, grid)?;
    let curve = autocorrelation(&f, &LambdaSet::DefaultLattice)?;
    out.push((
        "phase family".to_owned(),
        check_theorem1(&curve, &f, 1)?.with_tolerance(TOL_ROUND_TRIP),
    ));
    out.push(("phase family modulus".to_owned(), check_theorem2(&f, 1.0)?));

    let (even, odd) = obstruction_pair(grid)?;
    out.push(("obstruction pair".to_owned(), check_obstruction(&even, &odd)?));

    out.push(("falsification β=1+i".to_owned(), falsification_demo(c(1.0, 1.0))?));

    let curve = radial_autocorrelation(&g, 2, &LambdaSet::DefaultLattice)?;
    out.push(("radial n=2".to_owned(), check_theorem1(&curve, &g, 2)?));

    Ok(out)
}
