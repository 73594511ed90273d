use num_complex::Complex64;

use super::{CheckReport, TOL_SYMMETRY};
use crate::corefn::{reciprocal_involution, SampledFunction};
use crate::dilate::{bilinear_form, mult_convolution, CorrelationCurve, LambdaSet};
use crate::error::Result;

fn normalized(dev: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        dev / scale
    } else {
        dev
    }
}

/// `max_λ |a(λ) - b(λ)|` over λ where both are defined.
fn curve_deviation(a: &CorrelationCurve, b: impl Fn(f64) -> Option<Complex64>) -> f64 {
    a.iter()
        .filter_map(|(l, v)| b(l).map(|w| (v - w).norm()))
        .fold(0.0, f64::max)
}

/// Reciprocity `B[f,g](λ) = |λ|^{-1} B[g,f](1/λ)`, conjugation
/// `conj B[f,g] = B[f̄,ḡ]`, commutativity `f ⊛ g = g ⊛ f` and the convolution
/// form `B[f,g](λ) = (g ⊛ f̃)(λ)`, each on the default dilation lattice with
/// the deviation normalized by the largest magnitude involved.
pub fn identity_suite(f: &SampledFunction, g: &SampledFunction) -> Result<Vec<CheckReport>> {
    f.check_same_grid(g)?;
    let lat = LambdaSet::DefaultLattice;
    let bfg = bilinear_form(f, g, &lat)?;
    let bgf = bilinear_form(g, f, &lat)?;
    let scale = bfg.max_abs().max(bgf.max_abs());

    let recip = curve_deviation(&bfg, |l| bgf.value_at(1.0 / l).map(|v| v / l.abs()));

    let bconj = bilinear_form(&f.conj(), &g.conj(), &lat)?;
    let conj = curve_deviation(&bfg, |l| bconj.value_at(l).map(|v| v.conj()));

    let fg = mult_convolution(f, g)?;
    let gf = mult_convolution(g, f)?;
    let comm = normalized(fg.max_abs_diff(&gf), fg.max_abs().max(gf.max_abs()));

    let conv = mult_convolution(g, &reciprocal_involution(f)?)?;
    let grid = *f.grid();
    let origin = grid.origin_index()? as usize;
    let du = grid.spacing();
    let conv_form = curve_deviation(&bfg, |l| {
        let m = (l.abs().ln() / du).round() as i64;
        let k = origin as i64 + m;
        if k < 0 || k as usize >= grid.count() {
            return None;
        }
        let k = k as usize;
        Some(if l > 0.0 { conv.pos()[k] } else { conv.neg()[k] })
    });

    Ok(vec![
        CheckReport::new("reciprocity", normalized(recip, scale), TOL_SYMMETRY),
        CheckReport::new("conjugation", normalized(conj, scale), TOL_SYMMETRY),
        CheckReport::new("convolution_commutativity", comm, TOL_SYMMETRY),
        CheckReport::new("bilinear_as_convolution", normalized(conv_form, scale), TOL_SYMMETRY),
    ])
}
