use std::fmt;

use serde::{Deserialize, Serialize};

use crate::construct::support_class;
use crate::corefn::SampledFunction;
use crate::dilate::{bilinear_form, LambdaSet};
use crate::error::Result;
use crate::mellin::mellin_forward;

/// A Mellin channel counts as vanishing when its RMS is below this fraction of
/// the largest channel RMS among `f` and `g`.
pub const CHANNEL_VANISH: f64 = 1e-8;
/// `F₁` counts as identically zero when `max|F₁| <= CROSS_VANISH·‖f‖‖g‖`.
pub const CROSS_VANISH: f64 = 1e-10;

/// Outcome when `F₁ ≡ 0` and `f` has dilationally one-sided support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// `f` even, `g` odd
    CaseA,
    /// `f` odd, `g` even
    CaseB,
    /// `f = 0`
    CaseCZeroF,
    /// `g = 0`
    CaseCZeroG,
    /// The hypotheses do not hold (or the channels are inconsistent with them).
    NotApplicable,
}

impl Classification {
    /// `case_a`, `case_b`, `case_c` or `not_applicable`.
    pub fn label(&self) -> &'static str {
        match self {
            Self::CaseA => "case_a",
            Self::CaseB => "case_b",
            Self::CaseCZeroF | Self::CaseCZeroG => "case_c",
            Self::NotApplicable => "not_applicable",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            Self::CaseA => "f even, g odd",
            Self::CaseB => "f odd, g even",
            Self::CaseCZeroF => "f = 0",
            Self::CaseCZeroG => "g = 0",
            Self::NotApplicable => "hypotheses not met",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.label(), self.description())
    }
}

/// Maps which Mellin channels of `f` vanish to the four possible cases,
/// after checking that `F₁ = B[f̄, g]` is numerically zero on the default
/// lattice and that `f` has bounded support or support away from `0`.
pub fn classify_theorem4prime(f: &SampledFunction, g: &SampledFunction) -> Result<Classification> {
    f.check_same_grid(g)?;
    let f1 = bilinear_form(&f.conj(), g, &LambdaSet::DefaultLattice)?;
    let scale = (f.norm_sq() * g.norm_sq()).sqrt();
    if f1.max_abs() > CROSS_VANISH * scale {
        log::debug!("F1 is not zero: max {:.3e} against scale {scale:.3e}", f1.max_abs());
        return Ok(Classification::NotApplicable);
    }
    if !support_class(f).is_one_sided() {
        log::debug!("f does not have dilationally one-sided support");
        return Ok(Classification::NotApplicable);
    }
    let sf = mellin_forward(f)?;
    let sg = mellin_forward(g)?;
    let rms = [sf.rms(0), sf.rms(1), sg.rms(0), sg.rms(1)];
    let top = rms.iter().copied().fold(0.0, f64::max);
    let zero = |r: f64| r <= CHANNEL_VANISH * top;
    let (f0, f1z, g0, g1) = (zero(rms[0]), zero(rms[1]), zero(rms[2]), zero(rms[3]));
    Ok(match (f0, f1z) {
        (true, true) => Classification::CaseCZeroF,
        (true, false) if g1 => Classification::CaseB,
        (false, true) if g0 => Classification::CaseA,
        (false, false) => Classification::CaseCZeroG,
        _ => Classification::NotApplicable,
    })
}
