//! Log-Gamma on the right half-plane and the `Re s = 1/4` line quantities.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

// Lanczos, g = 607/128, 15 terms (Godfrey).
const LANCZOS_G_HALF: f64 = 5.242_187_5;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const SQRT_TAU: f64 = 2.506_628_274_631_000_5;

/// A branch of `ln Γ(z)` for `Re z > 0`. The real part is `ln|Γ(z)|`; the
/// imaginary part is an argument of `Γ(z)` (not necessarily the continuous one).
pub fn ln_gamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0, "ln_gamma needs Re z > 0");
    let mut ser = Complex64::new(LANCZOS_C0, 0.0);
    let mut y = z;
    for c in LANCZOS {
        y += 1.0;
        ser += c / y;
    }
    let t = z + LANCZOS_G_HALF;
    (z + 0.5) * t.ln() - t + (ser * SQRT_TAU / z).ln()
}

/// `|Γ(1/4 + iτ/2)|`.
pub fn gamma_abs_quarter(tau: f64) -> f64 {
    ln_gamma(Complex64::new(0.25, 0.5 * tau)).re.exp()
}

/// An argument of `Γ(1/4 + iτ/2)`, valid modulo `2π`.
pub fn gamma_arg_quarter(tau: f64) -> f64 {
    ln_gamma(Complex64::new(0.25, 0.5 * tau)).im
}

/// Phase of `M₀[e^{-πx²}](τ) = π^{-(1/4 + iτ/2)} Γ(1/4 + iτ/2)`.
pub fn gaussian_phase(tau: f64) -> f64 {
    gamma_arg_quarter(tau) - 0.5 * tau * PI.ln()
}

/// `(√c₀ π^{-1/4} |Γ(1/4 + iτ/2)|, c₀ π^{-1/2} |Γ(1/4 + iτ/2)|²)`: the modulus
/// an extremal `M₀[f]` must have and the Mellin transform of
/// `c₀ (1 + λ²)^{-1/2}`.
pub fn target_curves(c0: f64, tau: f64) -> Result<(f64, f64)> {
    if c0.is_nan() || c0 < 0.0 || c0.is_infinite() {
        return Err(Error::param(format!("c0 must be >= 0, got {c0}")));
    }
    let modulus = c0.sqrt() * PI.powf(-0.25) * gamma_abs_quarter(tau);
    Ok((modulus, modulus * modulus))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_quarter() {
        assert!((gamma_abs_quarter(0.0) - 3.625_609_908_221_908).abs() < 1e-13);
    }

    #[test]
    fn integer_values() {
        for (n, fact) in [(1.0, 1.0), (2.0, 1.0), (5.0, 24.0), (10.0, 362_880.0)] {
            let g = ln_gamma(Complex64::new(n, 0.0));
            assert!((g.re.exp() - fact).abs() < 1e-13 * fact, "n = {n}");
            assert!(g.im.abs() < 1e-15);
        }
    }

    #[test]
    fn half_line_modulus() {
        // |Γ(1/2 + iy)|² = π / cosh(πy)
        for y in [0.0, 0.3, 1.0, 4.0, 12.0] {
            let g = ln_gamma(Complex64::new(0.5, y)).re.exp();
            let want = (PI / (PI * y).cosh()).sqrt();
            assert!((g - want).abs() < 1e-13 * want, "y = {y}");
        }
    }

    #[test]
    fn symmetric_and_decaying() {
        for t in [0.5, 3.0, 17.0] {
            assert_eq!(gamma_abs_quarter(t), gamma_abs_quarter(-t));
        }
        assert!(gamma_abs_quarter(20.0) < gamma_abs_quarter(10.0));
    }

    #[test]
    fn targets() {
        let (m, f) = target_curves(1.0, 0.0).unwrap();
        assert!((m - 2.723_29).abs() < 1e-5);
        assert!((f - 7.416_30).abs() < 1e-5);
        assert_eq!(target_curves(0.0, 3.0).unwrap(), (0.0, 0.0));
        assert!(target_curves(-1.0, 0.0).is_err());
        for (c0, t) in [(0.3, 1.0), (2.0, -7.5), (1.0, 40.0)] {
            let (m, f) = target_curves(c0, t).unwrap();
            assert_eq!(f, m * m);
        }
    }
}
