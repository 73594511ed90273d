//! Closed forms for the Gaussian family `e^{-πβx²}` and the `J` factor.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `β` with `Re β > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianParam(Complex64);

impl GaussianParam {
    pub fn new(beta: Complex64) -> Result<Self> {
        if beta.re.is_nan() || beta.re <= 0.0 || !beta.im.is_finite() {
            return Err(Error::param(format!("Gaussian parameter needs Re β > 0, got {beta}")));
        }
        Ok(Self(beta))
    }

    pub fn real(beta: f64) -> Result<Self> {
        Self::new(Complex64::new(beta, 0.0))
    }

    pub fn beta(&self) -> Complex64 {
        self.0
    }

    pub fn is_real(&self) -> bool {
        self.0.im == 0.0
    }
}

fn on_slit(lambda: Complex64) -> bool {
    lambda.re == 0.0 && lambda.im.abs() >= 1.0
}

/// `J_n(λ) = (1 + λ²)^{n/2}` on the plane slit along `i(ℝ \ (-1, 1))`, with
/// `J_n(0) = 1`. For even `n` it is a polynomial and the slit is harmless.
pub fn j_factor(lambda: Complex64, n: u32) -> Result<Complex64> {
    if n % 2 == 1 && on_slit(lambda) {
        return Err(Error::OnBranchCut {
            re: lambda.re,
            im: lambda.im,
        });
    }
    let q = Complex64::new(1.0, 0.0) + lambda * lambda;
    Ok(if n.is_multiple_of(2) {
        q.powi((n / 2) as i32)
    } else {
        q.sqrt().powi(n as i32)
    })
}

/// `F(λ) = [β̄^{-1/2} (1 + (β/β̄) λ²)^{-1/2}]^n`: the autocorrelation of
/// `e^{-πβ|x|²}` on `ℝⁿ`, principal branches throughout.
pub fn gaussian_closed_form(p: GaussianParam, lambda: Complex64, n: u32) -> Result<Complex64> {
    let beta = p.beta();
    let bc = beta.conj();
    let q = Complex64::new(1.0, 0.0) + beta / bc * lambda * lambda;
    if q.norm() < 1e-14 {
        return Err(Error::param(format!("λ = {lambda} is a branch point")));
    }
    let one_dim = bc.sqrt().inv() * q.sqrt().inv();
    Ok(one_dim.powi(n as i32))
}

/// Roots of `λ² = -β̄/β`. Both lie on the unit circle.
pub fn branch_points(p: GaussianParam) -> (Complex64, Complex64) {
    let beta = p.beta();
    let r = (-beta.conj() / beta).sqrt();
    (r, -r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn j_values() {
        assert!((j_factor(c(1.0, 0.0), 1).unwrap() - c(2f64.sqrt(), 0.0)).norm() < 1e-15);
        for n in 0..5 {
            assert_eq!(j_factor(c(0.0, 0.0), n).unwrap(), c(1.0, 0.0));
        }
        assert!(matches!(j_factor(c(0.0, 2.0), 1), Err(Error::OnBranchCut { .. })));
        assert!(j_factor(c(0.0, 0.5), 1).is_ok());
        // even n: polynomial, no slit
        assert!((j_factor(c(0.0, 2.0), 2).unwrap() - c(-3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn j_composes_on_real_line() {
        for x in [-3.0, -0.2, 0.0, 0.7, 11.0] {
            let j1 = j_factor(c(x, 0.0), 1).unwrap();
            let j2 = j_factor(c(x, 0.0), 2).unwrap();
            assert!((j1 * j1 - j2).norm() < 1e-12 * j2.norm());
        }
    }

    #[test]
    fn gaussian_values() {
        let one = GaussianParam::real(1.0).unwrap();
        let f2 = gaussian_closed_form(one, c(2.0, 0.0), 1).unwrap();
        assert!((f2 - c(5f64.powf(-0.5), 0.0)).norm() < 1e-15);
        assert!((f2.re - 0.447_213_6).abs() < 1e-7);

        let p = GaussianParam::new(c(1.0, 1.0)).unwrap();
        let f1 = gaussian_closed_form(p, c(1.0, 0.0), 1).unwrap();
        assert!((f1 - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);

        let two = GaussianParam::real(2.0).unwrap();
        for l in [0.0, 0.5, 3.0] {
            let got = gaussian_closed_form(two, c(l, 0.0), 1).unwrap();
            let want = FRAC_1_SQRT_2 / (1.0 + l * l).sqrt();
            assert!((got - c(want, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn real_beta_is_phase_free() {
        let p = GaussianParam::real(0.6).unwrap();
        for l in [-4.0, -1.0, 0.25, 2.0] {
            let got = gaussian_closed_form(p, c(l, 0.0), 1).unwrap();
            assert_eq!(got.im, 0.0);
            let want = 0.6f64.powf(-0.5) / (1.0 + l * l).sqrt();
            assert!((got.re - want).abs() < 1e-15);
        }
    }

    #[test]
    fn branch_point_values() {
        let (a, b) = branch_points(GaussianParam::real(1.0).unwrap());
        assert!((a - c(0.0, 1.0)).norm() < 1e-15 && (b - c(0.0, -1.0)).norm() < 1e-15);

        let p = GaussianParam::new(c(1.0, 1.0)).unwrap();
        let (a, b) = branch_points(p);
        let e = Complex64::from_polar(1.0, FRAC_PI_4);
        assert!((a - e).norm() < 1e-15 && (b + e).norm() < 1e-15);
        assert!((a * a - c(0.0, 1.0)).norm() < 1e-15);
        assert!(gaussian_closed_form(p, a, 1).is_err());
    }

    #[test]
    fn rejects_bad_beta() {
        assert!(GaussianParam::real(0.0).is_err());
        assert!(GaussianParam::new(c(-1.0, 2.0)).is_err());
    }
}
