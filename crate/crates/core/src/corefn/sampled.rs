use num_complex::Complex64;
use serde::Serialize;

use super::grid::LogGrid;
use crate::error::{Error, Result};

/// Complex samples of a function on both sign channels of a [`LogGrid`].
///
/// `pos[k] = f(+e^{u_k})` and `neg[k] = f(-e^{u_k})`. The point `x = 0` is not
/// represented.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampledFunction {
    grid: LogGrid,
    pos: Vec<Complex64>,
    neg: Vec<Complex64>,
}

impl SampledFunction {
    pub fn new(grid: LogGrid, pos: Vec<Complex64>, neg: Vec<Complex64>) -> Result<Self> {
        if pos.len() != grid.count() || neg.len() != grid.count() {
            return Err(Error::param(format!(
                "sample arrays have lengths {}/{} but the grid has {} nodes",
                pos.len(),
                neg.len(),
                grid.count()
            )));
        }
        if pos.iter().chain(neg.iter()).any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::param("samples must be finite"));
        }
        Ok(Self { grid, pos, neg })
    }

    pub(crate) fn from_parts_unchecked(
        grid: LogGrid,
        pos: Vec<Complex64>,
        neg: Vec<Complex64>,
    ) -> Self {
        debug_assert_eq!(pos.len(), grid.count());
        debug_assert_eq!(neg.len(), grid.count());
        Self { grid, pos, neg }
    }

    pub fn zeros(grid: LogGrid) -> Self {
        let z = vec![Complex64::new(0.0, 0.0); grid.count()];
        Self::from_parts_unchecked(grid, z.clone(), z)
    }

    /// Samples `f(±e^{u_k})` of a closure on the real line.
    pub fn from_fn(grid: LogGrid, f: impl Fn(f64) -> Complex64) -> Self {
        let (pos, neg) = grid
            .nodes()
            .map(|u| {
                let x = u.exp();
                (f(x), f(-x))
            })
            .unzip();
        Self::from_parts_unchecked(grid, pos, neg)
    }

    pub fn grid(&self) -> &LogGrid {
        &self.grid
    }

    pub fn pos(&self) -> &[Complex64] {
        &self.pos
    }

    pub fn neg(&self) -> &[Complex64] {
        &self.neg
    }

    /// Channel by sign: `+1` for `pos`, `-1` for `neg`.
    pub fn channel(&self, sign: i8) -> &[Complex64] {
        if sign >= 0 {
            &self.pos
        } else {
            &self.neg
        }
    }

    pub(crate) fn check_same_grid(&self, other: &SampledFunction) -> Result<()> {
        if self.grid.same_as(&other.grid) {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }

    pub fn conj(&self) -> Self {
        Self::from_parts_unchecked(
            self.grid,
            self.pos.iter().map(|z| z.conj()).collect(),
            self.neg.iter().map(|z| z.conj()).collect(),
        )
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_parts_unchecked(
            self.grid,
            self.pos.iter().map(|z| z * c).collect(),
            self.neg.iter().map(|z| z * c).collect(),
        )
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: Complex64, other: &SampledFunction, b: Complex64) -> Result<Self> {
        self.check_same_grid(other)?;
        let mix = |x: &[Complex64], y: &[Complex64]| -> Vec<Complex64> {
            x.iter().zip(y).map(|(p, q)| a * p + b * q).collect()
        };
        Ok(Self::from_parts_unchecked(
            self.grid,
            mix(&self.pos, &other.pos),
            mix(&self.neg, &other.neg),
        ))
    }

    /// Channels multiplied by `e^{power·u}`. With `power = 1/2` this is the
    /// L²-isometric picture `h(u) = e^{u/2} f(±e^u)` used throughout.
    pub fn weighted(&self, power: f64) -> (Vec<Complex64>, Vec<Complex64>) {
        let w: Vec<f64> = self.grid.nodes().map(|u| (power * u).exp()).collect();
        (
            self.pos.iter().zip(&w).map(|(z, w)| z * w).collect(),
            self.neg.iter().zip(&w).map(|(z, w)| z * w).collect(),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.pos
            .iter()
            .chain(&self.neg)
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Largest pointwise deviation from `other` (same grid assumed).
    pub fn max_abs_diff(&self, other: &SampledFunction) -> f64 {
        self.pos
            .iter()
            .zip(&other.pos)
            .chain(self.neg.iter().zip(&other.neg))
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn norm_sq(&self) -> f64 {
        l2_inner(self, self).map(|z| z.re).unwrap_or(0.0)
    }

    /// Discrete L² distance to `other`.
    pub fn l2_distance(&self, other: &SampledFunction) -> Result<f64> {
        let diff = self.combine(Complex64::new(1.0, 0.0), other, Complex64::new(-1.0, 0.0))?;
        Ok(diff.norm_sq().max(0.0).sqrt())
    }
}

/// Splits `f` into its even and odd parts. `f_e + f_o = f` holds exactly
/// whenever the halving is exact in floating point.
pub fn even_odd_split(f: &SampledFunction) -> (SampledFunction, SampledFunction) {
    let half = 0.5;
    let (mut ep, mut op) = (Vec::with_capacity(f.pos.len()), Vec::with_capacity(f.pos.len()));
    for (p, n) in f.pos.iter().zip(&f.neg) {
        ep.push((p + n) * half);
        op.push((p - n) * half);
    }
    let en = ep.clone();
    let on: Vec<Complex64> = op.iter().map(|z| -z).collect();
    (
        SampledFunction::from_parts_unchecked(f.grid, ep, en),
        SampledFunction::from_parts_unchecked(f.grid, op, on),
    )
}

/// The reciprocal involution `f̃(t) = |t|^{-1} f(1/t)`.
///
/// On a symmetric grid this is the reflection `k ↦ count - k` weighted by
/// `e^{-u_k}`. Node 0 has no partner inside the window; it is matched with
/// itself, which is the periodic reading of `h(u) = e^{u/2} f(e^u)` and keeps
/// the map an exact involution.
pub fn reciprocal_involution(f: &SampledFunction) -> Result<SampledFunction> {
    let grid = f.grid;
    grid.require_symmetric()?;
    let n = grid.count();
    let half = (n / 2) as i64;
    let du = grid.spacing();
    let reflect = |src: &[Complex64]| -> Vec<Complex64> {
        (0..n)
            .map(|k| {
                if k == 0 {
                    src[0]
                } else {
                    let u = (k as i64 - half) as f64 * du;
                    src[n - k] * (-u).exp()
                }
            })
            .collect()
    };
    Ok(SampledFunction::from_parts_unchecked(
        grid,
        reflect(&f.pos),
        reflect(&f.neg),
    ))
}

/// Trapezoidal `∫ conj(f) g dx = Σ_± Σ_k conj(f) g e^{u_k} Δu`.
pub fn l2_inner(f: &SampledFunction, g: &SampledFunction) -> Result<Complex64> {
    f.check_same_grid(g)?;
    let du = f.grid.spacing();
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, u) in f.grid.nodes().enumerate() {
        let w = u.exp();
        acc += (f.pos[k].conj() * g.pos[k] + f.neg[k].conj() * g.neg[k]) * w;
    }
    Ok(acc * du)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn gauss(grid: LogGrid) -> SampledFunction {
        SampledFunction::from_fn(grid, |x| c((-std::f64::consts::PI * x * x).exp()))
    }

    #[test]
    fn gaussian_norm() {
        let f = gauss(LogGrid::default());
        let n = l2_inner(&f, &f).unwrap();
        // ∫ e^{-2πx²} dx = 2^{-1/2}
        assert!((n.re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12, "{n}");
        assert_eq!(n.im, 0.0);
    }

    #[test]
    fn parity_orthogonal() {
        let g = LogGrid::default();
        let e = gauss(g);
        let o = SampledFunction::from_fn(g, |x| c(x * (-std::f64::consts::PI * x * x).exp()));
        assert_eq!(l2_inner(&e, &o).unwrap().norm(), 0.0);
    }

    #[test]
    fn involution_of_gaussian_at_one() {
        let f = gauss(LogGrid::default());
        let ft = reciprocal_involution(&f).unwrap();
        assert!((ft.pos()[2048].re - (-std::f64::consts::PI).exp()).abs() < 1e-15);
    }

    #[test]
    fn involution_needs_symmetric_grid() {
        let f = gauss(LogGrid::new(-10.0, 20.0, 64).unwrap());
        assert!(matches!(
            reciprocal_involution(&f),
            Err(Error::AsymmetricGrid { .. })
        ));
    }

    #[test]
    fn mismatched_grids() {
        let a = gauss(LogGrid::default());
        let b = gauss(LogGrid::symmetric(20.0, 4096).unwrap());
        assert!(matches!(l2_inner(&a, &b), Err(Error::GridMismatch)));
    }

    #[test]
    fn new_rejects_non_finite() {
        let g = LogGrid::symmetric(1.0, 16).unwrap();
        let mut pos = vec![c(0.0); 16];
        pos[3] = c(f64::NAN);
        assert!(SampledFunction::new(g, pos, vec![c(0.0); 16]).is_err());
    }
}
