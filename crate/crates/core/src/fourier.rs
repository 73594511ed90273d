//! Zero-padded FFT convolution on sample vectors.

use num_complex::Complex64;
use rustfft::FftPlanner;

fn padded_fft(planner: &mut FftPlanner<f64>, x: &[Complex64], len: usize) -> Vec<Complex64> {
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    buf[..x.len()].copy_from_slice(x);
    planner.plan_fft_forward(len).process(&mut buf);
    buf
}

/// Linear convolution of equal-length sequences, length `2n - 1`.
///
/// Each entry of `pairs` is a pair of sequences; their convolutions are summed
/// in the frequency domain before the single inverse transform.
pub(crate) fn convolve_sum(pairs: &[(&[Complex64], &[Complex64])]) -> Vec<Complex64> {
    let n = pairs[0].0.len();
    let len = 2 * n;
    let mut planner = FftPlanner::new();
    let mut acc = vec![Complex64::new(0.0, 0.0); len];
    for (a, b) in pairs {
        let fa = padded_fft(&mut planner, a, len);
        let fb = padded_fft(&mut planner, b, len);
        for ((s, x), y) in acc.iter_mut().zip(&fa).zip(&fb) {
            *s += x * y;
        }
    }
    planner.plan_fft_inverse(len).process(&mut acc);
    let scale = 1.0 / len as f64;
    acc.truncate(2 * n - 1);
    acc.iter_mut().for_each(|z| *z *= scale);
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64, y: f64) -> Complex64 {
        Complex64::new(x, y)
    }

    #[test]
    fn convolution_matches_direct_sum() {
        let a: Vec<Complex64> = (0..16).map(|k| c(1.0 / (1.0 + k as f64), 0.0)).collect();
        let b: Vec<Complex64> = (0..16).map(|k| c(0.0, k as f64)).collect();
        let got = convolve_sum(&[(&a, &b)]);
        for j in 0..31 {
            let mut want = c(0.0, 0.0);
            for k in 0..16usize {
                if j >= k && j - k < 16 {
                    want += a[k] * b[j - k];
                }
            }
            assert!((got[j] - want).norm() < 1e-12);
        }
    }
}
