//! Adaptive Gauss–Kronrod (7/15) quadrature for complex-valued integrands.
//!
//! Only the closed-form checks use this; sampled data goes through the
//! trapezoidal rule on the log grid.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights at XGK[1], XGK[3], XGK[5], XGK[7]
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_intervals: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs: 1e-14,
            rel: 1e-12,
            max_intervals: 4000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
    pub converged: bool,
}

fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let dx = h * XGK[i];
        let s = f(c - dx) + f(c + dx);
        kron += s * WGK[i];
        if i % 2 == 1 {
            gauss += s * WG[i / 2];
        }
    }
    (kron * h, ((kron - gauss) * h).norm())
}

struct Piece {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// `∫_a^b f`, bisecting the interval with the largest error estimate until the
/// total estimate meets `tol`.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: Tolerance) -> Estimate {
    integrate_breaks(f, &[a, b], tol)
}

/// Like [`integrate`] over `[breaks[0], breaks[last]]`, starting from the given
/// subdivision.
pub fn integrate_breaks<F: Fn(f64) -> Complex64>(f: F, breaks: &[f64], tol: Tolerance) -> Estimate {
    let mut heap = BinaryHeap::new();
    let mut value = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    for w in breaks.windows(2) {
        let (v, e) = gk15(&f, w[0], w[1]);
        value += v;
        error += e;
        heap.push(Piece { a: w[0], b: w[1], value: v, error: e });
    }
    let target = |v: Complex64| tol.abs.max(tol.rel * v.norm());
    while error > target(value) && heap.len() < tol.max_intervals {
        let Some(p) = heap.pop() else { break };
        let m = 0.5 * (p.a + p.b);
        if m <= p.a || m >= p.b {
            heap.push(p);
            break;
        }
        let (v1, e1) = gk15(&f, p.a, m);
        let (v2, e2) = gk15(&f, m, p.b);
        value += v1 + v2 - p.value;
        error += e1 + e2 - p.error;
        heap.push(Piece { a: p.a, b: m, value: v1, error: e1 });
        heap.push(Piece { a: m, b: p.b, value: v2, error: e2 });
    }
    // re-sum to shed accumulated update roundoff
    let (value, error) = heap
        .iter()
        .fold((Complex64::new(0.0, 0.0), 0.0), |(v, e), p| (v + p.value, e + p.error));
    Estimate {
        value,
        error,
        converged: error <= target(value),
    }
}

/// Uniform break points on `[a, b]` with pieces no wider than `width`.
pub fn panels(a: f64, b: f64, width: f64) -> Vec<f64> {
    let n = ((b - a) / width).ceil().max(1.0) as usize;
    (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect()
}
