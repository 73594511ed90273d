use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default log-coordinate half width.
pub const DEFAULT_U_MAX: f64 = 30.0;
/// Default node count.
pub const DEFAULT_COUNT: usize = 4096;

const SYMMETRY_TOL: f64 = 1e-12;

/// Uniform grid in the logarithmic coordinate `u`.
///
/// Node `k` sits at `u_k = u_min + k * spacing` for `k = 0..count`, and stands
/// for the two points `±e^{u_k}` of the multiplicative group. The right end
/// `u_max` is not a node: the grid is one period of a periodic lattice.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogGrid {
    u_min: f64,
    u_max: f64,
    count: usize,
    spacing: f64,
}

impl LogGrid {
    pub fn new(u_min: f64, u_max: f64, count: usize) -> Result<Self> {
        if !(u_min.is_finite() && u_max.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "bounds must be finite, got [{u_min}, {u_max}]"
            )));
        }
        if u_min >= u_max {
            return Err(Error::InvalidGrid(format!(
                "reversed bounds: u_min = {u_min} must be below u_max = {u_max}"
            )));
        }
        if count < 16 || !count.is_power_of_two() {
            return Err(Error::InvalidGrid(format!(
                "count must be a power of two >= 16, got {count}"
            )));
        }
        Ok(Self {
            u_min,
            u_max,
            count,
            spacing: (u_max - u_min) / count as f64,
        })
    }

    /// Symmetric grid `[-half_width, half_width)`.
    pub fn symmetric(half_width: f64, count: usize) -> Result<Self> {
        Self::new(-half_width, half_width, count)
    }

    pub fn u_min(&self) -> f64 {
        self.u_min
    }

    pub fn u_max(&self) -> f64 {
        self.u_max
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    #[inline]
    pub fn node(&self, k: usize) -> f64 {
        self.u_min + k as f64 * self.spacing
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |k| self.node(k))
    }

    pub fn is_symmetric(&self) -> bool {
        (self.u_min + self.u_max).abs() <= SYMMETRY_TOL * (self.u_max - self.u_min)
    }

    pub fn require_symmetric(&self) -> Result<()> {
        if self.is_symmetric() {
            Ok(())
        } else {
            Err(Error::AsymmetricGrid {
                u_min: self.u_min,
                u_max: self.u_max,
            })
        }
    }

    /// Index of the node at `u = 0`, i.e. `-u_min / spacing`, when it is an integer.
    pub fn origin_index(&self) -> Result<i64> {
        let offset = -self.u_min / self.spacing;
        let rounded = offset.round();
        if (offset - rounded).abs() > 1e-9 * offset.abs().max(1.0) {
            return Err(Error::OffsetNotIntegral(offset));
        }
        Ok(rounded as i64)
    }

    /// Spacing of the Fourier-dual `tau` grid, `2π / (count · spacing)`.
    pub fn tau_spacing(&self) -> f64 {
        std::f64::consts::TAU / (self.count as f64 * self.spacing)
    }

    /// Dual node `tau_j = (j - count/2) · tau_spacing`.
    pub fn tau(&self, j: usize) -> f64 {
        (j as f64 - (self.count / 2) as f64) * self.tau_spacing()
    }

    /// Same range, twice the nodes.
    pub fn refined(&self) -> Result<Self> {
        Self::new(self.u_min, self.u_max, self.count * 2)
    }

    pub(crate) fn same_as(&self, other: &LogGrid) -> bool {
        self.count == other.count
            && (self.u_min - other.u_min).abs() <= 1e-12 * self.spacing
            && (self.spacing - other.spacing).abs() <= 1e-12 * self.spacing
    }
}

impl Default for LogGrid {
    fn default() -> Self {
        Self::symmetric(DEFAULT_U_MAX, DEFAULT_COUNT).expect("default grid is valid")
    }
}

pub fn make_log_grid(u_min: f64, u_max: f64, count: usize) -> Result<LogGrid> {
    LogGrid::new(u_min, u_max, count)
}
