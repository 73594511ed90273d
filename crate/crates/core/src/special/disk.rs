use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default radial node count of the polar midpoint rule.
pub const DEFAULT_RADIAL: usize = 512;
/// Default angular node count.
pub const DEFAULT_ANGULAR: usize = 1024;

/// `∫_D |F(λ)|² |λ² + 1|ⁿ dA(λ)` over the open unit disk by the polar
/// midpoint rule. No node lies on the unit circle, so boundary branch points
/// are never evaluated.
pub fn disk_weighted_l2<F>(f: F, n: u32, radial_nodes: usize, angular_nodes: usize) -> Result<f64>
where
    F: Fn(Complex64) -> Complex64 + Sync,
{
    if radial_nodes == 0 || angular_nodes == 0 {
        return Err(Error::param("disk quadrature needs positive node counts"));
    }
    let dr = 1.0 / radial_nodes as f64;
    let dt = TAU / angular_nodes as f64;
    let total: f64 = (0..radial_nodes)
        .into_par_iter()
        .map(|i| {
            let r = (i as f64 + 0.5) * dr;
            let ring: f64 = (0..angular_nodes)
                .map(|j| {
                    let l = Complex64::from_polar(r, (j as f64 + 0.5) * dt);
                    let w = (l * l + 1.0).norm().powi(n as i32);
                    f(l).norm_sqr() * w
                })
                .sum();
            ring * r
        })
        .sum();
    Ok(total * dr * dt)
}
