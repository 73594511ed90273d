//! Gamma on the critical line, Gaussian closed forms, the `J` factor and the
//! weighted disk integral.

mod disk;
mod gamma;
mod gaussian;

pub use disk::{disk_weighted_l2, DEFAULT_ANGULAR, DEFAULT_RADIAL};
pub use gamma::{gamma_abs_quarter, gamma_arg_quarter, gaussian_phase, ln_gamma, target_curves};
pub use gaussian::{branch_points, gaussian_closed_form, j_factor, GaussianParam};
