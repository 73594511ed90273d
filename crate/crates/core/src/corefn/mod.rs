//! Grids on the multiplicative group, sampled functions and the function
//! catalog.
//!
//! `ℝ^×` is discretized as two sign channels over one uniform grid in
//! `u = ln|x|`. Dilation by `e^{mΔu}` is an index shift, which is what makes
//! the correlation and Mellin machinery exact on the lattice.

mod catalog;
mod grid;
mod sampled;

pub use catalog::{sample, FunctionSpec};
pub use grid::{make_log_grid, LogGrid, DEFAULT_COUNT, DEFAULT_U_MAX};
pub use sampled::{even_odd_split, l2_inner, reciprocal_involution, SampledFunction};
