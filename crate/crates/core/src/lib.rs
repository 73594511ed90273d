//! Dilation correlations, Mellin analysis on the multiplicative group and the
//! extremal correlation curve `c₀(1 + λ²)^{-1/2}`.
//!
//! Functions on `ℝ` are sampled on a uniform grid in `u = ln|x|`
//! ([`LogGrid`], [`SampledFunction`]). On that grid dilations are shifts:
//! correlation forms ([`dilate`]) are shifted sums and Mellin transforms
//! ([`mellin`]) are FFTs.
//! [`construct`] builds functions with a prescribed correlation curve, and
//! [`verify`] measures the identities and structure results on concrete
//! inputs.

pub mod construct;
pub mod corefn;
pub mod dilate;
pub mod error;
mod fourier;
pub mod io;
pub mod mellin;
pub mod quad;
pub mod special;
pub mod verify;

pub use construct::{build_from_phase, build_two_function_family, obstruction_pair, PhaseProfile};
pub use corefn::{sample, FunctionSpec, LogGrid, SampledFunction};
pub use dilate::{autocorrelation, bilinear_form, cross_pair, CorrelationCurve, LambdaSet};
pub use error::{Error, Result};
pub use mellin::{mellin_forward, mellin_inverse, MellinSpectrum};
pub use verify::CheckReport;
