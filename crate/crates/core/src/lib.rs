//! Refocusing of surface plasmons on a conducting sheet by an instantaneous
//! time mirror.
//!
//! The crate evaluates the closed-form theory of the refocused field: the
//! plasmon dispersion roots, the time-reversed kernels for the plasmonic and
//! scattered waves, the radial point-spread functionals built from them and the
//! field-level decomposition of the perturbed wave.
//!
//! ```
//! use plasmon_itm::{dispersion, PhysicalParams};
//!
//! let params = PhysicalParams::figure_set();
//! let roots = dispersion::solve_dispersion(params.gamma(), 1.0).unwrap();
//! assert!(roots.s_plus.im > 0.0 && roots.s_plus.re > 0.0);
//! ```

// reference constants keep all their digits; `!(x > 0.0)` also rejects NaN
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod dispersion;
pub mod error;
pub mod fields;
pub mod kernels;
pub mod oscint;
pub mod physics;
pub mod psf;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
pub use kernels::{KernelMethod, KernelSample, MirrorConfig};
pub use physics::{PhysicalParams, RawParams, SourceConfig, SourceProfile};
pub use quad::QuadratureSpec;
pub use specfun::ChiProfile;
