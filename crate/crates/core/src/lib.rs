//! Hypergeometric tau functions of the elliptic Painleve equation on the E8 lattice.
//!
//! The crate is organised bottom-up: exact [`lattice`] combinatorics, the elliptic
//! [`specialfn`] layer, contour [`integrals`], tau functions and their bilinear
//! equations in [`tau`], and the [`picard`] lattice picture. [`suite`] bundles the
//! numerical checks used by the command-line tool.

pub mod error;
pub mod integrals;
pub mod lattice;
pub mod picard;
pub mod residual;
pub mod sampling;
pub mod scalar;
pub mod specialfn;
pub mod suite;
pub mod tau;

pub use error::{Error, Result};
pub use residual::Residual;
pub use specialfn::Params;

/// Complex double, the working type of the numerical layers.
pub type C64 = num_complex::Complex<f64>;
