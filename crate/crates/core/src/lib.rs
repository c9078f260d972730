//! High-precision q-dilogarithm toolkit: special functions, q-series, Mellin–Barnes
//! integrals and asymptotic expansions near q = 1 and q = 0.

pub mod asymp;
pub mod error;
pub mod hpnum;
mod mp;
mod real;
pub mod mellin;
pub mod qfun;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use hpnum::{parse_complex, sum_series, HpComplex, PrecisionContext, SeriesResult};
pub use mp::MpFloat;
pub use real::{effective_digits, effective_working_digits, Real};

/// Arbitrary precision complex number.
pub type MpComplex = HpComplex<MpFloat>;
/// Double precision complex number.
pub type Complex64 = HpComplex<f64>;
