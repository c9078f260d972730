//! Precision management, complex arithmetic and tail-bounded summation.

mod complex;
mod context;
mod series;

pub use complex::{parse_complex, HpComplex};
pub use context::{PrecisionContext, DEFAULT_MAX_TERMS};
pub use series::{sum_series, SeriesResult};
