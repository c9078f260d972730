use crate::error::{Error, Result};

/// Default cap on the number of terms any single series may consume.
pub const DEFAULT_MAX_TERMS: u64 = 10_000_000;

/// Working precision shared by every operation.
///
/// `digits` is the precision results are reported at; all arithmetic is carried out
/// with `digits + guard_digits` decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    digits: u32,
    guard_digits: u32,
    max_terms: u64,
}

impl PrecisionContext {
    pub const MIN_DIGITS: u32 = 15;

    /// Context with `digits` reported digits and guard digits `max(10, digits / 10)`.
    pub fn with_precision(digits: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::InvalidPrecision {
                digits,
                min: Self::MIN_DIGITS,
            });
        }
        Ok(PrecisionContext {
            digits,
            guard_digits: (digits / 10).max(10),
            max_terms: DEFAULT_MAX_TERMS,
        })
    }

    pub fn with_max_terms(mut self, max_terms: u64) -> Self {
        self.max_terms = max_terms.max(1);
        self
    }

    /// Same context with `extra` more reported digits. Used internally to absorb
    /// cancellation; results are rounded back with [`crate::Real::with_precision`].
    pub fn extended(&self, extra: u32) -> Self {
        let digits = self.digits + extra;
        PrecisionContext {
            digits,
            guard_digits: (digits / 10).max(10),
            max_terms: self.max_terms,
        }
    }

    /// Context at twice the digits; used for reference values.
    pub fn doubled(&self) -> Self {
        self.extended(self.digits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard_digits
    }

    pub fn max_terms(&self) -> u64 {
        self.max_terms
    }

    /// Mantissa bits for the working precision.
    pub fn bits(&self) -> u32 {
        (f64::from(self.working_digits()) * std::f64::consts::LOG2_10).ceil() as u32 + 4
    }

    /// `10^(-digits)` as an f64 exponent, i.e. the reported relative tolerance.
    pub fn tolerance_exp(&self) -> i32 {
        -(self.digits as i32)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext::with_precision(50).expect("50 digits is valid")
    }
}
