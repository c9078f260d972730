//! Scalar abstraction for the numerical core.
//!
//! Everything in the crate is written against [`Real`]. Two backends are provided:
//! `f64` (fixed ~16 digits, useful for quick previews and cross-checks) and
//! [`MpFloat`](crate::MpFloat), an MPFR-backed float whose precision follows the
//! [`PrecisionContext`].

use std::fmt;
use std::ops::Neg;

use num_rational::BigRational;
use num_traits::{NumAssignOps, NumOps, ToPrimitive};

use crate::error::{Error, Result};
use crate::hpnum::PrecisionContext;

pub trait Real:
    Clone
    + fmt::Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + NumOps
    + for<'a> NumOps<&'a Self>
    + NumAssignOps
    + for<'a> NumAssignOps<&'a Self>
    + Neg<Output = Self>
{
    /// Largest number of significant decimal digits the type can represent, or
    /// `None` when the precision is set by the context.
    const MAX_DIGITS: Option<u32>;

    fn from_f64(v: f64, ctx: &PrecisionContext) -> Self;
    fn from_i64(v: i64, ctx: &PrecisionContext) -> Self;
    fn from_ratio(r: &BigRational, ctx: &PrecisionContext) -> Self;
    /// Parse a decimal literal such as `0.3`, `-1e-6` or `2.5E3`.
    fn parse_decimal(s: &str, ctx: &PrecisionContext) -> Result<Self>;
    /// Round or extend to the working precision of `ctx`.
    fn with_precision(&self, ctx: &PrecisionContext) -> Self;

    fn pi(ctx: &PrecisionContext) -> Self;
    fn euler_gamma(ctx: &PrecisionContext) -> Self;

    fn to_f64(&self) -> f64;
    /// `log10 |self|` without overflow or underflow; `-inf` for zero.
    fn log10_abs(&self) -> f64;
    /// Scientific notation with `digits` significant digits.
    fn to_sci_string(&self, digits: u32) -> String;

    fn abs(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sin_cos(&self) -> (Self, Self);
    fn sinh_cosh(&self) -> (Self, Self);
    fn atan2(&self, x: &Self) -> Self;
    fn floor(&self) -> Self;
    fn round(&self) -> Self;

    fn is_finite(&self) -> bool;
    fn is_zero(&self) -> bool;
    fn is_sign_negative(&self) -> bool;

    fn zero(ctx: &PrecisionContext) -> Self {
        Self::from_i64(0, ctx)
    }

    fn one(ctx: &PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    /// `10^e` for an integer exponent.
    fn pow10(e: i32, ctx: &PrecisionContext) -> Self {
        let ten = Self::from_i64(10, ctx);
        ten.powi(e)
    }

    fn powi(&self, n: i32) -> Self {
        let mut acc = Self::one_like(self);
        let mut base = self.clone();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc *= &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * &base;
            }
        }
        if n < 0 {
            Self::one_like(self) / acc
        } else {
            acc
        }
    }

    /// The value 1 at the precision of `like`.
    fn one_like(like: &Self) -> Self;

    fn max_of(a: &Self, b: &Self) -> Self {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }
}

/// Effective reported digits for scalar `T` under `ctx`.
pub fn effective_digits<T: Real>(ctx: &PrecisionContext) -> u32 {
    match T::MAX_DIGITS {
        Some(max) => ctx.digits().min(max),
        None => ctx.digits(),
    }
}

/// Effective working digits (reported + guard) for scalar `T` under `ctx`.
pub fn effective_working_digits<T: Real>(ctx: &PrecisionContext) -> u32 {
    match T::MAX_DIGITS {
        Some(max) => ctx.working_digits().min(max),
        None => ctx.working_digits(),
    }
}

impl Real for f64 {
    const MAX_DIGITS: Option<u32> = Some(15);

    fn from_f64(v: f64, _ctx: &PrecisionContext) -> Self {
        v
    }

    fn from_i64(v: i64, _ctx: &PrecisionContext) -> Self {
        v as f64
    }

    fn from_ratio(r: &BigRational, _ctx: &PrecisionContext) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }

    fn parse_decimal(s: &str, _ctx: &PrecisionContext) -> Result<Self> {
        s.trim().parse::<f64>().map_err(|_| Error::Parse {
            what: "real number",
            input: s.to_string(),
        })
    }

    fn with_precision(&self, _ctx: &PrecisionContext) -> Self {
        *self
    }

    fn pi(_ctx: &PrecisionContext) -> Self {
        std::f64::consts::PI
    }

    fn euler_gamma(_ctx: &PrecisionContext) -> Self {
        0.577_215_664_901_532_9
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn log10_abs(&self) -> f64 {
        f64::abs(*self).log10()
    }

    fn to_sci_string(&self, digits: u32) -> String {
        let digits = digits.clamp(1, 17) as usize;
        format!("{:.*e}", digits - 1, self)
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }

    fn exp(&self) -> Self {
        f64::exp(*self)
    }

    fn ln(&self) -> Self {
        f64::ln(*self)
    }

    fn sin_cos(&self) -> (Self, Self) {
        f64::sin_cos(*self)
    }

    fn sinh_cosh(&self) -> (Self, Self) {
        (f64::sinh(*self), f64::cosh(*self))
    }

    fn atan2(&self, x: &Self) -> Self {
        f64::atan2(*self, *x)
    }

    fn floor(&self) -> Self {
        f64::floor(*self)
    }

    fn round(&self) -> Self {
        f64::round(*self)
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn is_sign_negative(&self) -> bool {
        f64::is_sign_negative(*self)
    }

    fn one_like(_like: &Self) -> Self {
        1.0
    }
}
