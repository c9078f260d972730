//! MPFR-backed arbitrary precision real.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign};

use num_rational::BigRational;
use rug::float::{Constant, Round};
use rug::Float;

use crate::error::{Error, Result};
use crate::hpnum::PrecisionContext;
use crate::real::Real;

/// Arbitrary precision float.
///
/// Binary operations return a value at the larger of the two operand precisions, so
/// small exact constants never drag a computation down to low precision.
#[derive(Clone, PartialEq)]
pub struct MpFloat(Float);

impl MpFloat {
    pub fn precision_bits(&self) -> u32 {
        self.0.prec()
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }
}

impl From<Float> for MpFloat {
    fn from(f: Float) -> Self {
        MpFloat(f)
    }
}

impl fmt::Debug for MpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MpFloat({})", self.to_sci_string(25))
    }
}

impl fmt::Display for MpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20) as u32;
        f.write_str(&self.to_sci_string(digits))
    }
}

impl PartialOrd for MpFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $atr:ident, $amethod:ident) => {
        impl $tr for MpFloat {
            type Output = MpFloat;
            fn $method(mut self, rhs: MpFloat) -> MpFloat {
                self.$amethod(&rhs);
                self
            }
        }

        impl<'a> $tr<&'a MpFloat> for MpFloat {
            type Output = MpFloat;
            fn $method(mut self, rhs: &'a MpFloat) -> MpFloat {
                self.$amethod(rhs);
                self
            }
        }

        impl<'a> $tr<&'a MpFloat> for &'a MpFloat {
            type Output = MpFloat;
            fn $method(self, rhs: &'a MpFloat) -> MpFloat {
                let prec = self.0.prec().max(rhs.0.prec());
                MpFloat(Float::with_val(prec, (&self.0).$method(&rhs.0)))
            }
        }

        impl $atr for MpFloat {
            fn $amethod(&mut self, rhs: MpFloat) {
                self.$amethod(&rhs);
            }
        }

        impl<'a> $atr<&'a MpFloat> for MpFloat {
            fn $amethod(&mut self, rhs: &'a MpFloat) {
                if self.0.prec() < rhs.0.prec() {
                    self.0.set_prec(rhs.0.prec());
                }
                self.0.$amethod(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
binop!(Div, div, DivAssign, div_assign);
binop!(Rem, rem, RemAssign, rem_assign);

impl Neg for MpFloat {
    type Output = MpFloat;
    fn neg(self) -> MpFloat {
        MpFloat(-self.0)
    }
}

fn bigint_to_float(v: &num_bigint::BigInt, prec: u32) -> Float {
    let s = v.to_string();
    Float::with_val(prec, Float::parse(&s).expect("integer literal parses"))
}

impl Real for MpFloat {
    const MAX_DIGITS: Option<u32> = None;

    fn from_f64(v: f64, ctx: &PrecisionContext) -> Self {
        MpFloat(Float::with_val(ctx.bits(), v))
    }

    fn from_i64(v: i64, ctx: &PrecisionContext) -> Self {
        MpFloat(Float::with_val(ctx.bits(), v))
    }

    fn from_ratio(r: &BigRational, ctx: &PrecisionContext) -> Self {
        let prec = ctx.bits() + 16;
        let num = bigint_to_float(r.numer(), prec);
        let den = bigint_to_float(r.denom(), prec);
        MpFloat(Float::with_val(ctx.bits(), num / den))
    }

    fn parse_decimal(s: &str, ctx: &PrecisionContext) -> Result<Self> {
        let parsed = Float::parse(s.trim()).map_err(|_| Error::Parse {
            what: "real number",
            input: s.to_string(),
        })?;
        Ok(MpFloat(Float::with_val(ctx.bits(), parsed)))
    }

    fn with_precision(&self, ctx: &PrecisionContext) -> Self {
        MpFloat(Float::with_val(ctx.bits(), &self.0))
    }

    fn pi(ctx: &PrecisionContext) -> Self {
        MpFloat(Float::with_val(ctx.bits(), Constant::Pi))
    }

    fn euler_gamma(ctx: &PrecisionContext) -> Self {
        MpFloat(Float::with_val(ctx.bits(), Constant::Euler))
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    fn log10_abs(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        if !self.0.is_finite() {
            return f64::INFINITY;
        }
        let (mantissa, exp) = self.0.to_f64_exp();
        mantissa.abs().log10() + f64::from(exp) * std::f64::consts::LOG10_2
    }

    fn to_sci_string(&self, digits: u32) -> String {
        let digits = digits.max(1) as usize;
        if self.0.is_zero() {
            return format!("{:.*e}", digits - 1, 0.0);
        }
        match self.0.to_sign_string_exp_round(10, Some(digits), Round::Nearest) {
            (neg, mantissa, Some(exp)) => {
                let sign = if neg { "-" } else { "" };
                let (head, tail) = mantissa.split_at(1);
                if tail.is_empty() {
                    format!("{sign}{head}e{}", exp - 1)
                } else {
                    format!("{sign}{head}.{tail}e{}", exp - 1)
                }
            }
            (neg, text, None) => format!("{}{text}", if neg { "-" } else { "" }),
        }
    }

    fn abs(&self) -> Self {
        MpFloat(self.0.clone().abs())
    }

    fn sqrt(&self) -> Self {
        MpFloat(self.0.clone().sqrt())
    }

    fn exp(&self) -> Self {
        MpFloat(self.0.clone().exp())
    }

    fn ln(&self) -> Self {
        MpFloat(self.0.clone().ln())
    }

    fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sin_cos(Float::new(self.0.prec()));
        (MpFloat(s), MpFloat(c))
    }

    fn sinh_cosh(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sinh_cosh(Float::new(self.0.prec()));
        (MpFloat(s), MpFloat(c))
    }

    fn atan2(&self, x: &Self) -> Self {
        let prec = self.0.prec().max(x.0.prec());
        let mut y = Float::with_val(prec, &self.0);
        y.atan2_mut(&x.0);
        MpFloat(y)
    }

    fn floor(&self) -> Self {
        MpFloat(self.0.clone().floor())
    }

    fn round(&self) -> Self {
        MpFloat(self.0.clone().round())
    }

    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    fn one_like(like: &Self) -> Self {
        MpFloat(Float::with_val(like.0.prec(), 1))
    }
}
