use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::hpnum::PrecisionContext;
use crate::real::Real;

/// Complex number over a [`Real`] scalar.
#[derive(Clone, PartialEq)]
pub struct HpComplex<T> {
    pub re: T,
    pub im: T,
}

impl<T: Real> HpComplex<T> {
    pub fn new(re: T, im: T) -> Self {
        HpComplex { re, im }
    }

    pub fn from_real(re: T) -> Self {
        let im = re.clone() - &re;
        HpComplex { re, im }
    }

    pub fn zero(ctx: &PrecisionContext) -> Self {
        HpComplex::new(T::zero(ctx), T::zero(ctx))
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        HpComplex::new(T::one(ctx), T::zero(ctx))
    }

    /// The imaginary unit.
    pub fn i(ctx: &PrecisionContext) -> Self {
        HpComplex::new(T::zero(ctx), T::one(ctx))
    }

    pub fn from_f64(re: f64, im: f64, ctx: &PrecisionContext) -> Self {
        HpComplex::new(T::from_f64(re, ctx), T::from_f64(im, ctx))
    }

    pub fn from_i64(re: i64, ctx: &PrecisionContext) -> Self {
        HpComplex::new(T::from_i64(re, ctx), T::zero(ctx))
    }

    pub fn with_precision(&self, ctx: &PrecisionContext) -> Self {
        HpComplex::new(self.re.with_precision(ctx), self.im.with_precision(ctx))
    }

    pub fn conj(&self) -> Self {
        HpComplex::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        HpComplex::new(-self.im.clone(), self.re.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        HpComplex::new(self.re.clone() * k, self.im.clone() * k)
    }

    pub fn unscale(&self, k: &T) -> Self {
        HpComplex::new(self.re.clone() / k, self.im.clone() / k)
    }

    pub fn norm_sqr(&self) -> T {
        self.re.clone() * &self.re + self.im.clone() * &self.im
    }

    pub fn abs(&self) -> T {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.norm_sqr().sqrt()
    }

    /// `max(|re|, |im|)`: within a factor √2 of `abs` and much cheaper.
    pub fn max_abs(&self) -> T {
        let a = self.re.abs();
        let b = self.im.abs();
        if a >= b {
            a
        } else {
            b
        }
    }

    /// `log10 |z|` as f64, robust to huge and tiny magnitudes.
    pub fn log10_abs(&self) -> f64 {
        let a = self.re.log10_abs();
        let b = self.im.log10_abs();
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        if hi == f64::NEG_INFINITY {
            return hi;
        }
        hi + 0.5 * (1.0 + 10f64.powf(2.0 * (lo - hi))).log10()
    }

    pub fn arg(&self) -> T {
        self.im.atan2(&self.re)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Error unless both components are finite.
    pub fn finite(self, what: &'static str) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite(what))
        }
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        HpComplex::new(self.re.clone() / &d, -(self.im.clone() / &d))
    }

    pub fn square(&self) -> Self {
        self.clone() * self
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        if self.im.is_zero() {
            let zero = self.im.clone();
            return HpComplex::new(m, zero);
        }
        let (s, c) = self.im.sin_cos();
        HpComplex::new(m.clone() * c, m * s)
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        if self.im.is_zero() && !self.re.is_sign_negative() {
            return HpComplex::new(self.re.ln(), self.im.clone());
        }
        let two = T::one_like(&self.re) + T::one_like(&self.re);
        HpComplex::new(self.norm_sqr().ln() / two, self.arg())
    }

    /// Principal power `self^w = exp(w ln self)`.
    pub fn pow(&self, w: &Self) -> Self {
        (w.clone() * self.ln()).exp()
    }

    pub fn powi(&self, n: i32) -> Self {
        let one = HpComplex::new(T::one_like(&self.re), self.re.clone() - &self.re);
        let mut acc = one.clone();
        let mut base = self.clone();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc *= &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.square();
            }
        }
        if n < 0 {
            one / acc
        } else {
            acc
        }
    }

    pub fn sqrt(&self) -> Self {
        let r = self.abs();
        let two = T::one_like(&self.re) + T::one_like(&self.re);
        if r.is_zero() {
            return self.clone();
        }
        // principal branch, avoiding cancellation
        if !self.re.is_sign_negative() {
            let t = ((r + &self.re) / &two).sqrt();
            let im = self.im.clone() / (t.clone() * &two);
            HpComplex::new(t, im)
        } else {
            let t = ((r - &self.re) / &two).sqrt();
            let re = self.im.abs() / (t.clone() * &two);
            let im = if self.im.is_sign_negative() { -t } else { t };
            HpComplex::new(re, im)
        }
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        HpComplex::new(s * ch, c * sh)
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.re.sin_cos();
        let (sh, ch) = self.im.sinh_cosh();
        HpComplex::new(c * ch, -(s * sh))
    }

    /// `e^{i·phi}` for real `phi`.
    pub fn cis(phi: &T) -> Self {
        let (s, c) = phi.sin_cos();
        HpComplex::new(c, s)
    }

    /// Distance to the nearest integer, treating the value as a point in the plane.
    pub fn distance_to_integer(&self) -> (i64, T) {
        let n = self.re.round();
        let d = (HpComplex::new(self.re.clone() - &n, self.im.clone())).abs();
        (n.to_f64() as i64, d)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// Render as `re+imi` with `digits` significant digits per component.
    pub fn to_sci_string(&self, digits: u32) -> String {
        let im = self.im.to_sci_string(digits);
        if im.starts_with('-') {
            format!("{}{}i", self.re.to_sci_string(digits), im)
        } else {
            format!("{}+{}i", self.re.to_sci_string(digits), im)
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for HpComplex<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.re, self.im)
    }
}

macro_rules! impl_additive {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl<T: Real> $tr for HpComplex<T> {
            type Output = HpComplex<T>;
            fn $m(mut self, rhs: HpComplex<T>) -> HpComplex<T> {
                self.re.$am(rhs.re);
                self.im.$am(rhs.im);
                self
            }
        }
        impl<'a, T: Real> $tr<&'a HpComplex<T>> for HpComplex<T> {
            type Output = HpComplex<T>;
            fn $m(mut self, rhs: &'a HpComplex<T>) -> HpComplex<T> {
                self.re.$am(&rhs.re);
                self.im.$am(&rhs.im);
                self
            }
        }
        impl<T: Real> $atr for HpComplex<T> {
            fn $am(&mut self, rhs: HpComplex<T>) {
                self.re.$am(rhs.re);
                self.im.$am(rhs.im);
            }
        }
        impl<'a, T: Real> $atr<&'a HpComplex<T>> for HpComplex<T> {
            fn $am(&mut self, rhs: &'a HpComplex<T>) {
                self.re.$am(&rhs.re);
                self.im.$am(&rhs.im);
            }
        }
    };
}

impl_additive!(Add, add, AddAssign, add_assign);
impl_additive!(Sub, sub, SubAssign, sub_assign);

fn cmul<T: Real>(a: &HpComplex<T>, b: &HpComplex<T>) -> HpComplex<T> {
    if b.im.is_zero() {
        return HpComplex::new(a.re.clone() * &b.re, a.im.clone() * &b.re);
    }
    if a.im.is_zero() {
        return HpComplex::new(b.re.clone() * &a.re, b.im.clone() * &a.re);
    }
    let re = a.re.clone() * &b.re - a.im.clone() * &b.im;
    let im = a.re.clone() * &b.im + a.im.clone() * &b.re;
    HpComplex::new(re, im)
}

fn cdiv<T: Real>(a: &HpComplex<T>, b: &HpComplex<T>) -> HpComplex<T> {
    if b.im.is_zero() {
        return HpComplex::new(a.re.clone() / &b.re, a.im.clone() / &b.re);
    }
    let d = b.norm_sqr();
    let re = (a.re.clone() * &b.re + a.im.clone() * &b.im) / &d;
    let im = (a.im.clone() * &b.re - a.re.clone() * &b.im) / &d;
    HpComplex::new(re, im)
}

impl<T: Real> Mul for HpComplex<T> {
    type Output = HpComplex<T>;
    fn mul(self, rhs: HpComplex<T>) -> HpComplex<T> {
        cmul(&self, &rhs)
    }
}

impl<'a, T: Real> Mul<&'a HpComplex<T>> for HpComplex<T> {
    type Output = HpComplex<T>;
    fn mul(self, rhs: &'a HpComplex<T>) -> HpComplex<T> {
        cmul(&self, rhs)
    }
}

impl<T: Real> MulAssign for HpComplex<T> {
    fn mul_assign(&mut self, rhs: HpComplex<T>) {
        *self = cmul(self, &rhs);
    }
}

impl<'a, T: Real> MulAssign<&'a HpComplex<T>> for HpComplex<T> {
    fn mul_assign(&mut self, rhs: &'a HpComplex<T>) {
        *self = cmul(self, rhs);
    }
}

impl<T: Real> Div for HpComplex<T> {
    type Output = HpComplex<T>;
    fn div(self, rhs: HpComplex<T>) -> HpComplex<T> {
        cdiv(&self, &rhs)
    }
}

impl<'a, T: Real> Div<&'a HpComplex<T>> for HpComplex<T> {
    type Output = HpComplex<T>;
    fn div(self, rhs: &'a HpComplex<T>) -> HpComplex<T> {
        cdiv(&self, rhs)
    }
}

impl<T: Real> DivAssign for HpComplex<T> {
    fn div_assign(&mut self, rhs: HpComplex<T>) {
        *self = cdiv(self, &rhs);
    }
}

impl<'a, T: Real> DivAssign<&'a HpComplex<T>> for HpComplex<T> {
    fn div_assign(&mut self, rhs: &'a HpComplex<T>) {
        *self = cdiv(self, rhs);
    }
}

impl<T: Real> Neg for HpComplex<T> {
    type Output = HpComplex<T>;
    fn neg(self) -> HpComplex<T> {
        HpComplex::new(-self.re, -self.im)
    }
}

/// Parse `re+imi` style literals: `2`, `-0.6`, `0.3+0.4i`, `1.5-0.2i`, `0.4i`, `-i`.
pub fn parse_complex<T: Real>(input: &str, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    let err = || Error::Parse {
        what: "complex number",
        input: input.to_string(),
    };
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err());
    }
    let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) else {
        return Ok(HpComplex::new(T::parse_decimal(&s, ctx).map_err(|_| err())?, T::zero(ctx)));
    };
    // split at the last sign that is not part of an exponent and not leading
    let bytes = body.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        let c = bytes[k];
        if (c == b'+' || c == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            split = Some(k);
            break;
        }
    }
    let imag = |text: &str| -> Result<T> {
        match text {
            "" | "+" => Ok(T::one(ctx)),
            "-" => Ok(-T::one(ctx)),
            t => T::parse_decimal(t, ctx).map_err(|_| err()),
        }
    };
    match split {
        Some(k) => {
            let re = T::parse_decimal(&body[..k], ctx).map_err(|_| err())?;
            Ok(HpComplex::new(re, imag(&body[k..])?))
        }
        None => Ok(HpComplex::new(T::zero(ctx), imag(body)?)),
    }
}
