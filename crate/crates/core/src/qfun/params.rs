use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::Real;
use crate::specfun::ThetaParam;

/// Base `q` with `0 < q < 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct QParam<T> {
    q: T,
}

impl<T: Real> QParam<T> {
    pub fn new(q: T, ctx: &PrecisionContext) -> Result<Self> {
        if !q.is_finite() || q <= T::zero(ctx) || q >= T::one(ctx) {
            return Err(Error::domain("q", format!("q must lie in (0, 1), got {}", q.to_sci_string(12))));
        }
        Ok(QParam { q: q.with_precision(ctx) })
    }

    pub fn from_f64(q: f64, ctx: &PrecisionContext) -> Result<Self> {
        Self::new(T::from_f64(q, ctx), ctx)
    }

    pub fn parse(text: &str, ctx: &PrecisionContext) -> Result<Self> {
        Self::new(T::parse_decimal(text, ctx)?, ctx)
    }

    pub fn value(&self) -> &T {
        &self.q
    }
}

/// The exponential parametrisation `q = e^{-x}`, `ω = e^{-z x + 2πiθ}` with `x > 0`,
/// `Re z > 1` and `0 < θ < 1`.
#[derive(Debug, Clone)]
pub struct ExponentialParam<T> {
    x: T,
    zparam: HpComplex<T>,
    theta: ThetaParam<T>,
    q: QParam<T>,
    omega: HpComplex<T>,
}

impl<T: Real> ExponentialParam<T> {
    pub fn new(x: T, zparam: HpComplex<T>, theta: ThetaParam<T>, ctx: &PrecisionContext) -> Result<Self> {
        if !x.is_finite() || x <= T::zero(ctx) {
            return Err(Error::domain("x", format!("x must be positive, got {}", x.to_sci_string(12))));
        }
        if zparam.re <= T::one(ctx) {
            return Err(Error::domain(
                "zparam",
                format!("Re z must exceed 1, got {}", zparam.re.to_sci_string(12)),
            ));
        }
        let x = x.with_precision(ctx);
        let zparam = zparam.with_precision(ctx);
        let theta = theta.with_precision(ctx);
        let q = QParam::new((-x.clone()).exp(), ctx)?;
        let two_pi = T::pi(ctx) * T::from_i64(2, ctx);
        let phase = HpComplex::new(T::zero(ctx), two_pi * theta.value());
        let omega = (phase - zparam.scale(&x)).exp();
        Ok(ExponentialParam {
            x,
            zparam,
            theta,
            q,
            omega,
        })
    }

    pub fn x(&self) -> &T {
        &self.x
    }

    pub fn zparam(&self) -> &HpComplex<T> {
        &self.zparam
    }

    pub fn theta(&self) -> &ThetaParam<T> {
        &self.theta
    }

    /// `q = e^{-x}`.
    pub fn q(&self) -> &QParam<T> {
        &self.q
    }

    /// `ω = e^{-z x + 2πiθ}`.
    pub fn omega(&self) -> &HpComplex<T> {
        &self.omega
    }

    /// `e^{-z x}`, the modulus-carrying part of `ω`.
    pub fn damping(&self) -> HpComplex<T> {
        (-self.zparam.scale(&self.x)).exp()
    }
}
