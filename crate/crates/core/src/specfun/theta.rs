use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::{effective_digits, Real};

/// A phase `θ` strictly inside `(0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaParam<T> {
    theta: T,
}

impl<T: Real> ThetaParam<T> {
    /// Rejects `θ` outside `(0, 1)` or within `10^-digits` of either endpoint.
    pub fn new(theta: T, ctx: &PrecisionContext) -> Result<Self> {
        let eps = T::pow10(-(effective_digits::<T>(ctx) as i32), ctx);
        let one = T::one(ctx);
        if !theta.is_finite() || theta <= eps || theta >= one.clone() - &eps {
            return Err(Error::domain(
                "theta",
                format!("theta must lie strictly inside (0, 1), got {}", theta.to_sci_string(12)),
            ));
        }
        Ok(ThetaParam {
            theta: theta.with_precision(ctx),
        })
    }

    pub fn from_f64(theta: f64, ctx: &PrecisionContext) -> Result<Self> {
        Self::new(T::from_f64(theta, ctx), ctx)
    }

    pub fn parse(text: &str, ctx: &PrecisionContext) -> Result<Self> {
        Self::new(T::parse_decimal(text, ctx)?, ctx)
    }

    pub fn value(&self) -> &T {
        &self.theta
    }

    /// `1 - θ`.
    pub fn reflect(&self) -> Self {
        ThetaParam {
            theta: T::one_like(&self.theta) - &self.theta,
        }
    }

    /// `λ = e^{2πiθ}`.
    pub fn lambda(&self, ctx: &PrecisionContext) -> HpComplex<T> {
        let two_pi = T::pi(ctx) * T::from_i64(2, ctx);
        HpComplex::cis(&(two_pi * self.theta.with_precision(ctx)))
    }

    /// `min(θ, 1 - θ)`.
    pub fn edge_distance(&self) -> f64 {
        let t = self.theta.to_f64();
        t.min(1.0 - t)
    }

    pub fn with_precision(&self, ctx: &PrecisionContext) -> Self {
        ThetaParam {
            theta: self.theta.with_precision(ctx),
        }
    }
}
