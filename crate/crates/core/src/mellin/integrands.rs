use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::Real;
use crate::specfun::{gamma, pole_threshold, HurwitzZeta, PeriodicZeta, ThetaParam};

fn check_integer_pole<T: Real>(s: &HpComplex<T>, at_most: i64, what: &'static str, ctx: &PrecisionContext) -> Result<()> {
    let (n, d) = s.distance_to_integer();
    if n <= at_most && d.log10_abs() <= pole_threshold::<T>(ctx) {
        return Err(Error::pole(what, format!("s = {n}")));
    }
    Ok(())
}

/// `g(s) = ζ(s, z) F(θ, s + 1) Γ(s)`, the Mellin transform of `Li_2(ω, e^{-x})`.
#[derive(Debug)]
pub struct LiIntegrand<T> {
    hz: HurwitzZeta<T>,
    pz: PeriodicZeta<T>,
    ctx: PrecisionContext,
}

impl<T: Real> LiIntegrand<T> {
    pub fn new(zparam: &HpComplex<T>, theta: &ThetaParam<T>, ctx: &PrecisionContext) -> Result<Self> {
        Ok(LiIntegrand {
            hz: HurwitzZeta::new(zparam.clone(), ctx)?,
            pz: PeriodicZeta::new(theta, ctx)?,
            ctx: *ctx,
        })
    }

    pub fn g(&self, s: &HpComplex<T>) -> Result<HpComplex<T>> {
        check_integer_pole(s, 1, "integrand_g", &self.ctx)?;
        let one = HpComplex::one(&self.ctx);
        let zeta = self.hz.eval(s)?;
        let f = self.pz.eval(&(s.clone() + one))?;
        Ok(zeta * f * gamma(s, &self.ctx)?)
    }

    /// Residue of `g` at `s = 1`, namely `F(θ, 2)`.
    pub fn residue_at_one(&self) -> Result<HpComplex<T>> {
        self.pz.eval(&HpComplex::from_i64(2, &self.ctx))
    }

    /// `g(s) - r Γ(s - 1)`, analytic at `s = 1` when `r` is the residue there.
    pub(crate) fn g_without_pole(&self, s: &HpComplex<T>, r: &HpComplex<T>) -> Result<HpComplex<T>> {
        check_integer_pole(s, 1, "integrand_g", &self.ctx)?;
        let one = HpComplex::one(&self.ctx);
        let zeta = self.hz.eval(s)?;
        let f = self.pz.eval(&(s.clone() + &one))?;
        let pole = r.clone() / (s.clone() - one);
        Ok((zeta * f - pole) * gamma(s, &self.ctx)?)
    }

    pub fn periodic(&self) -> &PeriodicZeta<T> {
        &self.pz
    }

    pub fn hurwitz(&self) -> &HurwitzZeta<T> {
        &self.hz
    }
}

/// `g(s) = ζ(s, z) F(θ, s + 1) Γ(s)`.
pub fn integrand_g<T: Real>(
    s: &HpComplex<T>,
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    ctx: &PrecisionContext,
) -> Result<HpComplex<T>> {
    LiIntegrand::new(zparam, theta, ctx)?.g(s)
}

/// Mellin transforms of the q-Clausen pair after the Lerch decomposition:
///
/// `h_c(s) = -(2π)^{s+1} ζ(s,z) {ζ(-s,θ) + ζ(-s,1-θ)} / (4 s sin(πs/2))`
///
/// `h_s(s) =  (2π)^{s+1} ζ(s,z) {ζ(-s,θ) - ζ(-s,1-θ)} / (4 s cos(πs/2))`
#[derive(Debug)]
pub struct ClausenIntegrand<T> {
    hz: HurwitzZeta<T>,
    hz_theta: HurwitzZeta<T>,
    hz_reflect: HurwitzZeta<T>,
    theta: ThetaParam<T>,
    ctx: PrecisionContext,
}

impl<T: Real> ClausenIntegrand<T> {
    pub fn new(zparam: &HpComplex<T>, theta: &ThetaParam<T>, ctx: &PrecisionContext) -> Result<Self> {
        Ok(ClausenIntegrand {
            hz: HurwitzZeta::new(zparam.clone(), ctx)?,
            hz_theta: HurwitzZeta::new(HpComplex::from_real(theta.value().clone()), ctx)?,
            hz_reflect: HurwitzZeta::new(HpComplex::from_real(theta.reflect().value().clone()), ctx)?,
            theta: theta.with_precision(ctx),
            ctx: *ctx,
        })
    }

    fn common(&self, s: &HpComplex<T>) -> Result<(HpComplex<T>, HpComplex<T>, HpComplex<T>)> {
        let ctx = &self.ctx;
        let zeta = self.hz.eval(s)?;
        let ms = -s.clone();
        let a = self.hz_theta.eval(&ms)?;
        let b = self.hz_reflect.eval(&ms)?;
        let two_pi = T::pi(ctx) * T::from_i64(2, ctx);
        let power = (s.clone() + HpComplex::one(ctx)).scale(&two_pi.ln()).exp();
        let denom = s.scale(&T::from_i64(4, ctx));
        Ok((zeta * power / denom, a, b))
    }

    fn half_angle(&self, s: &HpComplex<T>) -> HpComplex<T> {
        let half_pi = T::pi(&self.ctx) / T::from_i64(2, &self.ctx);
        s.scale(&half_pi)
    }

    /// `h_c(s)`; poles at `s = 1` and `s = 0` only (the zeros of `sin(πs/2)` at even
    /// integers are cancelled).
    pub fn ci(&self, s: &HpComplex<T>) -> Result<HpComplex<T>> {
        check_integer_pole(s, 1, "ci2 integrand", &self.ctx)?;
        let (pre, a, b) = self.common(s)?;
        Ok(-(pre * (a + b)) / self.half_angle(s).sin())
    }

    /// `h_s(s)`.
    pub fn si(&self, s: &HpComplex<T>) -> Result<HpComplex<T>> {
        check_integer_pole(s, 1, "si2 integrand", &self.ctx)?;
        let (pre, a, b) = self.common(s)?;
        Ok(pre * (a - b) / self.half_angle(s).cos())
    }

    pub fn theta(&self) -> &ThetaParam<T> {
        &self.theta
    }
}
