use std::cell::OnceCell;

use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::{effective_working_digits, Real};
use crate::specfun::gamma::gamma;
use crate::specfun::hurwitz::{hurwitz_zeta, HurwitzZeta};
use crate::specfun::theta::ThetaParam;

/// Distance from a positive integer below which the Lerch form is replaced.
const INTEGER_BAND: f64 = 0.3;

/// Periodic zeta `F(θ, s) = Σ_{n≥1} e^{2πinθ} n^{-s}` for fixed `θ`, entire in `s`.
///
/// Two independent routes are available:
/// * the Dirichlet series, summed directly up to `N` with the tail
///   `λ^N Σ_k c_k (-1)^k (s)_k N^{-s-k}`, where `1/(1 - λe^u) = Σ c_k u^k`;
/// * the Lerch functional equation through two Hurwitz zeta values.
///
/// [`eval`](Self::eval) uses the series near positive integers, where the Lerch form
/// is `0·∞`, and the Lerch form elsewhere.
#[derive(Debug)]
pub struct PeriodicZeta<T> {
    theta: ThetaParam<T>,
    ctx: PrecisionContext,
    lambda: HpComplex<T>,
    tail_coeffs: OnceCell<Vec<HpComplex<T>>>,
    hz_theta: HurwitzZeta<T>,
    hz_reflect: HurwitzZeta<T>,
}

impl<T: Real> PeriodicZeta<T> {
    pub fn new(theta: &ThetaParam<T>, ctx: &PrecisionContext) -> Result<Self> {
        let theta = theta.with_precision(ctx);
        let hz_theta = HurwitzZeta::new(HpComplex::from_real(theta.value().clone()), ctx)?;
        let hz_reflect = HurwitzZeta::new(HpComplex::from_real(theta.reflect().value().clone()), ctx)?;
        Ok(PeriodicZeta {
            lambda: theta.lambda(ctx),
            theta,
            ctx: *ctx,
            tail_coeffs: OnceCell::new(),
            hz_theta,
            hz_reflect,
        })
    }

    pub fn theta(&self) -> &ThetaParam<T> {
        &self.theta
    }

    /// `e^{2πiθ}`.
    pub fn lambda(&self) -> &HpComplex<T> {
        &self.lambda
    }

    pub fn eval(&self, s: &HpComplex<T>) -> Result<HpComplex<T>> {
        let ctx = &self.ctx;
        let one = HpComplex::one(ctx);
        if s.is_real() && s.re == T::one(ctx) {
            return Ok(-(one - &self.lambda).ln());
        }
        if s.is_zero() {
            return Ok(self.lambda.clone() / (one - &self.lambda));
        }
        let (n, d) = s.distance_to_integer();
        if n >= 1 && d.to_f64() < INTEGER_BAND {
            return self.eval_series(s);
        }
        let mag = s.abs().to_f64();
        let extra = if mag < 1.0 { (-mag.log10()).ceil() as u32 + 2 } else { 0 };
        if extra == 0 || T::MAX_DIGITS.is_some() {
            self.lerch_formula(s, ctx)
        } else {
            let work = ctx.extended(extra);
            Ok(self.lerch_formula(&s.with_precision(&work), &work)?.with_precision(ctx))
        }
    }

    fn tail_coefficients(&self) -> &[HpComplex<T>] {
        self.tail_coeffs.get_or_init(|| {
            let ctx = &self.ctx;
            let count = tail_terms::<T>(ctx) + 1;
            let one = HpComplex::one(ctx);
            let inv = (one - &self.lambda).recip();
            let ratio = self.lambda.clone() * &inv;
            let mut inv_fact = Vec::with_capacity(count);
            let mut f = T::one(ctx);
            inv_fact.push(f.clone());
            for j in 1..count {
                f /= T::from_i64(j as i64, ctx);
                inv_fact.push(f.clone());
            }
            let mut c: Vec<HpComplex<T>> = Vec::with_capacity(count);
            c.push(inv);
            for k in 1..count {
                let mut acc = HpComplex::zero(ctx);
                for j in 1..=k {
                    acc += c[k - j].scale(&inv_fact[j]);
                }
                c.push(acc * &ratio);
            }
            c
        })
    }

    /// Dirichlet series with an asymptotic tail; valid for every `s`.
    pub fn eval_series(&self, s: &HpComplex<T>) -> Result<HpComplex<T>> {
        let ctx = &self.ctx;
        let s = s.with_precision(ctx);
        let coeffs = self.tail_coefficients();
        let terms = coeffs.len();
        let delta = self.theta.edge_distance();
        let span = (3.0 * s.abs().to_f64() + 4.0 * terms as f64) / (2.0 * std::f64::consts::PI * delta);
        let cutoff = span.ceil().max(2.0) as u64;
        if cutoff > ctx.max_terms() {
            return Err(Error::NonConvergence {
                what: "periodic_zeta series",
                terms: cutoff,
                partial: "n/a".into(),
                tail_bound: "n/a".into(),
            });
        }
        let int_power = if s.is_real() && s.re == s.re.round() && s.re.abs().to_f64() <= 64.0 {
            Some(s.re.to_f64() as i32)
        } else {
            None
        };
        let power = |n: u64| -> HpComplex<T> {
            let nn = T::from_i64(n as i64, ctx);
            match int_power {
                Some(k) => HpComplex::from_real(nn.powi(-k)),
                None => (-(s.clone().scale(&nn.ln()))).exp(),
            }
        };
        let mut lam_pow = self.lambda.clone();
        let mut direct = HpComplex::zero(ctx);
        for n in 1..cutoff {
            direct += lam_pow.clone() * power(n);
            lam_pow *= &self.lambda;
        }
        let big_n = T::from_i64(cutoff as i64, ctx);
        let eps = T::pow10(-(effective_working_digits::<T>(ctx) as i32), ctx);
        let mut p = HpComplex::one(ctx);
        let mut tail = HpComplex::zero(ctx);
        let mut quiet = 0;
        for (k, c) in coeffs.iter().enumerate() {
            let term = c.clone() * &p;
            let size = term.max_abs();
            tail += term;
            if size <= eps.clone() * tail.max_abs() {
                quiet += 1;
                if quiet == 2 {
                    let scale = lam_pow * power(cutoff);
                    return Ok(direct + tail * scale);
                }
            } else {
                quiet = 0;
            }
            p = -(p * (s.clone() + HpComplex::from_i64(k as i64, ctx))).unscale(&big_n);
        }
        Err(Error::NonConvergence {
            what: "periodic_zeta tail",
            terms: terms as u64,
            partial: direct.to_sci_string(20),
            tail_bound: tail.to_sci_string(6),
        })
    }

    /// The Lerch functional equation
    /// `F(θ,s) = Γ(1-s)(2π)^{s-1} {e^{πi(1-s)/2} ζ(1-s,θ) + e^{πi(s-1)/2} ζ(1-s,1-θ)}`.
    ///
    /// Near positive integers, where the right-hand side is a removable `0·∞`, the
    /// value is recovered from the Cauchy integral over a circle of radius 1/2.
    pub fn eval_lerch(&self, s: &HpComplex<T>) -> Result<HpComplex<T>> {
        let ctx = &self.ctx;
        let (n, d) = s.distance_to_integer();
        let d = d.to_f64();
        if n < 1 || d >= INTEGER_BAND {
            return self.lerch_formula(s, ctx);
        }
        let radius = 0.5;
        let digits = effective_working_digits::<T>(ctx) as f64;
        let nodes = ((digits / (radius / d.max(0.05)).log10()).ceil() as usize + 16).max(64);
        let center = HpComplex::from_i64(n, ctx);
        let s = s.with_precision(ctx);
        let two_pi = T::pi(ctx) * T::from_i64(2, ctx);
        let r = T::from_f64(radius, ctx);
        let mut acc = HpComplex::zero(ctx);
        for k in 0..nodes {
            let phi = two_pi.clone() * T::from_i64(k as i64, ctx) / T::from_i64(nodes as i64, ctx);
            let offset = HpComplex::cis(&phi).scale(&r);
            let w = center.clone() + &offset;
            let f = self.lerch_formula(&w, ctx)?;
            acc += f * offset / (w - &s);
        }
        Ok(acc.unscale(&T::from_i64(nodes as i64, ctx)))
    }

    fn lerch_formula(&self, s: &HpComplex<T>, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
        let one = HpComplex::one(ctx);
        let w = one - s;
        let (z1, z2) = if *ctx == self.ctx {
            (self.hz_theta.eval(&w)?, self.hz_reflect.eval(&w)?)
        } else {
            let a = HpComplex::from_real(self.theta.value().with_precision(ctx));
            let b = HpComplex::from_real(self.theta.reflect().value().with_precision(ctx));
            (hurwitz_zeta(&w, &a, ctx)?, hurwitz_zeta(&w, &b, ctx)?)
        };
        let pi = T::pi(ctx);
        let half_pi = pi.clone() / T::from_i64(2, ctx);
        let e1 = w.scale(&half_pi).mul_i().exp();
        let e2 = e1.recip();
        let two_pi_ln = (pi * T::from_i64(2, ctx)).ln();
        let power = (-(w.scale(&two_pi_ln))).exp();
        let g = gamma(&w, ctx)?;
        Ok(g * power * (e1 * z1 + e2 * z2))
    }
}

fn tail_terms<T: Real>(ctx: &PrecisionContext) -> usize {
    (2.2 * effective_working_digits::<T>(ctx) as f64).ceil() as usize + 10
}

/// Periodic zeta `F(θ, s)`.
pub fn periodic_zeta<T: Real>(theta: &ThetaParam<T>, s: &HpComplex<T>, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    PeriodicZeta::new(theta, ctx)?.eval(s)
}

/// Difference between the Dirichlet series for `F(θ, s)` and the Lerch functional
/// equation; requires `Re s > 1`.
pub fn lerch_residual<T: Real>(theta: &ThetaParam<T>, s: &HpComplex<T>, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    if s.re <= T::one(ctx) {
        return Err(Error::domain("lerch_residual", "requires Re s > 1"));
    }
    let pz = PeriodicZeta::new(theta, ctx)?;
    Ok(pz.eval_series(s)? - pz.eval_lerch(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::MpFloat;

    fn c(re: f64, ctx: &PrecisionContext) -> HpComplex<MpFloat> {
        HpComplex::from_f64(re, 0.0, ctx)
    }

    #[test]
    fn alternating_zeta_two() {
        let ctx = PrecisionContext::with_precision(50).unwrap();
        let th = ThetaParam::<MpFloat>::from_f64(0.5, &ctx).unwrap();
        let pz = PeriodicZeta::new(&th, &ctx).unwrap();
        let pi = MpFloat::pi(&ctx);
        let expect = -(pi.clone() * &pi) / MpFloat::from_i64(12, &ctx);
        let v = pz.eval_series(&c(2.0, &ctx)).unwrap();
        assert!((v.re - &expect).log10_abs() < -50.0, "{:?}", expect);
        let v = pz.eval_lerch(&c(2.0, &ctx)).unwrap();
        assert!((v.re - &expect).log10_abs() < -48.0);
    }

    #[test]
    fn routes_agree_off_the_integers() {
        let ctx = PrecisionContext::with_precision(40).unwrap();
        let th = ThetaParam::<MpFloat>::from_f64(0.3, &ctx).unwrap();
        let pz = PeriodicZeta::new(&th, &ctx).unwrap();
        for (re, im) in [(2.5, 0.0), (0.5, 1.0), (-1.5, 0.3), (1.7, -4.0)] {
            let s = HpComplex::from_f64(re, im, &ctx);
            let a = pz.eval_series(&s).unwrap();
            let b = pz.eval_lerch(&s).unwrap();
            assert!((a - b).log10_abs() < -38.0, "s = {re}+{im}i");
        }
    }

    #[test]
    fn value_at_zero_and_one() {
        let ctx = PrecisionContext::with_precision(30).unwrap();
        let th = ThetaParam::<MpFloat>::from_f64(0.3, &ctx).unwrap();
        let pz = PeriodicZeta::new(&th, &ctx).unwrap();
        let z0 = pz.eval(&c(0.0, &ctx)).unwrap();
        let s0 = pz.eval_series(&c(0.0, &ctx)).unwrap();
        assert!((z0 - s0).log10_abs() < -28.0);
        let z1 = pz.eval(&c(1.0, &ctx)).unwrap();
        let s1 = pz.eval_series(&c(1.0, &ctx)).unwrap();
        assert!((z1 - s1).log10_abs() < -28.0);
    }
}
