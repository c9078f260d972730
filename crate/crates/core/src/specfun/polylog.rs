use crate::error::{Error, Result};
use crate::hpnum::{sum_series, HpComplex, PrecisionContext};
use crate::real::{effective_digits, Real};
use crate::specfun::hurwitz::hurwitz_zeta;
use crate::specfun::periodic::PeriodicZeta;
use crate::specfun::theta::ThetaParam;

/// `n^{-s}`, using integer powers when `s` is a small real integer.
pub(crate) fn inverse_power<T: Real>(n: u64, s: &HpComplex<T>, ctx: &PrecisionContext) -> HpComplex<T> {
    let nn = T::from_i64(n as i64, ctx);
    if s.is_real() && s.re == s.re.round() && s.re.abs().to_f64() <= 64.0 {
        return HpComplex::from_real(nn.powi(-(s.re.to_f64() as i32)));
    }
    (-(s.scale(&nn.ln()))).exp()
}

enum Boundary<T> {
    Inside,
    One,
    Circle(ThetaParam<T>),
    Outside,
}

fn classify<T: Real>(z: &HpComplex<T>, ctx: &PrecisionContext) -> Result<Boundary<T>> {
    let r = z.abs();
    let one = T::one(ctx);
    let eps = T::pow10(-(effective_digits::<T>(ctx) as i32), ctx);
    if (r.clone() - &one).abs() <= eps {
        let two_pi = T::pi(ctx) * T::from_i64(2, ctx);
        let mut t = z.arg() / two_pi;
        if t.is_sign_negative() {
            t += &one;
        }
        if t <= eps || t >= one.clone() - &eps {
            return Ok(Boundary::One);
        }
        return Ok(Boundary::Circle(ThetaParam::new(t, ctx)?));
    }
    if r < one {
        Ok(Boundary::Inside)
    } else {
        Ok(Boundary::Outside)
    }
}

/// Polylogarithm `Li_s(z) = Σ z^n n^{-s}` for `|z| < 1`, or `|z| = 1` with `Re s > 1`.
pub fn polylog<T: Real>(s: &HpComplex<T>, z: &HpComplex<T>, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    if z.is_zero() {
        return Ok(HpComplex::zero(ctx));
    }
    match classify(z, ctx)? {
        Boundary::Inside => {
            let r = z.abs().to_f64();
            let sigma = s.re.to_f64();
            let z = z.with_precision(ctx);
            let mut pow = HpComplex::one(ctx);
            let r_t = z.abs();
            let series = sum_series(
                1,
                |n| {
                    pow *= &z;
                    pow.clone() * inverse_power(n, s, ctx)
                },
                |n| {
                    // |z|^n n^{-σ} / (1 - |z| (1 + 1/n)^{-σ})
                    let nf = n as f64;
                    let ratio = r * (1.0 + 1.0 / nf).powf(-sigma);
                    if ratio >= 1.0 {
                        return T::from_f64(f64::MAX, ctx);
                    }
                    let lead = r_t.powi(n.min(i32::MAX as u64) as i32) * T::from_f64(nf.powf(-sigma), ctx);
                    lead / T::from_f64(1.0 - ratio, ctx)
                },
                ctx,
            )?;
            Ok(series.value)
        }
        Boundary::One if s.re > T::one(ctx) => hurwitz_zeta(s, &HpComplex::one(ctx), ctx),
        Boundary::Circle(theta) if s.re > T::one(ctx) => PeriodicZeta::new(&theta, ctx)?.eval(s),
        _ => Err(Error::domain(
            "polylog",
            "requires |z| < 1, or |z| = 1 with Re s > 1",
        )),
    }
}

/// Clausen pair `(Ci_s(φ), Si_s(φ))` with `Ci_s = Σ cos(nφ) n^{-s}` and
/// `Si_s = Σ sin(nφ) n^{-s}`, so that `Li_s(e^{iφ}) = Ci_s + i Si_s` for real `s`.
pub fn clausen_pair<T: Real>(
    s: &HpComplex<T>,
    angle: &T,
    ctx: &PrecisionContext,
) -> Result<(HpComplex<T>, HpComplex<T>)> {
    if s.re <= T::one(ctx) {
        return Err(Error::domain("clausen_pair", "requires Re s > 1 on the unit circle"));
    }
    let one = T::one(ctx);
    let two_pi = T::pi(ctx) * T::from_i64(2, ctx);
    let mut t = angle.with_precision(ctx) / two_pi;
    t = t.clone() - t.floor();
    let eps = T::pow10(-(effective_digits::<T>(ctx) as i32), ctx);
    if t <= eps || t >= one.clone() - &eps {
        return Ok((hurwitz_zeta(s, &HpComplex::one(ctx), ctx)?, HpComplex::zero(ctx)));
    }
    let theta = ThetaParam::new(t, ctx)?;
    let a = PeriodicZeta::new(&theta, ctx)?.eval(s)?;
    let b = PeriodicZeta::new(&theta.reflect(), ctx)?.eval(s)?;
    let two = T::from_i64(2, ctx);
    let ci = (a.clone() + &b).unscale(&two);
    let si = (a - b).unscale(&two).mul_i().scale(&T::from_i64(-1, ctx));
    Ok((ci, si))
}
