use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::{effective_working_digits, Real};
use crate::specfun::bernoulli::{digamma_coefficients, even_over_factorial};
use crate::specfun::gamma::check_nonpositive_integer;

/// Polygamma `ψ^{(n)}(z)`, the `n`-th derivative of the digamma function.
///
/// For `n ≥ 1` this is evaluated by upward recurrence and the asymptotic series, not
/// through `(-1)^{n+1} n! ζ(n+1, z)`, so the two can be checked against each other.
pub fn polygamma<T: Real>(n: u32, z: &HpComplex<T>, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    if n == 0 {
        return digamma(z, ctx);
    }
    check_nonpositive_integer(z, "polygamma", ctx).map_err(|_| Error::pole("polygamma", format!("{:?}", z.to_f64_pair())))?;
    let digits = effective_working_digits::<T>(ctx) as f64;
    // the recurrence sum cancels when z sits close to a pole
    let near = if z.re.to_f64() < 0.5 {
        (-z.distance_to_integer().1.log10_abs()).clamp(0.0, digits)
    } else {
        0.0
    };
    let extra = 3 + near.ceil() as u32 * (n + 1);
    let work = ctx.extended(extra);
    let zw = z.with_precision(&work);
    let r = 0.7 * digits + f64::from(n) + 1.0;
    let shift = if zw.abs().to_f64() >= r && zw.re.to_f64() > 0.0 {
        0
    } else {
        (r - zw.re.to_f64()).ceil().max(0.0) as i64
    };
    let np1 = n as i32 + 1;
    let mut w = zw.clone();
    let mut direct = HpComplex::zero(&work);
    for _ in 0..shift {
        direct += w.powi(-np1);
        w += HpComplex::one(&work);
    }
    let mut fact = T::one(&work);
    for k in 2..=n {
        fact *= T::from_i64(i64::from(k), &work);
    }
    let asym = polygamma_asymptotic(n, &w, &fact, &work)?;
    let sign = if n % 2 == 1 { T::one(&work) } else { -T::one(&work) };
    Ok((asym + direct.scale(&fact)).scale(&sign).with_precision(ctx))
}

/// `(n-1)!/w^n + n!/(2w^{n+1}) + Σ_k B_{2k} (2k+n-1)! / ((2k)! w^{2k+n})`, which is
/// `(-1)^{n+1} ψ^{(n)}(w)` for large `w`.
fn polygamma_asymptotic<T: Real>(n: u32, w: &HpComplex<T>, n_fact: &T, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    let digits = effective_working_digits::<T>(ctx) as usize;
    let nt = T::from_i64(i64::from(n), ctx);
    let inv = w.recip();
    let inv2 = inv.square();
    let lead = inv.powi(n as i32);
    let mut sum = lead.scale(&(n_fact.clone() / &nt)) + lead.clone() * inv.scale(&(n_fact.clone() / T::from_i64(2, ctx)));
    let coeffs = even_over_factorial::<T>(3 * digits + 10, ctx);
    let eps = T::pow10(-(digits as i32), ctx);
    // (2k+n-1)! starting from k = 1
    let mut f = n_fact.clone() * T::from_i64(i64::from(n) + 1, ctx);
    let mut p = lead * &inv2;
    for (k, c) in coeffs.iter().enumerate().skip(1) {
        let term = p.scale(&(c.clone() * &f));
        let size = term.max_abs();
        sum += term;
        if size <= eps.clone() * sum.max_abs() {
            return Ok(sum);
        }
        let m = 2 * k as i64 + i64::from(n);
        f *= T::from_i64(m * (m + 1), ctx);
        p *= &inv2;
    }
    Err(Error::NonConvergence {
        what: "polygamma",
        terms: coeffs.len() as u64,
        partial: sum.to_sci_string(20),
        tail_bound: "n/a".into(),
    })
}

/// Digamma `ψ(z)`.
pub fn digamma<T: Real>(z: &HpComplex<T>, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    check_nonpositive_integer(z, "digamma", ctx).map_err(|_| Error::pole("digamma", format!("{:?}", z.to_f64_pair())))?;
    let work = ctx.extended(3);
    let zw = z.with_precision(&work);
    let half = T::from_f64(0.5, &work);
    let value = if zw.re < half {
        // ψ(z) = ψ(1 - z) - π cot(πz)
        let pi = T::pi(&work);
        let pz = zw.scale(&pi);
        let cot = pz.cos() / pz.sin();
        digamma_right(&(HpComplex::one(&work) - &zw), &work)? - cot.scale(&pi)
    } else {
        digamma_right(&zw, &work)?
    };
    Ok(value.with_precision(ctx))
}

fn digamma_right<T: Real>(z: &HpComplex<T>, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    let digits = effective_working_digits::<T>(ctx) as usize;
    let r = 0.7 * digits as f64 + 1.0;
    let shift = if z.abs().to_f64() >= r {
        0
    } else {
        (r - z.re.to_f64()).ceil().max(0.0) as i64
    };
    let mut w = z.clone();
    let mut corr = HpComplex::zero(ctx);
    for _ in 0..shift {
        corr += w.recip();
        w += HpComplex::one(ctx);
    }
    let coeffs = digamma_coefficients::<T>(3 * digits + 10, ctx);
    let inv = w.recip();
    let inv2 = inv.square();
    let mut sum = w.ln() - inv.unscale(&T::from_i64(2, ctx));
    let eps = T::pow10(-(digits as i32), ctx);
    let mut p = inv2.clone();
    for c in coeffs.iter().skip(1) {
        let term = p.scale(c);
        let size = term.max_abs();
        sum -= term;
        if size <= eps.clone() * sum.max_abs() {
            return Ok(sum - corr);
        }
        p *= &inv2;
    }
    Err(Error::NonConvergence {
        what: "digamma",
        terms: coeffs.len() as u64,
        partial: sum.to_sci_string(20),
        tail_bound: "n/a".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::MpFloat;

    #[test]
    fn digamma_at_one_is_minus_gamma() {
        let ctx = PrecisionContext::with_precision(40).unwrap();
        let v = digamma(&HpComplex::<MpFloat>::one(&ctx), &ctx).unwrap();
        assert!((v.re + MpFloat::euler_gamma(&ctx)).log10_abs() < -40.0);
        let v = digamma(&HpComplex::<MpFloat>::from_f64(-0.5, 0.0, &ctx), &ctx).unwrap();
        // ψ(-1/2) = ψ(1/2) + 2 = -γ - 2 ln 2 + 2
        let expect = -0.577_215_664_901_532_9 - 2.0 * 2f64.ln() + 2.0;
        assert!((v.re.to_f64() - expect).abs() < 1e-14);
    }

    #[test]
    fn trigamma_at_one() {
        let ctx = PrecisionContext::with_precision(30).unwrap();
        let v = polygamma(1, &HpComplex::<MpFloat>::one(&ctx), &ctx).unwrap();
        assert!((v.re.to_f64() - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-15);
        let v = polygamma(2, &HpComplex::<MpFloat>::one(&ctx), &ctx).unwrap();
        assert!((v.re.to_f64() + 2.404_113_806_319_188_5).abs() < 1e-14);
    }

    #[test]
    fn agrees_with_hurwitz() {
        let ctx = PrecisionContext::with_precision(40).unwrap();
        for z in [HpComplex::<MpFloat>::from_f64(0.3, 0.0, &ctx), HpComplex::from_f64(-2.7, 0.4, &ctx), HpComplex::from_f64(5.0, -3.0, &ctx)] {
            for n in 1..=6u32 {
                let p = polygamma(n, &z, &ctx).unwrap();
                let mut k = MpFloat::one(&ctx);
                for j in 2..=n {
                    k *= MpFloat::from_i64(i64::from(j), &ctx);
                }
                let zeta = crate::specfun::hurwitz_zeta(&HpComplex::from_i64(i64::from(n) + 1, &ctx), &z, &ctx).unwrap();
                let expect = zeta.scale(&if n % 2 == 1 { k } else { -k });
                assert!((p.clone() - expect).log10_abs() - p.log10_abs().max(0.0) < -38.0, "n={n}");
            }
        }
    }
}
