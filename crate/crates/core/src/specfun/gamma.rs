use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::{effective_digits, effective_working_digits, Real};
use crate::specfun::bernoulli::stirling_coefficients;

/// Distance below which an argument is treated as sitting on a pole.
pub(crate) fn pole_threshold<T: Real>(ctx: &PrecisionContext) -> f64 {
    -(effective_digits::<T>(ctx) as f64) + 2.0
}

/// `Err(Pole)` when `s` lies within `10^(-digits+2)` of a non-positive integer.
pub(crate) fn check_nonpositive_integer<T: Real>(
    s: &HpComplex<T>,
    function: &'static str,
    ctx: &PrecisionContext,
) -> Result<()> {
    let (n, d) = s.distance_to_integer();
    if n <= 0 && d.log10_abs() <= pole_threshold::<T>(ctx) {
        return Err(Error::pole(function, n.to_string()));
    }
    Ok(())
}

/// `ln Γ(w)` by the Stirling series; requires `|w|` large enough for the target precision.
fn stirling_ln_gamma<T: Real>(w: &HpComplex<T>, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    let digits = effective_working_digits::<T>(ctx) as usize;
    let coeffs = stirling_coefficients::<T>(3 * digits + 10, ctx);
    let half = T::from_f64(0.5, ctx);
    let ln_w = w.ln();
    let two_pi = T::pi(ctx) * T::from_i64(2, ctx);
    let mut sum = (w.clone() - HpComplex::from_real(half.clone())) * &ln_w - w.clone()
        + HpComplex::from_real(two_pi.ln() * &half);
    let eps = T::pow10(-(digits as i32), ctx);
    let inv = w.recip();
    let inv2 = inv.square();
    let mut p = inv;
    let mut prev = None;
    for c in coeffs.iter().skip(1) {
        let term = p.scale(c);
        let size = term.max_abs();
        sum += term;
        if size <= eps.clone() * sum.max_abs() {
            return Ok(sum);
        }
        if let Some(prev) = prev {
            if size > prev {
                break;
            }
        }
        prev = Some(size);
        p *= &inv2;
    }
    Err(Error::NonConvergence {
        what: "Stirling series",
        terms: coeffs.len() as u64,
        partial: sum.to_sci_string(20),
        tail_bound: "n/a".into(),
    })
}

/// `Γ(s)` for complex `s`.
pub fn gamma<T: Real>(s: &HpComplex<T>, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    check_nonpositive_integer(s, "gamma", ctx)?;
    let (_, d) = s.distance_to_integer();
    let mag = s.abs().to_f64();
    let mut extra = (1.0 + mag * (2.0 + mag).ln()).log10().ceil() + 2.0;
    if s.re.to_f64() < 0.5 {
        extra += (-d.log10_abs()).max(0.0).ceil();
    }
    let work = ctx.extended(extra as u32);
    let sw = s.with_precision(&work);
    let half = T::from_f64(0.5, &work);
    let value = if sw.re < half {
        let one = HpComplex::one(&work);
        let pi = T::pi(&work);
        let sin = sw.scale(&pi).sin();
        let g = gamma_right(&(one - &sw), &work)?;
        HpComplex::from_real(pi) / (sin * g)
    } else {
        gamma_right(&sw, &work)?
    };
    value.with_precision(ctx).finite("gamma")
}

/// `Γ(s)` for `Re s ≥ 1/2`.
fn gamma_right<T: Real>(s: &HpComplex<T>, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    let r = 0.7 * effective_working_digits::<T>(ctx) as f64 + 1.0;
    let re = s.re.to_f64();
    let im = s.im.to_f64();
    let shift = if re * re + im * im >= r * r {
        0
    } else {
        (r - re).ceil().max(0.0) as i64
    };
    let mut w = s.clone();
    let mut prod = HpComplex::one(ctx);
    for _ in 0..shift {
        prod *= &w;
        w += HpComplex::one(ctx);
    }
    let lg = stirling_ln_gamma(&w, ctx)?;
    Ok(lg.exp() / prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::MpFloat;

    fn c(re: f64, im: f64, ctx: &PrecisionContext) -> HpComplex<MpFloat> {
        HpComplex::from_f64(re, im, ctx)
    }

    #[test]
    fn known_values() {
        let ctx = PrecisionContext::with_precision(40).unwrap();
        let one = gamma(&c(1.0, 0.0, &ctx), &ctx).unwrap();
        assert!((one - HpComplex::one(&ctx)).log10_abs() < -40.0);
        let half = gamma(&c(0.5, 0.0, &ctx), &ctx).unwrap();
        let sqrt_pi = MpFloat::pi(&ctx).sqrt();
        assert!((half.re - sqrt_pi).log10_abs() < -40.0);
        let five = gamma(&c(5.0, 0.0, &ctx), &ctx).unwrap();
        assert!((five.re.to_f64() - 24.0).abs() < 1e-13);
        let neg = gamma(&c(-0.5, 0.0, &ctx), &ctx).unwrap();
        assert!((neg.re.to_f64() + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn poles_are_reported() {
        let ctx = PrecisionContext::with_precision(30).unwrap();
        for n in [0.0, -1.0, -2.0, -7.0] {
            assert!(matches!(gamma(&c(n, 0.0, &ctx), &ctx), Err(Error::Pole { .. })));
        }
    }

    #[test]
    fn complex_argument_matches_f64_reference() {
        let ctx = PrecisionContext::with_precision(30).unwrap();
        // |Γ(iy)|² = π / (y sinh(πy))
        let y = 3.0f64;
        let g = gamma(&c(0.0, y, &ctx), &ctx).unwrap();
        let expect = std::f64::consts::PI / (y * (std::f64::consts::PI * y).sinh());
        assert!((g.norm_sqr().to_f64() / expect - 1.0).abs() < 1e-13);
    }
}
