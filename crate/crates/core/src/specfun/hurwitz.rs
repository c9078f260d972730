use std::cell::RefCell;

use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::{effective_working_digits, Real};
use crate::specfun::bernoulli::even_over_factorial;
use crate::specfun::gamma::pole_threshold;

/// Hurwitz zeta `ζ(s, z)` for a fixed `z`, caching `ln(z + k)` across calls.
///
/// Evaluation is Euler–Maclaurin with shift `M` and Bernoulli corrections.
#[derive(Debug)]
pub struct HurwitzZeta<T> {
    z: HpComplex<T>,
    ctx: PrecisionContext,
    logs: RefCell<Vec<HpComplex<T>>>,
}

struct Pass<T> {
    value: HpComplex<T>,
    peak_log10: f64,
}

impl<T: Real> HurwitzZeta<T> {
    pub fn new(z: HpComplex<T>, ctx: &PrecisionContext) -> Result<Self> {
        let (n, d) = z.distance_to_integer();
        if n <= 0 && d.log10_abs() <= pole_threshold::<T>(ctx) {
            return Err(Error::domain(
                "hurwitz_zeta",
                format!("z = {n} is a non-positive integer"),
            ));
        }
        Ok(HurwitzZeta {
            z: z.with_precision(ctx),
            ctx: *ctx,
            logs: RefCell::new(Vec::new()),
        })
    }

    pub fn z(&self) -> &HpComplex<T> {
        &self.z
    }

    pub fn eval(&self, s: &HpComplex<T>) -> Result<HpComplex<T>> {
        let one = HpComplex::one(&self.ctx);
        if (s.clone() - &one).log10_abs() <= pole_threshold::<T>(&self.ctx) {
            return Err(Error::pole("hurwitz_zeta", "s = 1"));
        }
        let s = s.with_precision(&self.ctx);
        let first = self.pass(&s, &self.ctx, true)?;
        let loss = first.peak_log10 - first.value.log10_abs().max(0.0);
        if T::MAX_DIGITS.is_some() || loss <= f64::from(self.ctx.guard_digits()) - 3.0 {
            return first.value.finite("hurwitz_zeta");
        }
        let work = self.ctx.extended(loss.ceil() as u32 + 3);
        let second = self.pass(&s.with_precision(&work), &work, false)?;
        second.value.with_precision(&self.ctx).finite("hurwitz_zeta")
    }

    fn log_at(&self, k: usize, ctx: &PrecisionContext, cached: bool) -> HpComplex<T> {
        if !cached {
            return (self.z.with_precision(ctx) + HpComplex::from_i64(k as i64, ctx)).ln();
        }
        let mut logs = self.logs.borrow_mut();
        while logs.len() <= k {
            let j = logs.len() as i64;
            logs.push((self.z.clone() + HpComplex::from_i64(j, ctx)).ln());
        }
        logs[k].clone()
    }

    fn pass(&self, s: &HpComplex<T>, ctx: &PrecisionContext, cached: bool) -> Result<Pass<T>> {
        let digits = effective_working_digits::<T>(ctx) as usize;
        let reach = (0.7 * digits as f64).max(s.abs().to_f64()).max(1.0);
        let mut shift = (reach - self.z.re.to_f64()).ceil().max(0.0) as usize;
        let coeffs = even_over_factorial::<T>(2 * digits + 20, ctx);
        let eps = T::pow10(-(digits as i32), ctx);
        let one = HpComplex::one(ctx);
        let z = self.z.with_precision(ctx);
        for _attempt in 0..6 {
            let mut peak = f64::NEG_INFINITY;
            let mut sum = HpComplex::zero(ctx);
            for k in 0..shift {
                let term = (-(s.clone() * self.log_at(k, ctx, cached))).exp();
                peak = peak.max(term.log10_abs());
                sum += term;
            }
            let w = z.clone() + HpComplex::from_i64(shift as i64, ctx);
            let w_pow = (-(s.clone() * self.log_at(shift, ctx, cached))).exp();
            let head = w.clone() * &w_pow / (s.clone() - &one);
            let half = w_pow.unscale(&T::from_i64(2, ctx));
            peak = peak.max(head.log10_abs()).max(half.log10_abs());
            sum += head;
            sum += half;
            let inv2 = w.recip().square();
            let mut factor = s.clone() * &w_pow / &w;
            let mut prev = f64::INFINITY;
            let mut converged = false;
            for (j, c) in coeffs.iter().enumerate().skip(1) {
                let term = factor.scale(c);
                let size = term.log10_abs();
                peak = peak.max(size);
                sum += term;
                if size <= eps.log10_abs() + sum.log10_abs() || factor.is_zero() {
                    converged = true;
                    break;
                }
                if size > prev && j > 2 {
                    break;
                }
                prev = size;
                let a = s.clone() + HpComplex::from_i64(2 * j as i64 - 1, ctx);
                let b = s.clone() + HpComplex::from_i64(2 * j as i64, ctx);
                factor = factor * a * b * &inv2;
            }
            if converged {
                return Ok(Pass { value: sum, peak_log10: peak });
            }
            shift = 2 * shift + 10;
        }
        Err(Error::NonConvergence {
            what: "hurwitz_zeta",
            terms: shift as u64,
            partial: "n/a".into(),
            tail_bound: "n/a".into(),
        })
    }
}

/// Hurwitz zeta `ζ(s, z) = Σ_{k≥0} (z + k)^{-s}` and its continuation.
pub fn hurwitz_zeta<T: Real>(s: &HpComplex<T>, z: &HpComplex<T>, ctx: &PrecisionContext) -> Result<HpComplex<T>> {
    HurwitzZeta::new(z.clone(), ctx)?.eval(s)
}
