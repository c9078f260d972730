use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::{effective_digits, Real};

/// Nodes allowed on one contour.
pub const MAX_NODES: u64 = 10_000_000;
const QUIET_RUN: u32 = 10;
const INITIAL_STEP: f64 = 0.25;
const MIN_STEP: f64 = 1.0 / 1024.0;

/// A vertical line `Re s = c` truncated to `|Im s| <= height`, sampled with spacing `step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourSpec {
    pub c: f64,
    pub height: f64,
    pub step: f64,
}

impl ContourSpec {
    pub fn new(c: f64, height: f64, step: f64) -> Result<Self> {
        if !c.is_finite() || !(height > 0.0) || !(step > 0.0) || !height.is_finite() {
            return Err(Error::domain("contour", "needs finite c, positive height and step"));
        }
        if 2.0 * (height / step).floor() + 1.0 > MAX_NODES as f64 {
            return Err(Error::domain("contour", "more than 10^7 nodes"));
        }
        Ok(ContourSpec { c, height, step })
    }

    /// Default height for automatic mode: the tail rule normally stops long before it.
    pub fn auto(c: f64, ctx: &PrecisionContext) -> Self {
        ContourSpec {
            c,
            height: 4.0 * ctx.working_digits() as f64 + 60.0,
            step: INITIAL_STEP,
        }
    }

    pub fn nodes(&self) -> u64 {
        2 * (self.height / self.step).floor() as u64 + 1
    }
}

#[derive(Debug, Clone)]
pub struct QuadratureResult<T> {
    pub value: HpComplex<T>,
    /// Distinct integrand evaluations.
    pub nodes: u64,
    pub step: f64,
    /// Largest `|Im s|` actually sampled.
    pub height: f64,
    /// Size of the last retained sample times `step / 2π`.
    pub truncation_estimate: T,
    /// `|I_h - I_{2h}|` from the last refinement, when refinement was done.
    pub refinement_delta: Option<T>,
}

struct LineSampler<'a, T, F> {
    f: F,
    c: T,
    ln_x: T,
    cache: HashMap<u64, HpComplex<T>>,
    ctx: &'a PrecisionContext,
}

impl<'a, T: Real, F> LineSampler<'a, T, F>
where
    F: FnMut(&HpComplex<T>) -> Result<HpComplex<T>>,
{
    /// `f(c + it) x^{-c-it}`.
    fn sample(&mut self, t: f64) -> Result<HpComplex<T>> {
        if let Some(v) = self.cache.get(&t.to_bits()) {
            return Ok(v.clone());
        }
        let s = HpComplex::new(self.c.clone(), T::from_f64(t, self.ctx));
        let v = (self.f)(&s)? * (-(s.scale(&self.ln_x))).exp();
        let v = v.finite("contour integrand")?;
        self.cache.insert(t.to_bits(), v.clone());
        Ok(v)
    }
}

struct Pass<T> {
    sum: HpComplex<T>,
    height: f64,
    last: T,
}

fn trapezoid<T: Real, F>(sampler: &mut LineSampler<'_, T, F>, step: f64, height: f64) -> Result<Pass<T>>
where
    F: FnMut(&HpComplex<T>) -> Result<HpComplex<T>>,
{
    let ctx = sampler.ctx;
    let cut = T::pow10(-(effective_digits::<T>(ctx) as i32 + 5), ctx);
    let centre = sampler.sample(0.0)?;
    let mut peak = centre.max_abs();
    let mut sum = centre;
    let mut reach = 0.0f64;
    let mut last = T::zero(ctx);
    for dir in [1.0, -1.0] {
        let mut quiet = 0;
        let mut k = 1u64;
        let mut halfway = None;
        loop {
            let t = k as f64 * step;
            if t > height {
                // no quiet run before the height cap: the integrand must at least be decaying
                let end = last.clone();
                if let Some(h) = halfway {
                    if end.clone() * T::from_i64(10, ctx) > h {
                        return Err(Error::Divergence {
                            what: "vertical line integral",
                            magnitude: format!("{:.3e}", end.to_f64()),
                            height: format!("{height}"),
                        });
                    }
                }
                break;
            }
            let v = sampler.sample(dir * t)?;
            let m = v.max_abs();
            if m > peak {
                peak = m.clone();
            }
            if halfway.is_none() && 2.0 * t >= height {
                halfway = Some(m.clone());
            }
            sum += v;
            last = m.clone();
            reach = reach.max(t);
            if m <= cut.clone() * &peak {
                quiet += 1;
                if quiet >= QUIET_RUN {
                    break;
                }
            } else {
                quiet = 0;
            }
            k += 1;
        }
    }
    let two_pi = T::pi(ctx) * T::from_i64(2, ctx);
    let h = T::from_f64(step, ctx);
    Ok(Pass {
        sum: sum.scale(&(h.clone() / &two_pi)),
        height: reach,
        last: last * h / two_pi,
    })
}

fn log_x<T: Real>(x: &T, ctx: &PrecisionContext) -> Result<T> {
    if !(x.clone() > T::zero(ctx)) || !x.is_finite() {
        return Err(Error::domain("vertical line integral", "requires x > 0"));
    }
    Ok(x.with_precision(ctx).ln())
}

/// `(1/2πi) ∫_{c-iT}^{c+iT} f(s) x^{-s} ds` by the trapezoid rule with the fixed step of `spec`.
///
/// Sampling in each direction stops early once ten consecutive samples fall below
/// `10^{-(digits+5)}` of the largest one seen.
pub fn vertical_line_integral<T: Real, F>(
    f: F,
    spec: &ContourSpec,
    x: &T,
    ctx: &PrecisionContext,
) -> Result<QuadratureResult<T>>
where
    F: FnMut(&HpComplex<T>) -> Result<HpComplex<T>>,
{
    let spec = ContourSpec::new(spec.c, spec.height, spec.step)?;
    let mut sampler = LineSampler {
        f,
        c: T::from_f64(spec.c, ctx),
        ln_x: log_x(x, ctx)?,
        cache: HashMap::new(),
        ctx,
    };
    let pass = trapezoid(&mut sampler, spec.step, spec.height)?;
    Ok(QuadratureResult {
        value: pass.sum,
        nodes: sampler.cache.len() as u64,
        step: spec.step,
        height: pass.height,
        truncation_estimate: pass.last,
        refinement_delta: None,
    })
}

/// Like [`vertical_line_integral`], but halves the step (reusing samples) until two
/// successive results agree to `10^{-digits} max(1, |I|)`.
pub fn vertical_line_integral_auto<T: Real, F>(
    f: F,
    c: f64,
    x: &T,
    ctx: &PrecisionContext,
) -> Result<QuadratureResult<T>>
where
    F: FnMut(&HpComplex<T>) -> Result<HpComplex<T>>,
{
    let spec = ContourSpec::auto(c, ctx);
    let spec = ContourSpec::new(spec.c, spec.height, spec.step)?;
    let mut sampler = LineSampler {
        f,
        c: T::from_f64(c, ctx),
        ln_x: log_x(x, ctx)?,
        cache: HashMap::new(),
        ctx,
    };
    let tol = T::pow10(-(effective_digits::<T>(ctx) as i32), ctx);
    let mut step = spec.step;
    let mut previous = trapezoid(&mut sampler, step, spec.height)?;
    loop {
        if step / 2.0 < MIN_STEP || sampler.cache.len() as u64 * 2 > MAX_NODES.min(ctx.max_terms()) {
            return Err(Error::NonConvergence {
                what: "vertical line integral",
                terms: sampler.cache.len() as u64,
                partial: previous.sum.to_sci_string(12),
                tail_bound: format!("{:.3e}", previous.last.to_f64()),
            });
        }
        step /= 2.0;
        let pass = trapezoid(&mut sampler, step, spec.height)?;
        let delta = (pass.sum.clone() - &previous.sum).max_abs();
        let scale = T::max_of(&T::one(ctx), &pass.sum.max_abs());
        if delta <= tol.clone() * scale {
            return Ok(QuadratureResult {
                value: pass.sum,
                nodes: sampler.cache.len() as u64,
                step,
                height: pass.height,
                truncation_estimate: pass.last,
                refinement_delta: Some(delta),
            });
        }
        previous = pass;
    }
}
