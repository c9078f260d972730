//! Mellin–Barnes representations of the exponential-parameter q-dilogarithm and of
//! its q-Clausen pair, with a line-integral quadrature and a residue oracle.
//!
//! With `q = e^{-x}` and `ω = e^{2πiθ} q^z`,
//!
//! `Li_2(ω, q) = (1/2πi) ∫_{(c)} ζ(s, z) F(θ, s + 1) Γ(s) x^{-s} ds`, `c > 1`.
//!
//! The simple pole at `s = 1` is subtracted as `R Γ(s - 1)` before integrating
//! and restored as `R e^{-x} / x`, which moves the nearest singularity of the
//! integrand to `s = 0` and makes the trapezoid rule converge faster.

mod integrands;
mod quadrature;
mod residue;

pub use integrands::{integrand_g, ClausenIntegrand, LiIntegrand};
pub use quadrature::{vertical_line_integral, vertical_line_integral_auto, ContourSpec, QuadratureResult, MAX_NODES};
pub use residue::{default_residue_nodes, residue_at, ResidueTerm, DEFAULT_RADIUS};

use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::qfun::ExponentialParam;
use crate::real::Real;
use crate::specfun::gamma;

/// How the line integral is sampled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Quadrature {
    /// Step halving until two successive results agree.
    Auto,
    Fixed(ContourSpec),
}

fn integrate<T: Real, F>(f: F, c: f64, x: &T, mode: Quadrature, ctx: &PrecisionContext) -> Result<QuadratureResult<T>>
where
    F: FnMut(&HpComplex<T>) -> Result<HpComplex<T>>,
{
    match mode {
        Quadrature::Auto => vertical_line_integral_auto(f, c, x, ctx),
        Quadrature::Fixed(spec) => vertical_line_integral(f, &ContourSpec { c, ..spec }, x, ctx),
    }
}

fn restore_pole<T: Real>(mut q: QuadratureResult<T>, r: &HpComplex<T>, x: &T, ctx: &PrecisionContext) -> QuadratureResult<T> {
    let x = x.with_precision(ctx);
    let k = (-x.clone()).exp() / x;
    q.value += r.scale(&k);
    q
}

fn check_strip(c: f64, lo: f64, hi: f64, what: &'static str) -> Result<()> {
    if !(c > lo && c < hi) {
        let reason = if hi.is_finite() {
            format!("contour abscissa c = {c} must satisfy {lo} < c < {hi}")
        } else {
            format!("contour abscissa c = {c} must satisfy c > {lo}")
        };
        return Err(Error::domain(what, reason));
    }
    Ok(())
}

/// `Li_2(ω, e^{-x})` from its Mellin–Barnes integral on `Re s = c`, `c > 1`.
pub fn barnes_li2<T: Real>(
    p: &ExponentialParam<T>,
    c: f64,
    mode: Quadrature,
    ctx: &PrecisionContext,
) -> Result<QuadratureResult<T>> {
    check_strip(c, 1.0, f64::INFINITY, "barnes_li2")?;
    let g = LiIntegrand::new(p.zparam(), p.theta(), ctx)?;
    let r = g.residue_at_one()?;
    let q = integrate(|s: &HpComplex<T>| g.g_without_pole(s, &r), c, p.x(), mode, ctx)?;
    Ok(restore_pole(q, &r, p.x(), ctx))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Part {
    Cos,
    Sin,
}

fn barnes_clausen<T: Real>(
    p: &ExponentialParam<T>,
    c: f64,
    mode: Quadrature,
    part: Part,
    ctx: &PrecisionContext,
) -> Result<QuadratureResult<T>> {
    let what = match part {
        Part::Cos => "barnes_ci2",
        Part::Sin => "barnes_si2",
    };
    check_strip(c, 1.0, 2.0, what)?;
    let h = ClausenIntegrand::new(p.zparam(), p.theta(), ctx)?;
    let (a, b) = clausen_residues(p, ctx)?;
    let r = match part {
        Part::Cos => a,
        Part::Sin => b,
    };
    let one = HpComplex::one(ctx);
    let q = integrate(
        |s: &HpComplex<T>| {
            let v = match part {
                Part::Cos => h.ci(s)?,
                Part::Sin => h.si(s)?,
            };
            Ok(v - r.clone() * gamma(&(s.clone() - &one), ctx)?)
        },
        c,
        p.x(),
        mode,
        ctx,
    )?;
    Ok(restore_pole(q, &r, p.x(), ctx))
}

/// Residues of `h_c` and `h_s` at `s = 1`: `(F(θ,2) + F(1-θ,2))/2` and
/// `(F(θ,2) - F(1-θ,2))/(2i)`.
pub fn clausen_residues<T: Real>(p: &ExponentialParam<T>, ctx: &PrecisionContext) -> Result<(HpComplex<T>, HpComplex<T>)> {
    let two = HpComplex::from_i64(2, ctx);
    let a = crate::specfun::PeriodicZeta::new(p.theta(), ctx)?.eval(&two)?;
    let b = crate::specfun::PeriodicZeta::new(&p.theta().reflect(), ctx)?.eval(&two)?;
    let half = T::from_i64(2, ctx);
    let cos = (a.clone() + &b).unscale(&half);
    let sin = (a - b).unscale(&half).mul_i().scale(&T::from_i64(-1, ctx));
    Ok((cos, sin))
}

/// `Ci_2(ω, e^{-x})` from its Mellin–Barnes integral; requires `1 < c < 2`.
pub fn barnes_ci2<T: Real>(
    p: &ExponentialParam<T>,
    c: f64,
    mode: Quadrature,
    ctx: &PrecisionContext,
) -> Result<QuadratureResult<T>> {
    barnes_clausen(p, c, mode, Part::Cos, ctx)
}

/// `Si_2(ω, e^{-x})` from its Mellin–Barnes integral; requires `1 < c < 2`.
pub fn barnes_si2<T: Real>(
    p: &ExponentialParam<T>,
    c: f64,
    mode: Quadrature,
    ctx: &PrecisionContext,
) -> Result<QuadratureResult<T>> {
    barnes_clausen(p, c, mode, Part::Sin, ctx)
}

/// Calibration integral `(1/2πi) ∫_{(c)} Γ(s) x^{-s} ds = e^{-x}`, `c > 0`.
pub fn cahen_mellin<T: Real>(x: &T, c: f64, mode: Quadrature, ctx: &PrecisionContext) -> Result<QuadratureResult<T>> {
    check_strip(c, 0.0, f64::INFINITY, "cahen_mellin")?;
    integrate(|s: &HpComplex<T>| gamma(s, ctx), c, x, mode, ctx)
}
