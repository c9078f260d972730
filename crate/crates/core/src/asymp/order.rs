use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::{effective_digits, Real};
use crate::specfun::ThetaParam;

use super::{q0_residue, q1_coefficient, Part, Regime, Variant};

const MAX_SCAN: u32 = 40;

fn slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.len() < 3 {
        return Err(Error::UnusableData(format!("{} usable points, need at least 3", points.len())));
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if !(sxx > 0.0) {
        return Err(Error::UnusableData("all x values coincide".into()));
    }
    Ok(sxy / sxx)
}

fn pair_check(nx: usize, ne: usize) -> Result<()> {
    if nx != ne {
        return Err(Error::UnusableData(format!("{nx} x values but {ne} errors")));
    }
    Ok(())
}

/// Least-squares slope of `log err` against `log x`.
pub fn empirical_order(xs: &[f64], errs: &[f64]) -> Result<f64> {
    pair_check(xs.len(), errs.len())?;
    let mut points = Vec::with_capacity(xs.len());
    for (&x, &e) in xs.iter().zip(errs) {
        if !(x > 0.0 && x.is_finite()) || !(e > 0.0 && e.is_finite()) {
            return Err(Error::UnusableData(format!("non-positive or non-finite sample ({x}, {e})")));
        }
        points.push((x.ln(), e.ln()));
    }
    slope(&points)
}

/// [`empirical_order`] on high-precision errors; samples below `10^{-digits+12}` are at
/// the precision floor and are dropped before fitting.
pub fn fit_order<T: Real>(xs: &[f64], errs: &[T], ctx: &PrecisionContext) -> Result<f64> {
    pair_check(xs.len(), errs.len())?;
    let floor = 12.0 - effective_digits::<T>(ctx) as f64;
    let mut points = Vec::with_capacity(xs.len());
    for (&x, e) in xs.iter().zip(errs) {
        if !(x > 0.0 && x.is_finite()) || !e.is_finite() {
            return Err(Error::UnusableData(format!("bad sample at x = {x}")));
        }
        let le = e.log10_abs();
        if le < floor {
            continue;
        }
        points.push((x.log10(), le));
    }
    slope(&points)
}

/// Magnitudes `|a_n x^n|` (q → 1, `n = 1..=count`) or `|a_{-2n} x^{-2n}|` of the oracle
/// Ci part (q → 0). Oracle coefficients below `10^{8-digits}` are numerical zeros and are
/// returned as exact zeros.
pub fn truncation_scan<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    x: f64,
    regime: Regime,
    count: u32,
    ctx: &PrecisionContext,
) -> Result<Vec<T>> {
    let xt = T::from_f64(x, ctx);
    (1..=count as i32)
        .map(|n| {
            let (power, c) = match regime {
                Regime::QTo1 => (n, q1_coefficient(zparam, theta, n, Variant::Corrected, ctx)?),
                Regime::QTo0 => (-2 * n, q0_residue(zparam, theta, -2 * n, Part::Ci, ctx)?),
            };
            let m = c.abs();
            if regime == Regime::QTo0 && m.log10_abs() < 8.0 - effective_digits::<T>(ctx) as f64 {
                return Ok(T::zero(ctx));
            }
            Ok(m * xt.powi(power))
        })
        .collect()
}

/// Order `N <= 40` minimizing the size of the first dropped terms.
///
/// `N` is scored by the larger of `|t_{N+1}|, |t_{N+2}|`, then the smaller, so that an
/// isolated tiny term does not end the scan early (the q → 1 coefficients alternate
/// between two decay rates). Ties go to the smaller order.
pub fn optimal_truncation<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    x: f64,
    regime: Regime,
    ctx: &PrecisionContext,
) -> Result<u32> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain("optimal_truncation", "requires x > 0"));
    }
    let count = match regime {
        Regime::QTo1 => MAX_SCAN + 2,
        // the q → 0 oracle terms are all removable-singularity residues; a short scan suffices
        Regime::QTo0 => 12,
    };
    let mags: Vec<f64> = truncation_scan(zparam, theta, x, regime, count, ctx)?
        .iter()
        .map(|m| m.log10_abs())
        .collect();
    let mut best = (1u32, (f64::INFINITY, f64::INFINITY));
    for n in 1..=(count - 2) {
        let (a, b) = (mags[n as usize], mags[n as usize + 1]);
        let score = if a >= b { (a, b) } else { (b, a) };
        if score < best.1 {
            best = (n, score);
        }
    }
    Ok(best.0)
}
