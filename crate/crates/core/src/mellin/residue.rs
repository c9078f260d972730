use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::{effective_digits, Real};

/// A residue computed on a small circle.
#[derive(Debug, Clone)]
pub struct ResidueTerm<T> {
    pub pole: HpComplex<T>,
    pub value: HpComplex<T>,
    pub radius: f64,
    pub nodes: usize,
    /// Change in the value when the radius is halved.
    pub stability: T,
}

pub const DEFAULT_RADIUS: f64 = 0.25;

pub fn default_residue_nodes(ctx: &PrecisionContext) -> usize {
    (4 * ctx.working_digits() as usize).max(64)
}

/// Trapezoid mean of `f(s) (s - pole)` and the largest sample size.
fn circle<T: Real, F>(f: &mut F, pole: &HpComplex<T>, radius: f64, nodes: usize, ctx: &PrecisionContext) -> Result<(HpComplex<T>, T)>
where
    F: FnMut(&HpComplex<T>) -> Result<HpComplex<T>>,
{
    let two_pi = T::pi(ctx) * T::from_i64(2, ctx);
    let r = T::from_f64(radius, ctx);
    let n = T::from_i64(nodes as i64, ctx);
    let mut acc = HpComplex::zero(ctx);
    let mut peak = T::zero(ctx);
    for k in 0..nodes {
        let phi = two_pi.clone() * T::from_i64(k as i64, ctx) / &n;
        let w = HpComplex::cis(&phi).scale(&r);
        let v = f(&(pole.clone() + &w))? * w;
        peak = T::max_of(&peak, &v.max_abs());
        acc += v;
    }
    Ok((acc.unscale(&n), peak))
}

/// Residue of `f` at `pole` from the trapezoid rule on `|s - pole| = radius`.
///
/// The computation is repeated at half the radius; a change larger than
/// `10^{-(digits-8)} max(1, |Res|, max |f(s) (s - pole)|)` means another singularity is inside the circle
/// or the integrand is inaccurate there.
pub fn residue_at<T: Real, F>(
    mut f: F,
    pole: &HpComplex<T>,
    radius: f64,
    nodes: usize,
    ctx: &PrecisionContext,
) -> Result<ResidueTerm<T>>
where
    F: FnMut(&HpComplex<T>) -> Result<HpComplex<T>>,
{
    if !(radius > 0.0 && radius < 1.0) || nodes < 8 {
        return Err(Error::domain("residue_at", "radius must lie in (0, 1) and nodes >= 8"));
    }
    let pole = pole.with_precision(ctx);
    let (value, peak) = circle(&mut f, &pole, radius, nodes, ctx)?;
    let (check, _) = circle(&mut f, &pole, radius / 2.0, nodes, ctx)?;
    let delta = (value.clone() - check).max_abs();
    let scale = T::max_of(&T::max_of(&T::one(ctx), &value.max_abs()), &peak);
    let tol = T::pow10(8 - effective_digits::<T>(ctx) as i32, ctx) * scale;
    if delta > tol {
        return Err(Error::UnstableResidue {
            pole: pole.to_sci_string(6),
            delta: format!("{:.3e}", delta.to_f64()),
        });
    }
    Ok(ResidueTerm {
        pole,
        value,
        radius,
        nodes,
        stability: delta,
    })
}
