use crate::error::{Error, Result};
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::mellin::{default_residue_nodes, residue_at, ClausenIntegrand, LiIntegrand, ResidueTerm, DEFAULT_RADIUS};
use crate::real::Real;
use crate::specfun::{apostol_bernoulli, bernoulli_poly, polygamma, PeriodicZeta, ThetaParam};

/// Which closed form to assemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// The coefficient formulas as printed in the source derivation.
    Printed,
    /// Γ-residue × ζ(-n, z) × F(θ, 1-n) on the x→0 side; the residues of the
    /// Lerch-decomposed integrands, with the Bernoulli parity sums taken at face value,
    /// on the x→∞ side.
    Corrected,
}

/// Component of the q-Clausen pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Part {
    Ci,
    Si,
    Combined,
}

fn factorial<T: Real>(n: u32, ctx: &PrecisionContext) -> T {
    (2..=n as i64).fold(T::one(ctx), |acc, k| acc * T::from_i64(k, ctx))
}

fn sign<T: Real>(n: i64, ctx: &PrecisionContext) -> T {
    T::from_i64(if n.rem_euclid(2) == 0 { 1 } else { -1 }, ctx)
}

fn real_bernoulli<T: Real>(n: usize, theta: &T, ctx: &PrecisionContext) -> T {
    bernoulli_poly(n, &HpComplex::from_real(theta.clone()), ctx).re
}

fn check_zparam<T: Real>(zparam: &HpComplex<T>, ctx: &PrecisionContext) -> Result<()> {
    if zparam.re <= T::one(ctx) {
        return Err(Error::domain("asymptotic expansion", "requires Re zparam > 1"));
    }
    Ok(())
}

/// Closed-form coefficient of `x^power` (`power >= -1`) in the x→0 expansion of
/// `Li_2(ω, e^{-x})`.
pub fn q1_coefficient<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    power: i32,
    variant: Variant,
    ctx: &PrecisionContext,
) -> Result<HpComplex<T>> {
    check_zparam(zparam, ctx)?;
    if power < -1 {
        return Err(Error::domain("q1_coefficient", "powers start at -1"));
    }
    let f = PeriodicZeta::new(theta, ctx)?;
    let half = HpComplex::from_real(T::one(ctx) / T::from_i64(2, ctx));
    let cos_part = |s: i64| -> Result<HpComplex<T>> {
        let g = PeriodicZeta::new(&theta.reflect(), ctx)?;
        let s = HpComplex::from_i64(s, ctx);
        Ok((f.eval(&s)? + g.eval(&s)?).unscale(&T::from_i64(2, ctx)))
    };
    match (power, variant) {
        (-1, Variant::Corrected) => f.eval(&HpComplex::from_i64(2, ctx)),
        (-1, Variant::Printed) => cos_part(2),
        (0, Variant::Corrected) => Ok((half - zparam) * f.eval(&HpComplex::one(ctx))?),
        (0, Variant::Printed) => Ok((half - zparam) * cos_part(1)?),
        (n, variant) => {
            let n = n as u32;
            let lambda = theta.lambda(ctx);
            let one = HpComplex::one(ctx);
            let bz = bernoulli_poly(n as usize + 1, zparam, ctx);
            let n1 = T::from_i64(i64::from(n) + 1, ctx);
            let s = sign::<T>(i64::from(n) + 1, ctx);
            match variant {
                Variant::Corrected => {
                    // F(θ, 1-n) = -λ B_n(1, λ) / n
                    let fv = -(lambda.clone() * apostol_bernoulli(n as usize, &one, &lambda, ctx)?)
                        .unscale(&T::from_i64(i64::from(n), ctx));
                    Ok((bz * fv).scale(&(s / (n1 * factorial::<T>(n, ctx)))))
                }
                Variant::Printed => {
                    let ab = apostol_bernoulli(n as usize + 1, &one, &lambda, ctx)?;
                    Ok((bz * ab).scale(&(s / (n1 * factorial::<T>(n + 1, ctx)))))
                }
            }
        }
    }
}

/// Residue of `g(s) x^{-s}` at `s = -power`, divided by `x^{power}`: the oracle for
/// the coefficient of `x^power` on the x→0 side.
pub fn q1_residue<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    power: i32,
    ctx: &PrecisionContext,
) -> Result<ResidueTerm<T>> {
    check_zparam(zparam, ctx)?;
    let g = LiIntegrand::new(zparam, theta, ctx)?;
    let pole = HpComplex::from_i64(-i64::from(power), ctx);
    residue_at(|s: &HpComplex<T>| g.g(s), &pole, DEFAULT_RADIUS, default_residue_nodes(ctx), ctx)
}

/// Printed closed form for the coefficient of `x^power` (`power < 0`) on the x→∞ side.
fn q0_printed<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    power: i32,
    part: Part,
    ctx: &PrecisionContext,
) -> Result<HpComplex<T>> {
    let m = (-power) as u32;
    let th = theta.value();
    let four = T::from_i64(4, ctx);
    let two_pi = T::pi(ctx) * T::from_i64(2, ctx);
    let gamma_term = || {
        let c = four.clone() * T::euler_gamma(ctx) / T::pi(ctx) * real_bernoulli(2, th, ctx);
        HpComplex::from_real(c)
    };
    // 4 σ ψ^{(m-1)}(z) B_{m+1}(θ) (2π)^m / (m+1)!
    let general = |sigma: HpComplex<T>| -> Result<HpComplex<T>> {
        let psi = polygamma(m - 1, zparam, ctx)?;
        let k = four.clone() * real_bernoulli(m as usize + 1, th, ctx) * two_pi.powi(m as i32)
            / factorial::<T>(m + 1, ctx);
        Ok((psi * sigma).scale(&k))
    };
    let zero = HpComplex::zero(ctx);
    match part {
        Part::Ci if m.is_multiple_of(2) => general(HpComplex::from_real(sign::<T>(i64::from(m / 2), ctx))),
        Part::Si if m == 1 => Ok(gamma_term()),
        Part::Si if m % 2 == 1 => general(HpComplex::from_real(sign::<T>(i64::from((m - 1) / 2), ctx))),
        Part::Combined => {
            let i_pow = match m % 4 {
                0 => HpComplex::one(ctx),
                1 => HpComplex::i(ctx),
                2 => -HpComplex::one(ctx),
                _ => -HpComplex::i(ctx),
            };
            let mut v = general(i_pow)?;
            if m == 1 {
                v += gamma_term().mul_i();
            }
            Ok(v)
        }
        _ => Ok(zero),
    }
}

/// Γ-free assembly of `-Res_{s=m}` of the Ci/Si integrand, using
/// `ζ(-m, θ) ± ζ(-m, 1-θ) = -(B_{m+1}(θ) ± B_{m+1}(1-θ))/(m+1)` and `ζ(m, z)` from polygamma.
fn q0_corrected<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    power: i32,
    part: Part,
    ctx: &PrecisionContext,
) -> Result<HpComplex<T>> {
    let m = (-power) as u32;
    if m == 1 {
        // s = 1 lies to the left of every admissible contour
        return Ok(HpComplex::zero(ctx));
    }
    let th = theta.value();
    let rth = theta.reflect().value().clone();
    let parity = |plus: bool| -> T {
        let a = real_bernoulli(m as usize + 1, th, ctx);
        let b = real_bernoulli(m as usize + 1, &rth, ctx);
        let s = if plus { a + b } else { a - b };
        -s / T::from_i64(i64::from(m) + 1, ctx)
    };
    // ζ(m, z) = (-1)^m ψ^{(m-1)}(z) / (m-1)!
    let zeta = polygamma(m - 1, zparam, ctx)?.scale(&(sign::<T>(i64::from(m), ctx) / factorial::<T>(m - 1, ctx)));
    let two_pi = T::pi(ctx) * T::from_i64(2, ctx);
    let scale = two_pi.powi(m as i32) / T::from_i64(i64::from(m), ctx);
    let ci = |ctx: &PrecisionContext| -> HpComplex<T> {
        if m % 2 == 1 {
            return HpComplex::zero(ctx);
        }
        zeta.scale(&(sign::<T>(i64::from(m / 2), ctx) * scale.clone() * parity(true)))
    };
    let si = |ctx: &PrecisionContext| -> HpComplex<T> {
        if m.is_multiple_of(2) {
            return HpComplex::zero(ctx);
        }
        zeta.scale(&(sign::<T>(i64::from((m - 1) / 2), ctx) * scale.clone() * parity(false)))
    };
    Ok(match part {
        Part::Ci => ci(ctx),
        Part::Si => si(ctx),
        Part::Combined => ci(ctx) + si(ctx).mul_i(),
    })
}

/// Closed-form coefficient of `x^power` (`power <= -1`) in the x→∞ expansion of the
/// chosen component.
pub fn q0_coefficient<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    power: i32,
    part: Part,
    variant: Variant,
    ctx: &PrecisionContext,
) -> Result<HpComplex<T>> {
    check_zparam(zparam, ctx)?;
    if power > -1 {
        return Err(Error::domain("q0_coefficient", "powers are negative"));
    }
    match variant {
        Variant::Printed => q0_printed(zparam, theta, power, part, ctx),
        Variant::Corrected => q0_corrected(zparam, theta, power, part, ctx),
    }
}

/// `-Res_{s=-power}` of the Ci or Si integrand times `x^{-s}`, divided by `x^{power}`.
/// The pole `s = 1` is to the left of the contour and contributes nothing.
pub fn q0_residue<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    power: i32,
    part: Part,
    ctx: &PrecisionContext,
) -> Result<HpComplex<T>> {
    check_zparam(zparam, ctx)?;
    if power > -1 {
        return Err(Error::domain("q0_residue", "powers are negative"));
    }
    if power == -1 {
        return Ok(HpComplex::zero(ctx));
    }
    let h = ClausenIntegrand::new(zparam, theta, ctx)?;
    let pole = HpComplex::from_i64(-i64::from(power), ctx);
    let nodes = default_residue_nodes(ctx);
    let ci = |ctx: &PrecisionContext| residue_at(|s: &HpComplex<T>| h.ci(s), &pole, DEFAULT_RADIUS, nodes, ctx);
    let si = |ctx: &PrecisionContext| residue_at(|s: &HpComplex<T>| h.si(s), &pole, DEFAULT_RADIUS, nodes, ctx);
    let v = match part {
        Part::Ci => ci(ctx)?.value,
        Part::Si => si(ctx)?.value,
        Part::Combined => ci(ctx)?.value + si(ctx)?.value.mul_i(),
    };
    Ok(-v)
}

/// Residue of the Si integrand at `s = 1`, which the printed x→∞ expansion uses for its
/// `1/x` term: `(F(θ,2) - F(1-θ,2)) / (2i)`.
pub fn si_residue_at_one<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    ctx: &PrecisionContext,
) -> Result<ResidueTerm<T>> {
    check_zparam(zparam, ctx)?;
    let h = ClausenIntegrand::new(zparam, theta, ctx)?;
    residue_at(
        |s: &HpComplex<T>| h.si(s),
        &HpComplex::one(ctx),
        DEFAULT_RADIUS,
        default_residue_nodes(ctx),
        ctx,
    )
}
