//! Asymptotic expansions of `Li_2(ω, e^{-x})` as `x → 0` (q → 1) and of its q-Clausen
//! pair as `x → ∞` (q → 0).
//!
//! Coefficients come either from closed forms or from the residue oracle in
//! [`crate::mellin`]. On the `x → ∞` side the Lerch-decomposed integrands have only
//! removable singularities to the right of the contour, so the oracle expansion is
//! identically zero and the remainder is exponentially small.

mod coefficients;
mod order;

pub use coefficients::{q0_coefficient, q0_residue, q1_coefficient, q1_residue, si_residue_at_one, Part, Variant};
pub use order::{empirical_order, fit_order, optimal_truncation, truncation_scan};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::Real;
use crate::specfun::ThetaParam;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `q → 1`, `x → 0`.
    QTo1,
    /// `q → 0`, `x → ∞`.
    QTo0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    ResidueOracle,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::ClosedForm => "closed_form",
            Provenance::ResidueOracle => "residue_oracle",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExpansionTerm<T> {
    pub power: i32,
    pub coeff: HpComplex<T>,
}

#[derive(Debug, Clone)]
pub struct AsymptoticExpansion<T> {
    /// Sorted by ascending power, one term per power.
    pub terms: Vec<ExpansionTerm<T>>,
    pub regime: Regime,
    pub order: u32,
    /// The dropped remainder is `O(x^remainder_exponent)` in the regime's limit.
    pub remainder_exponent: i32,
    pub provenance: Provenance,
    /// `None` on the q → 1 side.
    pub part: Option<Part>,
}

impl<T: Real> AsymptoticExpansion<T> {
    fn build(
        mut terms: Vec<ExpansionTerm<T>>,
        regime: Regime,
        order: u32,
        remainder_exponent: i32,
        provenance: Provenance,
        part: Option<Part>,
    ) -> Self {
        terms.sort_by_key(|t| t.power);
        AsymptoticExpansion {
            terms,
            regime,
            order,
            remainder_exponent,
            provenance,
            part,
        }
    }

    pub fn coefficient(&self, power: i32) -> Option<&HpComplex<T>> {
        self.terms.iter().find(|t| t.power == power).map(|t| &t.coeff)
    }
}

/// `Li_2(ω, e^{-x}) = Σ_{n=-1}^{N} a_n x^n + O(x^{N+1})` as `x → 0`.
pub fn q1_expansion<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    order: u32,
    provenance: Provenance,
    ctx: &PrecisionContext,
) -> Result<AsymptoticExpansion<T>> {
    q1_expansion_variant(zparam, theta, order, provenance, Variant::Corrected, ctx)
}

/// Like [`q1_expansion`]; with `Provenance::ClosedForm`, `variant` selects the formula.
pub fn q1_expansion_variant<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    order: u32,
    provenance: Provenance,
    variant: Variant,
    ctx: &PrecisionContext,
) -> Result<AsymptoticExpansion<T>> {
    let mut terms = Vec::with_capacity(order as usize + 2);
    for power in -1..=order as i32 {
        let coeff = match provenance {
            Provenance::ClosedForm => q1_coefficient(zparam, theta, power, variant, ctx)?,
            Provenance::ResidueOracle => q1_residue(zparam, theta, power, ctx)?.value,
        };
        terms.push(ExpansionTerm { power, coeff });
    }
    Ok(AsymptoticExpansion::build(
        terms,
        Regime::QTo1,
        order,
        order as i32 + 1,
        provenance,
        None,
    ))
}

fn q0_powers(order: u32, part: Part) -> (Vec<i32>, i32) {
    let n = order as i32;
    match part {
        Part::Ci => ((1..=n).map(|k| -2 * k).collect(), -(2 * n + 1)),
        Part::Si => ((0..=n).map(|k| -(2 * k + 1)).collect(), -(2 * n + 2)),
        Part::Combined => ((1..=2 * n + 1).map(|m| -m).collect(), -(2 * n + 1)),
    }
}

/// Expansion of the Ci part (powers `-2..-2N`), the Si part (`-1..-(2N+1)`) or
/// `Ci + i Si` (`-1..-(2N+1)`) as `x → ∞`.
///
/// `Provenance::ClosedForm` gives the printed formulas; use [`q0_expansion_variant`]
/// for the corrected assembly.
pub fn q0_expansion<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    order: u32,
    part: Part,
    provenance: Provenance,
    ctx: &PrecisionContext,
) -> Result<AsymptoticExpansion<T>> {
    q0_expansion_variant(zparam, theta, order, part, provenance, Variant::Printed, ctx)
}

pub fn q0_expansion_variant<T: Real>(
    zparam: &HpComplex<T>,
    theta: &ThetaParam<T>,
    order: u32,
    part: Part,
    provenance: Provenance,
    variant: Variant,
    ctx: &PrecisionContext,
) -> Result<AsymptoticExpansion<T>> {
    let (powers, remainder) = q0_powers(order, part);
    let mut terms = Vec::with_capacity(powers.len());
    for power in powers {
        let coeff = match provenance {
            Provenance::ClosedForm => q0_coefficient(zparam, theta, power, part, variant, ctx)?,
            Provenance::ResidueOracle => q0_residue(zparam, theta, power, part, ctx)?,
        };
        terms.push(ExpansionTerm { power, coeff });
    }
    Ok(AsymptoticExpansion::build(
        terms,
        Regime::QTo0,
        order,
        remainder,
        provenance,
        Some(part),
    ))
}

/// `Σ coeff · x^power`.
pub fn eval_expansion<T: Real>(e: &AsymptoticExpansion<T>, x: &T, ctx: &PrecisionContext) -> HpComplex<T> {
    let x = x.with_precision(ctx);
    e.terms.iter().fold(HpComplex::zero(ctx), |acc, t| {
        acc + t.coeff.with_precision(ctx).scale(&x.powi(t.power))
    })
}
