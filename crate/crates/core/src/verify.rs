//! Identity verification suites with serializable reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::asymp::{q0_coefficient, q0_residue, q1_coefficient, q1_residue, si_residue_at_one, Part, Variant};
use crate::error::{Error, Result};
use crate::hpnum::{parse_complex, HpComplex, PrecisionContext};
use crate::mellin::{barnes_ci2, barnes_li2, barnes_si2, Quadrature};
use crate::qfun::{euler_series, li2q, limit_probe_q0, limit_probe_q1, q_clausen_pair, ExponentialParam, QParam};
use crate::real::{effective_digits, Real};
use crate::specfun::{
    apostol_bernoulli, bernoulli_poly, hurwitz_zeta, lerch_residual, periodic_zeta, polygamma, polylog, ThetaParam,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Kirillov,
    Lerch,
    SpecialValues,
    BarnesQ1,
    BarnesQ0,
    Coefficients,
    Limits,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Kirillov,
        Suite::Lerch,
        Suite::SpecialValues,
        Suite::BarnesQ1,
        Suite::BarnesQ0,
        Suite::Coefficients,
        Suite::Limits,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Kirillov => "kirillov",
            Suite::Lerch => "lerch",
            Suite::SpecialValues => "special_values",
            Suite::BarnesQ1 => "barnes_q1",
            Suite::BarnesQ0 => "barnes_q0",
            Suite::Coefficients => "coefficients",
            Suite::Limits => "limits",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Parse {
                what: "suite name",
                input: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub id: String,
    pub inputs: BTreeMap<String, String>,
    pub residual: String,
    pub tolerance: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub digits: u32,
    pub pass: bool,
    pub cases: Vec<CaseResult>,
    pub confirmed_variant: Option<String>,
}

impl VerificationReport {
    fn new(suite: Suite, ctx: &PrecisionContext, cases: Vec<CaseResult>, confirmed_variant: Option<String>) -> Self {
        VerificationReport {
            suite: suite.as_str().to_string(),
            digits: ctx.digits(),
            pass: cases.iter().all(|c| c.pass),
            cases,
            confirmed_variant,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

struct Recorder<'a, T> {
    ctx: &'a PrecisionContext,
    cases: Vec<CaseResult>,
    _t: std::marker::PhantomData<T>,
}

impl<'a, T: Real> Recorder<'a, T> {
    fn new(ctx: &'a PrecisionContext) -> Self {
        Recorder {
            ctx,
            cases: Vec::new(),
            _t: std::marker::PhantomData,
        }
    }

    fn digits(&self) -> u32 {
        effective_digits::<T>(self.ctx)
    }

    fn push(&mut self, id: String, inputs: &[(&str, String)], residual: &T, tol: &T) -> &mut CaseResult {
        let d = self.digits().min(20);
        self.cases.push(CaseResult {
            id,
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            residual: residual.to_sci_string(d),
            tolerance: tol.to_sci_string(3),
            pass: residual <= tol,
            variant: None,
            note: None,
        });
        self.cases.last_mut().expect("just pushed")
    }
}

/// `|a - b| / max(1, |b|)`.
fn relative<T: Real>(a: &HpComplex<T>, b: &HpComplex<T>, ctx: &PrecisionContext) -> T {
    (a.clone() - b).max_abs() / T::max_of(&T::one(ctx), &b.max_abs())
}

fn tol_exp<T: Real>(e: i32, ctx: &PrecisionContext) -> T {
    T::pow10(e, ctx)
}

/// `10^{-digits+10}`, for identities between independently computed values.
fn identity_tol<T: Real>(ctx: &PrecisionContext) -> T {
    tol_exp(10 - effective_digits::<T>(ctx) as i32, ctx)
}

/// `10^{-digits/2}`, for quadrature and coefficient adjudication.
fn half_tol<T: Real>(ctx: &PrecisionContext) -> T {
    tol_exp(-(effective_digits::<T>(ctx) as i32 / 2), ctx)
}

// ---------------------------------------------------------------- kirillov

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KirillovCase {
    pub z: String,
    pub q: String,
}

pub fn default_kirillov_grid() -> Vec<KirillovCase> {
    let mut v = Vec::new();
    for q in ["0.1", "0.3", "0.5", "0.7", "0.9"] {
        for z in ["0.1", "0.5", "0.8", "0.3+0.4i", "-0.6"] {
            v.push(KirillovCase { z: z.into(), q: q.into() });
        }
    }
    v
}

/// `Σ z^n/(q;q)_n = exp(Li_2(z; q))`, relative residual.
pub fn run_kirillov<T: Real>(cases: &[KirillovCase], ctx: &PrecisionContext) -> Result<VerificationReport> {
    let mut rec = Recorder::<T>::new(ctx);
    let tol = identity_tol::<T>(ctx);
    for c in cases {
        let z: HpComplex<T> = parse_complex(&c.z, ctx)?;
        let q = QParam::parse(&c.q, ctx)?;
        let lhs = euler_series(&z, &q, ctx)?.value;
        let rhs = li2q(&z, &q, ctx)?.value.exp();
        let r = (lhs - &rhs).max_abs() / rhs.max_abs();
        rec.push(format!("kirillov/q={}/z={}", c.q, c.z), &[("q", c.q.clone()), ("z", c.z.clone())], &r, &tol);
    }
    Ok(VerificationReport::new(Suite::Kirillov, ctx, rec.cases, None))
}

// ---------------------------------------------------------------- lerch

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LerchCase {
    pub theta: String,
    pub s: String,
}

pub fn default_lerch_grid() -> Vec<LerchCase> {
    let mut v = Vec::new();
    for theta in ["0.3", "0.5", "0.7"] {
        for s in ["2", "2.5", "3"] {
            v.push(LerchCase {
                theta: theta.into(),
                s: s.into(),
            });
        }
    }
    v
}

/// Series value of `F(θ, s)` against the Lerch functional equation.
pub fn run_lerch<T: Real>(cases: &[LerchCase], ctx: &PrecisionContext) -> Result<VerificationReport> {
    let mut rec = Recorder::<T>::new(ctx);
    let tol = identity_tol::<T>(ctx);
    for c in cases {
        let theta = ThetaParam::parse(&c.theta, ctx)?;
        let s: HpComplex<T> = parse_complex(&c.s, ctx)?;
        let res = lerch_residual(&theta, &s, ctx)?;
        let f = periodic_zeta(&theta, &s, ctx)?;
        let r = res.max_abs() / T::max_of(&T::one(ctx), &f.max_abs());
        rec.push(
            format!("lerch/theta={}/s={}", c.theta, c.s),
            &[("theta", c.theta.clone()), ("s", c.s.clone())],
            &r,
            &tol,
        );
    }
    Ok(VerificationReport::new(Suite::Lerch, ctx, rec.cases, None))
}

// ---------------------------------------------------------------- special values

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum SpecialCase {
    /// `ζ(-n, z) = -B_{n+1}(z)/(n+1)`
    HurwitzBernoulli { n: u32, z: String },
    /// `F(θ, -n) = -B_{n+1}(1, e^{2πiθ})/(n+1)` as printed
    Apostol { n: u32, theta: String },
    /// `ζ(n+1, z) = (-1)^{n+1} ψ^{(n)}(z)/n!`
    Polygamma { n: u32, z: String },
    /// `B_n(1-θ) = (-1)^n B_n(θ)`
    Reflection { n: u32, theta: String },
    /// `ζ(-n,θ) + ζ(-n,1-θ) = ((-1)^{n+1} - 1) B_{n+1}(θ)/(n+1)` as printed
    ParitySum { n: u32, theta: String },
    /// `ζ(-n,θ) - ζ(-n,1-θ) = ((-1)^n - 1) B_{n+1}(θ)/(n+1)` as printed
    ParityDifference { n: u32, theta: String },
}

pub fn default_special_grid() -> Vec<SpecialCase> {
    let mut v = Vec::new();
    for z in ["0.3", "1", "2.5", "1+i"] {
        for n in 0..=10 {
            v.push(SpecialCase::HurwitzBernoulli { n, z: z.into() });
        }
    }
    for theta in ["0.2", "0.5", "0.8"] {
        for n in 0..=8 {
            v.push(SpecialCase::Apostol { n, theta: theta.into() });
        }
    }
    for z in ["0.3", "1", "2.5", "1+i"] {
        for n in 1..=6 {
            v.push(SpecialCase::Polygamma { n, z: z.into() });
        }
    }
    for theta in ["0.2", "0.5", "0.8"] {
        for n in 0..=10 {
            v.push(SpecialCase::Reflection { n, theta: theta.into() });
        }
    }
    for theta in ["0.2", "0.5", "0.8"] {
        for n in 0..=8 {
            v.push(SpecialCase::ParitySum { n, theta: theta.into() });
        }
        for n in 0..=8 {
            v.push(SpecialCase::ParityDifference { n, theta: theta.into() });
        }
    }
    v
}

fn sign<T: Real>(n: i64, ctx: &PrecisionContext) -> T {
    T::from_i64(if n.rem_euclid(2) == 0 { 1 } else { -1 }, ctx)
}

fn factorial<T: Real>(n: u32, ctx: &PrecisionContext) -> T {
    (2..=i64::from(n)).fold(T::one(ctx), |acc, k| acc * T::from_i64(k, ctx))
}

fn special_case<T: Real>(c: &SpecialCase, rec: &mut Recorder<'_, T>, ctx: &PrecisionContext) -> Result<()> {
    let tol = identity_tol::<T>(ctx);
    match c {
        SpecialCase::HurwitzBernoulli { n, z } => {
            let zv: HpComplex<T> = parse_complex(z, ctx)?;
            let s = HpComplex::from_i64(-i64::from(*n), ctx);
            let lhs = hurwitz_zeta(&s, &zv, ctx)?;
            let rhs = -bernoulli_poly(*n as usize + 1, &zv, ctx).unscale(&T::from_i64(i64::from(*n) + 1, ctx));
            let r = relative(&lhs, &rhs, ctx);
            rec.push(
                format!("hurwitz_bernoulli/z={z}/n={n}"),
                &[("n", n.to_string()), ("z", z.clone())],
                &r,
                &tol,
            );
        }
        SpecialCase::Apostol { n, theta } => {
            let th = ThetaParam::<T>::parse(theta, ctx)?;
            let lambda = th.lambda(ctx);
            let one = HpComplex::one(ctx);
            let lhs = periodic_zeta(&th, &HpComplex::from_i64(-i64::from(*n), ctx), ctx)?;
            let ab = apostol_bernoulli(*n as usize + 1, &one, &lambda, ctx)?.unscale(&T::from_i64(i64::from(*n) + 1, ctx));
            let printed = -ab.clone();
            let corrected = -(lambda * ab);
            let r = relative(&lhs, &printed, ctx);
            let rc = relative(&lhs, &corrected, ctx);
            let case = rec.push(
                format!("apostol/theta={theta}/n={n}"),
                &[("n", n.to_string()), ("theta", theta.clone())],
                &r,
                &tol,
            );
            case.variant = Some("printed".into());
            case.note = Some(format!(
                "with the factor e^(2 pi i theta), F(theta,-n) = -e^(2 pi i theta) B_(n+1)(1, e^(2 pi i theta))/(n+1): residual {}",
                rc.to_sci_string(3)
            ));
        }
        SpecialCase::Polygamma { n, z } => {
            let zv: HpComplex<T> = parse_complex(z, ctx)?;
            let lhs = hurwitz_zeta(&HpComplex::from_i64(i64::from(*n) + 1, ctx), &zv, ctx)?;
            let rhs = polygamma(*n, &zv, ctx)?.scale(&(sign::<T>(i64::from(*n) + 1, ctx) / factorial::<T>(*n, ctx)));
            let r = relative(&lhs, &rhs, ctx);
            rec.push(
                format!("polygamma/z={z}/n={n}"),
                &[("n", n.to_string()), ("z", z.clone())],
                &r,
                &tol,
            );
        }
        SpecialCase::Reflection { n, theta } => {
            let th = ThetaParam::<T>::parse(theta, ctx)?;
            let a = bernoulli_poly(*n as usize, &HpComplex::from_real(th.reflect().value().clone()), ctx);
            let b = bernoulli_poly(*n as usize, &HpComplex::from_real(th.value().clone()), ctx)
                .scale(&sign::<T>(i64::from(*n), ctx));
            let r = relative(&a, &b, ctx);
            rec.push(
                format!("reflection/theta={theta}/n={n}"),
                &[("n", n.to_string()), ("theta", theta.clone())],
                &r,
                &tol,
            );
        }
        SpecialCase::ParitySum { n, theta } | SpecialCase::ParityDifference { n, theta } => {
            let plus = matches!(c, SpecialCase::ParitySum { .. });
            let th = ThetaParam::<T>::parse(theta, ctx)?;
            let s = HpComplex::from_i64(-i64::from(*n), ctx);
            let a = hurwitz_zeta(&s, &HpComplex::from_real(th.value().clone()), ctx)?;
            let b = hurwitz_zeta(&s, &HpComplex::from_real(th.reflect().value().clone()), ctx)?;
            let lhs = if plus { a + b } else { a - b };
            let bern = bernoulli_poly(*n as usize + 1, &HpComplex::from_real(th.value().clone()), ctx)
                .unscale(&T::from_i64(i64::from(*n) + 1, ctx));
            let one = T::one(ctx);
            let even = sign::<T>(i64::from(*n), ctx) - &one;
            let odd = sign::<T>(i64::from(*n) + 1, ctx) - &one;
            let (printed, corrected) = if plus { (odd, even) } else { (even, odd) };
            let r = relative(&lhs, &bern.scale(&printed), ctx);
            let rc = relative(&lhs, &bern.scale(&corrected), ctx);
            let name = if plus { "parity_sum" } else { "parity_difference" };
            let case = rec.push(
                format!("{name}/theta={theta}/n={n}"),
                &[("n", n.to_string()), ("theta", theta.clone())],
                &r,
                &tol,
            );
            case.variant = Some("printed".into());
            let swapped = if plus { "((-1)^n - 1)" } else { "((-1)^(n+1) - 1)" };
            case.note = Some(format!(
                "with the factor {swapped} B_(n+1)(theta)/(n+1): residual {}",
                rc.to_sci_string(3)
            ));
        }
    }
    Ok(())
}

pub fn run_special_values<T: Real>(cases: &[SpecialCase], ctx: &PrecisionContext) -> Result<VerificationReport> {
    let mut rec = Recorder::<T>::new(ctx);
    for c in cases {
        special_case(c, &mut rec, ctx)?;
    }
    Ok(VerificationReport::new(Suite::SpecialValues, ctx, rec.cases, None))
}

// ---------------------------------------------------------------- barnes

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BarnesCase {
    pub x: String,
    pub zparam: String,
    pub theta: String,
    pub c: f64,
}

impl BarnesCase {
    fn param<T: Real>(&self, ctx: &PrecisionContext) -> Result<ExponentialParam<T>> {
        ExponentialParam::new(
            T::parse_decimal(&self.x, ctx)?,
            parse_complex(&self.zparam, ctx)?,
            ThetaParam::parse(&self.theta, ctx)?,
            ctx,
        )
    }

    fn inputs(&self) -> Vec<(&'static str, String)> {
        vec![
            ("c", self.c.to_string()),
            ("theta", self.theta.clone()),
            ("x", self.x.clone()),
            ("zparam", self.zparam.clone()),
        ]
    }

    fn tag(&self) -> String {
        format!("x={}/zparam={}/theta={}", self.x, self.zparam, self.theta)
    }
}

fn barnes(x: &str, zparam: &str, theta: &str) -> BarnesCase {
    BarnesCase {
        x: x.into(),
        zparam: zparam.into(),
        theta: theta.into(),
        c: 1.5,
    }
}

pub fn default_barnes_q1_grid() -> Vec<BarnesCase> {
    vec![barnes("1", "2", "0.3"), barnes("2", "3", "0.5"), barnes("0.7", "1.5", "0.25")]
}

pub fn default_barnes_q0_grid() -> Vec<BarnesCase> {
    vec![barnes("8", "2", "0.3"), barnes("12", "2.5", "0.7"), barnes("8", "2", "0.5")]
}

/// Mellin–Barnes integral of `Li_2(ω, e^{-x})` against the defining series.
pub fn run_barnes_q1<T: Real>(cases: &[BarnesCase], ctx: &PrecisionContext) -> Result<VerificationReport> {
    let mut rec = Recorder::<T>::new(ctx);
    let tol = half_tol::<T>(ctx);
    for c in cases {
        let p = c.param::<T>(ctx)?;
        let b = barnes_li2(&p, c.c, Quadrature::Auto, ctx)?;
        let s = li2q(p.omega(), p.q(), ctx)?.value;
        let r = (b.value - s).max_abs();
        let case = rec.push(format!("barnes_li2/{}", c.tag()), &c.inputs(), &r, &tol);
        case.note = Some(format!("{} nodes, step {}", b.nodes, b.step));
    }
    Ok(VerificationReport::new(Suite::BarnesQ1, ctx, rec.cases, None))
}

/// Mellin–Barnes integrals of the q-Clausen pair against the defining series.
pub fn run_barnes_q0<T: Real>(cases: &[BarnesCase], ctx: &PrecisionContext) -> Result<VerificationReport> {
    let mut rec = Recorder::<T>::new(ctx);
    let tol = half_tol::<T>(ctx);
    for c in cases {
        let p = c.param::<T>(ctx)?;
        let (ci, si) = q_clausen_pair(&p, ctx)?;
        let bc = barnes_ci2(&p, c.c, Quadrature::Auto, ctx)?;
        let bs = barnes_si2(&p, c.c, Quadrature::Auto, ctx)?;
        let r = (bc.value - ci).max_abs();
        rec.push(format!("barnes_ci2/{}", c.tag()), &c.inputs(), &r, &tol);
        let r = (bs.value.clone() - si).max_abs();
        rec.push(format!("barnes_si2/{}", c.tag()), &c.inputs(), &r, &tol);
        if p.theta().value().clone() * T::from_i64(2, ctx) == T::one(ctx) {
            let r = bs.value.max_abs();
            let case = rec.push(format!("barnes_si2_vanishes/{}", c.tag()), &c.inputs(), &r, &tol);
            case.note = Some("theta = 1/2".into());
        }
    }
    Ok(VerificationReport::new(Suite::BarnesQ0, ctx, rec.cases, None))
}

// ---------------------------------------------------------------- coefficients

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientRegime {
    Q1,
    Q0,
}

/// A pole `s` of one of the Mellin–Barnes integrands whose residue fixes an expansion
/// coefficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientCase {
    pub regime: CoefficientRegime,
    pub zparam: String,
    pub theta: String,
    pub pole: i32,
    /// Combined-display reconciliation instead of a single-part adjudication (q0 only).
    #[serde(default)]
    pub combined: bool,
}

pub fn default_coefficient_grid() -> Vec<CoefficientCase> {
    let case = |regime, pole, combined| CoefficientCase {
        regime,
        zparam: "2".into(),
        theta: "0.3".into(),
        pole,
        combined,
    };
    let mut v: Vec<_> = [1, 0, -1, -2, -3].into_iter().map(|s| case(CoefficientRegime::Q1, s, false)).collect();
    v.extend([1, 2, 3, 4, 5].into_iter().map(|s| case(CoefficientRegime::Q0, s, false)));
    v.extend([1, 2, 3].into_iter().map(|s| case(CoefficientRegime::Q0, s, true)));
    v
}

fn adjudicate<T: Real>(
    rec: &mut Recorder<'_, T>,
    id: String,
    inputs: &[(&str, String)],
    oracle: &HpComplex<T>,
    candidates: &[(&str, HpComplex<T>)],
    tol: &T,
    ctx: &PrecisionContext,
) -> Option<String> {
    let scored: Vec<(&str, T)> = candidates
        .iter()
        .map(|(name, v)| (*name, relative(v, oracle, ctx)))
        .collect();
    let matched: Vec<&str> = scored.iter().filter(|(_, r)| r <= tol).map(|(n, _)| *n).collect();
    let best = scored
        .iter()
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal))
        .map(|(_, r)| r.clone())
        .unwrap_or_else(|| T::from_f64(f64::INFINITY, ctx));
    let d = rec.digits().min(20);
    let detail = scored
        .iter()
        .map(|(n, r)| format!("{n}: {}", r.to_sci_string(3)))
        .collect::<Vec<_>>()
        .join(", ");
    let variant = match matched.as_slice() {
        [one] => Some(one.to_string()),
        [] => Some("neither".to_string()),
        _ => Some("ambiguous".to_string()),
    };
    let case = rec.push(id, inputs, &best, tol);
    case.pass = matched.len() == 1;
    case.variant = variant.clone();
    case.note = Some(format!("oracle {}; {detail}", oracle.to_sci_string(d)));
    variant
}

fn coefficient_case<T: Real>(c: &CoefficientCase, rec: &mut Recorder<'_, T>, ctx: &PrecisionContext) -> Result<Option<String>> {
    let tol = half_tol::<T>(ctx);
    let z: HpComplex<T> = parse_complex(&c.zparam, ctx)?;
    let theta = ThetaParam::parse(&c.theta, ctx)?;
    let power = -c.pole;
    let inputs = [
        ("pole", c.pole.to_string()),
        ("theta", c.theta.clone()),
        ("zparam", c.zparam.clone()),
    ];
    let tag = format!("zparam={}/theta={}/s={}", c.zparam, c.theta, c.pole);
    match (c.regime, c.combined) {
        (CoefficientRegime::Q1, _) => {
            let oracle = q1_residue(&z, &theta, power, ctx)?.value;
            let candidates = [
                ("printed", q1_coefficient(&z, &theta, power, Variant::Printed, ctx)?),
                ("corrected", q1_coefficient(&z, &theta, power, Variant::Corrected, ctx)?),
            ];
            Ok(adjudicate(rec, format!("q1/{tag}"), &inputs, &oracle, &candidates, &tol, ctx))
        }
        (CoefficientRegime::Q0, false) if c.pole == 1 => {
            // the printed 1/x term of the Si part against the residue of its integrand at s = 1
            let oracle = si_residue_at_one(&z, &theta, ctx)?.value;
            let printed = q0_coefficient(&z, &theta, -1, Part::Si, Variant::Printed, ctx)?;
            let b2 = bernoulli_poly(2, &HpComplex::from_real(theta.value().clone()), ctx);
            let psi = crate::specfun::digamma(&z, ctx)?;
            let alt = -(psi * b2).scale(&(T::from_i64(4, ctx) / T::pi(ctx)));
            let candidates = [("printed", printed), ("digamma", alt)];
            Ok(adjudicate(rec, format!("q0/si/{tag}"), &inputs, &oracle, &candidates, &tol, ctx))
        }
        (CoefficientRegime::Q0, false) => {
            if c.pole < 1 {
                return Err(Error::domain("coefficients", "q0 poles are s = 1, 2, 3, ..."));
            }
            let part = if c.pole % 2 == 0 { Part::Ci } else { Part::Si };
            let oracle = q0_residue(&z, &theta, power, part, ctx)?;
            let candidates = [
                ("printed", q0_coefficient(&z, &theta, power, part, Variant::Printed, ctx)?),
                ("corrected", q0_coefficient(&z, &theta, power, part, Variant::Corrected, ctx)?),
            ];
            let name = if part == Part::Ci { "ci" } else { "si" };
            Ok(adjudicate(rec, format!("q0/{name}/{tag}"), &inputs, &oracle, &candidates, &tol, ctx))
        }
        (CoefficientRegime::Q0, true) => {
            if c.pole < 1 {
                return Err(Error::domain("coefficients", "q0 poles are s = 1, 2, 3, ..."));
            }
            // printed combined display against ci + i si assembled from the printed parts
            let ci = q0_coefficient(&z, &theta, power, Part::Ci, Variant::Printed, ctx)?;
            let si = q0_coefficient(&z, &theta, power, Part::Si, Variant::Printed, ctx)?;
            let parts = ci + si.mul_i();
            let combined = q0_coefficient(&z, &theta, power, Part::Combined, Variant::Printed, ctx)?;
            let r = relative(&combined, &parts, ctx);
            let d = rec.digits().min(20);
            let case = rec.push(format!("q0/combined/{tag}"), &inputs, &r, &tol);
            case.note = Some(format!(
                "printed combined {}; printed ci + i si {}",
                combined.to_sci_string(d),
                parts.to_sci_string(d)
            ));
            Ok(None)
        }
    }
}

/// Adjudicates printed and corrected coefficient formulas against the residue oracle.
pub fn run_coefficients<T: Real>(cases: &[CoefficientCase], ctx: &PrecisionContext) -> Result<VerificationReport> {
    let mut rec = Recorder::<T>::new(ctx);
    let mut verdicts = Vec::new();
    for c in cases {
        if let Some(v) = coefficient_case(c, &mut rec, ctx)? {
            verdicts.push(v);
        }
    }
    let confirmed = if verdicts.is_empty() {
        None
    } else if verdicts.iter().all(|v| v == "corrected") {
        Some("corrected".to_string())
    } else if verdicts.iter().all(|v| v == "printed") {
        Some("printed".to_string())
    } else {
        let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
        for v in &verdicts {
            *tally.entry(v.as_str()).or_default() += 1;
        }
        Some(
            tally
                .iter()
                .map(|(k, n)| format!("{k}:{n}"))
                .collect::<Vec<_>>()
                .join(","),
        )
    };
    Ok(VerificationReport::new(Suite::Coefficients, ctx, rec.cases, confirmed))
}

// ---------------------------------------------------------------- limits

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LimitCase {
    /// `|(1-q) Li_2((1-q) z, q) - Li_2(z)|` strictly decreasing along `qs`.
    Q1 { z: String, qs: Vec<String> },
    /// `|(1-q) Li_2(z, q) + log(1-z)| <= tolerance`.
    Q0 { z: String, q: String, tolerance: String },
}

pub fn default_limit_grid() -> Vec<LimitCase> {
    vec![
        LimitCase::Q1 {
            z: "0.5".into(),
            qs: vec!["0.9".into(), "0.99".into(), "0.999".into()],
        },
        LimitCase::Q0 {
            z: "0.5".into(),
            q: "1e-6".into(),
            tolerance: "1e-4".into(),
        },
    ]
}

pub fn run_limits<T: Real>(cases: &[LimitCase], ctx: &PrecisionContext) -> Result<VerificationReport> {
    let mut rec = Recorder::<T>::new(ctx);
    for c in cases {
        match c {
            LimitCase::Q1 { z, qs } => {
                let zv: HpComplex<T> = parse_complex(z, ctx)?;
                let qv = qs.iter().map(|q| QParam::parse(q, ctx)).collect::<Result<Vec<_>>>()?;
                let target = polylog(&HpComplex::from_i64(2, ctx), &zv, ctx)?;
                let gaps: Vec<T> = limit_probe_q1(&zv, &qv, ctx)?
                    .into_iter()
                    .map(|v| (v - &target).max_abs())
                    .collect();
                let unscaled: Vec<T> = limit_probe_q0(&zv, &qv, ctx)?
                    .into_iter()
                    .map(|v| (v - &target).max_abs())
                    .collect();
                for (k, gap) in gaps.iter().enumerate() {
                    // each gap must be below the previous one; the first only has to be finite
                    let bound = if k == 0 {
                        T::from_f64(f64::MAX, ctx)
                    } else {
                        gaps[k - 1].clone()
                    };
                    let case = rec.push(
                        format!("limit_q1/z={z}/q={}", qs[k]),
                        &[("q", qs[k].clone()), ("z", z.clone())],
                        gap,
                        &bound,
                    );
                    case.pass = k == 0 || gap < &bound;
                    let plain = format!(
                        "|(1-q) Li2(z,q) - Li2(z)| = {}",
                        unscaled[k].to_sci_string(6)
                    );
                    if k == 0 {
                        case.tolerance = "finite".into();
                        case.note = Some(plain);
                    } else {
                        case.note = Some(format!("tolerance is the previous gap; {plain}"));
                    }
                }
            }
            LimitCase::Q0 { z, q, tolerance } => {
                let zv: HpComplex<T> = parse_complex(z, ctx)?;
                let qv = QParam::parse(q, ctx)?;
                let tol = T::parse_decimal(tolerance, ctx)?;
                let v = limit_probe_q0(&zv, &[qv], ctx)?.remove(0);
                let target = -(HpComplex::one(ctx) - &zv).ln();
                let r = (v - target).max_abs();
                rec.push(
                    format!("limit_q0/z={z}/q={q}"),
                    &[("q", q.clone()), ("z", z.clone())],
                    &r,
                    &tol,
                );
            }
        }
    }
    Ok(VerificationReport::new(Suite::Limits, ctx, rec.cases, None))
}

/// Runs `suite` on its built-in grid.
pub fn run_default<T: Real>(suite: Suite, ctx: &PrecisionContext) -> Result<VerificationReport> {
    match suite {
        Suite::Kirillov => run_kirillov::<T>(&default_kirillov_grid(), ctx),
        Suite::Lerch => run_lerch::<T>(&default_lerch_grid(), ctx),
        Suite::SpecialValues => run_special_values::<T>(&default_special_grid(), ctx),
        Suite::BarnesQ1 => run_barnes_q1::<T>(&default_barnes_q1_grid(), ctx),
        Suite::BarnesQ0 => run_barnes_q0::<T>(&default_barnes_q0_grid(), ctx),
        Suite::Coefficients => run_coefficients::<T>(&default_coefficient_grid(), ctx),
        Suite::Limits => run_limits::<T>(&default_limit_grid(), ctx),
    }
}
