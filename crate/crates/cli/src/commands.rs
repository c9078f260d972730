use std::fs;
use std::str::FromStr;
use std::time::Instant;

use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};

use qdilog::asymp::{eval_expansion, optimal_truncation, q0_expansion, q1_expansion, Part, Provenance, Regime};
use qdilog::mellin::{barnes_ci2, barnes_li2, barnes_si2, Quadrature};
use qdilog::qfun::{euler_series, li2q, q_log, q_polylog, ExponentialParam, QParam};
use qdilog::specfun::{apostol_bernoulli, bernoulli_poly, hurwitz_zeta, periodic_zeta, polygamma, polylog, ThetaParam};
use qdilog::verify::{self, Suite, VerificationReport};
use qdilog::{parse_complex, MpComplex, MpFloat, PrecisionContext, Real};

use crate::args::{CrossoverArgs, EvalArgs, ExpandArgs, IntegralArgs, PartArg, ProvenanceArg, RegimeArg, VerifyArgs, WhichArg};
use crate::output::{csv_text, json_text, CmdResult, Failure};

/// Environment variable overriding the per-series term cap.
pub const MAX_TERMS_VAR: &str = "QDILOG_MAX_TERMS";

pub fn context(digits: u32) -> CmdResult<PrecisionContext> {
    let ctx = PrecisionContext::with_precision(digits)?;
    match std::env::var(MAX_TERMS_VAR) {
        Ok(v) => {
            let cap = v
                .trim()
                .parse::<u64>()
                .map_err(|_| Failure::usage(format!("{MAX_TERMS_VAR} must be a positive integer, got {v:?}")))?;
            Ok(ctx.with_max_terms(cap))
        }
        Err(_) => Ok(ctx),
    }
}

fn required<'a>(value: &'a Option<String>, flag: &str, function: &str) -> CmdResult<&'a str> {
    value
        .as_deref()
        .ok_or_else(|| Failure::usage(format!("{function} needs --{flag}")))
}

fn complex(text: &str, ctx: &PrecisionContext) -> CmdResult<MpComplex> {
    Ok(parse_complex(text, ctx)?)
}

fn number(v: &MpFloat, digits: u32) -> Value {
    Value::String(v.to_sci_string(digits))
}

const FUNCTIONS: [&str; 10] = [
    "li2q",
    "qlog",
    "qpolylog",
    "hurwitz",
    "periodic_zeta",
    "polylog",
    "polygamma",
    "bernoulli",
    "apostol",
    "euler_series",
];

pub fn eval(args: &EvalArgs) -> CmdResult<String> {
    let f = args.function.as_str();
    if !FUNCTIONS.contains(&f) {
        return Err(Failure::usage(format!(
            "unknown function {f:?}; expected one of {}",
            FUNCTIONS.join(", ")
        )));
    }
    let ctx = context(args.common.prec)?;
    let z = || -> CmdResult<MpComplex> { complex(required(&args.z, "z", f)?, &ctx) };
    let q = || -> CmdResult<QParam<MpFloat>> { Ok(QParam::parse(required(&args.q, "q", f)?, &ctx)?) };
    let s = || -> CmdResult<MpComplex> { complex(required(&args.s, "s", f)?, &ctx) };
    let theta = || -> CmdResult<ThetaParam<MpFloat>> { Ok(ThetaParam::parse(required(&args.theta, "theta", f)?, &ctx)?) };
    let n = || -> CmdResult<u32> { args.n.ok_or_else(|| Failure::usage(format!("{f} needs --n"))) };

    let (value, terms): (MpComplex, Option<u64>) = match f {
        "li2q" => {
            let r = li2q(&z()?, &q()?, &ctx)?;
            (r.value, Some(r.terms_used))
        }
        "qlog" => {
            let r = q_log(&z()?, &q()?, &ctx)?;
            (r.value, Some(r.terms_used))
        }
        "qpolylog" => {
            let r = q_polylog(n()?, &z()?, &q()?, &ctx)?;
            (r.value, Some(r.terms_used))
        }
        "euler_series" => {
            let r = euler_series(&z()?, &q()?, &ctx)?;
            (r.value, Some(r.terms_used))
        }
        "hurwitz" => (hurwitz_zeta(&s()?, &z()?, &ctx)?, None),
        "periodic_zeta" => (periodic_zeta(&theta()?, &s()?, &ctx)?, None),
        "polylog" => (polylog(&s()?, &z()?, &ctx)?, None),
        "polygamma" => (polygamma(n()?, &z()?, &ctx)?, None),
        "bernoulli" => (bernoulli_poly(n()? as usize, &z()?, &ctx), None),
        "apostol" => {
            let lambda = theta()?.lambda(&ctx);
            (apostol_bernoulli(n()? as usize, &z()?, &lambda, &ctx)?, None)
        }
        _ => unreachable!("checked against FUNCTIONS"),
    };

    let mut params = Map::new();
    for (key, v) in [("z", &args.z), ("q", &args.q), ("s", &args.s), ("theta", &args.theta)] {
        if let Some(v) = v {
            params.insert(key.into(), Value::String(v.clone()));
        }
    }
    if let Some(n) = args.n {
        params.insert("n".into(), Value::String(n.to_string()));
    }
    let digits = ctx.digits();
    let doc = json!({
        "function": f,
        "params": params,
        "value_re": number(&value.re, digits),
        "value_im": number(&value.im, digits),
        "digits": digits,
        "terms_used": terms,
    });
    Ok(json_text(&doc))
}

fn read_grid<C: DeserializeOwned>(path: &str) -> CmdResult<Vec<C>> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read grid {path}: {e}")))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Failure::usage(format!("{path}:{}: {e}", i + 1)))
        })
        .collect()
}

fn run_suite(suite: Suite, grid: &str, ctx: &PrecisionContext) -> CmdResult<VerificationReport> {
    if grid == "default" {
        return Ok(verify::run_default::<MpFloat>(suite, ctx)?);
    }
    let report = match suite {
        Suite::Kirillov => verify::run_kirillov::<MpFloat>(&read_grid(grid)?, ctx),
        Suite::Lerch => verify::run_lerch::<MpFloat>(&read_grid(grid)?, ctx),
        Suite::SpecialValues => verify::run_special_values::<MpFloat>(&read_grid(grid)?, ctx),
        Suite::BarnesQ1 => verify::run_barnes_q1::<MpFloat>(&read_grid(grid)?, ctx),
        Suite::BarnesQ0 => verify::run_barnes_q0::<MpFloat>(&read_grid(grid)?, ctx),
        Suite::Coefficients => verify::run_coefficients::<MpFloat>(&read_grid(grid)?, ctx),
        Suite::Limits => verify::run_limits::<MpFloat>(&read_grid(grid)?, ctx),
    };
    Ok(report?)
}

/// Returns the report text and whether every case passed.
pub fn verify(args: &VerifyArgs) -> CmdResult<(String, bool)> {
    let suite = Suite::from_str(&args.suite).map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.as_str()).collect();
        Failure::usage(format!("unknown suite {:?}; expected one of {}", args.suite, names.join(", ")))
    })?;
    let ctx = context(args.common.prec)?;
    let report = run_suite(suite, &args.grid, &ctx)?;
    let value = serde_json::to_value(&report).expect("reports serialize");
    Ok((json_text(&value), report.pass))
}

pub fn expand(args: &ExpandArgs) -> CmdResult<String> {
    let ctx = context(args.common.prec)?;
    let z = complex(&args.zparam, &ctx)?;
    let theta = ThetaParam::parse(&args.theta, &ctx)?;
    let provenance = match args.provenance {
        ProvenanceArg::Closed => Provenance::ClosedForm,
        ProvenanceArg::Oracle => Provenance::ResidueOracle,
    };
    let e = match args.regime {
        RegimeArg::Q1 => q1_expansion(&z, &theta, args.order, provenance, &ctx)?,
        RegimeArg::Q0 => {
            let part = match args.part {
                PartArg::Ci => Part::Ci,
                PartArg::Si => Part::Si,
                PartArg::Combined => Part::Combined,
            };
            q0_expansion(&z, &theta, args.order, part, provenance, &ctx)?
        }
    };
    let digits = ctx.digits();
    let rows: Vec<Vec<String>> = e
        .terms
        .iter()
        .map(|t| {
            vec![
                t.power.to_string(),
                t.coeff.re.to_sci_string(digits),
                t.coeff.im.to_sci_string(digits),
                e.provenance.as_str().to_string(),
            ]
        })
        .collect();
    csv_text(&["power", "coeff_re", "coeff_im", "provenance"], &rows)
}

fn exponential(x: &str, zparam: &str, theta: &str, ctx: &PrecisionContext) -> CmdResult<ExponentialParam<MpFloat>> {
    Ok(ExponentialParam::new(
        MpFloat::parse_decimal(x, ctx)?,
        complex(zparam, ctx)?,
        ThetaParam::parse(theta, ctx)?,
        ctx,
    )?)
}

pub fn integral(args: &IntegralArgs) -> CmdResult<String> {
    let c = args.c;
    let ok = match args.which {
        WhichArg::Li2 => c > 1.0,
        WhichArg::Ci2 | WhichArg::Si2 => c > 1.0 && c < 2.0,
    };
    if !c.is_finite() || !ok {
        let strip = if args.which == WhichArg::Li2 { "c > 1" } else { "1 < c < 2" };
        return Err(Failure::usage(format!("contour abscissa c = {c} is outside the valid strip {strip}")));
    }
    let ctx = context(args.common.prec)?;
    let p = exponential(&args.x, &args.zparam, &args.theta, &ctx)?;
    let (name, r) = match args.which {
        WhichArg::Li2 => ("li2", barnes_li2(&p, c, Quadrature::Auto, &ctx)?),
        WhichArg::Ci2 => ("ci2", barnes_ci2(&p, c, Quadrature::Auto, &ctx)?),
        WhichArg::Si2 => ("si2", barnes_si2(&p, c, Quadrature::Auto, &ctx)?),
    };
    let digits = ctx.digits();
    let doc = json!({
        "which": name,
        "params": {
            "x": args.x,
            "zparam": args.zparam,
            "theta": args.theta,
            "c": c.to_string(),
        },
        "value_re": number(&r.value.re, digits),
        "value_im": number(&r.value.im, digits),
        "digits": digits,
        "nodes": r.nodes,
        "step": r.step.to_string(),
        "height": r.height.to_string(),
        "truncation_estimate": number(&r.truncation_estimate, 6),
        "estimate": r.refinement_delta.as_ref().map(|d| d.to_sci_string(6)),
    });
    Ok(json_text(&doc))
}

pub fn crossover(args: &CrossoverArgs) -> CmdResult<String> {
    if let Some(bad) = args.xs.iter().find(|x| !(x.is_finite() && **x > 0.0)) {
        return Err(Failure::usage(format!("x must be positive, got {bad}")));
    }
    let ctx = context(args.common.prec)?;
    let fine = ctx.doubled();
    let z = complex(&args.zparam, &ctx)?;
    let theta = ThetaParam::parse(&args.theta, &ctx)?;
    let mut rows = Vec::with_capacity(args.xs.len());
    for &x in &args.xs {
        let xs = x.to_string();
        let p = exponential(&xs, &args.zparam, &args.theta, &ctx)?;
        let start = Instant::now();
        let direct = li2q(p.omega(), p.q(), &ctx)?;
        let elapsed = start.elapsed().as_secs_f64();
        let pf = exponential(&xs, &args.zparam, &args.theta, &fine)?;
        let reference = li2q(pf.omega(), pf.q(), &fine)?.value;

        let n = optimal_truncation(&z, &theta, x, Regime::QTo1, &ctx)?;
        let e = q1_expansion(&z, &theta, n, Provenance::ClosedForm, &ctx)?;
        let asymp = eval_expansion(&e, p.x(), &ctx).with_precision(&fine);

        let direct_error = (direct.value.with_precision(&fine) - &reference).abs();
        let asymp_error = (asymp - &reference).abs();
        rows.push(vec![
            xs,
            direct.terms_used.to_string(),
            format!("{elapsed:.6}"),
            n.to_string(),
            asymp_error.to_sci_string(6),
            direct_error.to_sci_string(6),
        ]);
    }
    csv_text(
        &["x", "direct_terms", "direct_time", "asymp_N", "asymp_error", "direct_error"],
        &rows,
    )
}
