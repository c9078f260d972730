#![allow(dead_code)]

use qdilog::{MpComplex, MpFloat, PrecisionContext, Real};

pub fn ctx(digits: u32) -> PrecisionContext {
    PrecisionContext::with_precision(digits).unwrap()
}

pub fn c(re: f64, im: f64, ctx: &PrecisionContext) -> MpComplex {
    MpComplex::from_f64(re, im, ctx)
}

pub fn dec(text: &str, ctx: &PrecisionContext) -> MpFloat {
    MpFloat::parse_decimal(text, ctx).unwrap()
}

/// `log10 |a - b|`, or `-inf` when equal.
pub fn log_err(a: &MpComplex, b: &MpComplex) -> f64 {
    (a.clone() - b).log10_abs()
}

/// `log10 (|a - b| / max(1, |b|))`.
pub fn log_rel(a: &MpComplex, b: &MpComplex) -> f64 {
    log_err(a, b) - b.log10_abs().max(0.0)
}

#[track_caller]
pub fn assert_close(a: &MpComplex, b: &MpComplex, exp10: f64) {
    let e = log_rel(a, b);
    assert!(
        e <= exp10,
        "{} vs {}: log10 error {e:.2} > {exp10}",
        a.to_sci_string(25),
        b.to_sci_string(25)
    );
}

#[track_caller]
pub fn assert_close_f64(a: &MpComplex, re: f64, im: f64, tol: f64) {
    let (x, y) = a.to_f64_pair();
    assert!((x - re).abs() <= tol && (y - im).abs() <= tol, "({x}, {y}) vs ({re}, {im})");
}
