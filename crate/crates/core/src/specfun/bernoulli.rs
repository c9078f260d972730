//! Bernoulli numbers, Bernoulli polynomials and Apostol–Bernoulli polynomials.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::hpnum::{HpComplex, PrecisionContext};
use crate::real::{effective_working_digits, Real};

/// Exact Bernoulli numbers `B_0..=B_max` with `B_1 = -1/2`.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    numbers: Vec<BigRational>,
}

impl BernoulliTable {
    /// Table up to index `max_index`, computed from tangent numbers.
    pub fn new(max_index: usize) -> Self {
        let m = max_index / 2;
        let mut tangent = vec![BigInt::zero(); m + 1];
        if m >= 1 {
            tangent[1] = BigInt::one();
        }
        for k in 2..=m {
            tangent[k] = &tangent[k - 1] * BigInt::from(k - 1);
        }
        for k in 2..=m {
            for j in k..=m {
                tangent[j] = &tangent[j - 1] * BigInt::from(j - k) + &tangent[j] * BigInt::from(j - k + 2);
            }
        }
        let mut numbers = vec![BigRational::zero(); max_index.max(1) + 1];
        numbers[0] = BigRational::one();
        numbers[1] = BigRational::new(BigInt::from(-1), BigInt::from(2));
        for k in 1..=m {
            let four_k = BigInt::one() << (2 * k);
            let den = &four_k * (&four_k - BigInt::one());
            let mut num = BigInt::from(2 * k) * &tangent[k];
            if k % 2 == 0 {
                num = -num;
            }
            numbers[2 * k] = BigRational::new(num, den);
        }
        numbers.truncate(max_index + 1);
        BernoulliTable { numbers }
    }

    pub fn max_index(&self) -> usize {
        self.numbers.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&BigRational> {
        self.numbers.get(n)
    }
}

fn shared_table() -> &'static Mutex<Arc<BernoulliTable>> {
    static TABLE: OnceLock<Mutex<Arc<BernoulliTable>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(Arc::new(BernoulliTable::new(64))))
}

/// Process-wide table covering at least `max_index`; grows geometrically.
pub fn bernoulli_table(max_index: usize) -> Arc<BernoulliTable> {
    let mut guard = shared_table().lock().expect("bernoulli table lock");
    if guard.max_index() < max_index {
        let size = max_index.max(2 * guard.max_index());
        *guard = Arc::new(BernoulliTable::new(size));
    }
    Arc::clone(&guard)
}

/// Exact `B_n`.
pub fn bernoulli_number(n: usize) -> BigRational {
    bernoulli_table(n).get(n).cloned().expect("table covers n")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    /// `B_{2j} / (2j)!`
    EvenOverFactorial,
    /// `B_{2j} / (2j (2j - 1))`, with a zero at `j = 0`
    Stirling,
    /// `B_{2j} / (2j)`, with a zero at `j = 0`
    Digamma,
}

type CacheMap = HashMap<(TypeId, u32, Kind), Box<dyn Any + Send + Sync>>;

fn float_cache() -> &'static Mutex<CacheMap> {
    static CACHE: OnceLock<Mutex<CacheMap>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn coefficient(kind: Kind, j: usize) -> BigRational {
    if j == 0 {
        return match kind {
            Kind::EvenOverFactorial => BigRational::one(),
            _ => BigRational::zero(),
        };
    }
    let b = bernoulli_number(2 * j);
    let n = 2 * j;
    match kind {
        Kind::EvenOverFactorial => b / BigRational::from_integer(factorial(n)),
        Kind::Stirling => b / BigRational::from_integer(BigInt::from(n * (n - 1))),
        Kind::Digamma => b / BigRational::from_integer(BigInt::from(n)),
    }
}

fn cached<T: Real>(kind: Kind, count: usize, ctx: &PrecisionContext) -> Arc<Vec<T>> {
    let key = (TypeId::of::<T>(), ctx.bits(), kind);
    let existing: Option<Arc<Vec<T>>> = {
        let map = float_cache().lock().expect("bernoulli cache lock");
        map.get(&key)
            .and_then(|b| b.downcast_ref::<Arc<Vec<T>>>())
            .filter(|v| v.len() >= count)
            .cloned()
    };
    if let Some(v) = existing {
        return v;
    }
    let size = count.max(16);
    bernoulli_table(2 * size);
    let values: Vec<T> = (0..size).map(|j| T::from_ratio(&coefficient(kind, j), ctx)).collect();
    let values = Arc::new(values);
    let mut map = float_cache().lock().expect("bernoulli cache lock");
    map.insert(key, Box::new(Arc::clone(&values)));
    values
}

/// `[B_{2j} / (2j)!]` for `j < count`, at the precision of `ctx`.
pub(crate) fn even_over_factorial<T: Real>(count: usize, ctx: &PrecisionContext) -> Arc<Vec<T>> {
    cached(Kind::EvenOverFactorial, count, ctx)
}

/// Stirling series coefficients `B_{2j} / (2j(2j-1))` for `j < count`.
pub(crate) fn stirling_coefficients<T: Real>(count: usize, ctx: &PrecisionContext) -> Arc<Vec<T>> {
    cached(Kind::Stirling, count, ctx)
}

/// Digamma asymptotic coefficients `B_{2j} / (2j)` for `j < count`.
pub(crate) fn digamma_coefficients<T: Real>(count: usize, ctx: &PrecisionContext) -> Arc<Vec<T>> {
    cached(Kind::Digamma, count, ctx)
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn log10_rational(r: &BigRational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    (r.numer().bits() as f64 - r.denom().bits() as f64) * std::f64::consts::LOG10_2
}

/// Exact coefficients of `B_n(z) = Σ_m c_m z^m`.
pub fn bernoulli_poly_coefficients(n: usize) -> Vec<BigRational> {
    let table = bernoulli_table(n);
    (0..=n)
        .map(|m| BigRational::from_integer(binomial(n, m)) * table.get(n - m).expect("covered"))
        .collect()
}

/// Bernoulli polynomial `B_n(z)`.
///
/// Values below the rounding level of the evaluation (e.g. `B_{2k+1}(1/2)`) are
/// returned as exact zeros.
pub fn bernoulli_poly<T: Real>(n: usize, z: &HpComplex<T>, ctx: &PrecisionContext) -> HpComplex<T> {
    let coeffs = bernoulli_poly_coefficients(n);
    let lz = z.log10_abs().max(0.0);
    let peak = coeffs
        .iter()
        .enumerate()
        .map(|(m, c)| log10_rational(c) + m as f64 * lz)
        .fold(0.0f64, f64::max);
    let work = ctx.extended(peak.ceil() as u32 + 2);
    let zw = z.with_precision(&work);
    let mut acc = HpComplex::zero(&work);
    for c in coeffs.iter().rev() {
        acc = acc * &zw + HpComplex::from_real(T::from_ratio(c, &work));
    }
    let noise = peak + 2.0 - f64::from(effective_working_digits::<T>(&work));
    if acc.log10_abs() < noise {
        return HpComplex::zero(ctx);
    }
    acc.with_precision(ctx)
}

/// Apostol–Bernoulli polynomial `B_n(x, λ)`: `n!` times the coefficient of `t^n` in
/// `t e^{xt} / (λ e^t - 1)`.
///
/// `λ = 1` is delegated to [`bernoulli_poly`].
pub fn apostol_bernoulli<T: Real>(
    n: usize,
    x: &HpComplex<T>,
    lambda: &HpComplex<T>,
    ctx: &PrecisionContext,
) -> Result<HpComplex<T>> {
    let one = HpComplex::<T>::one(ctx);
    let d0 = lambda.clone() - &one;
    if d0.is_zero() {
        return Ok(bernoulli_poly(n, x, ctx));
    }
    let growth = (lambda.log10_abs() - d0.log10_abs()).max(0.0);
    let extra = 5.0 + n as f64 * (growth + (1.0 + x.abs().to_f64()).log10());
    let work = ctx.extended(extra.ceil() as u32);
    let xw = x.with_precision(&work);
    let lw = lambda.with_precision(&work);
    let d0 = lw.clone() - HpComplex::one(&work);
    // numerator t·e^{xt}: coefficient of t^k is x^{k-1}/(k-1)!
    // denominator λe^t - 1: d_0 = λ - 1, d_j = λ/j!
    let mut num = Vec::with_capacity(n + 1);
    num.push(HpComplex::zero(&work));
    let mut p = HpComplex::one(&work);
    for k in 1..=n {
        num.push(p.clone());
        p *= &xw;
        p = p.unscale(&T::from_i64(k as i64, &work));
    }
    let mut inv_fact = Vec::with_capacity(n + 1);
    let mut f = T::one(&work);
    inv_fact.push(f.clone());
    for j in 1..=n {
        f /= T::from_i64(j as i64, &work);
        inv_fact.push(f.clone());
    }
    let mut q: Vec<HpComplex<T>> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = num[k].clone();
        for j in 1..=k {
            acc -= (lw.clone() * &q[k - j]).scale(&inv_fact[j]);
        }
        q.push(acc / &d0);
    }
    let mut fact = T::one(&work);
    for k in 2..=n {
        fact *= T::from_i64(k as i64, &work);
    }
    Ok(q[n].scale(&fact).with_precision(ctx))
}
