//! q-series: q-Pochhammer symbol, Koornwinder q-logarithm, q-polylogarithms, the
//! Euler series, Jackson integration and the q-Clausen pair.

mod params;

pub use params::{ExponentialParam, QParam};

use crate::error::{Error, Result};
use crate::hpnum::{sum_series, HpComplex, PrecisionContext, SeriesResult};
use crate::real::{effective_digits, Real};

fn require_disk<T: Real>(z: &HpComplex<T>, function: &'static str, ctx: &PrecisionContext) -> Result<T> {
    let r = z.abs();
    if r >= T::one(ctx) {
        return Err(Error::domain(function, format!("requires |z| < 1, got |z| = {}", r.to_sci_string(12))));
    }
    Ok(r)
}

fn power<T: Real>(base: &T, n: u64) -> T {
    base.powi(n.min(i32::MAX as u64) as i32)
}

/// `(q; q)_n = Π_{k=1}^{n} (1 - q^k)`.
pub fn q_pochhammer<T: Real>(q: &QParam<T>, n: u64, ctx: &PrecisionContext) -> T {
    let q = q.value().with_precision(ctx);
    let one = T::one(ctx);
    let mut acc = one.clone();
    let mut qk = one.clone();
    for _ in 0..n {
        qk *= &q;
        acc *= one.clone() - &qk;
    }
    acc
}

/// A lower bound for `(q; q)_∞`, which also bounds every `(q; q)_n` from below.
fn pochhammer_floor<T: Real>(q: &QParam<T>, ctx: &PrecisionContext) -> T {
    let qf = q.value().to_f64();
    let mut log_sum = 0.0f64;
    let mut qk = 1.0f64;
    loop {
        qk *= qf;
        if qk < 1e-18 {
            break;
        }
        log_sum += (-qk).ln_1p();
    }
    // remaining factors: Π (1 - q^k) ≥ 1 - Σ q^k
    let rest = (1.0 - qk / (1.0 - qf)).ln();
    T::from_f64(0.5, ctx) * T::from_f64(log_sum + rest, ctx).exp()
}

/// Koornwinder's q-logarithm `log_q(z) = Σ_{n≥1} z^n / (1 - q^n)`, continued to
/// `z ∉ {q^{-n}}` by `z Σ_{m≥0} q^m / (1 - z q^m)`.
pub fn q_log<T: Real>(z: &HpComplex<T>, q: &QParam<T>, ctx: &PrecisionContext) -> Result<SeriesResult<T>> {
    if z.abs() < T::one(ctx) {
        q_log_series(z, q, ctx)
    } else {
        q_log_continued(z, q, ctx)
    }
}

/// The defining series of `log_q`; `|z| < 1`.
pub fn q_log_series<T: Real>(z: &HpComplex<T>, q: &QParam<T>, ctx: &PrecisionContext) -> Result<SeriesResult<T>> {
    let r = require_disk(z, "q_log", ctx)?;
    let z = z.with_precision(ctx);
    let qv = q.value().with_precision(ctx);
    let one = T::one(ctx);
    let denom = (one.clone() - &qv) * (one.clone() - &r);
    let mut zn = HpComplex::one(ctx);
    let mut qn = one.clone();
    sum_series(
        1,
        |_| {
            zn *= &z;
            qn *= &qv;
            zn.unscale(&(one.clone() - &qn))
        },
        |n| power(&r, n) / &denom,
        ctx,
    )
}

/// The continuation `z Σ_{m≥0} q^m / (1 - z q^m)`, valid off the poles `z = q^{-n}`.
pub fn q_log_continued<T: Real>(z: &HpComplex<T>, q: &QParam<T>, ctx: &PrecisionContext) -> Result<SeriesResult<T>> {
    let z = z.with_precision(ctx);
    let qv = q.value().with_precision(ctx);
    let one = T::one(ctx);
    let r = z.abs();
    let threshold = -(effective_digits::<T>(ctx) as f64) + 2.0;
    // poles: z q^n = 1 can only happen while |z| q^n is near 1
    let mut qn = one.clone();
    let mut n = 0u64;
    while r.clone() * &qn >= T::from_f64(0.5, ctx) {
        let gap = HpComplex::one(ctx) - z.scale(&qn);
        if gap.log10_abs() <= threshold {
            return Err(Error::pole("q_log", format!("z = q^-{n}")));
        }
        qn *= &qv;
        n += 1;
    }
    let one_minus_q = one.clone() - &qv;
    let mut qm = one.clone();
    let inner = sum_series(
        0,
        |_| {
            let t = HpComplex::from_real(qm.clone()) / (HpComplex::one(ctx) - z.scale(&qm));
            qm *= &qv;
            t
        },
        |m| {
            let qm = power(&qv, m);
            let zq = r.clone() * &qm;
            if zq >= one {
                return T::from_f64(f64::MAX, ctx);
            }
            r.clone() * qm / (one_minus_q.clone() * (one.clone() - zq))
        },
        ctx,
    )?;
    Ok(SeriesResult {
        value: inner.value * &z,
        terms_used: inner.terms_used,
        tail_bound: inner.tail_bound,
    })
}

/// `Li_n(z; q) = Σ_{k≥1} z^k / (k^{n-1} (1 - q^k))` for `|z| < 1`, so that `Li_1(z; q) = log_q(z)`
/// and `Li_n(z; q) = ∫_0^z Li_{n-1}(t; q) dt / t`.
pub fn q_polylog<T: Real>(n: u32, z: &HpComplex<T>, q: &QParam<T>, ctx: &PrecisionContext) -> Result<SeriesResult<T>> {
    if n == 0 {
        return Err(Error::domain("q_polylog", "order must be at least 1"));
    }
    let r = require_disk(z, "q_polylog", ctx)?;
    let z = z.with_precision(ctx);
    let qv = q.value().with_precision(ctx);
    let one = T::one(ctx);
    let denom = (one.clone() - &qv) * (one.clone() - &r);
    let mut zk = HpComplex::one(ctx);
    let mut qk = one.clone();
    sum_series(
        1,
        |k| {
            zk *= &z;
            qk *= &qv;
            let kn = power(&T::from_i64(k as i64, ctx), u64::from(n - 1));
            zk.unscale(&(kn * (one.clone() - &qk)))
        },
        |k| power(&r, k) / (power(&T::from_i64(k as i64, ctx), u64::from(n - 1)) * &denom),
        ctx,
    )
}

/// The q-dilogarithm `Li_2(z; q)`.
pub fn li2q<T: Real>(z: &HpComplex<T>, q: &QParam<T>, ctx: &PrecisionContext) -> Result<SeriesResult<T>> {
    q_polylog(2, z, q, ctx)
}

/// `Σ_{n≥0} z^n / (q; q)_n` for `|z| < 1`.
pub fn euler_series<T: Real>(z: &HpComplex<T>, q: &QParam<T>, ctx: &PrecisionContext) -> Result<SeriesResult<T>> {
    let r = require_disk(z, "euler_series", ctx)?;
    let z = z.with_precision(ctx);
    let qv = q.value().with_precision(ctx);
    let one = T::one(ctx);
    let floor = pochhammer_floor(q, ctx) * (one.clone() - &r);
    let mut term = HpComplex::one(ctx);
    let mut qn = one.clone();
    sum_series(
        0,
        |n| {
            if n > 0 {
                qn *= &qv;
                term = (term.clone() * &z).unscale(&(one.clone() - &qn));
            }
            term.clone()
        },
        |n| power(&r, n) / &floor,
        ctx,
    )
}

/// Jackson integral `∫_0^z f d_q t = (1 - q) z Σ_{n≥0} f(z q^n) q^n`.
///
/// `tail_bound(n)` must bound `|Σ_{k≥n} f(z q^k) q^k|`.
pub fn jackson_integral<T, F, B>(
    mut f: F,
    z: &HpComplex<T>,
    q: &QParam<T>,
    tail_bound: B,
    ctx: &PrecisionContext,
) -> Result<SeriesResult<T>>
where
    T: Real,
    F: FnMut(&HpComplex<T>) -> HpComplex<T>,
    B: FnMut(u64) -> T,
{
    let z = z.with_precision(ctx);
    let qv = q.value().with_precision(ctx);
    let mut qn = T::one(ctx);
    let inner = sum_series(
        0,
        |_| {
            let v = f(&z.scale(&qn)).scale(&qn);
            qn *= &qv;
            v
        },
        tail_bound,
        ctx,
    )?;
    let scale = z.scale(&(T::one(ctx) - &qv));
    Ok(SeriesResult {
        value: inner.value * scale,
        terms_used: inner.terms_used,
        tail_bound: inner.tail_bound,
    })
}

/// q-Clausen pair `(Ci_2(ω, q), Si_2(ω, q))` with
/// `Ci_2 = Σ e^{-nzx} cos(2πnθ) / (n(1 - q^n))` and the sine analogue.
pub fn q_clausen_pair<T: Real>(p: &ExponentialParam<T>, ctx: &PrecisionContext) -> Result<(HpComplex<T>, HpComplex<T>)> {
    let u = p.damping().with_precision(ctx);
    let r = u.abs();
    let lambda = p.theta().lambda(ctx);
    let qv = p.q().value().with_precision(ctx);
    let one = T::one(ctx);
    let denom = (one.clone() - &qv) * (one.clone() - &r);
    let part = |take_sin: bool| {
        let mut un = HpComplex::one(ctx);
        let mut ln = HpComplex::one(ctx);
        let mut qn = one.clone();
        sum_series(
            1,
            |n| {
                un *= &u;
                ln *= &lambda;
                qn *= &qv;
                let trig = if take_sin { ln.im.clone() } else { ln.re.clone() };
                un.scale(&trig).unscale(&(T::from_i64(n as i64, ctx) * (one.clone() - &qn)))
            },
            |n| power(&r, n) / (T::from_i64(n as i64, ctx) * &denom),
            ctx,
        )
    };
    Ok((part(false)?.value, part(true)?.value))
}

/// `(1 - q) Li_2((1 - q) z, q)` for each `q`.
///
/// This tends to 0 as `q → 1`; it is `(1 - q) Li_2(z, q)` that tends to `Li_2(z)`.
pub fn limit_probe_q1<T: Real>(z: &HpComplex<T>, qs: &[QParam<T>], ctx: &PrecisionContext) -> Result<Vec<HpComplex<T>>> {
    qs.iter()
        .map(|q| {
            let w = T::one(ctx) - q.value();
            Ok(li2q(&z.scale(&w), q, ctx)?.value.scale(&w))
        })
        .collect()
}

/// `(1 - q) Li_2(z, q)` for each `q`; tends to `-log(1 - z)` as `q → 0`.
pub fn limit_probe_q0<T: Real>(z: &HpComplex<T>, qs: &[QParam<T>], ctx: &PrecisionContext) -> Result<Vec<HpComplex<T>>> {
    qs.iter()
        .map(|q| {
            let w = T::one(ctx) - q.value();
            Ok(li2q(z, q, ctx)?.value.scale(&w))
        })
        .collect()
}
