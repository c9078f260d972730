mod common;

use common::*;
use proptest::prelude::*;
use qdilog::specfun::{
    apostol_bernoulli, bernoulli_number, bernoulli_poly, clausen_pair, gamma, hurwitz_zeta, lerch_residual, periodic_zeta,
    polygamma, polylog, PeriodicZeta, ThetaParam,
};
use qdilog::{Error, MpComplex, MpFloat, PrecisionContext, Real};

fn pi(ctx: &PrecisionContext) -> MpFloat {
    MpFloat::pi(ctx)
}

#[test]
fn gamma_examples() {
    let ctx = ctx(40);
    assert_close(&gamma(&c(1.0, 0.0, &ctx), &ctx).unwrap(), &MpComplex::one(&ctx), -40.0);
    let sqrt_pi = MpComplex::from_real(pi(&ctx).sqrt());
    assert_close(&gamma(&c(0.5, 0.0, &ctx), &ctx).unwrap(), &sqrt_pi, -39.0);
    assert!(matches!(gamma(&c(-2.0, 0.0, &ctx), &ctx), Err(Error::Pole { .. })));
}

#[test]
fn hurwitz_examples() {
    let ctx = ctx(40);
    // Σ 1/k² by partial sums plus the Euler–Maclaurin tail
    // 1/N + 1/(2N²) + 1/(6N³) - 1/(30N⁵) + 1/(42N⁷)
    let n = 5000i64;
    let mut s = MpFloat::zero(&ctx);
    for k in 1..n {
        let kf = MpFloat::from_i64(k, &ctx);
        s += MpFloat::one(&ctx) / (kf.clone() * &kf);
    }
    let nf = MpFloat::from_i64(n, &ctx);
    let one = MpFloat::one(&ctx);
    s += one.clone() / &nf + one.clone() / (MpFloat::from_i64(2, &ctx) * nf.powi(2)) + one.clone() / (MpFloat::from_i64(6, &ctx) * nf.powi(3))
        - one.clone() / (MpFloat::from_i64(30, &ctx) * nf.powi(5))
        + one / (MpFloat::from_i64(42, &ctx) * nf.powi(7));
    let z2 = hurwitz_zeta(&c(2.0, 0.0, &ctx), &c(1.0, 0.0, &ctx), &ctx).unwrap();
    assert_close(&z2, &MpComplex::from_real(s), -34.0);
    assert_close(&z2, &MpComplex::from_real(pi(&ctx).powi(2) / MpFloat::from_i64(6, &ctx)), -40.0);

    let v = hurwitz_zeta(&c(0.0, 0.0, &ctx), &MpComplex::from_real(dec("0.7", &ctx)), &ctx).unwrap();
    assert_close(&v, &MpComplex::from_real(dec("-0.2", &ctx)), -39.0);
    let v = hurwitz_zeta(&c(-1.0, 0.0, &ctx), &c(1.0, 0.0, &ctx), &ctx).unwrap();
    assert_close(&v, &MpComplex::from_real(MpFloat::from_i64(-1, &ctx) / MpFloat::from_i64(12, &ctx)), -39.0);
    assert!(hurwitz_zeta(&c(1.0, 0.0, &ctx), &c(2.0, 0.0, &ctx), &ctx).is_err());
}

#[test]
fn periodic_examples() {
    let ctx = ctx(40);
    let half = ThetaParam::<MpFloat>::parse("0.5", &ctx).unwrap();
    let v = periodic_zeta(&half, &c(2.0, 0.0, &ctx), &ctx).unwrap();
    assert_close(&v, &MpComplex::from_real(-(pi(&ctx).powi(2)) / MpFloat::from_i64(12, &ctx)), -39.0);

    // θ = 0.3, s = 3 against a direct sum with the tail bounded by ∫ t^{-3}
    let theta = ThetaParam::<MpFloat>::parse("0.3", &ctx).unwrap();
    let v = periodic_zeta(&theta, &c(3.0, 0.0, &ctx), &ctx).unwrap();
    let d = ctx.extended(5);
    let lambda = theta.lambda(&d);
    let mut p = MpComplex::one(&d);
    let mut sum = MpComplex::zero(&d);
    let n = 20_000i64;
    for k in 1..=n {
        p *= &lambda;
        sum += p.unscale(&MpFloat::from_i64(k, &d).powi(3));
    }
    // |Σ_{k>N} λ^k k^{-3}| ≤ 1 / (2N²)
    assert!(log_err(&v, &sum) < -8.0 + 0.5);

    // θ = 0.25, s = -1 against the generating function of Apostol–Bernoulli numbers:
    // F(θ, -n) = -λ B_{n+1}(1, λ) / (n+1)
    let quarter = ThetaParam::<MpFloat>::parse("0.25", &ctx).unwrap();
    let lam = quarter.lambda(&ctx);
    let v = periodic_zeta(&quarter, &c(-1.0, 0.0, &ctx), &ctx).unwrap();
    let b = apostol_bernoulli(2, &MpComplex::one(&ctx), &lam, &ctx).unwrap();
    let expect = -(lam.clone() * b).unscale(&MpFloat::from_i64(2, &ctx));
    assert_close(&v, &expect, -38.0);
    // Σ n i^n "=" i / (1 - i)² in the Abel sense
    let one = MpComplex::one(&ctx);
    let abel = lam.clone() / (one.clone() - &lam).square();
    assert_close(&v, &abel, -38.0);
}

#[test]
fn polylog_examples() {
    let ctx = ctx(40);
    assert!(polylog(&c(2.0, 0.0, &ctx), &c(0.0, 0.0, &ctx), &ctx).unwrap().is_zero());
    let v = polylog(&c(2.0, 0.0, &ctx), &c(0.5, 0.0, &ctx), &ctx).unwrap();
    assert!((v.re.to_f64() - 0.582_240_526_465_012_5).abs() < 1e-15);
    let v = polylog(&c(1.0, 0.0, &ctx), &c(0.5, 0.0, &ctx), &ctx).unwrap();
    assert_close(&v, &MpComplex::from_real(MpFloat::from_i64(2, &ctx).ln()), -39.0);
}

#[test]
fn clausen_examples() {
    let ctx = ctx(40);
    let (ci, si) = clausen_pair(&c(2.0, 0.0, &ctx), &pi(&ctx), &ctx).unwrap();
    assert_close(&ci, &MpComplex::from_real(-(pi(&ctx).powi(2)) / MpFloat::from_i64(12, &ctx)), -39.0);
    assert!(si.abs().log10_abs() < -38.0);
    let (ci, si) = clausen_pair(&c(2.0, 0.0, &ctx), &MpFloat::zero(&ctx), &ctx).unwrap();
    assert_close(&ci, &MpComplex::from_real(pi(&ctx).powi(2) / MpFloat::from_i64(6, &ctx)), -39.0);
    assert!(si.is_zero());
}

#[test]
fn clausen_real_part_has_closed_form() {
    // Σ cos(nφ)/n² = π²/6 - φ(2π - φ)/4 on [0, 2π]
    let ctx = ctx(40);
    for phi in ["0.3", "1.7", "4.1"] {
        let phi = dec(phi, &ctx);
        let (ci, _) = clausen_pair(&c(2.0, 0.0, &ctx), &phi, &ctx).unwrap();
        let p = pi(&ctx);
        let expect = p.clone() * &p / MpFloat::from_i64(6, &ctx)
            - phi.clone() * (p * MpFloat::from_i64(2, &ctx) - &phi) / MpFloat::from_i64(4, &ctx);
        assert_close(&ci, &MpComplex::from_real(expect), -38.0);
    }
}

#[test]
fn polygamma_examples() {
    let ctx = ctx(40);
    let z2 = pi(&ctx).powi(2) / MpFloat::from_i64(6, &ctx);
    let v = polygamma(1, &c(1.0, 0.0, &ctx), &ctx).unwrap();
    assert_close(&v, &MpComplex::from_real(z2.clone()), -39.0);
    let v = polygamma(1, &c(2.0, 0.0, &ctx), &ctx).unwrap();
    assert_close(&v, &MpComplex::from_real(z2 - MpFloat::one(&ctx)), -39.0);
    let v = polygamma(2, &c(1.0, 0.0, &ctx), &ctx).unwrap();
    assert!((v.re.to_f64() + 2.404_113_806_319_188_5).abs() < 1e-15);
}

/// `ζ(s, z)` for real `s > 1` by plain summation to `N` plus the Euler–Maclaurin tail.
fn zeta_euler_maclaurin(s: i64, z: &MpComplex, ctx: &PrecisionContext) -> MpComplex {
    let n = 60i64;
    let mut sum = MpComplex::zero(ctx);
    for k in 0..n {
        sum += (z.clone() + MpComplex::from_i64(k, ctx)).powi(-(s as i32));
    }
    let w = z.clone() + MpComplex::from_i64(n, ctx);
    let sm1 = MpFloat::from_i64(s - 1, ctx);
    sum += w.powi(-(s as i32 - 1)).unscale(&sm1);
    sum += w.powi(-(s as i32)).unscale(&MpFloat::from_i64(2, ctx));
    // Σ_j B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1}
    let mut rising = MpFloat::from_i64(s, ctx);
    let mut fact = MpFloat::from_i64(2, ctx);
    for j in 1..=20i64 {
        let b = MpFloat::from_ratio(&bernoulli_number(2 * j as usize), ctx);
        sum += w.powi(-(s as i32 + 2 * j as i32 - 1)).scale(&(b * &rising / &fact));
        rising *= MpFloat::from_i64((s + 2 * j - 1) * (s + 2 * j), ctx);
        fact *= MpFloat::from_i64((2 * j + 1) * (2 * j + 2), ctx);
    }
    sum
}

#[test]
fn polygamma_matches_independent_zeta() {
    let ctx = ctx(40);
    for z in [c(0.3, 0.0, &ctx), c(1.0, 0.0, &ctx), c(2.5, 0.0, &ctx), c(1.0, 1.0, &ctx)] {
        let mut fact = MpFloat::one(&ctx);
        for n in 1..=6u32 {
            fact *= MpFloat::from_i64(i64::from(n), &ctx);
            let sign = if n % 2 == 1 { MpFloat::one(&ctx) } else { -MpFloat::one(&ctx) };
            let lhs = zeta_euler_maclaurin(i64::from(n) + 1, &z, &ctx);
            let rhs = polygamma(n, &z, &ctx).unwrap().scale(&(sign / &fact));
            assert_close(&rhs, &lhs, -36.0);
        }
    }
}

#[test]
fn hurwitz_at_negative_integers() {
    let ctx = ctx(50);
    for z in [c(0.3, 0.0, &ctx), c(1.0, 0.0, &ctx), c(2.5, 0.0, &ctx), c(1.0, 1.0, &ctx)] {
        for n in 0..=10i64 {
            let v = hurwitz_zeta(&c(-n as f64, 0.0, &ctx), &z, &ctx).unwrap();
            let expect = -bernoulli_poly(n as usize + 1, &z, &ctx).unscale(&MpFloat::from_i64(n + 1, &ctx));
            assert_close(&v, &expect, -40.0);
        }
    }
}

#[test]
fn hurwitz_pole() {
    let ctx = ctx(40);
    for eps in ["1e-3", "1e-5"] {
        let e = dec(eps, &ctx);
        let s = MpComplex::from_real(MpFloat::one(&ctx) + &e);
        let v = hurwitz_zeta(&s, &c(2.0, 0.0, &ctx), &ctx).unwrap().scale(&e);
        // (s-1) ζ(s, z) = 1 - ψ(z)(s-1) + O((s-1)²)
        assert!(log_err(&v, &MpComplex::one(&ctx)) < e.log10_abs() + 0.1);
    }
}

#[test]
fn bernoulli_examples() {
    let ctx = ctx(40);
    let half = c(0.5, 0.0, &ctx);
    assert!(bernoulli_poly(1, &half, &ctx).is_zero());
    let v = bernoulli_poly(2, &half, &ctx);
    assert_close(&v, &MpComplex::from_real(MpFloat::from_i64(-1, &ctx) / MpFloat::from_i64(12, &ctx)), -40.0);
    let t = MpComplex::from_real(dec("0.3", &ctx));
    let one_minus = MpComplex::one(&ctx) - &t;
    assert_close(&bernoulli_poly(3, &one_minus, &ctx), &-bernoulli_poly(3, &t, &ctx), -40.0);
    // B_2(x) = x² - x + 1/6 from the generating function
    let x = dec("0.37", &ctx);
    let expect = x.clone() * &x - &x + MpFloat::one(&ctx) / MpFloat::from_i64(6, &ctx);
    assert_close(&bernoulli_poly(2, &MpComplex::from_real(x), &ctx), &MpComplex::from_real(expect), -40.0);
}

#[test]
fn apostol_examples() {
    let ctx = ctx(40);
    let x = MpComplex::from_real(dec("0.4", &ctx));
    let two = c(2.0, 0.0, &ctx);
    assert!(apostol_bernoulli(0, &x, &two, &ctx).unwrap().is_zero());
    assert_close(&apostol_bernoulli(1, &x, &two, &ctx).unwrap(), &MpComplex::one(&ctx), -39.0);
    let v = apostol_bernoulli(2, &x, &c(-1.0, 0.0, &ctx), &ctx).unwrap();
    assert_close(&v, &MpComplex::from_real(dec("0.1", &ctx)), -39.0);
    // λ = 1 reduces to the ordinary polynomials
    let v = apostol_bernoulli(5, &x, &MpComplex::one(&ctx), &ctx).unwrap();
    assert_close(&v, &bernoulli_poly(5, &x, &ctx), -40.0);
}

#[test]
fn periodic_zeta_at_negative_integers() {
    // F(θ, -n) = -λ B_{n+1}(1, λ)/(n+1); the unscaled form B_{n+1}(1, λ) does not hold
    let ctx = ctx(50);
    for t in ["0.2", "0.5", "0.8"] {
        let theta = ThetaParam::<MpFloat>::parse(t, &ctx).unwrap();
        let lam = theta.lambda(&ctx);
        let f = PeriodicZeta::new(&theta, &ctx).unwrap();
        for n in 0..=8i64 {
            let v = f.eval(&c(-n as f64, 0.0, &ctx)).unwrap();
            let b = apostol_bernoulli(n as usize + 1, &MpComplex::one(&ctx), &lam, &ctx).unwrap();
            let corrected = -(lam.clone() * &b).unscale(&MpFloat::from_i64(n + 1, &ctx));
            assert_close(&v, &corrected, -40.0);
        }
    }
}

#[test]
fn parity_sums() {
    // ζ(-n,θ) + ζ(-n,1-θ) = ((-1)^n - 1) B_{n+1}(θ)/(n+1); difference with (-1)^{n+1} - 1
    let ctx = ctx(50);
    for t in ["0.2", "0.35", "0.5"] {
        let th = MpComplex::from_real(dec(t, &ctx));
        let reflected = MpComplex::one(&ctx) - &th;
        for n in 0..=8i64 {
            let s = c(-n as f64, 0.0, &ctx);
            let a = hurwitz_zeta(&s, &th, &ctx).unwrap();
            let b = hurwitz_zeta(&s, &reflected, &ctx).unwrap();
            let base = bernoulli_poly(n as usize + 1, &th, &ctx).unscale(&MpFloat::from_i64(n + 1, &ctx));
            let even = if n % 2 == 0 { 0 } else { -2 };
            let odd = if n % 2 == 0 { -2 } else { 0 };
            assert_close(&(a.clone() + &b), &base.scale(&MpFloat::from_i64(even, &ctx)), -40.0);
            assert_close(&(a - b), &base.scale(&MpFloat::from_i64(odd, &ctx)), -40.0);
        }
    }
}

#[test]
fn lerch_residual_examples() {
    let ctx = ctx(40);
    for (t, s) in [("0.3", 2.5), ("0.5", 3.0), ("0.7", 2.0), ("0.3", 2.0)] {
        let theta = ThetaParam::<MpFloat>::parse(t, &ctx).unwrap();
        let r = lerch_residual(&theta, &c(s, 0.0, &ctx), &ctx).unwrap();
        assert!(r.log10_abs() < -40.0 + 8.0, "theta={t} s={s}: {}", r.log10_abs());
    }
}

#[test]
fn domain_errors() {
    let ctx = ctx(30);
    assert!(ThetaParam::<MpFloat>::parse("0", &ctx).is_err());
    assert!(ThetaParam::<MpFloat>::parse("1.2", &ctx).is_err());
    assert!(polylog(&c(2.0, 0.0, &ctx), &c(1.5, 0.0, &ctx), &ctx).is_err());
    assert!(clausen_pair(&c(1.0, 0.0, &ctx), &dec("1", &ctx), &ctx).is_err());
    assert!(polygamma(1, &c(-3.0, 0.0, &ctx), &ctx).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn gamma_recurrence(re in -10.0f64..10.0, im in -3.0f64..3.0) {
        prop_assume!((re - re.round()).abs() > 1e-2 || im.abs() > 1e-2);
        let ctx = ctx(40);
        let s = c(re, im, &ctx);
        let lhs = gamma(&(s.clone() + MpComplex::one(&ctx)), &ctx).unwrap();
        let rhs = s.clone() * gamma(&s, &ctx).unwrap();
        prop_assert!(log_err(&lhs, &rhs) - lhs.log10_abs() <= -35.0);
    }

    #[test]
    fn gamma_reflection(re in -6.0f64..6.0, im in -2.0f64..2.0) {
        prop_assume!((re - re.round()).abs() > 1e-2 || im.abs() > 1e-2);
        let ctx = ctx(40);
        let s = c(re, im, &ctx);
        let one = MpComplex::one(&ctx);
        let p = pi(&ctx);
        let v = gamma(&s, &ctx).unwrap() * gamma(&(one.clone() - &s), &ctx).unwrap() * s.scale(&p).sin();
        prop_assert!(log_err(&v.unscale(&p), &one) <= -35.0);
    }

    #[test]
    fn bernoulli_reflection(t in 0.01f64..0.99, n in 0usize..=12) {
        let ctx = ctx(40);
        let th = c(t, 0.0, &ctx);
        let a = bernoulli_poly(n, &(MpComplex::one(&ctx) - &th), &ctx);
        let b = bernoulli_poly(n, &th, &ctx);
        let b = if n % 2 == 0 { b } else { -b };
        prop_assert!(log_err(&a, &b) <= -38.0);
    }

    #[test]
    fn clausen_reassembles(phi in 0.05f64..6.2, s in 1.5f64..4.0) {
        let ctx = ctx(30);
        let angle = MpFloat::from_f64(phi, &ctx);
        let sc = c(s, 0.0, &ctx);
        let (ci, si) = clausen_pair(&sc, &angle, &ctx).unwrap();
        let li = polylog(&sc, &MpComplex::cis(&angle), &ctx).unwrap();
        prop_assert!(log_err(&(ci + si.mul_i()), &li) <= -28.0);
    }
}
