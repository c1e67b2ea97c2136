//! Certified truncated logarithmic derivatives and the zero-sum constants
//! they determine.
//!
//! Inside the region of absolute convergence,
//! `L'/L(1-δ) = -Σ_{k≤K} Λ_L(k) k^{δ-1} + R_L(K, δ)`, with two explicit
//! bounds on the tail: the Chebyshev-function bound
//! `|R_L| < (r K^δ/δ)(2.85 (2δ-1)/log K - 1)` (valid for `K ≥ 18`, `δ < 0`)
//! and the crude bound `r K^δ (1 - δ log K)/δ²`; the smaller one becomes the
//! radius. The zero sums over `1/(ρ-δ)` and `1/(ρ-δ)²` then follow from the
//! completed-function product formula plus digamma/trigamma terms.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::arith::{lambda_l, log_prime, sieve};
use crate::ball::{complex_power_inverse, euler_ball, pi_ball, Ball, CBall, Precision};
use crate::error::{Error, Result};
use crate::lmodel::LFunctionParams;
use crate::specfun::{digamma, digamma_complex_re, polygamma1};

/// A truncated Dirichlet-series value: the partial sum, the certified tail
/// radius, and their combination.
#[derive(Clone, Debug)]
pub struct TruncationResult {
    pub sum: Ball,
    pub remainder_radius: Ball,
    pub k_limit: u64,
    pub total: Ball,
}

/// Complex variant of [`TruncationResult`].
#[derive(Clone, Debug)]
pub struct TruncationResultC {
    pub sum: CBall,
    pub remainder_radius: Ball,
    pub k_limit: u64,
    pub total: CBall,
}

fn require_negative(delta: &Ball, what: &str) -> Result<()> {
    if !delta.is_strictly_negative() {
        return Err(Error::domain(format!("{what} requires an entirely negative shift")));
    }
    Ok(())
}

fn require_k(k_limit: u64) -> Result<()> {
    if k_limit < 18 {
        return Err(Error::validation("truncation point K must be at least 18"));
    }
    Ok(())
}

/// The first-order tail bound: smaller of the Chebyshev-driven and crude
/// estimates, as a nonnegative upper bound.
pub fn tail_radius_first(degree: u32, k_limit: u64, delta: &Ball) -> Result<Ball> {
    require_negative(delta, "the tail bound")?;
    require_k(k_limit)?;
    let prec = delta.precision();
    let r = Ball::from_u64(prec, u64::from(degree));
    let log_k = Ball::from_u64(prec, k_limit).ln()?;
    let k_pow_delta = (delta * &log_k).exp();
    let one = Ball::one(prec);
    let two = Ball::from_i64(prec, 2);

    // (r K^δ / δ) (2.85 (2δ-1)/log K - 1)
    let c285 = Ball::from_rational(prec, &Rational::from((285, 100)));
    let main = (&r * &k_pow_delta)
        .checked_div(delta)?
        * ((&c285 * &(&(&two * delta) - &one)).checked_div(&log_k)? - &one);

    // r K^δ (1 - δ log K) / δ²
    let crude = (&r * &k_pow_delta) * &(&one - &(delta * &log_k)).checked_div(&delta.sq())?;

    let bound = main.min_ball(&crude);
    Ok(Ball::from_floats(bound.hi().clone(), bound.hi().clone()))
}

/// Second-order tail bound from the higher-derivative generalization.
pub fn tail_radius_second(degree: u32, k_limit: u64, delta: &Ball) -> Result<Ball> {
    require_negative(delta, "the tail bound")?;
    require_k(k_limit)?;
    let prec = delta.precision();
    let r = Ball::from_u64(prec, u64::from(degree));
    let log_k = Ball::from_u64(prec, k_limit).ln()?;
    let k_pow_delta = (delta * &log_k).exp();
    let one = Ball::one(prec);
    let c285 = Ball::from_rational(prec, &Rational::from((285, 100)));

    // r K^δ (2.85 - log K + (1/(1-δ) - δ log K)/δ² · (1-δ)(1 + 2.85/log K))
    let one_minus_delta = &one - delta;
    let inner = (&one_minus_delta.recip()? - &(delta * &log_k)).checked_div(&delta.sq())?
        * &(&one_minus_delta * &(&one + &c285.checked_div(&log_k)?));
    let bound = (&r * &k_pow_delta) * &(&(&c285 - &log_k) + &inner);
    Ok(Ball::from_floats(bound.hi().clone(), bound.hi().clone()))
}

/// `n^{-(1-δ)}` with an exact-integer fast path when `δ` is a point integer.
fn neg_power(prec: Precision, n: u64, delta: &Ball, exact_exp: Option<i64>) -> Result<Ball> {
    if let Some(d) = exact_exp {
        let e = 1 - d; // >= 2 since d < 0
        let npow = Integer::from(Integer::from(n).pow(e as u32));
        return Ball::one(prec).checked_div(&Ball::from_integer(prec, &npow));
    }
    let ln_n = Ball::from_u64(prec, n).ln()?;
    Ok(((&Ball::one(prec) - delta) * &ln_n).neg().exp())
}

fn exact_integer_of(delta: &Ball) -> Option<i64> {
    if delta.lo() == delta.hi() && delta.lo().is_integer() {
        delta.lo().to_integer().and_then(|i| i.to_i64())
    } else {
        None
    }
}

/// Truncated `L'/L(1-δ)` for `δ < 0`, `K ≥ 18`.
pub fn log_deriv_l(
    params: &LFunctionParams,
    delta: &Ball,
    k_limit: u64,
    prec: Precision,
) -> Result<TruncationResult> {
    require_negative(delta, "L'/L(1-δ)")?;
    require_k(k_limit)?;
    params.provider().prepare(k_limit)?;
    let table = sieve(k_limit);
    let exact_exp = exact_integer_of(delta);
    let mut sum = Ball::zero(prec);
    for e in table.entries() {
        let lam = lambda_l(params.provider(), prec, e.p, e.m)?;
        let pw = neg_power(prec, e.n, delta, exact_exp)?;
        sum = &sum + &(&lam * &pw);
    }
    let sum = sum.neg();
    let remainder_radius = tail_radius_first(params.degree(), k_limit, delta)?;
    let total = Ball::with_radius(&sum, &remainder_radius);
    Ok(TruncationResult { sum, remainder_radius, k_limit, total })
}

/// Truncated `(log L)''(1-δ) = Σ_{k≤K} Λ_L(k) log(k) k^{δ-1} ± R_{L,2}`.
///
/// The series is positive-signed: differentiating
/// `(log L)'(s) = -Σ Λ_L(k) k^{-s}` in `s` brings down `-log k`.
pub fn log_deriv2_l(
    params: &LFunctionParams,
    delta: &Ball,
    k_limit: u64,
    prec: Precision,
) -> Result<TruncationResult> {
    require_negative(delta, "(log L)''(1-δ)")?;
    require_k(k_limit)?;
    params.provider().prepare(k_limit)?;
    let table = sieve(k_limit);
    let exact_exp = exact_integer_of(delta);
    let mut sum = Ball::zero(prec);
    for e in table.entries() {
        let lam = lambda_l(params.provider(), prec, e.p, e.m)?;
        let pw = neg_power(prec, e.n, delta, exact_exp)?;
        let log_n = &Ball::from_u64(prec, u64::from(e.m)) * &log_prime(prec, e.p)?;
        sum = &sum + &(&(&lam * &log_n) * &pw);
    }
    let remainder_radius = tail_radius_second(params.degree(), k_limit, delta)?;
    let total = Ball::with_radius(&sum, &remainder_radius);
    Ok(TruncationResult { sum, remainder_radius, k_limit, total })
}

/// Truncated `g'/g(1-z) = -1/z - Σ_{k≤K} Λ(k) k^{z-1} + R(K, x)` for the
/// entire function `g(s) = (s-1) ζ(s)`; requires `Re z < 0`.
pub fn log_deriv_g_zeta(z: &CBall, k_limit: u64, prec: Precision) -> Result<TruncationResultC> {
    if !z.re.is_strictly_negative() {
        return Err(Error::domain("g'/g(1-z) requires Re z < 0"));
    }
    require_k(k_limit)?;
    let table = sieve(k_limit);
    let mut sum = CBall::zero(prec);
    for &p in table.primes() {
        let u = complex_power_inverse(p, z)?; // p^{z-1}
        let log_p = log_prime(prec, p)?;
        let mut upow = u.clone();
        let mut pm = p;
        loop {
            sum = sum.add(&upow.mul_ball(&log_p));
            match pm.checked_mul(p) {
                Some(next) if next <= k_limit => {
                    pm = next;
                    upow = upow.mul(&u);
                }
                _ => break,
            }
        }
    }
    let minus_inv_z = z.recip()?.neg();
    let sum = minus_inv_z.sub(&sum);
    let remainder_radius = tail_radius_first(1, k_limit, &z.re)?;
    let total = CBall::new(
        Ball::with_radius(&sum.re, &remainder_radius),
        Ball::with_radius(&sum.im, &remainder_radius),
    );
    Ok(TruncationResultC { sum, remainder_radius, k_limit, total })
}

// ---- zero sums ----

fn gamma_factor_constant(params: &LFunctionParams, prec: Precision) -> Result<Ball> {
    // (1/2) log N - (r/2) log pi
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let log_n = Ball::from_u64(prec, params.conductor()).ln()?;
    let log_pi = pi_ball(prec).ln()?;
    let r = Ball::from_u64(prec, u64::from(params.degree()));
    Ok(&(&half * &log_n) - &(&(&half * &r) * &log_pi))
}

fn digamma_sum(params: &LFunctionParams, delta: &Ball, prec: Precision) -> Result<Ball> {
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let one = Ball::one(prec);
    let mut acc = Ball::zero(prec);
    for mu in params.mu() {
        let arg = &(&(&one - delta) + &Ball::from_rational(prec, mu)) * &half;
        acc = &acc + &digamma(&arg)?;
    }
    Ok(acc)
}

/// The zero sum `Σ_ρ 1/(ρ-δ)` (conjugate-paired), computed from the
/// completed-function identity
/// `w = (1/2) log N - (r/2) log π + (1/2) Σ_j ψ₀((1-δ+μ_j)/2) + L'/L(1-δ)`.
pub fn zero_sum_shifted(
    params: &LFunctionParams,
    delta: &Ball,
    k_limit: u64,
    prec: Precision,
) -> Result<Ball> {
    let ld = log_deriv_l(params, delta, k_limit, prec)?;
    zero_sum_shifted_with(params, delta, &ld.total, prec)
}

/// Same identity with a caller-supplied value of `L'/L(1-δ)`; this is the
/// only route when `δ = 0` (exact special values of `L'/L(1)`).
pub fn zero_sum_shifted_with(
    params: &LFunctionParams,
    delta: &Ball,
    log_deriv_value: &Ball,
    prec: Precision,
) -> Result<Ball> {
    if delta.is_strictly_positive() || (!delta.is_strictly_negative() && !delta.contains_zero()) {
        return Err(Error::domain("the shift must satisfy δ ≤ 0"));
    }
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let base = gamma_factor_constant(params, prec)?;
    let psi = digamma_sum(params, delta, prec)?;
    Ok(&(&base + &(&half * &psi)) + log_deriv_value)
}

/// The squared zero sum `Σ_ρ 1/(ρ-δ)²`, equal to
/// `-[ (1/4) Σ_j ψ₁((1-δ+μ_j)/2) + 2 d_{2,δ} ]` with
/// `2 d_{2,δ} = (log L)''(1-δ)`.
pub fn zero_sum_shifted_sq(
    params: &LFunctionParams,
    delta: &Ball,
    k_limit: u64,
    prec: Precision,
) -> Result<Ball> {
    require_negative(delta, "the squared zero sum")?;
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let one = Ball::one(prec);
    let quarter = &half * &half;
    let mut psi1_sum = Ball::zero(prec);
    for mu in params.mu() {
        let arg = &(&(&one - delta) + &Ball::from_rational(prec, mu)) * &half;
        psi1_sum = &psi1_sum + &polygamma1(&arg)?;
    }
    let d2_twice = log_deriv2_l(params, delta, k_limit, prec)?;
    Ok((&(&quarter * &psi1_sum) + &d2_twice.total).neg())
}

/// `Re Σ_ρ 1/(ρ-z)` for zeta, from
/// `-½ log π + ½ Re ψ₀((3-z)/2) + Re g'/g(1-z)`; requires `Re z < 0`.
pub fn zeta_zero_sum_re(z: &CBall, k_limit: u64, prec: Precision) -> Result<Ball> {
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let three = Ball::from_i64(prec, 3);
    // (3-z)/2 componentwise: re = (3-x)/2, im = -y/2.
    let arg = CBall::new(&(&three - &z.re) * &half, &z.im.neg() * &half);
    let psi_re = digamma_complex_re(&arg)?;
    let g = log_deriv_g_zeta(z, k_limit, prec)?;
    let log_pi = pi_ball(prec).ln()?;
    Ok(&(&(&half * &psi_re) - &(&half * &log_pi)) + &g.total.re)
}

/// The sum `Σ_ρ 1/ρ = λ₀/2 + 1 - ½ log 4π` over all nontrivial zeta zeros
/// (conjugate-paired); the constant Riemann computed to twenty digits.
pub fn zeta_zero_sum_origin(prec: Precision) -> Result<Ball> {
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let four_pi = &pi_ball(prec) * &Ball::from_i64(prec, 4);
    let v = &(&(&half * &euler_ball(prec)) + &Ball::one(prec)) - &(&half * &four_pi.ln()?);
    Ok(v)
}
