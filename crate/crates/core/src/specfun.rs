//! Enclosures of Γ-family special functions and the zeta function.
//!
//! Digamma, trigamma and log-gamma are computed by the classical scheme:
//! shift the argument up by the recurrence until the real part is at least
//! `max(10, p/4)`, then sum the asymptotic series with an explicit bound on
//! the truncation error, which is added to the radius. For a complex
//! argument `w` with `Re w > 0` the remainder bounds carry the factor
//! `(|w| / Re w)²`, which comes from `|t² + w²| ≥ (Re w)²` for `t ≥ 0` in
//! the Binet integral representations.
//!
//! Zeta is evaluated by Euler–Maclaurin summation with the standard
//! remainder bound `|R| ≤ |T_{M+1}| · |s + 2M + 1| / (σ + 2M + 1)`.

use once_cell::sync::Lazy;
use rug::float::Round;
use rug::ops::CompleteRound;
use rug::{Float, Integer, Rational};
use std::sync::Mutex;

use crate::ball::{euler_ball, ln2_ball, pi_ball, Ball, CBall, Precision};
use crate::error::{Error, Result};

/// Exact values tied to the Γ-family constants.
///
/// `psi1_half` holds the standard trigamma value `ψ₁(1/2) = +π²/2`
/// (positive, consistent with `ψ_j(1/2) = (−1)^{j+1} j! (2^{j+1}−1) ζ(j+1)`).
#[derive(Clone, Debug)]
pub struct SpecialConstants {
    pub euler_lambda0: Ball,
    pub log_pi: Ball,
    pub log_2: Ball,
    pub psi0_half: Ball,
    pub psi1_half: Ball,
}

impl SpecialConstants {
    pub fn new(prec: Precision) -> SpecialConstants {
        let euler_lambda0 = euler_ball(prec);
        let log_pi = pi_ball(prec).ln().expect("pi > 0");
        let log_2 = ln2_ball(prec);
        let two = Ball::from_i64(prec, 2);
        let psi0_half = (&(&two * &log_2) + &euler_lambda0).neg();
        let psi1_half = pi_ball(prec).sq().checked_div(&two).expect("2 != 0");
        SpecialConstants {
            euler_lambda0,
            log_pi,
            log_2,
            psi0_half,
            psi1_half,
        }
    }
}

// ---- Bernoulli numbers ----

static BERNOULLI: Lazy<Mutex<Vec<Rational>>> = Lazy::new(|| Mutex::new(vec![Rational::from(1)]));

/// Exact Bernoulli number `B_n` (`B_1 = -1/2` convention).
pub fn bernoulli(n: usize) -> Rational {
    let mut cache = BERNOULLI.lock().expect("bernoulli cache poisoned");
    while cache.len() <= n {
        let m = cache.len();
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        let mut acc = Rational::new();
        for (j, b) in cache.iter().enumerate() {
            let c = Integer::from(Integer::binomial_u(m as u32 + 1, j as u32));
            acc += Rational::from(c) * b;
        }
        acc /= Rational::from(-(m as i64 + 1));
        cache.push(acc);
    }
    cache[n].clone()
}

// ---- shared helpers ----

fn shift_target(prec: Precision) -> i64 {
    (prec.bits() as i64 / 4).max(10)
}

/// `(|w| / Re w)²` as an upper-bound float.
fn sec_sq_factor(w: &CBall) -> Float {
    let prec = w.precision();
    let num = w.abs_sq();
    let den = w.re.sq();
    num.checked_div(&den)
        .map(|b| b.hi().clone())
        .unwrap_or_else(|_| Float::with_val(prec.bits(), rug::float::Special::Infinity))
}

fn eps_target(prec: Precision) -> Float {
    Float::with_val(32, Float::i_exp(1, -(prec.bits() as i32) - 8))
}

// ---- digamma ----

/// Encloses `ψ₀` over a real interval entirely greater than zero.
pub fn digamma(x: &Ball) -> Result<Ball> {
    if !x.is_strictly_positive() {
        return Err(Error::domain("digamma requires an entirely positive argument"));
    }
    let z = CBall::from_re(x.clone());
    Ok(digamma_complex(&z)?.re)
}

/// Encloses `Re ψ₀(z)` for `Re z > 0`.
pub fn digamma_complex_re(z: &CBall) -> Result<Ball> {
    Ok(digamma_complex(z)?.re)
}

/// Encloses `ψ₀(z)` for `Re z > 0` by argument shift plus the asymptotic
/// series, with the truncation bound `|B_{2M+2}|/((2M+2)|w|^{2M+2}) · sec²θ`
/// added to the radius.
pub fn digamma_complex(z: &CBall) -> Result<CBall> {
    if !z.re.is_strictly_positive() {
        return Err(Error::domain("digamma requires Re z > 0"));
    }
    let prec = z.precision();
    let target = shift_target(prec);
    let mut w = z.clone();
    let mut acc = CBall::zero(prec);
    let one = Ball::one(prec);
    let mut guard = 0i64;
    while w.re.lo().clone() < target {
        acc = acc.sub(&w.recip()?);
        w = CBall::new(&w.re + &one, w.im.clone());
        guard += 1;
        if guard > target + 8 {
            return Err(Error::Precision("digamma shift failed to terminate".into()));
        }
    }

    // psi0(w) ~ ln w - 1/(2w) - sum_{k>=1} B_{2k}/(2k w^{2k})
    let mut total = w.ln_right_half()?;
    let two = Ball::from_i64(prec, 2);
    total = total.sub(&w.mul_ball(&two).recip()?);
    let u2 = w.mul(&w).recip()?;
    let mut u2_pow = u2.clone();
    let mut prev_bound: Option<Float> = None;
    let eps = eps_target(prec);
    let sec2 = sec_sq_factor(&w);
    let mut k = 1usize;
    let remainder = loop {
        let coeff = Ball::from_rational(prec, &(bernoulli(2 * k) / Rational::from(2 * k as u32)));
        let term = u2_pow.mul_ball(&coeff);
        let bound = (term.abs().hi() * &sec2).complete_round(prec.bits(), Round::Up).0;
        let done = bound <= eps || prev_bound.as_ref().is_some_and(|p| bound > *p) || k > 4096;
        if done {
            break bound;
        }
        total = total.sub(&term);
        u2_pow = u2_pow.mul(&u2);
        prev_bound = Some(bound);
        k += 1;
    };
    let rad = Ball::from_floats(Float::new(prec.bits()), remainder);
    let widen = |b: &Ball| Ball::with_radius(b, &rad);
    Ok(acc.add(&CBall::new(widen(&total.re), widen(&total.im))))
}

// ---- trigamma ----

/// Encloses `ψ₁` over a real interval entirely greater than zero.
///
/// Standard sign convention: `ψ₁` is positive on the positive reals, with
/// `ψ₁(1/2) = +π²/2`. The truncation error of the asymptotic series for a
/// real positive argument is at most the first omitted term.
pub fn polygamma1(x: &Ball) -> Result<Ball> {
    if !x.is_strictly_positive() {
        return Err(Error::domain("trigamma requires an entirely positive argument"));
    }
    let prec = x.precision();
    let target = shift_target(prec);
    let mut w = x.clone();
    let mut acc = Ball::zero(prec);
    let one = Ball::one(prec);
    let mut guard = 0i64;
    while w.lo().clone() < target {
        acc = &acc + &w.sq().recip()?;
        w = &w + &one;
        guard += 1;
        if guard > target + 8 {
            return Err(Error::Precision("trigamma shift failed to terminate".into()));
        }
    }

    // psi1(w) ~ 1/w + 1/(2w^2) + sum_{k>=1} B_{2k} w^{-2k-1}
    let winv = w.recip()?;
    let u2 = w.sq().recip()?;
    let two = Ball::from_i64(prec, 2);
    let mut total = &winv + &u2.checked_div(&two)?;
    let mut pow = &winv * &u2; // w^{-3}
    let mut prev_bound: Option<Float> = None;
    let eps = eps_target(prec);
    let mut k = 1usize;
    let remainder = loop {
        let coeff = Ball::from_rational(prec, &bernoulli(2 * k));
        let term = &coeff * &pow;
        let bound = term.abs().hi().clone();
        let done = bound <= eps || prev_bound.as_ref().is_some_and(|p| bound > *p) || k > 4096;
        if done {
            break bound;
        }
        total = &total + &term;
        pow = &pow * &u2;
        prev_bound = Some(bound);
        k += 1;
    };
    let rad = Ball::from_floats(Float::new(prec.bits()), remainder);
    Ok(&acc + &Ball::with_radius(&total, &rad))
}

// ---- log gamma ----

/// Encloses `log Γ(w)` for a rectangle with `Re w > 0` (principal branch,
/// continuous along the shift path).
pub fn ln_gamma_complex(w: &CBall) -> Result<CBall> {
    if !w.re.is_strictly_positive() {
        return Err(Error::domain("log-gamma requires Re w > 0"));
    }
    let prec = w.precision();
    let target = shift_target(prec);
    let mut v = w.clone();
    let mut acc = CBall::zero(prec);
    let one = Ball::one(prec);
    let mut guard = 0i64;
    while v.re.lo().clone() < target {
        // log Γ(v) = log Γ(v+1) − log v
        acc = acc.sub(&v.ln_right_half()?);
        v = CBall::new(&v.re + &one, v.im.clone());
        guard += 1;
        if guard > target + 8 {
            return Err(Error::Precision("log-gamma shift failed to terminate".into()));
        }
    }

    // Stirling: (v - 1/2) ln v - v + ln(2π)/2 + sum B_{2k}/((2k)(2k-1) v^{2k-1})
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let ln_v = v.ln_right_half()?;
    let mut total = CBall::new(&v.re - &half, v.im.clone()).mul(&ln_v).sub(&v);
    let ln_two_pi = (&pi_ball(prec) * &Ball::from_i64(prec, 2)).ln()?;
    total = total.add(&CBall::from_re(&ln_two_pi * &half));

    let vinv = v.recip()?;
    let u2 = v.mul(&v).recip()?;
    let mut pow = vinv; // v^{-(2k-1)} for k = 1
    let mut prev_bound: Option<Float> = None;
    let eps = eps_target(prec);
    let sec2 = sec_sq_factor(&v);
    let mut k = 1usize;
    let remainder = loop {
        let denom = Rational::from(2 * k as u32) * Rational::from(2 * k as u32 - 1);
        let coeff = Ball::from_rational(prec, &(bernoulli(2 * k) / denom));
        let term = pow.mul_ball(&coeff);
        let bound = (term.abs().hi() * &sec2).complete_round(prec.bits(), Round::Up).0;
        let done = bound <= eps || prev_bound.as_ref().is_some_and(|p| bound > *p) || k > 4096;
        if done {
            break bound;
        }
        total = total.add(&term);
        pow = pow.mul(&u2);
        prev_bound = Some(bound);
        k += 1;
    };
    let rad = Ball::from_floats(Float::new(prec.bits()), remainder);
    let widen = |b: &Ball| Ball::with_radius(b, &rad);
    Ok(acc.add(&CBall::new(widen(&total.re), widen(&total.im))))
}

/// Encloses `log |Γ(a + it)|` for `a > 0`.
pub fn log_abs_gamma_on_line(a: &Ball, t: &Ball) -> Result<Ball> {
    let w = CBall::new(a.clone(), t.clone());
    Ok(ln_gamma_complex(&w)?.re)
}

// ---- zeta by Euler–Maclaurin ----

/// Euler–Maclaurin enclosure of `ζ(s)` using `n_nodes` initial terms.
///
/// The remainder after the `B_{2M}` correction is bounded by
/// `|T_{M+1}| · |s + 2M + 1| / (σ + 2M + 1)`; it is added to the radius of
/// both components. `n_nodes = 0` picks a node count suited to `Im s` and
/// the working precision.
pub fn zeta_em(s: &CBall, n_nodes: usize) -> Result<CBall> {
    let prec = s.precision();
    let p = prec.bits();
    let m_terms = (p as usize) / 4 + 8;
    let t_mag = s.im.abs().hi().to_f64().max(s.re.abs().hi().to_f64());
    if !t_mag.is_finite() {
        return Err(Error::Precision("zeta of a non-finite rectangle".into()));
    }
    let n = if n_nodes > 0 {
        n_nodes.max(2)
    } else {
        ((t_mag + 2.0 * m_terms as f64 + 10.0) * 0.6366).ceil() as usize + 8
    };
    let n_int = n as u64;

    // Main sum over n^{-s}.
    let minus_s = s.neg();
    let mut sum = CBall::new(Ball::one(prec), Ball::zero(prec));
    for k in 2..n_int {
        sum = sum.add(&pow_int_complex(k, &minus_s)?);
    }

    // N^{1-s}/(s-1) + N^{-s}/2
    let one = Ball::one(prec);
    let s_minus_1 = CBall::new(&s.re - &one, s.im.clone());
    let n_pow_1ms = pow_int_complex(n_int, &CBall::new(&one - &s.re, s.im.neg()))?;
    sum = sum.add(&n_pow_1ms.checked_div(&s_minus_1).map_err(|_| {
        Error::domain("zeta enclosure undefined: s - 1 contains zero")
    })?);
    let n_pow_ms = pow_int_complex(n_int, &minus_s)?;
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    sum = sum.add(&n_pow_ms.mul_ball(&half));

    // Correction terms T_k = B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}.
    let n_sq_inv = Ball::from_u64(prec, n_int * n_int).recip()?;
    let n_ball = Ball::from_u64(prec, n_int);
    let mut poch = s.clone(); // (s)_1 = s
    let mut n_factor = n_pow_ms.mul_ball(&n_ball).mul_ball(&n_sq_inv); // N^{-s-1}
    let mut term = CBall::zero(prec);
    for k in 1..=m_terms + 1 {
        let coeff = Ball::from_rational(
            prec,
            &(bernoulli(2 * k) / Rational::from(Integer::from(Integer::factorial(2 * k as u32)))),
        );
        term = poch.mul(&n_factor).mul_ball(&coeff);
        if k == m_terms + 1 {
            break;
        }
        sum = sum.add(&term);
        // extend the pochhammer product by (s + 2k - 1)(s + 2k)
        let a = CBall::new(&s.re + &Ball::from_i64(prec, 2 * k as i64 - 1), s.im.clone());
        let b = CBall::new(&s.re + &Ball::from_i64(prec, 2 * k as i64), s.im.clone());
        poch = poch.mul(&a).mul(&b);
        n_factor = n_factor.mul_ball(&n_sq_inv);
    }

    // Remainder bound from the first omitted term.
    let m = m_terms as i64;
    let shift_f = Float::with_val(p, 2 * m + 1);
    let denom = (s.re.lo() + &shift_f).complete_round(p, Round::Down).0;
    if !denom.is_sign_positive() {
        return Err(Error::domain("Euler–Maclaurin remainder needs σ + 2M + 1 > 0"));
    }
    let s_shift = CBall::new(&s.re + &Ball::from_i64(prec, 2 * m + 1), s.im.clone());
    let s_shift_hi = s_shift.abs();
    let ratio = (s_shift_hi.hi() / &denom).complete_round(p, Round::Up).0;
    let term_abs = term.abs();
    let bound = (term_abs.hi() * &ratio).complete_round(p, Round::Up).0;
    let rad = Ball::from_floats(Float::new(p), bound);
    Ok(CBall::new(
        Ball::with_radius(&sum.re, &rad),
        Ball::with_radius(&sum.im, &rad),
    ))
}

/// `k^w` for a positive integer `k` and complex rectangle `w`.
pub fn pow_int_complex(k: u64, w: &CBall) -> Result<CBall> {
    let prec = w.precision();
    if k == 0 {
        return Err(Error::domain("integer base must be positive"));
    }
    if k == 1 {
        return Ok(CBall::new(Ball::one(prec), Ball::zero(prec)));
    }
    let shifted = CBall::new(&w.re + &Ball::one(prec), w.im.clone());
    crate::ball::complex_power_inverse(k, &shifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::assert_ball_within;

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn special_constants_are_consistent() {
        let c = SpecialConstants::new(p());
        assert_ball_within(&c.euler_lambda0, "0.57721566490153286060", "0.57721566490153286061");
        assert_ball_within(&c.psi0_half, "-1.9635100260214234795", "-1.9635100260214234794");
        // psi1(1/2) = +pi^2/2 under the standard convention.
        assert_ball_within(&c.psi1_half, "4.9348022005446793093", "4.9348022005446793095");
    }

    #[test]
    fn digamma_at_special_points() {
        let d1 = digamma(&Ball::one(p())).unwrap();
        assert_ball_within(&d1, "-0.577215664901532860607", "-0.577215664901532860606");
        let dh = digamma(&Ball::from_f64(p(), 0.5)).unwrap();
        assert_ball_within(&dh, "-1.96351002602142347945", "-1.96351002602142347943");
        let d32 = digamma(&Ball::from_f64(p(), 1.5)).unwrap();
        // psi0(3/2) = psi0(1/2) + 2 = 2 - 2 log 2 - lambda0
        assert_ball_within(&d32, "0.03648997397857652055", "0.03648997397857652057");
    }

    #[test]
    fn digamma_matches_mpfr_reference() {
        // Cross-check against MPFR's independent digamma implementation.
        let x = Ball::from_f64(p(), 7.375);
        let ours = digamma(&x).unwrap();
        let mut lo = x.lo().clone();
        lo.digamma_round(Round::Down);
        let mut hi = x.hi().clone();
        hi.digamma_round(Round::Up);
        let reference = Ball::from_floats(lo, hi);
        assert!(ours.intersects(&reference));
        assert!(ours.width().to_f64() < 1e-40);
    }

    #[test]
    fn digamma_rejects_nonpositive() {
        assert!(digamma(&Ball::zero(p())).is_err());
        assert!(digamma(&Ball::from_i64(p(), -3)).is_err());
    }

    #[test]
    fn digamma_complex_real_axis_matches_real() {
        let z = CBall::new(Ball::from_i64(p(), 2), Ball::zero(p()));
        let d = digamma_complex_re(&z).unwrap();
        // psi0(2) = 1 - lambda0
        assert_ball_within(&d, "0.42278433509846713938", "0.42278433509846713940");
    }

    #[test]
    fn digamma_complex_conjugate_symmetry() {
        let five = Ball::from_i64(p(), 5);
        let a = digamma_complex_re(&CBall::new(Ball::from_i64(p(), 2), five.clone())).unwrap();
        let b = digamma_complex_re(&CBall::new(Ball::from_i64(p(), 2), five.neg())).unwrap();
        assert!(a.intersects(&b));
    }

    #[test]
    fn digamma_complex_large_height() {
        // Re psi0(2 - 5e5 i) ~ log(5e5); asymptotic tolerance 1e-5.
        let z = CBall::new(Ball::from_i64(p(), 2), Ball::from_i64(p(), -500_000));
        let d = digamma_complex_re(&z).unwrap();
        assert_ball_within(&d, "13.1223533", "13.1223734");
        // Tighter independent asymptotic bracket.
        assert_ball_within(&d, "13.122363377", "13.122363378");
    }

    #[test]
    fn trigamma_values() {
        let t_half = polygamma1(&Ball::from_f64(p(), 0.5)).unwrap();
        assert_ball_within(&t_half, "4.9348022005446793093", "4.9348022005446793095");
        assert!(t_half.is_strictly_positive());
        let t1 = polygamma1(&Ball::one(p())).unwrap();
        // zeta(2) identity via reference series
        assert_ball_within(&t1, "1.6449340668482264364", "1.6449340668482264366");
        let t2 = polygamma1(&Ball::from_i64(p(), 2)).unwrap();
        assert_ball_within(&t2, "0.6449340668482264364", "0.6449340668482264366");
    }

    #[test]
    fn log_abs_gamma_values() {
        let zero = Ball::zero(p());
        let g1 = log_abs_gamma_on_line(&Ball::one(p()), &zero).unwrap();
        assert!(g1.contains_f64(0.0) && g1.width().to_f64() < 1e-40);
        let gh = log_abs_gamma_on_line(&Ball::from_f64(p(), 0.5), &zero).unwrap();
        // log sqrt(pi)
        assert_ball_within(&gh, "0.57236494292470008706", "0.57236494292470008708");
    }

    #[test]
    fn log_abs_gamma_off_axis_matches_reference() {
        // log|Gamma(5/4 + 7.067i)| = -8.71451980902990023527... (frozen
        // from an independent Stirling-with-remainder evaluation).
        let a = Ball::from_rational(p(), &Rational::from((5, 4)));
        let t = Ball::from_decimal_str(p(), "7.067").unwrap();
        let v = log_abs_gamma_on_line(&a, &t).unwrap();
        assert_ball_within(&v, "-8.714519809029900236", "-8.714519809029900235");
        assert!(v.is_strictly_negative());
    }

    #[test]
    fn half_integer_values_meet_special_constants() {
        let c = SpecialConstants::new(p());
        let dh = digamma(&Ball::from_f64(p(), 0.5)).unwrap();
        assert!(dh.intersects(&c.psi0_half));
        let th = polygamma1(&Ball::from_f64(p(), 0.5)).unwrap();
        assert!(th.intersects(&c.psi1_half));
    }

    #[test]
    fn log_abs_gamma_rejects_nonpositive_real_part() {
        assert!(log_abs_gamma_on_line(&Ball::zero(p()), &Ball::one(p())).is_err());
    }

    #[test]
    fn zeta_em_real_points() {
        let two = CBall::from_re(Ball::from_i64(p(), 2));
        let z2 = zeta_em(&two, 0).unwrap();
        // pi^2/6
        assert_ball_within(&z2.re, "1.6449340668482264364", "1.6449340668482264366");
        assert!(z2.im.contains_f64(0.0));

        let half = CBall::from_re(Ball::from_f64(p(), 0.5));
        let zh = zeta_em(&half, 0).unwrap();
        // reference: zeta(1/2) = -1.4603545088095868128...
        assert_ball_within(&zh.re, "-1.4603545088095868129", "-1.4603545088095868127");
    }

    #[test]
    fn zeta_em_near_first_zero() {
        let prec = p();
        let t = Ball::from_decimal_str(prec, "14.1347251417346937904").unwrap();
        let s = CBall::new(Ball::from_f64(prec, 0.5), t);
        let z = zeta_em(&s, 0).unwrap();
        // The point is the first zero ordinate to ~20 digits, so |zeta| is tiny.
        assert!(z.abs().lo().to_f64() < 1e-15);
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), Rational::from(1));
        assert_eq!(bernoulli(1), Rational::from((-1, 2)));
        assert_eq!(bernoulli(2), Rational::from((1, 6)));
        assert_eq!(bernoulli(12), Rational::from((-691, 2730)));
        assert_eq!(bernoulli(13), Rational::new());
    }

    #[test]
    fn zeta_em_matches_reference_complex_point() {
        // zeta(1/2 + i) from an independent multiprecision evaluation:
        // 0.14393642707718906... - 0.72209974353167308... i
        let s = CBall::new(Ball::from_f64(p(), 0.5), Ball::one(p()));
        let z = zeta_em(&s, 0).unwrap();
        assert_ball_within(&z.re, "0.14393642707718906031", "0.14393642707718906033");
        assert_ball_within(&z.im, "-0.72209974353167308913", "-0.72209974353167308911");
    }
}
