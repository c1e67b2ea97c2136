//! Real and complex interval arithmetic at arbitrary precision.
//!
//! A [`Ball`] is a pair of MPFR floats `[lo, hi]` that brackets an exact
//! real number. Every operation rounds outward, so the fundamental contract
//! holds throughout: if the inputs contain their exact operands, the output
//! contains the exact result. Nothing in this crate touches a bare float.
//!
//! Operations with a restricted domain (`div`, `ln`, `sqrt`) come in a
//! checked form returning [`Error::Domain`]. The `/` operator instead
//! saturates to the whole line on a zero-containing divisor; a whole-line
//! ball poisons everything downstream and any verdict computed from one is
//! inconclusive, so saturation is sound where a precondition has already
//! been validated.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::{Constant, Round};
use rug::ops::{CompleteRound, NegAssign, Pow, PowAssignRound};
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

/// Working precision in bits. At least 53; default 192. Verifications near
/// height 1e28 need 256 or more so that `y log k` retains fractional bits
/// through trigonometric argument reduction.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Precision {
    bits: u32,
}

impl Precision {
    pub const MIN_BITS: u32 = 53;
    pub const MAX_BITS: u32 = 1 << 24;

    pub fn new(bits: u32) -> Result<Self> {
        if !(Self::MIN_BITS..=Self::MAX_BITS).contains(&bits) {
            return Err(Error::Precision(format!(
                "precision must be in [{}, {}] bits, got {bits}",
                Self::MIN_BITS,
                Self::MAX_BITS
            )));
        }
        Ok(Precision { bits })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Bumps the precision by `extra` guard bits, saturating at the cap.
    pub fn plus(self, extra: u32) -> Self {
        Precision {
            bits: (self.bits.saturating_add(extra)).min(Self::MAX_BITS),
        }
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision { bits: 192 }
    }
}

/// An enclosure `[lo, hi]` of a real number.
#[derive(Clone, PartialEq)]
pub struct Ball {
    lo: Float,
    hi: Float,
}

impl fmt::Debug for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ball[{:e}, {:e}]", self.lo, self.hi)
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal_pair(f.precision().unwrap_or(20));
        write!(f, "[{lo}, {hi}]")
    }
}

fn is_bad(x: &Float) -> bool {
    x.is_nan()
}

impl Ball {
    // ---- construction ----

    fn from_endpoints(lo: Float, hi: Float) -> Ball {
        if is_bad(&lo) || is_bad(&hi) || lo > hi {
            let p = lo.prec().max(hi.prec());
            return Ball::whole_line(Precision { bits: p });
        }
        Ball { lo, hi }
    }

    pub fn whole_line(prec: Precision) -> Ball {
        let p = prec.bits();
        Ball {
            lo: Float::with_val(p, rug::float::Special::NegInfinity),
            hi: Float::with_val(p, rug::float::Special::Infinity),
        }
    }

    pub fn zero(prec: Precision) -> Ball {
        Ball {
            lo: Float::new(prec.bits()),
            hi: Float::new(prec.bits()),
        }
    }

    pub fn one(prec: Precision) -> Ball {
        Ball::from_i64(prec, 1)
    }

    pub fn from_i64(prec: Precision, v: i64) -> Ball {
        let p = prec.bits();
        Ball {
            lo: Float::with_val_round(p, v, Round::Down).0,
            hi: Float::with_val_round(p, v, Round::Up).0,
        }
    }

    pub fn from_u64(prec: Precision, v: u64) -> Ball {
        let p = prec.bits();
        Ball {
            lo: Float::with_val_round(p, v, Round::Down).0,
            hi: Float::with_val_round(p, v, Round::Up).0,
        }
    }

    pub fn from_integer(prec: Precision, v: &Integer) -> Ball {
        let p = prec.bits();
        Ball {
            lo: Float::with_val_round(p, v, Round::Down).0,
            hi: Float::with_val_round(p, v, Round::Up).0,
        }
    }

    pub fn from_rational(prec: Precision, v: &Rational) -> Ball {
        let p = prec.bits();
        Ball {
            lo: Float::with_val_round(p, v, Round::Down).0,
            hi: Float::with_val_round(p, v, Round::Up).0,
        }
    }

    pub fn from_f64(prec: Precision, v: f64) -> Ball {
        let p = prec.bits();
        Ball::from_endpoints(
            Float::with_val_round(p, v, Round::Down).0,
            Float::with_val_round(p, v, Round::Up).0,
        )
    }

    /// Parses a decimal literal exactly (through a rational), then rounds
    /// outward once. Avoids the double rounding of going through `f64`.
    pub fn from_decimal_str(prec: Precision, s: &str) -> Result<Ball> {
        let r = parse_decimal_rational(s)?;
        Ok(Ball::from_rational(prec, &r))
    }

    /// `[lo, hi]` from two exact rational endpoints.
    pub fn from_rational_endpoints(prec: Precision, lo: &Rational, hi: &Rational) -> Result<Ball> {
        if lo > hi {
            return Err(Error::domain("interval endpoints out of order"));
        }
        let p = prec.bits();
        Ok(Ball {
            lo: Float::with_val_round(p, lo, Round::Down).0,
            hi: Float::with_val_round(p, hi, Round::Up).0,
        })
    }

    /// `mid ± rad`.
    pub fn with_radius(mid: &Ball, rad: &Ball) -> Ball {
        let p = mid.prec().max(rad.prec());
        let lo = (&mid.lo - &rad.hi).complete_round(p, Round::Down).0;
        let hi = (&mid.hi + &rad.hi).complete_round(p, Round::Up).0;
        Ball::from_endpoints(lo, hi)
    }

    pub(crate) fn from_floats(lo: Float, hi: Float) -> Ball {
        Ball::from_endpoints(lo, hi)
    }

    // ---- queries ----

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    pub fn precision(&self) -> Precision {
        Precision { bits: self.prec() }
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// Upper bound on `hi - lo`.
    pub fn width(&self) -> Float {
        (&self.hi - &self.lo).complete_round(self.prec(), Round::Up).0
    }

    pub fn midpoint(&self) -> Float {
        let mut m = (&self.lo + &self.hi).complete_round(self.prec(), Round::Nearest).0;
        m /= 2;
        m
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo > 0
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi < 0
    }

    /// Certain containment of another enclosure.
    pub fn contains(&self, other: &Ball) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_rational(&self, v: &Rational) -> bool {
        // Exact comparisons: Float vs Rational compare without rounding.
        self.lo <= *v && *v <= self.hi
    }

    pub fn contains_f64(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// `self` is certainly greater than `other` (strict separation).
    pub fn strictly_gt(&self, other: &Ball) -> bool {
        self.lo > other.hi
    }

    pub fn strictly_lt(&self, other: &Ball) -> bool {
        self.hi < other.lo
    }

    pub fn intersects(&self, other: &Ball) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersection(&self, other: &Ball) -> Option<Ball> {
        if !self.intersects(other) {
            return None;
        }
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        Some(Ball { lo, hi })
    }

    pub fn hull(&self, other: &Ball) -> Ball {
        let lo = if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() };
        Ball::from_endpoints(lo, hi)
    }

    /// Endpoint minimum: encloses `min(x, y)` for `x ∈ self`, `y ∈ other`.
    pub fn min_ball(&self, other: &Ball) -> Ball {
        let lo = if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        Ball::from_endpoints(lo, hi)
    }

    pub fn max_ball(&self, other: &Ball) -> Ball {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() };
        Ball::from_endpoints(lo, hi)
    }

    // ---- arithmetic ----

    pub fn neg(&self) -> Ball {
        let mut lo = self.hi.clone();
        lo.neg_assign();
        let mut hi = self.lo.clone();
        hi.neg_assign();
        Ball { lo, hi }
    }

    pub fn abs(&self) -> Ball {
        if self.lo >= 0 {
            self.clone()
        } else if self.hi <= 0 {
            self.neg()
        } else {
            let hi = if self.hi.clone().abs() >= self.lo.clone().abs() {
                self.hi.clone()
            } else {
                self.lo.clone().abs()
            };
            Ball { lo: Float::new(self.prec()), hi }
        }
    }

    fn add_impl(&self, other: &Ball) -> Ball {
        if !self.is_finite() && !other.is_finite() {
            // Avoid inf - inf surprises; a sum involving a whole line is a
            // whole line anyway.
        }
        let p = self.prec().max(other.prec());
        let lo = (&self.lo + &other.lo).complete_round(p, Round::Down).0;
        let hi = (&self.hi + &other.hi).complete_round(p, Round::Up).0;
        Ball::from_endpoints(lo, hi)
    }

    fn sub_impl(&self, other: &Ball) -> Ball {
        let p = self.prec().max(other.prec());
        let lo = (&self.lo - &other.hi).complete_round(p, Round::Down).0;
        let hi = (&self.hi - &other.lo).complete_round(p, Round::Up).0;
        Ball::from_endpoints(lo, hi)
    }

    fn mul_impl(&self, other: &Ball) -> Ball {
        let p = self.prec().max(other.prec());
        if !self.is_finite() || !other.is_finite() {
            return Ball::whole_line(Precision { bits: p });
        }
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let d = (a * b).complete_round(p, Round::Down).0;
            let u = (a * b).complete_round(p, Round::Up).0;
            lo = Some(match lo {
                Some(cur) => if d < cur { d } else { cur },
                None => d,
            });
            hi = Some(match hi {
                Some(cur) => if u > cur { u } else { cur },
                None => u,
            });
        }
        Ball::from_endpoints(lo.unwrap(), hi.unwrap())
    }

    /// Division with a domain check: errors when the divisor contains zero.
    pub fn checked_div(&self, other: &Ball) -> Result<Ball> {
        if other.contains_zero() {
            return Err(Error::domain("division by an interval containing zero"));
        }
        Ok(self.div_impl(other))
    }

    fn div_impl(&self, other: &Ball) -> Ball {
        let p = self.prec().max(other.prec());
        if other.contains_zero() || !self.is_finite() || !other.is_finite() {
            return Ball::whole_line(Precision { bits: p });
        }
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let d = (a / b).complete_round(p, Round::Down).0;
            let u = (a / b).complete_round(p, Round::Up).0;
            lo = Some(match lo {
                Some(cur) => if d < cur { d } else { cur },
                None => d,
            });
            hi = Some(match hi {
                Some(cur) => if u > cur { u } else { cur },
                None => u,
            });
        }
        Ball::from_endpoints(lo.unwrap(), hi.unwrap())
    }

    pub fn recip(&self) -> Result<Ball> {
        Ball::one(self.precision()).checked_div(self)
    }

    /// Tight square: `[0, max(lo², hi²)]` when the ball straddles zero.
    pub fn sq(&self) -> Ball {
        let p = self.prec();
        if !self.is_finite() {
            let a = self.abs();
            if a.lo.is_finite() {
                let lo = (&a.lo * &a.lo).complete_round(p, Round::Down).0;
                return Ball::from_endpoints(lo, Float::with_val(p, rug::float::Special::Infinity));
            }
            return Ball::from_endpoints(
                Float::new(p),
                Float::with_val(p, rug::float::Special::Infinity),
            );
        }
        let a = self.abs();
        let lo = (&a.lo * &a.lo).complete_round(p, Round::Down).0;
        let hi = (&a.hi * &a.hi).complete_round(p, Round::Up).0;
        Ball::from_endpoints(lo, hi)
    }

    /// Integer power by sign analysis: exact on the monotone pieces.
    pub fn powi(&self, n: i32) -> Result<Ball> {
        let p = self.prec();
        if n == 0 {
            return Ok(Ball::one(self.precision()));
        }
        if n < 0 {
            return self.powi(-n)?.recip();
        }
        if n % 2 == 0 && self.contains_zero() {
            let a = self.abs();
            let mut hi = a.hi.clone();
            hi.pow_assign_round(n, Round::Up);
            return Ok(Ball::from_endpoints(Float::new(p), hi));
        }
        // Monotone on the sign-definite pieces (odd n, or even n with a
        // sign-definite ball after replacing by |self|).
        let base = if n % 2 == 0 { self.abs() } else { self.clone() };
        let mut lo = base.lo.clone();
        lo.pow_assign_round(n, Round::Down);
        let mut hi = base.hi.clone();
        hi.pow_assign_round(n, Round::Up);
        Ok(Ball::from_endpoints(lo, hi))
    }

    // ---- elementary functions ----

    pub fn sqrt(&self) -> Result<Ball> {
        if !(self.lo > 0) {
            return Err(Error::domain("sqrt of an interval touching zero or below"));
        }
        let mut lo = self.lo.clone();
        lo.sqrt_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.sqrt_round(Round::Up);
        Ok(Ball::from_endpoints(lo, hi))
    }

    pub fn ln(&self) -> Result<Ball> {
        if !(self.lo > 0) {
            return Err(Error::domain("log of an interval touching zero or below"));
        }
        let mut lo = self.lo.clone();
        lo.ln_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.ln_round(Round::Up);
        Ok(Ball::from_endpoints(lo, hi))
    }

    pub fn exp(&self) -> Ball {
        if self.lo.is_nan() || self.hi.is_nan() {
            return Ball::whole_line(self.precision());
        }
        let mut lo = self.lo.clone();
        lo.exp_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.exp_round(Round::Up);
        Ball::from_endpoints(lo, hi)
    }

    pub fn atan(&self) -> Ball {
        if self.lo.is_nan() || self.hi.is_nan() {
            return Ball::whole_line(self.precision());
        }
        let mut lo = self.lo.clone();
        lo.atan_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.atan_round(Round::Up);
        Ball::from_endpoints(lo, hi)
    }

    /// Encloses `sin` over the ball. Endpoint evaluations are correctly
    /// rounded by MPFR (argument reduction happens internally at full
    /// precision); interior extrema are detected by locating integers in
    /// `(self ∓ π/2) / 2π`, conservatively.
    pub fn sin(&self) -> Ball {
        self.sin_or_cos(true)
    }

    pub fn cos(&self) -> Ball {
        self.sin_or_cos(false)
    }

    fn sin_or_cos(&self, is_sin: bool) -> Ball {
        let prec = self.precision();
        let p = prec.bits();
        let clamp = || {
            Ball {
                lo: Float::with_val(p, -1),
                hi: Float::with_val(p, 1),
            }
        };
        if !self.is_finite() {
            return clamp();
        }
        // If the width cannot be resolved below a period, give up early.
        let two_pi = pi_ball(prec) * &Ball::from_i64(prec, 2);
        if !(self.width() < two_pi.lo) {
            return clamp();
        }
        // Arguments so large that one ulp exceeds 1 look like full periods.
        if let Some(e) = self.hi.get_exp().or(self.lo.get_exp()) {
            if i64::from(e) > i64::from(p) {
                return clamp();
            }
        }
        let eval = |x: &Float| -> (Float, Float) {
            let mut lo = x.clone();
            let mut hi = x.clone();
            if is_sin {
                lo.sin_round(Round::Down);
                hi.sin_round(Round::Up);
            } else {
                lo.cos_round(Round::Down);
                hi.cos_round(Round::Up);
            }
            (lo, hi)
        };
        let (a_lo, a_hi) = eval(&self.lo);
        let (b_lo, b_hi) = eval(&self.hi);
        let mut lo = if a_lo <= b_lo { a_lo } else { b_lo };
        let mut hi = if a_hi >= b_hi { a_hi } else { b_hi };
        // Maxima of sin at pi/2 + 2*pi*k; of cos at 2*pi*k.
        // Minima of sin at -pi/2 + 2*pi*k; of cos at pi + 2*pi*k.
        let half_pi = pi_ball(prec) * &Ball::from_rational(prec, &Rational::from((1, 2)));
        let pi_b = pi_ball(prec);
        let (max_shift, min_shift) = if is_sin {
            (half_pi.neg(), half_pi.clone())
        } else {
            (Ball::zero(prec), pi_b.neg())
        };
        let contains_extremum = |shift: &Ball| -> bool {
            let t = (self + shift).div_impl(&two_pi);
            ball_contains_integer(&t)
        };
        if contains_extremum(&max_shift) {
            hi = Float::with_val(p, 1);
        }
        if contains_extremum(&min_shift) {
            lo = Float::with_val(p, -1);
        }
        if lo < -1 {
            lo = Float::with_val(p, -1);
        }
        if hi > 1 {
            hi = Float::with_val(p, 1);
        }
        Ball::from_endpoints(lo, hi)
    }

    pub fn sin_cos(&self) -> (Ball, Ball) {
        (self.sin(), self.cos())
    }

    // ---- serialization ----

    /// Decimal endpoints with `sig` significant digits, rounded outward
    /// through exact rational arithmetic (printing never tightens).
    pub fn to_decimal_pair(&self, sig: usize) -> (String, String) {
        (
            float_to_decimal(&self.lo, sig, Round::Down),
            float_to_decimal(&self.hi, sig, Round::Up),
        )
    }
}

/// Conservative test for "contains an integer"; errs toward `true`.
fn ball_contains_integer(b: &Ball) -> bool {
    if !b.is_finite() {
        return true;
    }
    if let Some(e) = b.hi.get_exp().or(b.lo.get_exp()) {
        if i64::from(e) > i64::from(b.prec()) {
            return true;
        }
    }
    let fl = b.hi.clone().floor();
    let cl = b.lo.clone().ceil();
    fl >= cl
}

impl Neg for &Ball {
    type Output = Ball;
    fn neg(self) -> Ball {
        Ball::neg(self)
    }
}

macro_rules! bin_op {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&Ball> for &Ball {
            type Output = Ball;
            fn $method(self, rhs: &Ball) -> Ball {
                self.$impl_fn(rhs)
            }
        }
        impl $trait<&Ball> for Ball {
            type Output = Ball;
            fn $method(self, rhs: &Ball) -> Ball {
                (&self).$impl_fn(rhs)
            }
        }
        impl $trait<Ball> for &Ball {
            type Output = Ball;
            fn $method(self, rhs: Ball) -> Ball {
                self.$impl_fn(&rhs)
            }
        }
        impl $trait<Ball> for Ball {
            type Output = Ball;
            fn $method(self, rhs: Ball) -> Ball {
                (&self).$impl_fn(&rhs)
            }
        }
    };
}

bin_op!(Add, add, add_impl);
bin_op!(Sub, sub, sub_impl);
bin_op!(Mul, mul, mul_impl);
bin_op!(Div, div, div_impl);

// ---- constants ----

pub(crate) fn pi_ball(prec: Precision) -> Ball {
    let p = prec.bits();
    Ball::from_floats(
        Float::with_val_round(p, Constant::Pi, Round::Down).0,
        Float::with_val_round(p, Constant::Pi, Round::Up).0,
    )
}

pub(crate) fn ln2_ball(prec: Precision) -> Ball {
    let p = prec.bits();
    Ball::from_floats(
        Float::with_val_round(p, Constant::Log2, Round::Down).0,
        Float::with_val_round(p, Constant::Log2, Round::Up).0,
    )
}

pub(crate) fn euler_ball(prec: Precision) -> Ball {
    let p = prec.bits();
    Ball::from_floats(
        Float::with_val_round(p, Constant::Euler, Round::Down).0,
        Float::with_val_round(p, Constant::Euler, Round::Up).0,
    )
}

// ---- complex rectangles ----

/// A rectangular enclosure of a complex number.
#[derive(Clone, Debug, PartialEq)]
pub struct CBall {
    pub re: Ball,
    pub im: Ball,
}

impl CBall {
    pub fn new(re: Ball, im: Ball) -> CBall {
        CBall { re, im }
    }

    pub fn from_re(re: Ball) -> CBall {
        let prec = re.precision();
        CBall { re, im: Ball::zero(prec) }
    }

    pub fn zero(prec: Precision) -> CBall {
        CBall { re: Ball::zero(prec), im: Ball::zero(prec) }
    }

    pub fn precision(&self) -> Precision {
        self.re.precision().max(self.im.precision())
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> CBall {
        CBall { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn neg(&self) -> CBall {
        CBall { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn add(&self, other: &CBall) -> CBall {
        CBall { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn sub(&self, other: &CBall) -> CBall {
        CBall { re: &self.re - &other.re, im: &self.im - &other.im }
    }

    pub fn mul(&self, other: &CBall) -> CBall {
        let re = &(&self.re * &other.re) - &(&self.im * &other.im);
        let im = &(&self.re * &other.im) + &(&self.im * &other.re);
        CBall { re, im }
    }

    pub fn mul_ball(&self, other: &Ball) -> CBall {
        CBall { re: &self.re * other, im: &self.im * other }
    }

    /// `re² + im²`, tightened with the one-sided square.
    pub fn abs_sq(&self) -> Ball {
        &self.re.sq() + &self.im.sq()
    }

    pub fn abs(&self) -> Ball {
        let sq = self.abs_sq();
        if sq.is_strictly_positive() {
            sq.sqrt().expect("positive by construction")
        } else {
            // Rectangle touches the origin: |z| in [0, sqrt(hi)].
            let prec = sq.precision();
            let mut hi = sq.hi().clone();
            hi.sqrt_round(Round::Up);
            Ball::from_floats(Float::new(prec.bits()), hi)
        }
    }

    pub fn recip(&self) -> Result<CBall> {
        let d = self.abs_sq();
        if d.contains_zero() {
            return Err(Error::domain("complex reciprocal of a rectangle containing zero"));
        }
        Ok(CBall {
            re: self.re.checked_div(&d)?,
            im: self.im.neg().checked_div(&d)?,
        })
    }

    pub fn checked_div(&self, other: &CBall) -> Result<CBall> {
        Ok(self.mul(&other.recip()?))
    }

    /// `exp(z) = e^re (cos im + i sin im)`.
    pub fn exp(&self) -> CBall {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        CBall { re: &m * &c, im: &m * &s }
    }

    /// Principal log, restricted to rectangles strictly in the right
    /// half-plane (all the shifted arguments this crate ever takes logs of).
    pub fn ln_right_half(&self) -> Result<CBall> {
        if !self.re.is_strictly_positive() {
            return Err(Error::domain("complex log restricted to Re > 0"));
        }
        let half = Ball::from_rational(self.precision(), &Rational::from((1, 2)));
        let re = &self.abs_sq().ln()? * &half;
        let im = self.im.checked_div(&self.re)?.atan();
        Ok(CBall { re, im })
    }
}

/// `k^(z-1) = exp((z-1) log k)`, with the working precision raised
/// internally so that `Im(z)·log k` keeps its fractional bits through
/// argument reduction. The result is reported at the precision of `z`.
pub fn complex_power_inverse(k: u64, z: &CBall) -> Result<CBall> {
    if k == 0 {
        return Err(Error::domain("k must be a positive integer"));
    }
    let prec = z.precision();
    if k == 1 {
        return Ok(CBall::new(Ball::one(prec), Ball::zero(prec)));
    }
    if !z.is_finite() {
        return Err(Error::Precision(
            "cannot reduce cos/sin argument for a non-finite exponent".into(),
        ));
    }
    // Bits consumed by the integer part of y·log k before reduction mod 2π.
    let y_exp = z.im.hi().get_exp().unwrap_or(0).max(z.im.lo().get_exp().unwrap_or(0)).max(0);
    let needed = prec.bits() as u64 + y_exp as u64 + 16;
    if needed > Precision::MAX_BITS as u64 {
        return Err(Error::Precision(format!(
            "argument reduction of k^(z-1) needs {needed} bits (cap {})",
            Precision::MAX_BITS
        )));
    }
    let work = Precision::new(needed as u32)?;
    let log_k = Ball::from_u64(work, k).ln()?;
    let zm1 = CBall {
        re: &Ball::from_floats(
            Float::with_val_round(work.bits(), z.re.lo(), Round::Down).0,
            Float::with_val_round(work.bits(), z.re.hi(), Round::Up).0,
        ) - &Ball::one(work),
        im: Ball::from_floats(
            Float::with_val_round(work.bits(), z.im.lo(), Round::Down).0,
            Float::with_val_round(work.bits(), z.im.hi(), Round::Up).0,
        ),
    };
    let w = zm1.mul_ball(&log_k);
    let out = w.exp();
    // Round back to the caller's precision.
    let down = |b: &Ball| {
        Ball::from_floats(
            Float::with_val_round(prec.bits(), b.lo(), Round::Down).0,
            Float::with_val_round(prec.bits(), b.hi(), Round::Up).0,
        )
    };
    Ok(CBall { re: down(&out.re), im: down(&out.im) })
}

// ---- decimal parsing / printing ----

/// Parses a plain or scientific decimal literal into an exact rational.
pub fn parse_decimal_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::validation(format!("malformed decimal literal {s:?}"));
    if s.is_empty() {
        return Err(err());
    }
    let (mant, exp10) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().map_err(|_| err())?;
            (&s[..i], e)
        }
        None => (s, 0i64),
    };
    let (mant, neg) = match mant.strip_prefix('-') {
        Some(rest) => (rest, true),
        None => (mant.strip_prefix('+').unwrap_or(mant), false),
    };
    let (int_part, frac_part) = match mant.find('.') {
        Some(i) => (&mant[..i], &mant[i + 1..]),
        None => (mant, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{int_part}{frac_part}");
    let num = Integer::from_str_radix(if digits.is_empty() { "0" } else { &digits }, 10)
        .map_err(|_| err())?;
    let shift = exp10 - frac_part.len() as i64;
    let mut r = Rational::from(num);
    let ten = Integer::from(10);
    if shift >= 0 {
        r *= Rational::from(Integer::from((&ten).pow(u32::try_from(shift).expect("exponent fits"))));
    } else {
        r /= Rational::from(Integer::from((&ten).pow(u32::try_from(-shift).expect("exponent fits"))));
    }
    if neg {
        r = -r;
    }
    Ok(r)
}

/// Formats a float as a decimal with `sig` significant digits, rounded in
/// the given direction, going through the exact rational value.
pub fn float_to_decimal(f: &Float, sig: usize, dir: Round) -> String {
    let sig = sig.max(1);
    if f.is_nan() {
        return "nan".into();
    }
    if f.is_infinite() {
        return if f.is_sign_negative() { "-inf".into() } else { "inf".into() };
    }
    if f.is_zero() {
        return "0".into();
    }
    let r = f.to_rational().expect("finite float is rational");
    let neg = r < 0;
    let a = r.abs();
    // Find e10 with 10^(e10-1) <= a < 10^e10.
    let approx = {
        let e2 = f.get_exp().unwrap_or(0);
        // log10(2) ≈ 0.30103; over/under-estimation fixed up below.
        (e2 as f64 * 0.301_029_995_663_981_2).floor() as i64
    };
    let mut e10 = approx;
    let pow10 = |k: i64| -> Rational {
        let p = Integer::from(Integer::from(10).pow(u32::try_from(k.unsigned_abs()).expect("exponent fits")));
        if k >= 0 { Rational::from(p) } else { Rational::from((Integer::from(1), p)) }
    };
    while a >= pow10(e10) {
        e10 += 1;
    }
    while a < pow10(e10 - 1) {
        e10 -= 1;
    }
    // Scale to sig integer digits and round outward in the right direction.
    let scaled = a.clone() * pow10(sig as i64 - e10);
    let (fl, rem) = scaled.into_numer_denom();
    let (q, rm) = fl.div_rem_floor(rem);
    let round_up_mag = !rm.is_zero() && (neg == matches!(dir, Round::Down));
    let mut digits = q;
    if round_up_mag {
        digits += 1;
    }
    let mut ds = digits.to_string();
    if ds.len() > sig {
        // Carried into an extra digit (e.g. 999.. -> 1000..).
        e10 += 1;
        ds.truncate(sig);
    }
    let mantissa = if sig == 1 {
        ds
    } else {
        format!("{}.{}", &ds[..1], &ds[1..])
    };
    let exp = e10 - 1;
    let sign = if neg { "-" } else { "" };
    if exp == 0 {
        format!("{sign}{mantissa}")
    } else {
        format!("{sign}{mantissa}e{exp}")
    }
}

impl PartialOrd for Ball {
    /// Partial order by certain separation; overlapping balls are unordered.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self == other {
            Some(Ordering::Equal)
        } else if self.strictly_lt(other) {
            Some(Ordering::Less)
        } else if self.strictly_gt(other) {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}
