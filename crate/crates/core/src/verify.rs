//! The decision engine: the per-zero-pair contribution function φ and its
//! case analysis, the theorem threshold functions, the explicit tail bounds
//! for zeta at large height, and verdict evaluation with maximal-window
//! search.
//!
//! A verdict is `Verified` only under strict enclosure separation
//! (`inf lhs > sup rhs`, reversed for incompleteness); ties and overlaps
//! are `Inconclusive`. Widening any input ball can therefore never turn an
//! inconclusive verdict into a verified one.

use rug::Rational;

use crate::ball::{pi_ball, Ball, CBall, Precision};
use crate::error::{Error, Result};
use crate::lmodel::{LFunctionParams, Parity};
use crate::logderiv::{zero_sum_shifted, zeta_zero_sum_re};
use crate::zeros::{IntervalKind, ZeroMode, ZeroSet};

// ---- the contribution function ----

/// `φ(β, η, x) = (β-x)/((β-x)²+η²) + (1-β-x)/((1-β-x)²+η²)`: the joint
/// contribution of a zero `β+i(y+η)` and its reflection to the real part
/// of the zero sum expanded at `x + iy`. Nonnegative for `0 ≤ β ≤ 1`,
/// `x ≤ 0`.
pub fn phi(beta: &Ball, eta: &Ball, x: &Ball) -> Ball {
    let one = Ball::one(beta.precision().max(eta.precision()).max(x.precision()));
    let eta_sq = eta.sq();
    let a = beta - x;
    let b = &(&one - beta) - x;
    let first = &a / &(&a.sq() + &eta_sq);
    let second = &b / &(&b.sq() + &eta_sq);
    &first + &second
}

/// Where the β-minimum of φ sits for the given `η`, `x`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PhiMinLocation {
    /// `β = 1/2` (η below the transition threshold `√(x(x-1)/3)`).
    Center,
    /// `β = 0` (equivalently `β = 1`).
    Edge,
    /// The η ball straddles the threshold; the value is the minimum of the
    /// two candidates, which is always a valid lower bound.
    Either,
}

/// Minimum of `φ(·, η, x)` over `β ∈ [0, 1]`.
pub fn phi_min(eta: &Ball, x: &Ball) -> Result<(PhiMinLocation, Ball)> {
    if x.is_strictly_positive() {
        return Err(Error::domain("phi minimization requires x ≤ 0"));
    }
    if eta.is_strictly_negative() {
        return Err(Error::domain("phi minimization requires η ≥ 0"));
    }
    let prec = eta.precision().max(x.precision());
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let zero = Ball::zero(prec);
    let three = Ball::from_i64(prec, 3);
    // Compare η² with x(x-1)/3, avoiding a square root.
    let threshold_sq = (&x.sq() - x).checked_div(&three)?;
    let eta_sq = eta.sq();
    let center = phi(&half, eta, x);
    let edge = phi(&zero, eta, x);
    if eta_sq.strictly_lt(&threshold_sq) {
        Ok((PhiMinLocation::Center, center))
    } else if eta_sq.strictly_gt(&threshold_sq) {
        Ok((PhiMinLocation::Edge, edge))
    } else {
        Ok((PhiMinLocation::Either, center.min_ball(&edge)))
    }
}

/// `ι(η) = min(1/(1+η²) + 2/(4+η²), 12/(9+4η²))`: the minimal contribution
/// of a hypothetical counterexample pair of height ≤ η at shift `-1`.
pub fn iota(eta: &Ball) -> Result<Ball> {
    if !eta.is_strictly_positive() {
        return Err(Error::domain("ι(η) requires η > 0"));
    }
    let prec = eta.precision();
    let one = Ball::one(prec);
    let two = Ball::from_i64(prec, 2);
    let four = Ball::from_i64(prec, 4);
    let nine = Ball::from_i64(prec, 9);
    let twelve = Ball::from_i64(prec, 12);
    let eta_sq = eta.sq();
    let first = &one.checked_div(&(&one + &eta_sq))? + &two.checked_div(&(&four + &eta_sq))?;
    let second = twelve.checked_div(&(&nine + &(&four * &eta_sq)))?;
    Ok(first.min_ball(&second))
}

// ---- threshold functions ----

/// Thresholds of the five-part window theorem for `L`-functions.
#[derive(Clone, Debug)]
pub struct LThresholds {
    pub f1: Ball,
    pub f2: Ball,
    pub h1: Ball,
    pub h2: Ball,
    pub complete: Ball,
}

pub fn l_thresholds(eta: &Ball, delta: &Ball, m: u32, prec: Precision) -> Result<LThresholds> {
    if m == 0 {
        return Err(Error::validation("the count parameter m must be at least 1"));
    }
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let zero = Ball::zero(prec);
    let two = Ball::from_i64(prec, 2);
    let m_ball = Ball::from_u64(prec, u64::from(m));
    let phi_edge = phi(&zero, eta, delta);
    let phi_center = phi(&half, eta, delta);
    let phi_center_0 = phi(&half, &zero, delta);
    let min_pair = phi_edge.min_ball(&phi_center);
    let f1 = &(&two * &m_ball) * &min_pair;
    let f2 = &m_ball * &phi_center;
    let h1 = &m_ball * &phi_center_0;
    let h2 = &(&m_ball * &half) * &phi_center_0;
    let complete = (&two * &phi_edge)
        .min_ball(&phi_center)
        .min_ball(&(&half * &phi_center_0));
    Ok(LThresholds { f1, f2, h1, h2, complete })
}

/// Thresholds of the three-part window theorem for zeta.
#[derive(Clone, Debug)]
pub struct ZetaThresholds {
    pub g1: Ball,
    pub g2: Ball,
    pub g3: Ball,
}

pub fn zeta_thresholds(eta: &Ball, x: &Ball, prec: Precision) -> Result<ZetaThresholds> {
    if !eta.is_strictly_positive() {
        return Err(Error::domain("window thresholds require η > 0"));
    }
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let zero = Ball::zero(prec);
    let phi_edge = phi(&zero, eta, x);
    let phi_center = phi(&half, eta, x);
    let g1 = phi_edge.min_ball(&phi_center);
    let g2 = phi_center.clone();
    let g3 = phi_edge.min_ball(&(&half * &phi_center));
    Ok(ZetaThresholds { g1, g2, g3 })
}

// ---- explicit bounds on S(u) and the zeros-sum tail ----

/// `ℓ(u) = 0.112 log u + 0.278 log log u + 2.510` and
/// `ℓ₁(u) = 0.059 log u + 2.067`, valid for `u > 168π`.
#[derive(Clone, Debug)]
pub struct SBounds {
    pub ell: Ball,
    pub ell1: Ball,
}

pub fn s_bounds(u: &Ball) -> Result<SBounds> {
    let prec = u.precision();
    let cap = &Ball::from_i64(prec, 168) * &pi_ball(prec);
    if !u.strictly_gt(&cap) {
        return Err(Error::domain("S(u) bounds require 168π < u"));
    }
    let log_u = u.ln()?;
    let log_log_u = log_u.ln()?;
    let c = |num: i64, den: i64| Ball::from_rational(prec, &Rational::from((num, den)));
    let ell = &(&(&c(112, 1000) * &log_u) + &(&c(278, 1000) * &log_log_u)) + &c(2510, 1000);
    let ell1 = &(&c(59, 1000) * &log_u) + &c(2067, 1000);
    Ok(SBounds { ell, ell1 })
}

/// The ε₁–ε₆ / b / B bundle bounding the zeros-sum contribution outside the
/// data window, together with the resulting two-sided tail estimates.
#[derive(Clone, Debug)]
pub struct TailBounds {
    pub eps1: Ball,
    pub eps2: Ball,
    pub eps3: Ball,
    pub eps4: Ball,
    pub eps5: Ball,
    pub eps6: Ball,
    pub ell: Ball,
    pub ell1: Ball,
    pub b: Ball,
    pub big_b: Ball,
    /// `r = (1-2x)/(2πτ) log(y/2π) - b`: certified lower bound on the tail
    /// of the zero sum over `|γ - y| > τ`.
    pub r_lower: Ball,
    /// `R = (1-2x)/(2πτ) log(y/2π) + B`: certified upper bound.
    pub r_upper: Ball,
}

/// Evaluates the tail bounds at `z = x + iy` with window half-width `τ` and
/// split point `c`. Preconditions (each reported by name on violation):
/// `x < 0`, `1-2x < τ`, `τ < y`, `168π < c`, `c < y - τ`.
pub fn tail_bounds(z: &CBall, tau: &Ball, c: &Ball) -> Result<TailBounds> {
    let prec = z.precision().max(tau.precision()).max(c.precision());
    let x = &z.re;
    let y = &z.im;
    let one = Ball::one(prec);
    let two = Ball::from_i64(prec, 2);
    let three = Ball::from_i64(prec, 3);
    let four = Ball::from_i64(prec, 4);
    let pi = pi_ball(prec);
    let one_minus_2x = &one - &(&two * x);

    if !x.is_strictly_negative() {
        return Err(Error::domain("tail bounds require x<0"));
    }
    if !tau.strictly_gt(&one_minus_2x) {
        return Err(Error::domain("tail bounds require 1-2x<τ"));
    }
    if !y.strictly_gt(tau) {
        return Err(Error::domain("tail bounds require τ<y"));
    }
    let pi168 = &Ball::from_i64(prec, 168) * &pi;
    if !c.strictly_gt(&pi168) {
        return Err(Error::domain("tail bounds require 168π<c"));
    }
    let y_minus_tau = y - tau;
    if !y_minus_tau.strictly_gt(c) {
        return Err(Error::domain("tail bounds require c<y-τ"));
    }

    let two_y = &two * y;
    let sb = s_bounds(&two_y)?;
    let y_minus_c = y - c;
    let tau_sq = tau.sq();
    let tau_cubed = &tau_sq * tau;

    // Evaluation order fixed as written, for reproducible golden enclosures.
    let c0006 = Ball::from_rational(prec, &Rational::from((6, 1000)));
    let eps1 = &(&(&four * &pi.sq()) * &c0006)
        * &(&(y + tau).sq().recip()? + &c.sq().recip()?);
    let eps2 = &one_minus_2x.checked_div(&two_y)? * &two_y.checked_div(c)?.ln()?;
    let eps3 = &(&(&one - x).sq().checked_div(&(&three * &tau_cubed))? + &y_minus_c.recip()?)
        * &one_minus_2x;
    let two_minus_4x = &two * &one_minus_2x;
    let eps4 = &(&two_minus_4x.checked_div(&tau_sq)? + &two_minus_4x.checked_div(&y_minus_c.sq())?)
        * &sb.ell;
    let eps5 = &(&two * &two_minus_4x).checked_div(&tau_cubed)? * &sb.ell1;
    let two_y_minus_c = &two_y - c;
    let eps6 = &one_minus_2x.checked_div(&two_y)?
        * &(&(&two_y_minus_c.sq() * &two_y_minus_c.ln()?) - &(&y_minus_c.sq() * &y_minus_c.ln()?))
            .checked_div(&(&pi * &y_minus_c.sq()))?;

    let two_pi = &two * &pi;
    let inv_two_pi = two_pi.recip()?;
    let eps1_term = &eps1 * &one_minus_2x.checked_div(tau)?;
    let log_y_2pi = y.checked_div(&two_pi)?.ln()?;
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let eps45_half = &(&eps4 + &eps5) * &half;
    let b = &(&inv_two_pi * &(&(&eps1_term + &eps2) + &(&eps3 * &log_y_2pi))) + &eps45_half;
    let big_b = &(&(&inv_two_pi * &(&eps1_term + &eps2)) + &eps45_half) + &eps6;
    let main = &one_minus_2x.checked_div(&(&two_pi * tau))? * &log_y_2pi;
    let r_lower = &main - &b;
    let r_upper = &main + &big_b;
    Ok(TailBounds {
        eps1,
        eps2,
        eps3,
        eps4,
        eps5,
        eps6,
        ell: sb.ell,
        ell1: sb.ell1,
        b,
        big_b,
        r_lower,
        r_upper,
    })
}

/// The closed-form majorant `κ(y, τ)` of `b(-1 + iy, τ, y/2)`:
/// `0.57/(τy²) + 3 log 2/(2πy) + 2 log(y/2π)/(πτ³) + 3 log(y/2π)/(πy)
///  + 12 ℓ(2y)/y² + 6 ℓ₁(2y)/τ³`, for `3 < τ ≤ y/2` and `336π < y - τ`.
pub fn kappa(y: &Ball, tau: &Ball) -> Result<Ball> {
    let prec = y.precision().max(tau.precision());
    let two = Ball::from_i64(prec, 2);
    let three = Ball::from_i64(prec, 3);
    let pi = pi_ball(prec);
    if !tau.strictly_gt(&three) {
        return Err(Error::domain("κ requires 3<τ"));
    }
    let y_half = y.checked_div(&two)?;
    if tau.hi() > y_half.lo() {
        return Err(Error::domain("κ requires τ≤y/2"));
    }
    let pi336 = &Ball::from_i64(prec, 336) * &pi;
    if !(y - tau).strictly_gt(&pi336) {
        return Err(Error::domain("κ requires 336π<y-τ"));
    }
    let c = |num: i64, den: i64| Ball::from_rational(prec, &Rational::from((num, den)));
    let two_y = &two * y;
    let sb = s_bounds(&two_y)?;
    let y_sq = y.sq();
    let tau_cubed = &tau.sq() * tau;
    let log_y_2pi = y.checked_div(&(&two * &pi))?.ln()?;
    let ln2 = crate::ball::ln2_ball(prec);
    let t1 = c(57, 100).checked_div(&(tau * &y_sq))?;
    let t2 = (&three * &ln2).checked_div(&(&(&two * &pi) * y))?;
    let t3 = (&two * &log_y_2pi).checked_div(&(&pi * &tau_cubed))?;
    let t4 = (&three * &log_y_2pi).checked_div(&(&pi * y))?;
    let t5 = (&Ball::from_i64(prec, 12) * &sb.ell).checked_div(&y_sq)?;
    let t6 = (&Ball::from_i64(prec, 6) * &sb.ell1).checked_div(&tau_cubed)?;
    Ok(&(&(&(&(&t1 + &t2) + &t3) + &t4) + &t5) + &t6)
}

// ---- verdicts ----

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum StatementKind {
    /// Every zero in the window lies on the critical line.
    RhWindow,
    /// Strictly fewer than `4m` non-real zeros off the critical line in the
    /// window.
    OffLineCount { m: u32 },
    /// Strictly fewer than `2m` on-line zeros in the window unaccounted for
    /// by the supplied list.
    OnLineMissing { m: u32 },
    /// Strictly fewer than `2m` real zeros off the critical line.
    RealZeros { m: u32 },
    /// Central-point multiplicity strictly below `m`.
    CentralMultiplicity { m: u32 },
    /// The supplied list accounts for every zero in the window, all simple
    /// and on the critical line.
    Completeness,
    /// The supplied list misses at least one zero of the data window.
    Incompleteness,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Verified,
    Inconclusive,
}

/// One evaluated theorem inequality.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub kind: StatementKind,
    /// Window half-width `η` the statement refers to, when applicable.
    pub eta: Option<Ball>,
    pub lhs: Ball,
    pub rhs: Ball,
    pub status: VerdictStatus,
}

impl Verdict {
    fn decide(kind: StatementKind, eta: Option<Ball>, lhs: Ball, rhs: Ball) -> Verdict {
        let verified = match kind {
            StatementKind::Incompleteness => rhs.strictly_gt(&lhs),
            _ => lhs.strictly_gt(&rhs),
        };
        let ok = verified && lhs.is_finite() && rhs.is_finite();
        Verdict {
            kind,
            eta,
            lhs,
            rhs,
            status: if ok { VerdictStatus::Verified } else { VerdictStatus::Inconclusive },
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == VerdictStatus::Verified
    }
}

/// Parts of the `L`-function window theorem.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LPart {
    OffLine,
    OnLineMissing,
    RealZeros,
    CentralMultiplicity,
    Complete,
}

impl LPart {
    pub const ALL: [LPart; 5] = [
        LPart::OffLine,
        LPart::OnLineMissing,
        LPart::RealZeros,
        LPart::CentralMultiplicity,
        LPart::Complete,
    ];
}

/// The expensive inputs of the `L`-function verdicts, computed once:
/// the zero-sum constant and the known-zero contribution.
#[derive(Clone, Debug)]
pub struct PreparedL {
    pub w1: Ball,
    pub c_known: Ball,
    delta: Ball,
    m: u32,
    prec: Precision,
}

/// Computes the zero sum from the instance datum and the known-zero sum
/// from the list. `δ < 0`; the truncation point `K` controls the zero-sum
/// radius.
pub fn prepare_l(
    params: &LFunctionParams,
    zset: &ZeroSet,
    delta: &Ball,
    m: u32,
    k_limit: u64,
    prec: Precision,
) -> Result<PreparedL> {
    validate_central_parity(params, zset)?;
    let w1 = zero_sum_shifted(params, delta, k_limit, prec)?;
    prepare_l_with_w1(&w1, zset, delta, m, prec)
}

/// Variant with a caller-supplied zero-sum value (the only route for
/// `δ = 0`, where the logarithmic derivative needs an exact special value).
pub fn prepare_l_with_w1(
    w1: &Ball,
    zset: &ZeroSet,
    delta: &Ball,
    m: u32,
    prec: Precision,
) -> Result<PreparedL> {
    if m == 0 {
        return Err(Error::validation("the count parameter m must be at least 1"));
    }
    if delta.is_strictly_positive() {
        return Err(Error::domain("verdicts require δ ≤ 0"));
    }
    if matches!(zset.mode(), ZeroMode::Zeta { .. }) {
        return Err(Error::validation("L-function verdicts need an L-mode zero set"));
    }
    let c_known = zset.c_sum(delta, prec)?;
    Ok(PreparedL {
        w1: w1.clone(),
        c_known,
        delta: delta.clone(),
        m,
        prec,
    })
}

fn validate_central_parity(params: &LFunctionParams, zset: &ZeroSet) -> Result<()> {
    if params.parity() == Some(Parity::Odd) {
        for iv in zset.intervals() {
            if iv.kind == IntervalKind::Symmetric && iv.multiplicity % 2 == 0 {
                return Err(Error::validation(
                    "odd root-number parity requires odd multiplicity on the central interval",
                ));
            }
        }
    }
    Ok(())
}

impl PreparedL {
    pub fn verdict(&self, part: LPart, eta: &Ball) -> Result<Verdict> {
        let th = l_thresholds(eta, &self.delta, self.m, self.prec)?;
        let (kind, threshold, needs_eta) = match part {
            LPart::OffLine => {
                let kind = if self.m == 1 {
                    StatementKind::RhWindow
                } else {
                    StatementKind::OffLineCount { m: self.m }
                };
                (kind, th.f1, true)
            }
            LPart::OnLineMissing => (StatementKind::OnLineMissing { m: self.m }, th.f2, true),
            LPart::RealZeros => (StatementKind::RealZeros { m: self.m }, th.h1, false),
            LPart::CentralMultiplicity => {
                (StatementKind::CentralMultiplicity { m: self.m }, th.h2, false)
            }
            LPart::Complete => (StatementKind::Completeness, th.complete, true),
        };
        let lhs = &threshold + &self.c_known;
        Ok(Verdict::decide(
            kind,
            needs_eta.then(|| eta.clone()),
            lhs,
            self.w1.clone(),
        ))
    }

    pub fn verdicts(&self, eta: &Ball) -> Result<Vec<Verdict>> {
        LPart::ALL.iter().map(|p| self.verdict(*p, eta)).collect()
    }
}

/// Parts of the zeta window theorem and its counterpart.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ZetaPart {
    RhWindow,
    Simplicity,
    Completeness,
    Incompleteness,
}

/// The expensive inputs of the zeta verdicts, computed once.
#[derive(Clone, Debug)]
pub struct PreparedZeta {
    pub v_re: Ball,
    pub d_known: Ball,
    pub d_known_upper: Ball,
    pub tail: Option<TailBounds>,
    x: Ball,
    y: Rational,
    prec: Precision,
}

/// Prepares the zeta verdicts at `z = x + iy` (`x < 0`; `Im z` must contain
/// the zero set's center). With `tail = Some((τ, c))` the prepared verdicts
/// use the improved inequalities, and every interval must lie inside
/// `[y - τ, y + τ]`.
pub fn prepare_zeta(
    z: &CBall,
    zset: &ZeroSet,
    k_limit: u64,
    tail: Option<(&Ball, &Ball)>,
    prec: Precision,
) -> Result<PreparedZeta> {
    let y = match zset.mode() {
        ZeroMode::Zeta { y } => y.clone(),
        ZeroMode::LFunction => {
            return Err(Error::validation("zeta verdicts need a zeta-mode zero set"));
        }
    };
    if !z.im.contains_rational(&y) {
        return Err(Error::validation(
            "Im z must contain the zero set's expansion height",
        ));
    }
    if !z.re.is_strictly_negative() {
        return Err(Error::domain("the zero-sum route requires x < 0"));
    }
    let tail = match tail {
        None => None,
        Some((tau, c)) => {
            let tb = tail_bounds(z, tau, c)?;
            // Data window containment: every interval inside [y-τ, y+τ].
            let y_ball = Ball::from_rational(prec, &y);
            let lo_cap = &y_ball - tau;
            let hi_cap = &y_ball + tau;
            for iv in zset.intervals() {
                let iv_lo = Ball::from_rational(prec, &iv.lo);
                let iv_hi = Ball::from_rational(prec, &iv.hi);
                if !(iv_lo.lo() >= lo_cap.hi() && iv_hi.hi() <= hi_cap.lo()) {
                    return Err(Error::validation(format!(
                        "interval [{}, {}] not provably inside the data window [y-τ, y+τ]",
                        iv.lo, iv.hi
                    )));
                }
            }
            Some(tb)
        }
    };
    let v_re = zeta_zero_sum_re(z, k_limit, prec)?;
    let d_known = zset.d_sum(z, prec)?;
    let d_known_upper = zset.d_sum_upper(z, prec)?;
    Ok(PreparedZeta {
        v_re,
        d_known,
        d_known_upper,
        tail,
        x: z.re.clone(),
        y,
        prec,
    })
}

impl PreparedZeta {
    /// Evaluates one part at window half-width `η` (`0 < η ≤ y`).
    pub fn verdict(&self, part: ZetaPart, eta: &Ball) -> Result<Verdict> {
        if part == ZetaPart::Incompleteness {
            let tail = self.tail.as_ref().ok_or_else(|| {
                Error::validation("the incompleteness test needs tail bounds (τ, c)")
            })?;
            // Sound upper bound on everything the list plus the far tail can
            // contribute: near-endpoint D plus R.
            let lhs = &self.d_known_upper + &tail.r_upper;
            return Ok(Verdict::decide(
                StatementKind::Incompleteness,
                None,
                lhs,
                self.v_re.clone(),
            ));
        }
        if !eta.is_strictly_positive() {
            return Err(Error::domain("verdicts require η > 0"));
        }
        if !(eta.hi().clone() <= Ball::from_rational(self.prec, &self.y).lo().clone()) {
            return Err(Error::domain("zeta verdicts require η ≤ y"));
        }
        let th = zeta_thresholds(eta, &self.x, self.prec)?;
        let (kind, threshold) = match part {
            ZetaPart::RhWindow => (StatementKind::RhWindow, th.g1),
            ZetaPart::Simplicity => (StatementKind::OnLineMissing { m: 1 }, th.g2),
            ZetaPart::Completeness => (StatementKind::Completeness, th.g3),
            ZetaPart::Incompleteness => unreachable!(),
        };
        let mut lhs = &threshold + &self.d_known;
        if let Some(tail) = &self.tail {
            lhs = &lhs + &tail.r_lower;
        }
        Ok(Verdict::decide(kind, Some(eta.clone()), lhs, self.v_re.clone()))
    }

    pub fn verdicts(&self, eta: &Ball, include_counterpart: bool) -> Result<Vec<Verdict>> {
        let mut out = vec![
            self.verdict(ZetaPart::RhWindow, eta)?,
            self.verdict(ZetaPart::Simplicity, eta)?,
            self.verdict(ZetaPart::Completeness, eta)?,
        ];
        if include_counterpart {
            out.push(self.verdict(ZetaPart::Incompleteness, eta)?);
        }
        Ok(out)
    }
}

/// Convenience: all five `L`-function verdicts in one call.
pub fn verdict_l(
    params: &LFunctionParams,
    zset: &ZeroSet,
    delta: &Ball,
    eta: &Ball,
    m: u32,
    k_limit: u64,
    prec: Precision,
) -> Result<Vec<Verdict>> {
    prepare_l(params, zset, delta, m, k_limit, prec)?.verdicts(eta)
}

/// Convenience: the zeta verdicts, basic or improved.
pub fn verdict_zeta(
    z: &CBall,
    zset: &ZeroSet,
    eta: &Ball,
    k_limit: u64,
    tail: Option<(&Ball, &Ball)>,
    include_counterpart: bool,
    prec: Precision,
) -> Result<Vec<Verdict>> {
    prepare_zeta(z, zset, k_limit, tail, prec)?.verdicts(eta, include_counterpart)
}

// ---- maximal window search ----

/// Finds a bracket for the largest `η ≤ eta_hi` at which a monotone
/// verified-predicate holds (φ decreasing in η makes every window verdict
/// monotone: verified at η implies verified below η). Bisection to relative
/// tolerance 1e-3, depth-capped; returns the bracketing ball
/// `[largest verified probe, smallest failing probe]`.
pub fn max_eta<F>(predicate: F, eta_hi: &Rational, prec: Precision) -> Result<Ball>
where
    F: Fn(&Ball) -> Result<bool>,
{
    const MAX_DEPTH: usize = 40;
    if *eta_hi <= 0 {
        return Err(Error::validation("η search needs a positive upper bound"));
    }
    let probe = |e: &Rational| -> Result<bool> { predicate(&Ball::from_rational(prec, e)) };
    if probe(eta_hi)? {
        // Verified at the cap: the cap is the answer within this search.
        return Ok(Ball::from_rational(prec, eta_hi));
    }
    // Hunt downward for a verified seed.
    let mut hi = eta_hi.clone();
    let mut lo = None;
    let mut cur = eta_hi.clone() / Rational::from(2);
    for _ in 0..MAX_DEPTH {
        if probe(&cur)? {
            lo = Some(cur.clone());
            break;
        }
        hi = cur.clone();
        cur /= Rational::from(2);
    }
    let mut lo = lo.ok_or_else(|| {
        Error::domain("no verifiable window: the inequality fails for every probed η")
    })?;
    // Bisect [lo, hi] down to relative tolerance 1e-3.
    let tol = Rational::from((1, 1000));
    for _ in 0..MAX_DEPTH {
        if (hi.clone() - lo.clone()) / lo.clone() <= tol {
            break;
        }
        let mid = (hi.clone() + lo.clone()) / Rational::from(2);
        if probe(&mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ball::from_rational_endpoints(prec, &lo, &hi)
}
