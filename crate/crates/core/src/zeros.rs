//! Zeros lists: ingestion and validation, certified lower bounds on the
//! contribution of known zeros, and sign-change certification of
//! `ξ(1/2 + it)` for zeta at low height.
//!
//! Ordinates are parsed as exact decimals (rationals) and the radius is
//! applied afterwards, so no rounding happens before the interval exists.
//! Every validated interval is taken to bracket a zero of odd multiplicity
//! of the completed function on the critical line; certified intervals come
//! with that guarantee from the sign change, external ones carry it as an
//! assumption recorded in the provenance.

use std::path::Path;

use rug::{Float, Rational};

use crate::ball::{pi_ball, Ball, CBall, Precision};
use crate::error::{Error, Result};
use crate::specfun::{ln_gamma_complex, zeta_em};

pub const DEFAULT_RADIUS_DATABASE: (i64, i64) = (1, 10_000_000_000); // 1e-10
pub const DEFAULT_RADIUS_SOLVER: (i64, i64) = (1, 100_000_000); // 1e-8

/// Height cap for Euler–Maclaurin sign certification.
pub const MAX_CERTIFY_HEIGHT: f64 = 1e4;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    External,
    Certified,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum IntervalKind {
    /// `[γ−, γ+] ⊂ (0, ∞)`, certifying a zero together with its conjugate.
    PositivePair,
    /// `[−γ₀, γ₀]`, certifying a self-conjugate (central) zero.
    Symmetric,
}

/// A validated ordinate interval carrying a zero certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroInterval {
    pub lo: Rational,
    pub hi: Rational,
    pub kind: IntervalKind,
    pub multiplicity: u32,
    pub provenance: Provenance,
}

impl ZeroInterval {
    pub fn positive_pair(lo: Rational, hi: Rational, provenance: Provenance) -> Result<ZeroInterval> {
        if lo > hi {
            return Err(Error::validation("interval endpoints out of order"));
        }
        if lo <= 0 {
            return Err(Error::validation(
                "positive-pair interval must lie strictly above zero",
            ));
        }
        Ok(ZeroInterval { lo, hi, kind: IntervalKind::PositivePair, multiplicity: 1, provenance })
    }

    pub fn symmetric(gamma0: Rational, provenance: Provenance) -> Result<ZeroInterval> {
        if gamma0 <= 0 {
            return Err(Error::validation("symmetric interval needs a positive endpoint"));
        }
        Ok(ZeroInterval {
            lo: -gamma0.clone(),
            hi: gamma0,
            kind: IntervalKind::Symmetric,
            multiplicity: 1,
            provenance,
        })
    }

    pub fn with_multiplicity(mut self, m: u32) -> Result<ZeroInterval> {
        if m == 0 {
            return Err(Error::validation("interval multiplicity must be at least 1"));
        }
        self.multiplicity = m;
        Ok(self)
    }
}

/// Validation mode: generic `L`-function window on `[0, ∞)` plus central
/// intervals, or zeta mode centered at the expansion height `y`.
#[derive(Clone, Debug, PartialEq)]
pub enum ZeroMode {
    LFunction,
    Zeta { y: Rational },
}

/// A validated set of pairwise disjoint zero intervals inside a window.
#[derive(Clone, Debug)]
pub struct ZeroSet {
    intervals: Vec<ZeroInterval>,
    window: (Rational, Rational),
    mode: ZeroMode,
}

impl ZeroSet {
    /// Validates and assembles a set: pairwise disjoint, inside the window;
    /// in zeta mode `y` must not belong to any interval and all intervals
    /// must be positive pairs.
    pub fn new(
        mut intervals: Vec<ZeroInterval>,
        window: (Rational, Rational),
        mode: ZeroMode,
    ) -> Result<ZeroSet> {
        if window.0 > window.1 {
            return Err(Error::validation("window endpoints out of order"));
        }
        intervals.sort_by(|a, b| a.lo.cmp(&b.lo));
        for w in intervals.windows(2) {
            if w[0].hi >= w[1].lo {
                return Err(Error::validation(format!(
                    "overlapping zero intervals: [{}, {}] and [{}, {}]",
                    w[0].lo, w[0].hi, w[1].lo, w[1].hi
                )));
            }
        }
        for iv in &intervals {
            if iv.lo < window.0 || iv.hi > window.1 {
                return Err(Error::validation(format!(
                    "interval [{}, {}] outside window [{}, {}]",
                    iv.lo, iv.hi, window.0, window.1
                )));
            }
        }
        if let ZeroMode::Zeta { y } = &mode {
            for iv in &intervals {
                if iv.kind != IntervalKind::PositivePair {
                    return Err(Error::validation(
                        "zeta mode admits positive-pair intervals only",
                    ));
                }
                if &iv.lo <= y && y <= &iv.hi {
                    return Err(Error::validation(format!(
                        "expansion height {y} lies inside interval [{}, {}]",
                        iv.lo, iv.hi
                    )));
                }
            }
        }
        Ok(ZeroSet { intervals, window, mode })
    }

    /// Reads a zeros file. Lines hold one decimal ordinate, optionally
    /// followed by a multiplicity; `#` starts a comment; directive lines
    /// `radius=<decimal>` and `provenance=certified|external` set defaults.
    /// An explicit `radius` argument overrides the file header.
    pub fn ingest(
        path: &Path,
        radius: Option<Rational>,
        window: (Rational, Rational),
        mode: ZeroMode,
    ) -> Result<ZeroSet> {
        let text = std::fs::read_to_string(path)?;
        let mut header_radius: Option<Rational> = None;
        let mut provenance = Provenance::External;
        let mut entries: Vec<(Rational, u32)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: String| Error::Parse { line: idx + 1, msg };
            if let Some(v) = line.strip_prefix("radius=") {
                header_radius = Some(
                    crate::ball::parse_decimal_rational(v)
                        .map_err(|e| parse_err(format!("bad radius: {e}")))?,
                );
                continue;
            }
            if let Some(v) = line.strip_prefix("provenance=") {
                provenance = match v.trim() {
                    "certified" => Provenance::Certified,
                    "external" => Provenance::External,
                    other => {
                        return Err(parse_err(format!("unknown provenance {other:?}")));
                    }
                };
                continue;
            }
            let mut toks = line.split_whitespace();
            let ord = toks.next().expect("nonempty line");
            let value = crate::ball::parse_decimal_rational(ord)
                .map_err(|e| parse_err(format!("bad ordinate: {e}")))?;
            let mult: u32 = match toks.next() {
                None => 1,
                Some(m) => m
                    .parse()
                    .map_err(|_| parse_err(format!("bad multiplicity {m:?}")))?,
            };
            if toks.next().is_some() {
                return Err(parse_err("too many fields on ordinate line".into()));
            }
            entries.push((value, mult));
        }
        let radius = radius
            .or(header_radius)
            .unwrap_or_else(|| Rational::from(DEFAULT_RADIUS_DATABASE));
        if radius <= 0 {
            return Err(Error::validation("radius must be positive"));
        }
        let mut intervals = Vec::with_capacity(entries.len());
        for (value, mult) in entries {
            let lo = value.clone() - radius.clone();
            let hi = value.clone() + radius.clone();
            let iv = if value == 0 {
                ZeroInterval::symmetric(radius.clone(), provenance)?
            } else if lo > 0 {
                ZeroInterval::positive_pair(lo, hi, provenance)?
            } else if matches!(mode, ZeroMode::LFunction) && -lo.clone() == hi {
                ZeroInterval::symmetric(hi, provenance)?
            } else {
                return Err(Error::validation(format!(
                    "ordinate {value} with radius {radius} straddles zero asymmetrically"
                )));
            };
            intervals.push(iv.with_multiplicity(mult)?);
        }
        ZeroSet::new(intervals, window, mode)
    }

    pub fn intervals(&self) -> &[ZeroInterval] {
        &self.intervals
    }

    pub fn window(&self) -> &(Rational, Rational) {
        &self.window
    }

    pub fn mode(&self) -> &ZeroMode {
        &self.mode
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Restricts to intervals contained in `[lo, hi]`, keeping mode.
    pub fn restrict(&self, lo: &Rational, hi: &Rational) -> Result<ZeroSet> {
        let intervals: Vec<ZeroInterval> = self
            .intervals
            .iter()
            .filter(|iv| &iv.lo >= lo && &iv.hi <= hi)
            .cloned()
            .collect();
        ZeroSet::new(intervals, (lo.clone(), hi.clone()), self.mode.clone())
    }

    /// Drops the interval whose midpoint is nearest to `ordinate`.
    pub fn without_nearest(&self, ordinate: &Rational) -> Result<ZeroSet> {
        if self.intervals.is_empty() {
            return Err(Error::validation("cannot thin an empty zero set"));
        }
        let mut best = 0usize;
        let mut best_dist: Option<Rational> = None;
        for (i, iv) in self.intervals.iter().enumerate() {
            let mid = (iv.lo.clone() + iv.hi.clone()) / Rational::from(2);
            let dist = (mid - ordinate.clone()).abs();
            if best_dist.as_ref().map_or(true, |b| dist < *b) {
                best_dist = Some(dist);
                best = i;
            }
        }
        let mut intervals = self.intervals.clone();
        intervals.remove(best);
        ZeroSet::new(intervals, self.window.clone(), self.mode.clone())
    }

    /// Certified lower bound `C(Z, δ)` on the contribution of the listed
    /// zeros to the shifted zero sum: positive pairs contribute
    /// `(1-2δ)/((1/2-δ)² + γ₊²)`, symmetric intervals
    /// `(1/2-δ)/((1/2-δ)² + γ₀²)`, each times its multiplicity. The far
    /// endpoint minimizes each term, so this is a valid lower bound
    /// wherever the zero sits in its interval.
    pub fn c_sum(&self, delta: &Ball, prec: Precision) -> Result<Ball> {
        if delta.is_strictly_positive() {
            return Err(Error::domain("C(Z, δ) requires δ ≤ 0"));
        }
        let half = Ball::from_rational(prec, &Rational::from((1, 2)));
        let one = Ball::one(prec);
        let two = Ball::from_i64(prec, 2);
        let shift = &half - delta; // 1/2 - δ
        let shift_sq = shift.sq();
        let mut acc = Ball::zero(prec);
        for iv in &self.intervals {
            let m = Ball::from_u64(prec, u64::from(iv.multiplicity));
            let term = match iv.kind {
                IntervalKind::PositivePair => {
                    let g = Ball::from_rational(prec, &iv.hi);
                    (&one - &(&two * delta)).checked_div(&(&shift_sq + &g.sq()))?
                }
                IntervalKind::Symmetric => {
                    let g = Ball::from_rational(prec, &iv.hi);
                    shift.checked_div(&(&shift_sq + &g.sq()))?
                }
            };
            acc = &acc + &(&m * &term);
        }
        Ok(acc)
    }

    /// Certified lower bound `D(Z, z)` for zeta mode: intervals above `y`
    /// contribute `(1/2-x)/((1/2-x)² + (γ₊-y)²)`, intervals below use
    /// `(y-γ₋)`; far endpoints again minimize the terms.
    pub fn d_sum(&self, z: &CBall, prec: Precision) -> Result<Ball> {
        self.d_sum_impl(z, prec, false)
    }

    /// Upper-bound counterpart of [`ZeroSet::d_sum`] using the near
    /// endpoints: an upper bound on the contribution of one zero per
    /// interval, as needed for a sound incompleteness test.
    pub fn d_sum_upper(&self, z: &CBall, prec: Precision) -> Result<Ball> {
        self.d_sum_impl(z, prec, true)
    }

    fn d_sum_impl(&self, z: &CBall, prec: Precision, near: bool) -> Result<Ball> {
        let y = match &self.mode {
            ZeroMode::Zeta { y } => y.clone(),
            ZeroMode::LFunction => {
                return Err(Error::domain("D(Z, z) requires a zeta-mode zero set"));
            }
        };
        if z.re.is_strictly_positive() || (!z.re.is_strictly_negative() && !z.re.contains_zero()) {
            return Err(Error::domain("D(Z, z) requires x ≤ 0"));
        }
        let half = Ball::from_rational(prec, &Rational::from((1, 2)));
        let shift = &half - &z.re; // 1/2 - x
        let shift_sq = shift.sq();
        let mut acc = Ball::zero(prec);
        for iv in &self.intervals {
            let m = Ball::from_u64(prec, u64::from(iv.multiplicity));
            let dist = if iv.lo > y {
                let endpoint = if near { &iv.lo } else { &iv.hi };
                Ball::from_rational(prec, &(endpoint.clone() - y.clone()))
            } else if iv.hi < y {
                let endpoint = if near { &iv.hi } else { &iv.lo };
                Ball::from_rational(prec, &(y.clone() - endpoint.clone()))
            } else {
                return Err(Error::domain(format!(
                    "interval [{}, {}] straddles the expansion height {y}",
                    iv.lo, iv.hi
                )));
            };
            let term = shift.checked_div(&(&shift_sq + &dist.sq()))?;
            acc = &acc + &(&m * &term);
        }
        Ok(acc)
    }
}

// ---- xi on the critical line ----

/// `ξ(s) = π^{-s/2} Γ(s/2 + 1) (s - 1) ζ(s)` on a complex rectangle.
pub fn xi_complex(s: &CBall, terms: usize) -> Result<CBall> {
    let prec = s.precision();
    let half = Ball::from_rational(prec, &Rational::from((1, 2)));
    let one = Ball::one(prec);
    let log_pi = pi_ball(prec).ln()?;
    let half_s = CBall::new(&s.re * &half, &s.im * &half);
    // exp(-s/2 log pi + log Gamma(s/2 + 1))
    let lg = ln_gamma_complex(&CBall::new(&half_s.re + &one, half_s.im.clone()))?;
    let expo = lg.sub(&half_s.mul_ball(&log_pi)).exp();
    let zeta = zeta_em(s, terms)?;
    let s_minus_1 = CBall::new(&s.re - &one, s.im.clone());
    Ok(expo.mul(&s_minus_1).mul(&zeta))
}

/// Enclosure of the real value `ξ(1/2 + it)`; `terms = 0` lets the
/// Euler–Maclaurin node count adapt to `t`. Heights beyond
/// [`MAX_CERTIFY_HEIGHT`] are rejected (no Riemann–Siegel evaluation here).
pub fn xi_ball(t: &Ball, terms: usize, prec: Precision) -> Result<Ball> {
    if !(t.abs().hi().to_f64() <= MAX_CERTIFY_HEIGHT) {
        return Err(Error::validation(format!(
            "xi enclosure limited to |t| <= {MAX_CERTIFY_HEIGHT}"
        )));
    }
    let work = prec.plus(16);
    let widen = |b: &Ball| {
        Ball::from_floats(
            Float::with_val_round(work.bits(), b.lo(), rug::float::Round::Down).0,
            Float::with_val_round(work.bits(), b.hi(), rug::float::Round::Up).0,
        )
    };
    let s = CBall::new(
        Ball::from_rational(work, &Rational::from((1, 2))),
        widen(t),
    );
    let xi = xi_complex(&s, terms)?;
    // The value is real; the imaginary component must enclose zero.
    if !xi.im.contains_zero() {
        return Err(Error::Precision(
            "xi imaginary part failed to enclose zero".into(),
        ));
    }
    Ok(xi.re)
}

/// Outcome of a sign-change certification between two ordinates.
#[derive(Clone, Debug)]
pub enum Certification {
    /// Both endpoint values are sign-definite with opposite signs: the
    /// bracket contains a zero of `ξ(1/2+it)` of odd multiplicity.
    Certified(ZeroInterval),
    NotCertified,
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified(_))
    }
}

/// Certifies a sign change of `ξ(1/2 + it)` on `[t1, t2]`.
pub fn certify_sign_change(t1: &Ball, t2: &Ball, prec: Precision) -> Result<Certification> {
    if !(t1.hi() < t2.lo()) {
        return Ok(Certification::NotCertified);
    }
    let a = xi_ball(t1, 0, prec)?;
    let b = xi_ball(t2, 0, prec)?;
    let opposite = (a.is_strictly_positive() && b.is_strictly_negative())
        || (a.is_strictly_negative() && b.is_strictly_positive());
    if !opposite {
        return Ok(Certification::NotCertified);
    }
    let lo = t1
        .lo()
        .to_rational()
        .ok_or_else(|| Error::validation("non-finite bracket endpoint"))?;
    let hi = t2
        .hi()
        .to_rational()
        .ok_or_else(|| Error::validation("non-finite bracket endpoint"))?;
    Ok(Certification::Certified(ZeroInterval::positive_pair(
        lo,
        hi,
        Provenance::Certified,
    )?))
}

/// Scans `[t_min, t_max]` on a grid of the given step, certifying one
/// interval per sign change and bisecting each bracket down to
/// `target_width`. Certification soundness: a coarse grid may miss zeros
/// but never produces a spurious interval.
pub fn certify_scan(
    t_min: &Rational,
    t_max: &Rational,
    step: &Rational,
    target_width: &Rational,
    prec: Precision,
) -> Result<Vec<ZeroInterval>> {
    if step <= &0 || t_min >= t_max {
        return Err(Error::validation("need a positive step and t_min < t_max"));
    }
    let sign_at = |t: &Rational| -> Result<Option<bool>> {
        let tb = Ball::from_rational(prec, t);
        let v = xi_ball(&tb, 0, prec)?;
        Ok(if v.is_strictly_positive() {
            Some(true)
        } else if v.is_strictly_negative() {
            Some(false)
        } else {
            None
        })
    };

    let mut out = Vec::new();
    let mut anchor: Option<(Rational, bool)> = None;
    let mut t = t_min.clone();
    while t <= *t_max {
        if let Some(sign) = sign_at(&t)? {
            if let Some((prev_t, prev_sign)) = &anchor {
                if *prev_sign != sign {
                    let (mut a, mut b) = (prev_t.clone(), t.clone());
                    let (sa, sb) = (*prev_sign, sign);
                    // Bisect, keeping a certified sign change in [a, b].
                    while b.clone() - a.clone() > *target_width {
                        let mid = (a.clone() + b.clone()) / Rational::from(2);
                        match sign_at(&mid)? {
                            Some(sm) if sm == sa => a = mid,
                            Some(_) => b = mid,
                            None => {
                                // A zero hugs the midpoint; nudge once, then
                                // accept the wider bracket.
                                let nudged = (a.clone() * Rational::from(3) + b.clone())
                                    / Rational::from(4);
                                match sign_at(&nudged)? {
                                    Some(sm) if sm == sa => {
                                        a = nudged;
                                        continue;
                                    }
                                    Some(_) => {
                                        b = nudged;
                                        continue;
                                    }
                                    None => break,
                                }
                            }
                        }
                    }
                    let _ = sb;
                    out.push(ZeroInterval::positive_pair(a, b, Provenance::Certified)?);
                }
            }
            anchor = Some((t.clone(), sign));
        }
        t += step.clone();
    }
    Ok(out)
}
