//! Number-theoretic coefficient generation: prime powers and von Mangoldt
//! values, Kronecker symbols, Ramanujan tau, elliptic-curve traces, and the
//! generic prime-power coefficients `Λ_L(p^m) = log p · Σ_j α_{p,j}^m`.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use rug::ops::Pow;
use rug::{Assign, Integer, Rational};

use crate::ball::{Ball, Precision};
use crate::error::{Error, Result};

// ---- von Mangoldt table ----

/// One prime power `n = p^m` with `n <= limit`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PrimePower {
    pub n: u64,
    pub p: u64,
    pub m: u32,
}

/// Complete classification of prime powers up to `limit`: an entry exists
/// for `n` iff `n = p^m <= limit`, and `Λ(n) = log p` there (zero elsewhere).
#[derive(Clone, Debug)]
pub struct MangoldtTable {
    limit: u64,
    entries: Vec<PrimePower>,
    primes: Vec<u64>,
}

/// Sieves all primes and prime powers up to `limit`.
pub fn sieve(limit: u64) -> MangoldtTable {
    assert!(limit >= 2, "sieve limit must be at least 2");
    let n = limit as usize;
    let mut is_composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !is_composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                is_composite[j] = true;
                j += i;
            }
        }
    }
    let mut entries: Vec<PrimePower> = Vec::with_capacity(primes.len() + 64);
    for &p in &primes {
        let mut pm = p;
        let mut m = 1u32;
        loop {
            entries.push(PrimePower { n: pm, p, m });
            match pm.checked_mul(p) {
                Some(next) if next <= limit => {
                    pm = next;
                    m += 1;
                }
                _ => break,
            }
        }
    }
    entries.sort_by_key(|e| e.n);
    MangoldtTable { limit, entries, primes }
}

impl MangoldtTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Prime powers in increasing order of `n`.
    pub fn entries(&self) -> &[PrimePower] {
        &self.entries
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// The `(p, m)` classification of `n`, or `None` when `Λ(n) = 0`.
    pub fn classify(&self, n: u64) -> Option<PrimePower> {
        assert!(n <= self.limit, "n beyond table limit");
        self.entries
            .binary_search_by_key(&n, |e| e.n)
            .ok()
            .map(|i| self.entries[i])
    }

    /// Enclosure of `Λ(n)`.
    pub fn mangoldt(&self, prec: Precision, n: u64) -> Result<Ball> {
        match self.classify(n) {
            Some(pp) => log_prime(prec, pp.p),
            None => Ok(Ball::zero(prec)),
        }
    }
}

/// Enclosure of `log p`.
pub fn log_prime(prec: Precision, p: u64) -> Result<Ball> {
    Ball::from_u64(prec, p).ln()
}

// ---- Kronecker symbol ----

/// The Kronecker symbol `(d | n)`, completely multiplicative in `n`.
pub fn kronecker(d: i64, n: u64) -> i32 {
    kronecker_signed(d, n as i64)
}

/// Kronecker symbol `(a | b)` for arbitrary integers.
pub fn kronecker_signed(a: i64, b: i64) -> i32 {
    // Cohen, "A Course in Computational Algebraic Number Theory",
    // Algorithm 1.4.10. Two's complement makes `x & 7` the residue mod 8.
    let (mut a, mut b) = (a, b);
    if b == 0 {
        return if a.unsigned_abs() == 1 { 1 } else { 0 };
    }
    if a % 2 == 0 && b % 2 == 0 {
        return 0;
    }
    let mut v = 0u32;
    while b % 2 == 0 {
        b /= 2;
        v += 1;
    }
    let mut k: i32 = if v % 2 == 0 {
        1
    } else if matches!(a & 7, 1 | 7) {
        1
    } else {
        -1
    };
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    loop {
        if a == 0 {
            return if b > 1 { 0 } else { k };
        }
        v = 0;
        while a % 2 == 0 {
            a /= 2;
            v += 1;
        }
        if v % 2 == 1 && !matches!(b & 7, 1 | 7) {
            k = -k;
        }
        if a & b & 2 != 0 {
            k = -k;
        }
        let r = a.unsigned_abs() as i64;
        a = b % r;
        b = r;
    }
}

/// `d ≡ 1 mod 4` squarefree, or `d = 4m` with `m ≡ 2, 3 mod 4` squarefree.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    fn squarefree(n: u64) -> bool {
        let mut n = n;
        let mut f = 2u64;
        while f * f <= n {
            if n % (f * f) == 0 {
                return false;
            }
            while n % f == 0 {
                n /= f;
            }
            f += 1;
        }
        true
    }
    if d == 0 {
        return false;
    }
    if d.rem_euclid(4) == 1 {
        return squarefree(d.unsigned_abs());
    }
    if d % 4 == 0 {
        let m = d / 4;
        return matches!(m.rem_euclid(4), 2 | 3) && squarefree(m.unsigned_abs());
    }
    false
}

// ---- Ramanujan tau ----

/// Exact `τ(1..=limit)` via the 24th power of the Euler product
/// `q ∏ (1 - q^n)^24`, entry `table[n] = τ(n)` (`table[0] = 0`).
///
/// Uses the log-derivative recurrence `n·c_n = -Σ_g (n - 25 g) e_g c_{n-g}`
/// over the sparse pentagonal-number support of `∏ (1 - q^n)`, so the cost
/// is `O(limit^{3/2})` exact integer operations.
pub fn tau_table(limit: usize) -> Vec<Integer> {
    assert!(limit >= 1);
    // Pentagonal numbers g_j = j(3j∓1)/2 with coefficient (-1)^j.
    let mut pents: Vec<(usize, i64)> = Vec::new();
    let mut j = 1i64;
    loop {
        let g1 = (j * (3 * j - 1) / 2) as usize;
        let g2 = (j * (3 * j + 1) / 2) as usize;
        let sign = if j % 2 == 0 { 1 } else { -1 };
        if g1 > limit && g2 > limit {
            break;
        }
        if g1 <= limit {
            pents.push((g1, sign));
        }
        if g2 <= limit {
            pents.push((g2, sign));
        }
        j += 1;
    }
    pents.sort_unstable();

    let k = 24i64;
    // c[i] = coefficient of q^i in (prod (1-q^n))^24, so tau(n) = c[n-1].
    let mut c: Vec<Integer> = Vec::with_capacity(limit);
    c.push(Integer::from(1));
    let mut acc = Integer::new();
    for n in 1..limit {
        acc.assign(0);
        let n_i = n as i64;
        for &(g, sign) in &pents {
            if g > n {
                break;
            }
            let coeff = sign * (n_i - (k + 1) * g as i64);
            acc += &c[n - g] * coeff;
        }
        acc = -acc;
        debug_assert!(acc.is_divisible_u(n as u32));
        c.push(Integer::from(&acc / n as u32));
    }
    let mut table = Vec::with_capacity(limit + 1);
    table.push(Integer::new());
    table.extend(c);
    table
}

// ---- elliptic point counting ----

/// Integral Weierstrass coefficients `(a1, a2, a3, a4, a6)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub a4: i64,
    pub a6: i64,
}

/// Exact trace `b(p) = p + 1 - |E(F_p)|` by exhaustive counting, where
/// `|E(F_p)|` includes the point at infinity. Intended for good primes;
/// for bad primes supply Euler data explicitly in the provider.
pub fn elliptic_bp(curve: &WeierstrassCurve, p: u64) -> i64 {
    if p == 2 {
        let m = |v: i64| v.rem_euclid(2) as u64;
        let mut count = 1u64; // point at infinity
        for x in 0..2i64 {
            for y in 0..2i64 {
                let lhs = y * y + curve.a1 * x * y + curve.a3 * y;
                let rhs = x * x * x + curve.a2 * x * x + curve.a4 * x + curve.a6;
                if m(lhs) == m(rhs) {
                    count += 1;
                }
            }
        }
        return p as i64 + 1 - count as i64;
    }
    // Odd p: complete the square. (2y + a1 x + a3)^2 = g(x) with
    // g(x) = 4x^3 + (a1^2+4a2) x^2 + (2 a1 a3 + 4 a4) x + (a3^2 + 4 a6),
    // so the y-count for given x is 1 + chi(g(x)).
    let pm = p as i64;
    let b2 = (curve.a1 * curve.a1 + 4 * curve.a2).rem_euclid(pm) as u64;
    let b4 = (2 * curve.a1 * curve.a3 + 4 * curve.a4).rem_euclid(pm) as u64;
    let b6 = (curve.a3 * curve.a3 + 4 * curve.a6).rem_euclid(pm) as u64;

    // Quadratic-residue bitmap.
    let mut qr = vec![false; p as usize];
    let mut i = 0u64;
    while i <= p / 2 {
        qr[((i * i) % p) as usize] = true;
        i += 1;
    }

    let mut sum: i64 = 0;
    for x in 0..p {
        // g(x) mod p; p <= ~1e6 keeps every product within u64.
        let x2 = (x * x) % p;
        let x3 = (x2 * x) % p;
        let g = (4 * x3 % p + b2 * x2 % p + b4 * x % p + b6) % p;
        if g != 0 {
            sum += if qr[g as usize] { 1 } else { -1 };
        }
    }
    -sum
}

// ---- coefficient providers ----

/// A bad-prime Satake parameter, either exact or of the form `±1/√p`.
#[derive(Clone, Debug, PartialEq)]
pub enum BadAlpha {
    Exact(Rational),
    InvSqrtP { negative: bool },
}

impl BadAlpha {
    fn to_ball(&self, prec: Precision, p: u64) -> Result<Ball> {
        match self {
            BadAlpha::Exact(r) => Ok(Ball::from_rational(prec, r)),
            BadAlpha::InvSqrtP { negative } => {
                let v = Ball::from_u64(prec, p).sqrt()?.recip()?;
                Ok(if *negative { v.neg() } else { v })
            }
        }
    }
}

/// Source of the normalized Satake data for `Λ_L(p^m)`.
///
/// Degree-2 good primes use the Chebyshev-style power-sum recurrence
/// `s_0 = 2, s_1 = a_p, s_m = a_p s_{m-1} - s_{m-2}` (unitary pairs
/// `α ᾱ = 1`); bad primes and degree-1 factors evaluate the power sums
/// directly.
#[derive(Debug)]
pub enum CoefficientProvider {
    Dirichlet {
        d: i64,
    },
    RamanujanTau {
        tau: RwLock<Arc<Vec<Integer>>>,
    },
    Elliptic {
        curve: WeierstrassCurve,
        bad: BTreeMap<u64, Vec<BadAlpha>>,
        traces: RwLock<Arc<BTreeMap<u64, i64>>>,
    },
    Custom {
        degree: u32,
        normalized: bool,
        ap: BTreeMap<u64, Rational>,
        bad: BTreeMap<u64, Vec<BadAlpha>>,
    },
}

impl CoefficientProvider {
    pub fn dirichlet(d: i64) -> CoefficientProvider {
        CoefficientProvider::Dirichlet { d }
    }

    pub fn ramanujan_tau() -> CoefficientProvider {
        CoefficientProvider::RamanujanTau {
            tau: RwLock::new(Arc::new(Vec::new())),
        }
    }

    pub fn elliptic(curve: WeierstrassCurve, bad: BTreeMap<u64, Vec<BadAlpha>>) -> CoefficientProvider {
        CoefficientProvider::Elliptic {
            curve,
            bad,
            traces: RwLock::new(Arc::new(BTreeMap::new())),
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            CoefficientProvider::Dirichlet { .. } => 1,
            CoefficientProvider::RamanujanTau { .. } => 2,
            CoefficientProvider::Elliptic { .. } => 2,
            CoefficientProvider::Custom { degree, .. } => *degree,
        }
    }

    /// Builds whatever tables are needed to serve primes up to `limit`.
    /// Idempotent; must be called before summing over a sieve.
    pub fn prepare(&self, limit: u64) -> Result<()> {
        match self {
            CoefficientProvider::Dirichlet { .. } | CoefficientProvider::Custom { .. } => Ok(()),
            CoefficientProvider::RamanujanTau { tau } => {
                let mut guard = tau.write().expect("tau lock");
                if (guard.len() as u64) <= limit {
                    *guard = Arc::new(tau_table(limit as usize));
                }
                Ok(())
            }
            CoefficientProvider::Elliptic { curve, bad, traces } => {
                let mut guard = traces.write().expect("trace lock");
                if guard.range(limit..).next().is_none() || guard.is_empty() {
                    let table = sieve(limit.max(2));
                    let mut map = BTreeMap::new();
                    for &p in table.primes() {
                        if !bad.contains_key(&p) {
                            map.insert(p, elliptic_bp(curve, p));
                        }
                    }
                    *guard = Arc::new(map);
                }
                Ok(())
            }
        }
    }

    /// The normalized trace `a_p = α_{p,1} + ... + α_{p,r}` for a good
    /// prime of a degree-2 provider.
    fn good_trace(&self, prec: Precision, p: u64) -> Result<Ball> {
        match self {
            CoefficientProvider::RamanujanTau { tau } => {
                let table = tau.read().expect("tau lock").clone();
                let tp = table.get(p as usize).ok_or_else(|| {
                    Error::Data(format!("tau table not prepared up to p = {p}"))
                })?;
                // a_p = tau(p) / p^{11/2}
                let p5 = Ball::from_integer(prec, &Integer::from(Integer::from(p).pow(5)));
                let sqrt_p = Ball::from_u64(prec, p).sqrt()?;
                Ball::from_integer(prec, tp).checked_div(&(&p5 * &sqrt_p))
            }
            CoefficientProvider::Elliptic { traces, .. } => {
                let table = traces.read().expect("trace lock").clone();
                let bp = *table.get(&p).ok_or_else(|| {
                    Error::Data(format!("elliptic trace table not prepared for p = {p}"))
                })?;
                let sqrt_p = Ball::from_u64(prec, p).sqrt()?;
                Ball::from_i64(prec, bp).checked_div(&sqrt_p)
            }
            CoefficientProvider::Custom { ap, normalized, .. } => {
                let a = ap
                    .get(&p)
                    .ok_or_else(|| Error::Data(format!("no coefficient supplied for p = {p}")))?;
                let a = Ball::from_rational(prec, a);
                if *normalized {
                    Ok(a)
                } else {
                    a.checked_div(&Ball::from_u64(prec, p).sqrt()?)
                }
            }
            CoefficientProvider::Dirichlet { .. } => unreachable!("degree-1 provider"),
        }
    }

    fn bad_alphas(&self, p: u64) -> Option<&Vec<BadAlpha>> {
        match self {
            CoefficientProvider::Elliptic { bad, .. } | CoefficientProvider::Custom { bad, .. } => {
                bad.get(&p)
            }
            _ => None,
        }
    }
}

/// Enclosure of `Λ_L(p^m) = log p · s_m`, where `s_m` is the m-th power sum
/// of the Satake parameters at `p`.
pub fn lambda_l(provider: &CoefficientProvider, prec: Precision, p: u64, m: u32) -> Result<Ball> {
    assert!(m >= 1);
    let log_p = log_prime(prec, p)?;
    let r = provider.degree();

    // Explicit bad-prime data takes precedence.
    if let Some(alphas) = provider.bad_alphas(p) {
        let mut s = Ball::zero(prec);
        for alpha in alphas {
            s = &s + &alpha.to_ball(prec, p)?.powi(m as i32)?;
        }
        return Ok(&s * &log_p);
    }

    match provider {
        CoefficientProvider::Dirichlet { d } => {
            let chi = kronecker(*d, p);
            let s = if chi == 0 {
                0
            } else if chi == -1 && m % 2 == 1 {
                -1
            } else {
                1
            };
            Ok(&Ball::from_i64(prec, s) * &log_p)
        }
        CoefficientProvider::Custom { degree: 1, ap, normalized, .. } => {
            let a = ap
                .get(&p)
                .ok_or_else(|| Error::Data(format!("no coefficient supplied for p = {p}")))?;
            let mut alpha = Ball::from_rational(prec, a);
            if !normalized {
                alpha = alpha.checked_div(&Ball::from_u64(prec, p).sqrt()?)?;
            }
            Ok(&alpha.powi(m as i32)? * &log_p)
        }
        _ => {
            // Degree-2 unitary factor: Chebyshev power sums, clamped to the
            // mathematically exact range |s_m| <= r.
            let a = provider.good_trace(prec, p)?;
            let cap = Ball::from_rational_endpoints(
                prec,
                &Rational::from(-(r as i64)),
                &Rational::from(r as i64),
            )?;
            let mut s_prev = Ball::from_i64(prec, 2);
            let mut s = a.clone();
            for _ in 1..m {
                let next = &(&a * &s) - &s_prev;
                s_prev = s;
                s = next.intersection(&cap).unwrap_or(next);
            }
            if m == 1 {
                s = s.intersection(&cap).unwrap_or(s);
            }
            Ok(&s * &log_p)
        }
    }
}
