//! The analytic datum of an `L`-function in the verifiable class: degree,
//! conductor, root number, spectral parameters, and a coefficient provider.
//!
//! Built-in constructors cover the three worked families (real Dirichlet
//! characters, the Ramanujan tau form, elliptic curves); arbitrary instances
//! load from a descriptor file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rug::Rational;

use crate::arith::{
    is_fundamental_discriminant, BadAlpha, CoefficientProvider, WeierstrassCurve,
};
use crate::ball::parse_decimal_rational;
use crate::error::{Error, Result};

/// Root number, restricted to the fourth roots of unity for which the
/// parity of `ξ_L(1/2 + it)` is determined. Other unimodular values are
/// accepted but disable parity-dependent logic.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Epsilon {
    One,
    MinusOne,
    I,
    MinusI,
    /// A unit complex number outside {±1, ±i}.
    General,
}

/// Parity of `ξ_L(1/2 + it)` in `t`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Epsilon {
    pub fn parity(self) -> Option<Parity> {
        match self {
            Epsilon::One | Epsilon::MinusOne => Some(Parity::Even),
            Epsilon::I | Epsilon::MinusI => Some(Parity::Odd),
            Epsilon::General => None,
        }
    }

    pub fn parse(s: &str) -> Result<Epsilon> {
        match s.trim() {
            "1" | "+1" => Ok(Epsilon::One),
            "-1" => Ok(Epsilon::MinusOne),
            "i" | "+i" => Ok(Epsilon::I),
            "-i" => Ok(Epsilon::MinusI),
            "general" | "other" => Ok(Epsilon::General),
            other => Err(Error::validation(format!(
                "root number must be 1, -1, i, -i or 'general', got {other:?}"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Epsilon::One => "1",
            Epsilon::MinusOne => "-1",
            Epsilon::I => "i",
            Epsilon::MinusI => "-i",
            Epsilon::General => "general",
        }
    }
}

/// The analytic datum `(r, N, ε, μ_1..μ_r)` plus coefficients and a label.
#[derive(Debug)]
pub struct LFunctionParams {
    degree: u32,
    conductor: u64,
    epsilon: Epsilon,
    mu: Vec<Rational>,
    provider: CoefficientProvider,
    label: String,
}

impl LFunctionParams {
    pub fn new(
        degree: u32,
        conductor: u64,
        epsilon: Epsilon,
        mu: Vec<Rational>,
        provider: CoefficientProvider,
        label: impl Into<String>,
    ) -> Result<LFunctionParams> {
        if degree < 1 {
            return Err(Error::validation("degree must be at least 1"));
        }
        if conductor < 1 {
            return Err(Error::validation("conductor must be at least 1"));
        }
        if mu.len() != degree as usize {
            return Err(Error::validation(format!(
                "expected {degree} spectral parameters, got {}",
                mu.len()
            )));
        }
        if mu.iter().any(|m| *m < 0) {
            return Err(Error::validation("spectral parameters must be nonnegative"));
        }
        if provider.degree() != degree {
            return Err(Error::validation(format!(
                "provider degree {} does not match instance degree {degree}",
                provider.degree()
            )));
        }
        Ok(LFunctionParams {
            degree,
            conductor,
            epsilon,
            mu,
            provider,
            label: label.into(),
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    pub fn mu(&self) -> &[Rational] {
        &self.mu
    }

    pub fn provider(&self) -> &CoefficientProvider {
        &self.provider
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn parity(&self) -> Option<Parity> {
        self.epsilon.parity()
    }
}

/// Dirichlet `L`-function of the real primitive character mod `|d|`:
/// `r = 1`, `N = |d|`, `ε = 1`, `μ₁ = 0` for `d > 0` and `1` for `d < 0`.
pub fn make_dirichlet(d: i64) -> Result<LFunctionParams> {
    if d == 1 {
        return Err(Error::validation("d = 1 is the trivial character"));
    }
    if !is_fundamental_discriminant(d) {
        return Err(Error::validation(format!(
            "{d} is not a fundamental discriminant"
        )));
    }
    let mu = if d > 0 { Rational::new() } else { Rational::from(1) };
    LFunctionParams::new(
        1,
        d.unsigned_abs(),
        Epsilon::One,
        vec![mu],
        CoefficientProvider::dirichlet(d),
        format!("dirichlet-{d}"),
    )
}

/// The Ramanujan tau `L`-function: `r = 2`, `N = 1`, `ε = 1`,
/// `μ = (11/2, 13/2)`.
pub fn make_ramanujan() -> LFunctionParams {
    LFunctionParams::new(
        2,
        1,
        Epsilon::One,
        vec![Rational::from((11, 2)), Rational::from((13, 2))],
        CoefficientProvider::ramanujan_tau(),
        "ramanujan-tau",
    )
    .expect("fixed datum is valid")
}

/// Elliptic-curve `L`-function (analytic normalization): `r = 2`,
/// `μ = (1/2, 3/2)`. The conductor and root number come from the caller,
/// as does the bad-prime Euler data.
pub fn make_elliptic(
    curve: WeierstrassCurve,
    conductor: u64,
    epsilon: Epsilon,
    bad: BTreeMap<u64, Vec<BadAlpha>>,
    label: impl Into<String>,
) -> Result<LFunctionParams> {
    LFunctionParams::new(
        2,
        conductor,
        epsilon,
        vec![Rational::from((1, 2)), Rational::from((3, 2))],
        CoefficientProvider::elliptic(curve, bad),
        label,
    )
}

// ---- descriptor files ----

/// Parses a rational token: `a/b`, an integer, or a decimal literal.
fn parse_rational_token(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num
            .trim()
            .parse()
            .map_err(|_| Error::validation(format!("bad rational {s:?}")))?;
        let d: i64 = den
            .trim()
            .parse()
            .map_err(|_| Error::validation(format!("bad rational {s:?}")))?;
        if d == 0 {
            return Err(Error::validation(format!("bad rational {s:?}")));
        }
        return Ok(Rational::from((n, d)));
    }
    parse_decimal_rational(s)
}

fn parse_bad_alpha(tok: &str, ctx: &str) -> Result<BadAlpha> {
    match tok.trim() {
        "1/sqrt(p)" | "+1/sqrt(p)" => Ok(BadAlpha::InvSqrtP { negative: false }),
        "-1/sqrt(p)" => Ok(BadAlpha::InvSqrtP { negative: true }),
        other => Ok(BadAlpha::Exact(
            parse_rational_token(other)
                .map_err(|_| Error::validation(format!("bad alpha {other:?} in {ctx}")))?,
        )),
    }
}

/// Loads an instance descriptor: `key = value` lines, `#` comments.
///
/// Common keys: `label`, `kind` (dirichlet | ramanujan | elliptic | custom).
/// Kind-specific keys: `d` (dirichlet); `curve`, `conductor`, `epsilon`,
/// `bad_prime` (elliptic, repeatable `p, alpha1[, alpha2]`); `degree`,
/// `conductor`, `epsilon`, `mu`, `coeffs`, `bad_prime` (custom, with
/// `coeffs` a path relative to the descriptor).
pub fn load_descriptor(path: &Path) -> Result<LFunctionParams> {
    let text = std::fs::read_to_string(path)?;
    let mut fields: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or(Error::Parse {
            line: idx + 1,
            msg: format!("expected key = value, got {raw:?}"),
        })?;
        fields
            .entry(k.trim().to_ascii_lowercase())
            .or_default()
            .push(v.trim().to_string());
    }
    let single = |key: &str| -> Result<Option<&str>> {
        match fields.get(key).map(|v| v.as_slice()) {
            None => Ok(None),
            Some([only]) => Ok(Some(only.as_str())),
            Some(_) => Err(Error::validation(format!("duplicate key {key:?}"))),
        }
    };
    let required = |key: &str| -> Result<&str> {
        single(key)?.ok_or_else(|| Error::validation(format!("missing key {key:?}")))
    };

    let kind = required("kind")?.to_ascii_lowercase();
    let label = single("label")?.map(str::to_string);
    match kind.as_str() {
        "dirichlet" => {
            let d: i64 = required("d")?
                .parse()
                .map_err(|_| Error::validation("d must be an integer"))?;
            let mut params = make_dirichlet(d)?;
            if let Some(l) = label {
                params.label = l;
            }
            Ok(params)
        }
        "ramanujan" => {
            let mut params = make_ramanujan();
            if let Some(l) = label {
                params.label = l;
            }
            Ok(params)
        }
        "elliptic" => {
            let curve_parts: Vec<i64> = required("curve")?
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::validation("curve must be five integers a1,a2,a3,a4,a6"))?;
            if curve_parts.len() != 5 {
                return Err(Error::validation("curve must be five integers a1,a2,a3,a4,a6"));
            }
            let curve = WeierstrassCurve {
                a1: curve_parts[0],
                a2: curve_parts[1],
                a3: curve_parts[2],
                a4: curve_parts[3],
                a6: curve_parts[4],
            };
            let conductor: u64 = required("conductor")?
                .parse()
                .map_err(|_| Error::validation("conductor must be a positive integer"))?;
            let epsilon = Epsilon::parse(required("epsilon")?)?;
            let bad = parse_bad_primes(&fields)?;
            let mut params = make_elliptic(curve, conductor, epsilon, bad, "elliptic")?;
            if let Some(l) = label {
                params.label = l;
            }
            Ok(params)
        }
        "custom" => {
            let degree: u32 = required("degree")?
                .parse()
                .map_err(|_| Error::validation("degree must be a positive integer"))?;
            if !matches!(degree, 1 | 2) {
                return Err(Error::validation("custom providers support degree 1 or 2"));
            }
            let conductor: u64 = required("conductor")?
                .parse()
                .map_err(|_| Error::validation("conductor must be a positive integer"))?;
            let epsilon = Epsilon::parse(required("epsilon")?)?;
            let mu: Vec<Rational> = required("mu")?
                .split(',')
                .map(parse_rational_token)
                .collect::<Result<_>>()?;
            let coeff_rel = required("coeffs")?;
            let coeff_path = path
                .parent()
                .map(|dir| dir.join(coeff_rel))
                .unwrap_or_else(|| PathBuf::from(coeff_rel));
            let mut provider = load_coefficient_file(&coeff_path, degree)?;
            let extra_bad = parse_bad_primes(&fields)?;
            if let CoefficientProvider::Custom { bad, .. } = &mut provider {
                bad.extend(extra_bad);
            }
            let mut params =
                LFunctionParams::new(degree, conductor, epsilon, mu, provider, "custom")?;
            if let Some(l) = label {
                params.label = l;
            }
            Ok(params)
        }
        other => Err(Error::validation(format!("unknown instance kind {other:?}"))),
    }
}

fn parse_bad_primes(
    fields: &BTreeMap<String, Vec<String>>,
) -> Result<BTreeMap<u64, Vec<BadAlpha>>> {
    let mut bad = BTreeMap::new();
    if let Some(lines) = fields.get("bad_prime") {
        for spec in lines {
            let mut toks = spec.split(',');
            let p: u64 = toks
                .next()
                .unwrap_or("")
                .trim()
                .parse()
                .map_err(|_| Error::validation(format!("bad_prime needs a prime: {spec:?}")))?;
            let alphas: Vec<BadAlpha> = toks
                .map(|t| parse_bad_alpha(t, spec))
                .collect::<Result<_>>()?;
            bad.insert(p, alphas);
        }
    }
    Ok(bad)
}

/// Coefficient file: `p a_p` lines; `bad p alpha1 [alpha2]` lines; optional
/// header `format=normalized` (default) or `format=arithmetic`, the latter
/// meaning arithmetic traces to be divided by `√p`.
pub fn load_coefficient_file(path: &Path, degree: u32) -> Result<CoefficientProvider> {
    let text = std::fs::read_to_string(path)?;
    let mut normalized = true;
    let mut ap = BTreeMap::new();
    let mut bad = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |msg: &str| Error::Parse { line: idx + 1, msg: msg.into() };
        if let Some(v) = line.strip_prefix("format=") {
            normalized = match v.trim() {
                "normalized" => true,
                "arithmetic" => false,
                _ => return Err(parse_err("format must be 'normalized' or 'arithmetic'")),
            };
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "bad" {
            if toks.len() < 3 {
                return Err(parse_err("bad-prime line needs p and at least one alpha"));
            }
            let p: u64 = toks[1].parse().map_err(|_| parse_err("bad prime index"))?;
            let alphas: Vec<BadAlpha> = toks[2..]
                .iter()
                .map(|t| parse_bad_alpha(t, line))
                .collect::<Result<_>>()?;
            bad.insert(p, alphas);
            continue;
        }
        if toks.len() != 2 {
            return Err(parse_err("expected 'p a_p'"));
        }
        let p: u64 = toks[0].parse().map_err(|_| parse_err("prime index"))?;
        let a = parse_rational_token(toks[1]).map_err(|_| parse_err("coefficient"))?;
        ap.insert(p, a);
    }
    Ok(CoefficientProvider::Custom { degree, normalized, ap, bad })
}
