//! `rhverify`: window-bounded Riemann hypothesis verification from the
//! command line.
//!
//! Subcommands: `w1` (zero-sum constant of an instance), `verify-l`
//! (window verdicts for an `L`-function), `verify-zeta` (window verdicts
//! for zeta at a given height, basic or with tail bounds), `certify`
//! (sign-change certification of low zeta zeros, emitting a zeros file).
//!
//! Exit codes: 0 all requested verdicts verified (or the computation
//! succeeded, for non-verdict commands); 1 some verdict inconclusive;
//! 2 input or validation error; 3 precision error.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rhverify_core::rug::ops::Pow;
use rhverify_core::rug::Rational;

use rhverify_core::ball::{parse_decimal_rational, Ball, CBall, Precision};
use rhverify_core::error::Error;
use rhverify_core::lmodel;
use rhverify_core::logderiv;
use rhverify_core::verify::{self, LPart, ZetaPart};
use rhverify_core::zeros::{self, ZeroMode, ZeroSet};

use report::RunReport;

const PREC_ENV: &str = "RHVERIFY_PREC";

#[derive(Parser)]
#[command(name = "rhverify", version, about = "Certified zero verification for zeta and L-functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Working precision in bits (also via RHVERIFY_PREC; default 192).
    #[arg(long)]
    prec: Option<u32>,
    /// Emit the machine-readable JSON report instead of key-value text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ZerosOpts {
    /// Zeros file: one decimal ordinate per line, optional multiplicity
    /// column, '#' comments, optional radius=/provenance= headers.
    #[arg(long)]
    zeros: PathBuf,
    /// Override the ordinate radius (decimal), e.g. 1e-10.
    #[arg(long)]
    radius: Option<String>,
    /// Validation window "lo,hi" for the ordinates (default: from data).
    #[arg(long)]
    window: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Zero-sum constant w1 of an instance at shift delta.
    W1 {
        /// Instance descriptor file.
        #[arg(long)]
        instance: PathBuf,
        /// Shift δ < 0 (decimal).
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        delta: String,
        /// Dirichlet-series truncation point.
        #[arg(long, default_value_t = 100_000)]
        k: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Window verdicts for an L-function instance against a zeros list.
    VerifyL {
        #[arg(long)]
        instance: PathBuf,
        #[command(flatten)]
        zeros: ZerosOpts,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        delta: String,
        /// Window half-width η > 0 (decimal).
        #[arg(long)]
        eta: String,
        /// Count parameter m of the theorem.
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Comma-separated parts to evaluate: i,ii,iii,iv,v (default all).
        #[arg(long)]
        parts: Option<String>,
        /// Also search the largest verifiable η up to this cap (decimal),
        /// for the first requested part.
        #[arg(long)]
        max_eta: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        k: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Window verdicts for zeta at height y, basic or improved.
    VerifyZeta {
        /// Expansion height y > 0 (decimal).
        #[arg(long)]
        y: String,
        /// Expansion shift x < 0 (decimal).
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        x: String,
        #[command(flatten)]
        zeros: ZerosOpts,
        /// Window half-width η > 0 (decimal).
        #[arg(long)]
        eta: String,
        /// Data-window half-width τ (decimal); enables improved mode.
        #[arg(long, allow_hyphen_values = false)]
        tau: Option<String>,
        /// Split point c for the tail bounds (decimal, 168π < c < y-τ).
        #[arg(long)]
        c: Option<String>,
        /// basic | improved (improved requires --tau and --c).
        #[arg(long)]
        mode: Option<String>,
        /// Also evaluate the incompleteness counterpart.
        #[arg(long)]
        counterpart: bool,
        /// Also search the largest verifiable η up to this cap (decimal).
        #[arg(long)]
        max_eta: Option<String>,
        /// Truncation point (default 1e7 above height 1e8, else 1e6).
        #[arg(long)]
        k: Option<u64>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Certify sign changes of xi(1/2+it) on a grid; emits a zeros file.
    Certify {
        #[arg(long)]
        t_min: String,
        #[arg(long)]
        t_max: String,
        /// Grid step (decimal).
        #[arg(long)]
        grid: String,
        /// Bisection target width for each certified bracket.
        #[arg(long, default_value = "1e-9")]
        target_width: String,
        /// Output file (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Precision(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn precision_of(common: &CommonOpts) -> Result<Precision, Error> {
    if let Some(bits) = common.prec {
        return Precision::new(bits);
    }
    if let Ok(env) = std::env::var(PREC_ENV) {
        let bits: u32 = env
            .parse()
            .map_err(|_| Error::Validation(format!("{PREC_ENV} must be an integer")))?;
        return Precision::new(bits);
    }
    Ok(Precision::default())
}

fn decimal(s: &str, what: &str) -> Result<Rational, Error> {
    parse_decimal_rational(s)
        .map_err(|_| Error::Validation(format!("{what} must be a decimal literal, got {s:?}")))
}

fn ball_of(s: &str, what: &str, prec: Precision) -> Result<Ball, Error> {
    Ok(Ball::from_rational(prec, &decimal(s, what)?))
}

fn parse_window(
    spec: &Option<String>,
    entries_hint: Option<(&Rational, &Rational)>,
) -> Result<(Rational, Rational), Error> {
    if let Some(s) = spec {
        let (lo, hi) = s
            .split_once(',')
            .ok_or_else(|| Error::Validation("window must be \"lo,hi\"".into()))?;
        return Ok((decimal(lo, "window low")?, decimal(hi, "window high")?));
    }
    match entries_hint {
        Some((lo, hi)) => Ok((
            if *lo < 0 { lo.clone() - Rational::from(1) } else { Rational::new() },
            hi.clone() + Rational::from(1),
        )),
        None => Ok((Rational::new(), Rational::from(1u64 << 40))),
    }
}

/// Reads the ordinate span of a zeros file so a default window can cover it.
fn data_span(path: &PathBuf) -> Result<Option<(Rational, Rational)>, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() || line.contains('=') {
            continue;
        }
        let tok = line.split_whitespace().next().unwrap_or("");
        if let Ok(v) = parse_decimal_rational(tok) {
            if lo.as_ref().map_or(true, |l| v < *l) {
                lo = Some(v.clone());
            }
            if hi.as_ref().map_or(true, |h| v > *h) {
                hi = Some(v);
            }
        }
    }
    Ok(lo.zip(hi))
}

fn ingest(opts: &ZerosOpts, mode: ZeroMode) -> Result<ZeroSet, Error> {
    let radius = match &opts.radius {
        Some(r) => Some(decimal(r, "radius")?),
        None => None,
    };
    let span = data_span(&opts.zeros)?;
    let window = parse_window(&opts.window, span.as_ref().map(|(a, b)| (a, b)))?;
    ZeroSet::ingest(&opts.zeros, radius, window, mode)
}

fn parse_parts(spec: &Option<String>) -> Result<Vec<LPart>, Error> {
    match spec {
        None => Ok(LPart::ALL.to_vec()),
        Some(s) => s
            .split(',')
            .map(|t| match t.trim() {
                "i" | "1" => Ok(LPart::OffLine),
                "ii" | "2" => Ok(LPart::OnLineMissing),
                "iii" | "3" => Ok(LPart::RealZeros),
                "iv" | "4" => Ok(LPart::CentralMultiplicity),
                "v" | "5" => Ok(LPart::Complete),
                other => Err(Error::Validation(format!("unknown part {other:?}"))),
            })
            .collect(),
    }
}

fn finish(
    report: &mut RunReport,
    start: Instant,
    json: bool,
    all_verified: Option<bool>,
) -> ExitCode {
    report.elapsed_ms = start.elapsed().as_millis();
    if json {
        println!("{}", report.render_json());
    } else {
        print!("{}", report.render_text());
    }
    match all_verified {
        Some(true) | None => ExitCode::SUCCESS,
        Some(false) => ExitCode::from(1),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::W1 { instance, delta, k, common } => {
            let start = Instant::now();
            let prec = precision_of(&common)?;
            let params = lmodel::load_descriptor(&instance)?;
            let delta_ball = ball_of(&delta, "delta", prec)?;
            let w1 = logderiv::zero_sum_shifted(&params, &delta_ball, k, prec)?;
            let mut report = RunReport::new("w1");
            report.instance = Some(params.label().to_string());
            report.param("delta", &delta);
            report.param("K", k);
            report.param("precision", prec.bits());
            report.value("w1", &w1);
            Ok(finish(&mut report, start, common.json, None))
        }

        Command::VerifyL {
            instance,
            zeros,
            delta,
            eta,
            m,
            parts,
            max_eta,
            k,
            common,
        } => {
            let start = Instant::now();
            let prec = precision_of(&common)?;
            let params = lmodel::load_descriptor(&instance)?;
            let zset = ingest(&zeros, ZeroMode::LFunction)?;
            let delta_ball = ball_of(&delta, "delta", prec)?;
            let eta_ball = ball_of(&eta, "eta", prec)?;
            let parts = parse_parts(&parts)?;
            let prepared = verify::prepare_l(&params, &zset, &delta_ball, m, k, prec)?;
            let mut report = RunReport::new("verify-l");
            report.instance = Some(params.label().to_string());
            report.param("delta", &delta);
            report.param("eta", &eta);
            report.param("m", m);
            report.param("K", k);
            report.param("precision", prec.bits());
            report.param("zeros", zset.len());
            report.value("w1", &prepared.w1);
            report.value("C", &prepared.c_known);
            let mut all = true;
            for part in &parts {
                let v = prepared.verdict(*part, &eta_ball)?;
                all &= v.is_verified();
                report.verdicts.push(report::verdict_out(&v));
            }
            if let Some(cap) = max_eta {
                let cap = decimal(&cap, "max-eta cap")?;
                let first = parts[0];
                let search = verify::max_eta(
                    |e| Ok(prepared.verdict(first, e)?.is_verified()),
                    &cap,
                    prec,
                );
                match search {
                    Ok(bracket) => report.value("max_eta", &bracket),
                    Err(Error::Domain(msg)) => report.notes.push(format!("max_eta: {msg}")),
                    Err(e) => return Err(e),
                }
            }
            Ok(finish(&mut report, start, common.json, Some(all)))
        }

        Command::VerifyZeta {
            y,
            x,
            zeros,
            eta,
            tau,
            c,
            mode,
            counterpart,
            max_eta,
            k,
            common,
        } => {
            let start = Instant::now();
            let prec = precision_of(&common)?;
            let y_rat = decimal(&y, "y")?;
            if y_rat <= 0 {
                return Err(Error::Validation("y must be positive".into()));
            }
            let x_ball = ball_of(&x, "x", prec)?;
            let y_ball = Ball::from_rational(prec, &y_rat);
            let z = CBall::new(x_ball, y_ball);
            let zset = ingest(&zeros, ZeroMode::Zeta { y: y_rat.clone() })?;
            let eta_ball = ball_of(&eta, "eta", prec)?;

            let improved = match mode.as_deref() {
                None => tau.is_some() || c.is_some(),
                Some("basic") => false,
                Some("improved") => true,
                Some(other) => {
                    return Err(Error::Validation(format!(
                        "mode must be basic or improved, got {other:?}"
                    )));
                }
            };
            if counterpart && !improved {
                return Err(Error::Validation(
                    "the incompleteness counterpart needs improved mode (--tau, --c)".into(),
                ));
            }
            let tail_balls = if improved {
                let tau =
                    tau.ok_or_else(|| Error::Validation("improved mode needs --tau".into()))?;
                let c = c.ok_or_else(|| Error::Validation("improved mode needs --c".into()))?;
                Some((ball_of(&tau, "tau", prec)?, ball_of(&c, "c", prec)?))
            } else {
                None
            };
            let k_limit = k.unwrap_or(if y_rat > 100_000_000 { 10_000_000 } else { 1_000_000 });

            let prepared = verify::prepare_zeta(
                &z,
                &zset,
                k_limit,
                tail_balls.as_ref().map(|(t, c)| (t, c)),
                prec,
            )?;
            let mut report = RunReport::new("verify-zeta");
            report.param("y", &y);
            report.param("x", &x);
            report.param("eta", &eta);
            report.param("mode", if improved { "improved" } else { "basic" });
            report.param("K", k_limit);
            report.param("precision", prec.bits());
            report.param("zeros", zset.len());
            report.value("v1z_re", &prepared.v_re);
            report.value("D", &prepared.d_known);
            if let Some(tail) = &prepared.tail {
                report.value("r", &tail.r_lower);
                report.value("R", &tail.r_upper);
            }
            let mut all = true;
            for v in prepared.verdicts(&eta_ball, counterpart)? {
                all &= v.is_verified();
                report.verdicts.push(report::verdict_out(&v));
            }
            if let Some(cap) = max_eta {
                let cap = decimal(&cap, "max-eta cap")?;
                let cap = if cap > y_rat { y_rat.clone() } else { cap };
                let search = verify::max_eta(
                    |e| Ok(prepared.verdict(ZetaPart::RhWindow, e)?.is_verified()),
                    &cap,
                    prec,
                );
                match search {
                    Ok(bracket) => report.value("max_eta", &bracket),
                    Err(Error::Domain(msg)) => report.notes.push(format!("max_eta: {msg}")),
                    Err(e) => return Err(e),
                }
            }
            Ok(finish(&mut report, start, common.json, Some(all)))
        }

        Command::Certify { t_min, t_max, grid, target_width, out, common } => {
            let start = Instant::now();
            let prec = precision_of(&common)?;
            let t_min_r = decimal(&t_min, "t-min")?;
            let t_max_r = decimal(&t_max, "t-max")?;
            let grid_r = decimal(&grid, "grid")?;
            let width = decimal(&target_width, "target-width")?;
            let intervals = zeros::certify_scan(&t_min_r, &t_max_r, &grid_r, &width, prec)?;
            let payload = render_zeros_file(&intervals);
            match out {
                Some(path) => {
                    std::fs::write(&path, payload)?;
                    let mut report = RunReport::new("certify");
                    report.param("t_min", t_min);
                    report.param("t_max", t_max);
                    report.param("grid", grid);
                    report.param("precision", prec.bits());
                    report.param("certified", intervals.len());
                    report.param("out", path.display());
                    Ok(finish(&mut report, start, common.json, None))
                }
                None => {
                    print!("{payload}");
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
    }
}

/// Renders certified intervals in the zeros-file format: midpoints with a
/// single radius header that covers every interval plus the decimal
/// truncation slack, so the ingested intervals contain the certified ones.
fn render_zeros_file(intervals: &[zeros::ZeroInterval]) -> String {
    use std::fmt::Write as _;
    const MID_DIGITS: u32 = 14;
    let pow10 = Rational::from(Rational::from(10).pow(MID_DIGITS));
    let quantum = Rational::from(1) / pow10.clone();
    let mut radius = quantum.clone();
    let mut mids = Vec::with_capacity(intervals.len());
    for iv in intervals {
        let mid = (iv.lo.clone() + iv.hi.clone()) / Rational::from(2);
        // Round the midpoint to a fixed number of decimals (exactly).
        let scaled = mid * pow10.clone();
        let rounded = Rational::from(scaled.round()) / pow10.clone();
        let reach = std::cmp::max(
            iv.hi.clone() - rounded.clone(),
            rounded.clone() - iv.lo.clone(),
        ) + quantum.clone();
        if reach > radius {
            radius = reach;
        }
        mids.push(rounded);
    }
    let mut out = String::new();
    out.push_str("# certified sign-change brackets of xi(1/2 + i t)\n");
    out.push_str("provenance=certified\n");
    let _ = writeln!(out, "radius={}", rational_decimal_up(&radius, 4));
    for mid in mids {
        let _ = writeln!(out, "{}", rational_fixed(&mid, MID_DIGITS));
    }
    out
}

/// Decimal form of a nonnegative rational, rounded up to `sig` significant
/// digits (a radius may only grow in printing).
fn rational_decimal_up(r: &Rational, sig: u32) -> String {
    let b = Ball::from_rational(Precision::new(96).expect("valid bits"), r);
    let (_, hi) = b.to_decimal_pair(sig as usize);
    hi
}

/// Fixed-point decimal of a rational that is exactly n/10^digits.
fn rational_fixed(r: &Rational, digits: u32) -> String {
    let scaled = Rational::from(r * Rational::from(10).pow(digits));
    debug_assert_eq!(*scaled.denom(), 1);
    let int = scaled.numer().clone();
    let neg = int < 0;
    let mag = int.abs().to_string();
    let mag = if mag.len() <= digits as usize {
        format!("{}{}", "0".repeat(digits as usize + 1 - mag.len()), mag)
    } else {
        mag
    };
    let split = mag.len() - digits as usize;
    format!("{}{}.{}", if neg { "-" } else { "" }, &mag[..split], &mag[split..])
}
