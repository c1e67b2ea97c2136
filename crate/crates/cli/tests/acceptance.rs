//! Acceptance suite: one test per criterion, each printing a PASS line on
//! stderr (visible with `--nocapture`; the test name doubles as the line).
//!
//! Criteria tied to external zeros databases (the 1e28-height zeta list,
//! the Dirichlet d = -1159523 list) run when the documented file is
//! present under `fixtures/external/` and are skipped with a note
//! otherwise; the synthetic property suite always runs.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rhverify_core::arith::{lambda_l, sieve};
use rhverify_core::ball::{parse_decimal_rational, Ball, CBall, Precision};
use rhverify_core::lmodel::{make_dirichlet, make_ramanujan};
use rhverify_core::logderiv::{zeta_zero_sum_origin, zeta_zero_sum_re, zero_sum_shifted};
use rhverify_core::rug::Rational;
use rhverify_core::verify::{
    self, iota, phi, phi_min, prepare_l_with_w1, s_bounds, tail_bounds, LPart, PhiMinLocation,
    ZetaPart,
};
use rhverify_core::zeros::{Provenance, ZeroInterval, ZeroMode, ZeroSet};

fn prec192() -> Precision {
    Precision::default()
}

fn rat(s: &str) -> Rational {
    parse_decimal_rational(s).unwrap()
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn pass(line: &str) {
    eprintln!("{line}");
}

fn load_fixture_zeros() -> ZeroSet {
    ZeroSet::ingest(
        &fixtures().join("zeta_zeros_100.txt"),
        None,
        (rat("0"), rat("300")),
        ZeroMode::LFunction,
    )
    .expect("bundled fixture must ingest")
}

// ---- criterion 1 ----

#[test]
fn criterion_1_riemann_constant() {
    let start = Instant::now();
    let prec = Precision::new(128).unwrap();
    let v1 = zeta_zero_sum_origin(prec).unwrap();
    assert!(v1.lo() >= &rat("0.02309570896612103381"));
    assert!(v1.hi() <= &rat("0.02309570896612103382"));
    assert!(v1.width().to_f64() <= 1e-18);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    pass(&format!("criterion 1: PASS (v1 enclosure, width {:.1e}, {elapsed:?})", v1.width().to_f64()));
}

// ---- criterion 2 ----

#[test]
fn criterion_2_dirichlet_case_study() {
    let start = Instant::now();
    let prec = prec192();
    let params = make_dirichlet(-1_159_523).unwrap();
    let delta = Ball::from_i64(prec, -1);
    let w1 = zero_sum_shifted(&params, &delta, 100_000, prec).unwrap();
    assert!(w1.hi() >= &rat("6.4702225452") && w1.lo() <= &rat("6.4702573982"));
    let formula_elapsed = start.elapsed();
    assert!(formula_elapsed.as_secs_f64() < 30.0, "took {formula_elapsed:?}");

    // The verdict side needs the externally generated 74-zero list.
    let zeros_file = fixtures().join("external/dirichlet_-1159523_zeros.txt");
    if !zeros_file.exists() {
        pass(&format!(
            "criterion 2: PASS (w1 formula side, {formula_elapsed:?}); verdict side SKIPPED: {} not present",
            zeros_file.display()
        ));
        return;
    }
    let zset = ZeroSet::ingest(
        &zeros_file,
        Some(rat("1e-8")),
        (rat("0"), rat("1700")),
        ZeroMode::LFunction,
    )
    .unwrap();
    let prepared = verify::prepare_l(&params, &zset, &delta, 1, 100_000, prec).unwrap();
    let eta = Ball::from_i64(prec, 32);
    let v = prepared.verdict(LPart::OffLine, &eta).unwrap();
    assert!(v.is_verified(), "part (i) at eta=32 with the external list");
    let search = verify::max_eta(
        |e| Ok(prepared.verdict(LPart::OffLine, e)?.is_verified()),
        &rat("1000"),
        prec,
    )
    .unwrap();
    assert!(search.hi() >= &rat("32"), "maximal window below 32: {search:?}");
    assert!(start.elapsed().as_secs_f64() < 30.0);
    pass("criterion 2: PASS (formula and verdict sides)");
}

// ---- criterion 3 ----

#[test]
fn criterion_3_ramanujan_case_study() {
    let start = Instant::now();
    let prec = prec192();
    let params = make_ramanujan();
    let delta = Ball::from_i64(prec, -1);
    let w1 = zero_sum_shifted(&params, &delta, 100_000, prec).unwrap();
    assert!(w1.hi() >= &rat("0.1671717623") && w1.lo() <= &rat("0.1672414682"));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");
    pass(&format!("criterion 3: PASS (w1 within the reference interval, {elapsed:?})"));
}

// ---- criterion 4 ----

#[test]
fn criterion_4_elliptic_case_study() {
    let start = Instant::now();
    let prec = prec192();
    let params = rhverify_core::lmodel::load_descriptor(&fixtures().join("elliptic_37a.instance")).unwrap();
    let delta = Ball::from_i64(prec, -1);
    let w1 = zero_sum_shifted(&params, &delta, 100_000, prec).unwrap();
    assert!(w1.hi() >= &rat("1.2186382841") && w1.lo() <= &rat("1.21870798992"));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 600.0, "took {elapsed:?}");
    pass(&format!("criterion 4: PASS (w1 by naive point counting, {elapsed:?})"));
}

// ---- criterion 5 ----

#[test]
fn criterion_5_large_height_tail_bound() {
    let start = Instant::now();
    let prec = Precision::new(256).unwrap();
    let y = Ball::from_decimal_str(prec, "10000000000000000000000501675.8").unwrap();
    let x = Ball::from_i64(prec, -2);
    let tau = Ball::from_decimal_str(prec, "501575.4").unwrap();
    let c = Ball::from_decimal_str(prec, "5000000000000000000000250837.9").unwrap();
    let tb = tail_bounds(&CBall::new(x, y), &tau, &c).unwrap();
    let center = rat("0.000099372589781012325291744466523344471948495");
    let window = rat("5e-45");
    let lo = center.clone() - window.clone();
    let hi = center + window;
    assert!(
        tb.r_lower.hi() >= &lo && tb.r_lower.lo() <= &hi,
        "r = {:?} misses the reference window",
        tb.r_lower
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    pass(&format!("criterion 5: PASS (45-digit tail bound reproduced, {elapsed:?})"));
}

// ---- criterion 6 ----

#[test]
fn criterion_6_riemann_remark_reproduction() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_rhverify");
    let dir = tempfile::tempdir().unwrap();
    let zeros_path = dir.path().join("low_zeros.txt");

    // Self-generate the 12 lowest zeros (γ12 ≈ 56.446 < 57.5 < γ13 ≈ 59.347).
    let certify = Command::new(bin)
        .args([
            "certify", "--t-min", "13", "--t-max", "57.5", "--grid", "0.1", "--prec", "128",
            "--out",
        ])
        .arg(&zeros_path)
        .output()
        .unwrap();
    assert!(certify.status.success(), "certify failed: {certify:?}");
    let body = std::fs::read_to_string(&zeros_path).unwrap();
    let count = body.lines().filter(|l| l.starts_with(|c: char| c.is_ascii_digit())).count();
    assert_eq!(count, 12, "expected the 12 lowest zeros, found {count}");

    // The verified window is exactly [6.5360, 21.6640].
    assert_eq!(rat("14.1") - rat("7.564"), rat("6.536"));
    assert_eq!(rat("14.1") + rat("7.564"), rat("21.664"));

    let verify = Command::new(bin)
        .args([
            "verify-zeta", "--y", "14.1", "--x", "-0.5", "--eta", "7.564", "--mode", "basic",
            "--k", "1000000", "--zeros",
        ])
        .arg(&zeros_path)
        .output()
        .unwrap();
    let stdout = String::from_utf8_lossy(&verify.stdout);
    assert!(
        stdout.contains("verdict.1.kind = rh-window") && stdout.contains("verdict.1.status = verified"),
        "rh-window not verified:\n{stdout}"
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "took {elapsed:?}");
    pass(&format!("criterion 6: PASS (RH verified on [6.5360, 21.6640] from 12 self-certified zeros, {elapsed:?})"));
}

// ---- criterion 7 ----

#[test]
fn criterion_7_footnote_check() {
    let prec = prec192();
    let zset = load_fixture_zeros();
    let v1 = zeta_zero_sum_origin(prec).unwrap();
    let delta0 = Ball::zero(prec);

    let verdict_with = |n: usize, eta: &Ball| -> bool {
        let subset = ZeroSet::new(
            zset.intervals()[..n].to_vec(),
            zset.window().clone(),
            ZeroMode::LFunction,
        )
        .unwrap();
        let prepared = prepare_l_with_w1(&v1, &subset, &delta0, 1, prec).unwrap();
        prepared.verdict(LPart::OffLine, eta).unwrap().is_verified()
    };

    // Height gamma_1: the top of the first certified interval.
    let eta1 = Ball::from_rational(prec, &zset.intervals()[0].hi);
    assert!(verdict_with(10, &eta1), "10 zeros must verify up to gamma_1");
    assert!(!verdict_with(9, &eta1), "9 zeros must not suffice");

    // Height gamma_2.
    let eta2 = Ball::from_rational(prec, &zset.intervals()[1].hi);
    assert!(verdict_with(51, &eta2), "51 zeros must verify up to gamma_2");
    assert!(!verdict_with(50, &eta2), "50 zeros must not suffice");

    pass("criterion 7: PASS (10 zeros reach gamma_1, not 9; 51 reach gamma_2, not 50)");
}

// ---- criterion 8 (conditional) ----

#[test]
fn criterion_8_large_height_end_to_end() {
    let zeros_file = fixtures().join("external/zeta_1e28_zeros.txt");
    if !zeros_file.exists() {
        pass(&format!(
            "criterion 8: SKIPPED ({} not present; criterion 9 runs the synthetic replacements)",
            zeros_file.display()
        ));
        return;
    }
    let prec = Precision::new(256).unwrap();
    let y = rat("10000000000000000000000501675.8");
    let z = CBall::new(Ball::from_i64(prec, -2), Ball::from_rational(prec, &y));
    let tau = Ball::from_decimal_str(prec, "501575.4").unwrap();
    let c = Ball::from_decimal_str(prec, "5000000000000000000000250837.9").unwrap();
    let window = (y.clone() - rat("501575.4"), y.clone() + rat("501575.4"));
    let zset = ZeroSet::ingest(&zeros_file, None, window, ZeroMode::Zeta { y: y.clone() }).unwrap();

    let v = zeta_zero_sum_re(&z, 10_000_000, prec).unwrap();
    assert!(v.hi() >= &rat("31.418062627034752") && v.lo() <= &rat("31.418062627034846"));
    let d = zset.d_sum(&z, prec).unwrap();
    assert!(d.hi() >= &rat("31.417963253430945") && d.lo() <= &rat("31.417963255019071"));

    let prepared = verify::prepare_zeta(&z, &zset, 10_000_000, Some((&tau, &c)), prec).unwrap();
    let eta = Ball::from_i64(prec, 70_216);
    assert!(prepared.verdict(ZetaPart::RhWindow, &eta).unwrap().is_verified());
    let complete_set = zset
        .restrict(&(y.clone() - rat("49650")), &(y.clone() + rat("49650")))
        .unwrap();
    let prepared_complete =
        verify::prepare_zeta(&z, &complete_set, 10_000_000, Some((&tau, &c)), prec).unwrap();
    let eta_c = Ball::from_i64(prec, 49_650);
    assert!(prepared_complete.verdict(ZetaPart::Completeness, &eta_c).unwrap().is_verified());

    let thinned = zset.without_nearest(&rat("10000000000000000000000521738.816")).unwrap();
    let prepared_thinned =
        verify::prepare_zeta(&z, &thinned, 10_000_000, Some((&tau, &c)), prec).unwrap();
    assert!(prepared_thinned
        .verdict(ZetaPart::Incompleteness, &eta)
        .unwrap()
        .is_verified());
    pass("criterion 8: PASS (large-height end-to-end)");
}

// ---- criterion 9: property suites ----

#[test]
fn criterion_9a_phi_nonnegativity_and_lemma_cases() {
    let prec = prec192();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let phi_f = |beta: f64, eta: f64, x: f64| -> f64 {
        (beta - x) / ((beta - x).powi(2) + eta * eta)
            + (1.0 - beta - x) / ((1.0 - beta - x).powi(2) + eta * eta)
    };

    // Nonnegativity, 1e5 samples, zero violations.
    for _ in 0..100_000 {
        let beta = rng.gen_range(0.0..=1.0);
        let eta = rng.gen_range(0.0..50.0);
        let x = -rng.gen_range(0.0..20.0);
        assert!(phi_f(beta, eta, x) >= -1e-12, "phi({beta},{eta},{x}) < 0");
    }
    // The same claim through ball arithmetic on a subsample.
    for _ in 0..2_000 {
        let beta = Ball::from_f64(prec, rng.gen_range(0.0..=1.0));
        let eta = Ball::from_f64(prec, rng.gen_range(0.0..50.0));
        let x = Ball::from_f64(prec, -rng.gen_range(0.0..20.0));
        assert!(!phi(&beta, &eta, &x).is_strictly_negative());
    }

    // Cases (i)/(ii): the located minimum matches a brute-force beta grid.
    let grid_n = 200;
    for _ in 0..300 {
        let x_f = -rng.gen_range(0.0..5.0);
        let eta_f = rng.gen_range(1e-3..4.0);
        let x = Ball::from_f64(prec, x_f);
        let eta = Ball::from_f64(prec, eta_f);
        let (loc, value) = phi_min(&eta, &x).unwrap();
        let mut grid_min = f64::INFINITY;
        let mut arg_min = 0.0;
        for i in 0..=grid_n {
            let beta = i as f64 / grid_n as f64;
            let v = phi_f(beta, eta_f, x_f);
            if v < grid_min {
                grid_min = v;
                arg_min = beta;
            }
        }
        assert!(
            value.lo().to_f64() <= grid_min + 1e-9,
            "claimed minimum above grid minimum"
        );
        match loc {
            PhiMinLocation::Center => {
                assert!(
                    phi_f(0.5, eta_f, x_f) <= grid_min + 1e-9,
                    "center not minimal at eta={eta_f}, x={x_f} (grid argmin {arg_min})"
                );
            }
            PhiMinLocation::Edge => {
                assert!(
                    phi_f(0.0, eta_f, x_f) <= grid_min + 1e-9,
                    "edge not minimal at eta={eta_f}, x={x_f} (grid argmin {arg_min})"
                );
            }
            PhiMinLocation::Either => {}
        }
    }

    // Case (iii): maximum at beta = 1/2 once eta > (1-2x)/(2 sqrt 3).
    for _ in 0..200 {
        let x_f = -rng.gen_range(0.0..5.0);
        let threshold = (1.0 - 2.0 * x_f) / (2.0 * 3.0f64.sqrt());
        let eta_f = threshold + rng.gen_range(1e-3..4.0);
        let center = phi_f(0.5, eta_f, x_f);
        for i in 0..=grid_n {
            let beta = i as f64 / grid_n as f64;
            assert!(center >= phi_f(beta, eta_f, x_f) - 1e-9);
        }
    }

    // Case (iv): phi decreasing in eta; derivative increasing (discrete
    // convexity) above the stated thresholds.
    for _ in 0..200 {
        let x_f = -rng.gen_range(0.0..5.0);
        let beta = rng.gen_range(0.0..=1.0);
        let u1 = rng.gen_range(1e-3..10.0);
        let u2 = u1 + rng.gen_range(1e-3..5.0);
        assert!(phi_f(beta, u1, x_f) > phi_f(beta, u2, x_f));

        let h = 0.01;
        let conv = |beta: f64, u: f64| {
            phi_f(beta, u + 2.0 * h, x_f) - 2.0 * phi_f(beta, u + h, x_f) + phi_f(beta, u, x_f)
        };
        let u_center = (1.0 - 2.0 * x_f) / (2.0 * 3.0f64.sqrt()) + rng.gen_range(0.01..5.0);
        assert!(conv(0.5, u_center) >= -1e-12);
        let u_edge = (2.0 - 2.0 * x_f) / (2.0 * 3.0f64.sqrt()) + rng.gen_range(0.01..5.0);
        assert!(conv(0.0, u_edge) >= -1e-12);
    }
    pass("criterion 9a: PASS (phi nonnegativity + lemma cases, 1e5 samples, zero violations)");
}

#[test]
fn criterion_9b_ball_containment_fuzzing() {
    let coarse = Precision::new(64).unwrap();
    let fine = Precision::new(256).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);
    let dyadic = |rng: &mut ChaCha8Rng| -> Rational {
        Rational::from((rng.gen_range(-(1i64 << 20)..(1i64 << 20)), 1i64 << 17))
    };
    let mut checked = 0u32;
    while checked < 10_000 {
        let xa = dyadic(&mut rng);
        let xb = dyadic(&mut rng);
        let spread = Rational::from((rng.gen_range(0i64..1000), 1i64 << 40));
        let a = Ball::from_rational_endpoints(coarse, &(xa.clone() - spread.clone()), &(xa.clone() + spread.clone())).unwrap();
        let b = Ball::from_rational_endpoints(coarse, &(xb.clone() - spread.clone()), &(xb.clone() + spread)).unwrap();
        let fa = Ball::from_rational(fine, &xa);
        let fb = Ball::from_rational(fine, &xb);
        let op = rng.gen_range(0..9);
        let pair = match op {
            0 => Some((&a + &b, &fa + &fb)),
            1 => Some((&a - &b, &fa - &fb)),
            2 => Some((&a * &b, &fa * &fb)),
            3 => (!b.contains_zero()).then(|| (a.checked_div(&b).unwrap(), fa.checked_div(&fb).unwrap())),
            4 => a.is_strictly_positive().then(|| (a.sqrt().unwrap(), fa.sqrt().unwrap())),
            5 => a.is_strictly_positive().then(|| (a.ln().unwrap(), fa.ln().unwrap())),
            6 => Some((a.exp(), fa.exp())),
            7 => Some((a.atan(), fa.atan())),
            _ => Some(if rng.gen_bool(0.5) { (a.sin(), fa.sin()) } else { (a.cos(), fa.cos()) }),
        };
        if let Some((coarse_out, fine_out)) = pair {
            assert!(coarse_out.contains(&fine_out), "containment violated for op {op}");
            checked += 1;
        }
    }
    pass("criterion 9b: PASS (containment fuzzing, 1e4 samples)");
}

#[test]
fn criterion_9c_lambda_bounded_by_degree() {
    let prec = prec192();
    let table = sieve(10_000);
    let instances = [
        make_dirichlet(5).unwrap(),
        make_dirichlet(-1_159_523).unwrap(),
        make_ramanujan(),
        rhverify_core::lmodel::load_descriptor(&fixtures().join("elliptic_37a.instance")).unwrap(),
    ];
    for inst in &instances {
        inst.provider().prepare(10_000).unwrap();
        let bound_factor = Ball::from_u64(prec, u64::from(inst.degree()));
        for e in table.entries() {
            let lam = lambda_l(inst.provider(), prec, e.p, e.m).unwrap();
            let bound = &bound_factor * &table.mangoldt(prec, e.n).unwrap();
            assert!(lam.abs().lo() <= bound.hi(), "{} at n = {}", inst.label(), e.n);
        }
    }
    pass("criterion 9c: PASS (|Lambda_L| <= r Lambda on all generated coefficients)");
}

/// Direct segmented sum of Λ(k)/k² over `k_from < k ≤ k_to` in ball
/// arithmetic (test oracle, independent of the tail-bound formulas).
fn direct_mangoldt_square_tail(k_from: u64, k_to: u64, prec: Precision) -> Ball {
    let base = sieve((k_to as f64).sqrt() as u64 + 2);
    let mut acc = Ball::zero(prec);
    // Higher prime powers.
    for &p in base.primes() {
        let lp = Ball::from_u64(prec, p).ln().unwrap();
        let mut pm = p.checked_mul(p);
        while let Some(n) = pm {
            if n > k_to {
                break;
            }
            if n > k_from {
                acc = &acc + &lp.checked_div(&Ball::from_u64(prec, n * n)).unwrap();
            }
            pm = n.checked_mul(p);
        }
    }
    // Primes by segments.
    const SEG: u64 = 1 << 20;
    let mut lo = k_from + 1;
    let mut flags = vec![false; SEG as usize];
    while lo <= k_to {
        let hi = (lo + SEG - 1).min(k_to);
        let len = (hi - lo + 1) as usize;
        flags[..len].iter_mut().for_each(|f| *f = false);
        for &p in base.primes() {
            if p * p > hi {
                break;
            }
            let start = (lo.div_ceil(p) * p).max(2 * p);
            let mut j = start;
            while j <= hi {
                flags[(j - lo) as usize] = true;
                j += p;
            }
        }
        for (i, marked) in flags[..len].iter().enumerate() {
            if !marked {
                // Unmarked in (k_from, 1e8] with all prime factors > sqrt: prime.
                let n = lo + i as u64;
                let lp = Ball::from_u64(prec, n).ln().unwrap();
                acc = &acc + &lp.checked_div(&Ball::from_u64(prec, n * n)).unwrap();
            }
        }
        lo = hi + 1;
    }
    acc
}

#[test]
fn criterion_9d_remainder_bounds_enclose_direct_tail() {
    let prec = Precision::new(96).unwrap();
    let k = 100u64;
    let delta = Ball::from_i64(prec, -1);

    // True tail: the direct sum to 1e8 plus a crude bracket for the rest
    // (0 < tail_beyond <= (log N + 1)/N, since Λ(k) ≤ log k).
    let direct = direct_mangoldt_square_tail(k, 100_000_000, prec);
    let n_ball = Ball::from_u64(prec, 100_000_000);
    let beyond_hi = (&n_ball.ln().unwrap() + &Ball::one(prec)).checked_div(&n_ball).unwrap();
    let true_tail_hi = (&direct + &beyond_hi).hi().clone();
    let true_tail_lo = direct.lo().clone();

    // Chebyshev-driven bound, evaluated from its formula.
    let log_k = Ball::from_u64(prec, k).ln().unwrap();
    let k_pow = (&delta * &log_k).exp();
    let one = Ball::one(prec);
    let two = Ball::from_i64(prec, 2);
    let c285 = Ball::from_decimal_str(prec, "2.85").unwrap();
    let main_bound = &k_pow.checked_div(&delta).unwrap()
        * &(&(&c285 * &(&(&two * &delta) - &one)).checked_div(&log_k).unwrap() - &one);
    // Crude variant.
    let crude_bound = &k_pow * &(&one - &(&delta * &log_k)).checked_div(&delta.sq()).unwrap();

    assert!(main_bound.hi() >= &true_tail_hi, "Chebyshev bound below the true tail");
    assert!(crude_bound.hi() >= &true_tail_hi, "crude bound below the true tail");
    assert!(true_tail_lo.is_sign_positive());
    // And the library's combined radius agrees with the smaller formula.
    let lib = rhverify_core::logderiv::tail_radius_first(1, k, &delta).unwrap();
    assert!(lib.hi() >= &true_tail_hi);
    assert!(lib.hi() <= main_bound.hi() && lib.hi() <= crude_bound.hi());
    pass("criterion 9d: PASS (both remainder variants enclose the direct tail to 1e8)");
}

#[test]
fn criterion_9e_iota_identity() {
    let prec = prec192();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let m1 = Ball::from_i64(prec, -1);
    for _ in 0..100 {
        let eta_f = rng.gen_range(1e-3..200.0);
        let eta = Ball::from_f64(prec, eta_f);
        let i = iota(&eta).unwrap();
        let th = verify::zeta_thresholds(&eta, &m1, prec).unwrap();
        assert!(i.intersects(&th.g1), "iota != g1(eta, -1) at eta = {eta_f}");
    }
    pass("criterion 9e: PASS (iota == g1(., -1) on 100 random points)");
}

#[test]
fn criterion_9f_verdict_soundness_under_widening() {
    let prec = prec192();
    let mut rng = ChaCha8Rng::seed_from_u64(321);
    let window = (rat("0"), rat("100"));
    let mut flips = 0;
    for _ in 0..300 {
        let g1 = 5.0 + rng.gen_range(0.0..20.0);
        let iv = ZeroInterval::positive_pair(
            parse_decimal_rational(&format!("{:.6}", g1)).unwrap(),
            parse_decimal_rational(&format!("{:.6}", g1 + 1e-4)).unwrap(),
            Provenance::External,
        )
        .unwrap();
        let zset = ZeroSet::new(vec![iv], window.clone(), ZeroMode::LFunction).unwrap();
        let delta = Ball::from_i64(prec, -1);
        let eta = Ball::from_f64(prec, rng.gen_range(0.5..20.0));
        let c = zset.c_sum(&delta, prec).unwrap();
        let w1 = &(&c + &Ball::from_decimal_str(prec, "0.9").unwrap())
            + &Ball::from_f64(prec, rng.gen_range(-0.02..0.02));
        let widen = |b: &Ball, r: f64| Ball::with_radius(b, &Ball::from_f64(prec, r));
        let tight = prepare_l_with_w1(&w1, &zset, &delta, 1, prec).unwrap();
        let wide = prepare_l_with_w1(&widen(&w1, 0.01), &zset, &delta, 1, prec).unwrap();
        for part in LPart::ALL {
            let vt = tight.verdict(part, &eta).unwrap();
            let vw = wide.verdict(part, &widen(&eta, 0.01)).unwrap();
            if vw.is_verified() && !vt.is_verified() {
                flips += 1;
            }
        }
    }
    assert_eq!(flips, 0, "widening produced verified verdicts");
    pass("criterion 9f: PASS (widening never flips inconclusive to verified)");
}

#[test]
fn criterion_9g_kappa_consistency_grid() {
    let prec = prec192();
    // kappa + 3 ell(2y)/tau^2 majorizes b(-1+iy, tau, y/2) across the grid
    // (the closed form splits the tau^-2 term off before majorizing).
    for (y_v, tau_v) in [
        (5_000i64, 50i64),
        (10_000, 100),
        (50_000, 200),
        (100_000, 500),
        (1_000_000, 1_000),
        (10_000_000, 5_000),
    ] {
        let y = Ball::from_i64(prec, y_v);
        let tau = Ball::from_i64(prec, tau_v);
        let z = CBall::new(Ball::from_i64(prec, -1), y.clone());
        let c = Ball::from_i64(prec, y_v / 2);
        let tb = tail_bounds(&z, &tau, &c).unwrap();
        let k = verify::kappa(&y, &tau).unwrap();
        let two = Ball::from_i64(prec, 2);
        let ell_term = (&Ball::from_i64(prec, 3) * &s_bounds(&(&two * &y)).unwrap().ell)
            .checked_div(&tau.sq())
            .unwrap();
        assert!(
            (&k + &ell_term).hi() >= tb.b.lo(),
            "majorant fails at y={y_v}, tau={tau_v}"
        );
    }
    pass("criterion 9g: PASS (kappa consistency grid)");
}
