//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p chaundy --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use chaundy::bezout::{
    closed_form, closed_form_factored, euclid_solution, recurrence_solution, verify_cross_check,
    verify_cross_check_with,
};
use chaundy::identities::{self as id, Residual, Tamper};
use chaundy::numeric::{int, ratio, to_f64};
use chaundy::special_fn::{
    incomplete_beta_exact, incomplete_beta_numeric, verify_beta_identity,
    verify_beta_identity_with, IDENTITY_TOLERANCE, QUADRATURE_TOLERANCE,
};
use chaundy::sweep::{sample_beta_points, sample_brill_arguments, sample_rational_pairs};
use chaundy::{CheckReport, DensePoly};
use num_traits::Zero;

const SEED: u64 = 20240601;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ensure_report(r: &CheckReport) -> Result<(), String> {
    ensure(r.passed, || format!("{r}"))
}

fn ensure_time(elapsed: Duration, limit_s: f64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_s, || {
        format!("took {:.2} s, limit {limit_s} s", elapsed.as_secs_f64())
    })
}

fn c1_bezout_cross_check() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 0..=20 {
        for m in 0..=20 {
            let base = closed_form(n, m);
            let (fp, fq) = closed_form_factored(n, m);
            let rec = recurrence_solution(n, m);
            let euc = euclid_solution(n, m);
            ensure(fp == base.p && fq == base.q, || {
                format!("factored differs at ({n},{m})")
            })?;
            ensure(rec.p == base.p && rec.q == base.q, || {
                format!("recurrence differs at ({n},{m})")
            })?;
            ensure(euc.p == base.p && euc.q == base.q, || {
                format!("euclid differs at ({n},{m})")
            })?;
            for s in [&base, &rec, &euc] {
                ensure(s.residual().is_zero(), || {
                    format!("nonzero residual at ({n},{m})")
                })?;
            }
            ensure_report(&verify_cross_check(n, m))?;
            count += 1;
        }
    }
    ensure(count == 441, || format!("{count} instances"))?;
    let t = start.elapsed();
    ensure_time(t, 10.0)?;
    Ok(format!(
        "{count} instances agree, zero residual, {:.2} s",
        t.as_secs_f64()
    ))
}

fn c2_chaundy_bullard() -> Outcome {
    let start = Instant::now();
    for n in 0..=20 {
        for m in 0..=20 {
            ensure_report(&id::verify_chaundy_bullard(n, m))?;
        }
    }
    let t = start.elapsed();
    ensure_time(t, 5.0)?;
    Ok(format!("441 expansions equal 1, {:.2} s", t.as_secs_f64()))
}

fn c3_second_proof() -> Outcome {
    for n in 0..=12 {
        for m in 0..=12 {
            let c = id::second_proof_coefficients(n, m);
            ensure(c.d[0] == int(1), || format!("d_0 != 1 at ({n},{m})"))?;
            ensure(c.d[1..=m].iter().all(Zero::is_zero), || {
                format!("d_k != 0 at ({n},{m})")
            })?;
            for k in m + 1..=n + m + 1 {
                ensure((&c.a[k - m - 1] + &c.d[k]).is_zero(), || {
                    format!("a_(k-m-1) + d_k != 0 at ({n},{m}), k = {k}")
                })?;
            }
            let uv = &id::u_poly(n, m) + &id::v_poly(n, m);
            ensure(uv == DensePoly::one(), || format!("U+V != 1 at ({n},{m})"))?;
            ensure_report(&id::verify_cancellation(n, m))?;
        }
    }
    Ok("169 grid points: d_0 = 1, d_1..d_m = 0, a + d = 0, U + V = 1".into())
}

fn c4_lemmas() -> Outcome {
    let xs = sample_brill_arguments(SEED, 200);
    for p in 0..=12 {
        for x in &xs {
            let (l, r) = id::brill_sum(p, x);
            ensure(l == r, || format!("Brill fails at p = {p}, x = {x}"))?;
        }
    }
    let mut triples = 0;
    for n in 0..=12 {
        for k in 0..=n {
            for m in 0..=12 {
                let (s, r, t) = id::lemma42_triple(k, n, m).map_err(|e| e.to_string())?;
                ensure(s == t && r == t, || {
                    format!("S/R/T differ at (k,n,m)=({k},{n},{m})")
                })?;
                let (ds, mid, dt) = id::lemma42_step(k, n, m).map_err(|e| e.to_string())?;
                ensure(ds == mid && dt == mid, || {
                    format!("step fails at ({k},{n},{m})")
                })?;
                ensure(id::w_value(0, k, n, m).is_zero(), || "W_0 != 0".into())?;
                ensure(-id::w_value(m + 1, k, n, m) == t, || {
                    format!("-W_(m+1) != T at ({k},{n},{m})")
                })?;
                ensure_report(&id::verify_w_telescoping(k, n, m).map_err(|e| e.to_string())?)?;
                ensure_report(&id::verify_lemma42(k, n, m).map_err(|e| e.to_string())?)?;
                triples += 1;
            }
        }
    }
    Ok(format!(
        "Brill 13 x 200 seeded x; {triples} (k,n,m) with S = R = T, step and W chain"
    ))
}

fn c5_beta() -> Outcome {
    let mut exact = 0;
    for alpha in 1..=5 {
        for beta in 1..=5 {
            for n in 0..=8 {
                for m in 0..=8 {
                    let r = verify_beta_identity(n, m, &int(alpha), &int(beta), None)
                        .map_err(|e| e.to_string())?;
                    ensure(r.method.starts_with("exact"), || {
                        "exact mode not selected".into()
                    })?;
                    ensure(matches!(r.residual, Residual::Poly { .. }), || {
                        "residual not a polynomial".into()
                    })?;
                    ensure_report(&r)?;
                    exact += 1;
                }
            }
        }
    }
    let mut worst = 0.0f64;
    let points = sample_beta_points(SEED, 100);
    for (alpha, beta, a) in &points {
        for n in 0..=4 {
            for m in 0..=4 {
                let r =
                    verify_beta_identity(n, m, alpha, beta, Some(a)).map_err(|e| e.to_string())?;
                let Residual::Real { defect, .. } = r.residual else {
                    return Err("numeric mode not selected".into());
                };
                ensure(defect.abs() <= IDENTITY_TOLERANCE, || format!("{r}"))?;
                worst = worst.max(defect.abs());
            }
        }
    }
    let mut worst_oracle = 0.0f64;
    for p in 1..=6 {
        for q in 1..=6 {
            let poly = incomplete_beta_exact(p, q).map_err(|e| e.to_string())?;
            for a in [ratio(1, 10), ratio(1, 3), ratio(1, 2), ratio(9, 10), int(1)] {
                let num = incomplete_beta_numeric(p as f64, q as f64, to_f64(&a))
                    .map_err(|e| e.to_string())?;
                let err = (num - to_f64(&poly.eval(&a))).abs();
                ensure(err <= QUADRATURE_TOLERANCE, || {
                    format!("B_{a}({p},{q}) off by {err:e}")
                })?;
                worst_oracle = worst_oracle.max(err);
            }
        }
    }
    Ok(format!(
        "{exact} exact polynomial identities; 2500 numeric, max |defect| {worst:.1e} <= 1e-10; \
         quadrature vs exact max {worst_oracle:.1e} <= 1e-12"
    ))
}

fn c6_remark62() -> Outcome {
    for n in 0..=10 {
        for m in 0..=10 {
            ensure_report(&id::verify_remark62(n, m))?;
            let [a, b, c] = id::remark62_bivariate(n, m);
            ensure(a == b && b == c, || {
                format!("bivariate chain differs at ({n},{m})")
            })?;
            let q = closed_form(n, m).q;
            for u in id::remark62_univariate(n, m) {
                ensure(u == q, || format!("univariate chain != Q at ({n},{m})"))?;
            }
        }
    }
    Ok("121 bivariate three-way equalities; univariate chain equals Q_{n,m}".into())
}

fn c7_remark63() -> Outcome {
    let mut count = 0;
    for m in 0..=12 {
        for k in 0..=m {
            for n in 0..=12 {
                let (l, r) = id::remark63_sides(k, m, n).map_err(|e| e.to_string())?;
                ensure(l == r, || format!("fails at (k,m,n)=({k},{m},{n})"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} exact equalities"))
}

fn c8_twin() -> Outcome {
    let start = Instant::now();
    let one_rising = DensePoly::new(vec![int(1)], chaundy::Basis::RisingOverFactorial);
    for n in 0..=15 {
        for m in 0..=15 {
            let t = id::twin_expansion(n, m);
            ensure(t == DensePoly::one(), || {
                format!("monomial expansion != 1 at ({n},{m})")
            })?;
            ensure(t.to_rising_basis() == one_rising, || {
                format!("rising basis != 1 at ({n},{m})")
            })?;
            ensure_report(&id::verify_twin(n, m))?;
        }
    }
    let pairs = sample_rational_pairs(SEED, 100);
    for (a, b) in &pairs {
        for n in 0..=6 {
            for m in 0..=6 {
                ensure_report(
                    &id::verify_gamma_ratio_form(n, m, a, b).map_err(|e| e.to_string())?,
                )?;
            }
        }
    }
    let t = start.elapsed();
    ensure_time(t, 30.0)?;
    Ok(format!(
        "256 twin expansions in both bases; 4900 ratio forms; {:.2} s",
        t.as_secs_f64()
    ))
}

fn c9_negative_controls() -> Outcome {
    let t = Tamper::unit();
    let t = Some(&t);
    let half = ratio(1, 2);
    let e = |r: chaundy::Result<CheckReport>| r.map_err(|e| e.to_string());
    let reports: Vec<CheckReport> = vec![
        verify_cross_check_with(3, 2, t),
        id::verify_chaundy_bullard_with(3, 2, t),
        id::verify_symmetry_with(3, 2, t),
        id::verify_cancellation_with(3, 2, t),
        id::verify_brill_with(4, &ratio(7, 3), t),
        e(id::verify_lemma42_with(1, 3, 2, t))?,
        e(id::verify_w_telescoping_with(1, 3, 2, t))?,
        id::verify_remark62_with(2, 3, t),
        e(id::verify_remark63_with(1, 3, 2, t))?,
        id::verify_twin_with(3, 2, t),
        e(id::verify_gamma_ratio_form_with(
            2,
            2,
            &half,
            &ratio(1, 3),
            t,
        ))?,
        e(verify_beta_identity_with(1, 1, &int(2), &int(3), None, t))?,
        e(verify_beta_identity_with(
            1,
            2,
            &ratio(7, 10),
            &ratio(19, 10),
            Some(&ratio(7, 20)),
            t,
        ))?,
    ];
    for r in &reports {
        ensure(!r.passed && r.residual.render() != "0", || {
            format!("vacuous pass: {r}")
        })?;
    }
    // single corrupted coefficient at every position is caught too
    for idx in 0..5 {
        let t = Tamper::at(idx);
        ensure(
            !id::verify_chaundy_bullard_with(4, 4, Some(&t)).passed,
            || format!("index {idx}"),
        )?;
        ensure(!id::verify_twin_with(4, 4, Some(&t)).passed, || {
            format!("index {idx}")
        })?;
    }

    let bin = env!("CARGO_BIN_EXE_chaundy");
    let status = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .map(|o| o.status.code())
            .map_err(|e| e.to_string())
    };
    let cases: [(&[&str], i32); 5] = [
        (&["solve", "--n", "3", "--m", "4"], 0),
        (
            &["check", "--identity", "twin", "--n", "0..3", "--m", "0..3"],
            0,
        ),
        (
            &[
                "check",
                "--identity",
                "remark62",
                "--n",
                "1",
                "--m",
                "2",
                "--tamper",
            ],
            1,
        ),
        (&["check", "--identity", "no-such-identity"], 2),
        (
            &[
                "beta",
                "--alpha",
                "0.3",
                "--beta",
                "0.4",
                "--a",
                "0.9",
                "--max-intervals",
                "1",
            ],
            3,
        ),
    ];
    for (args, want) in cases {
        let got = status(args)?;
        ensure(got == Some(want), || {
            format!("{args:?} exited {got:?}, want {want}")
        })?;
    }
    Ok(format!(
        "{} tampered verifiers fail; exit statuses 0/1/2/3 honored",
        reports.len()
    ))
}

fn c10_full_sweep() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_chaundy"))
        .args([
            "check",
            "--identity",
            "all",
            "--format",
            "json",
            "--seed",
            &SEED.to_string(),
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let t = start.elapsed();
    let stderr = String::from_utf8_lossy(&out.stderr);
    let last = stderr.lines().last().unwrap_or_default().to_string();
    ensure(out.status.code() == Some(0), || {
        format!("exit {:?}: {last}", out.status.code())
    })?;
    let (passed, total) = last
        .strip_prefix("passed ")
        .and_then(|s| s.split_once('/'))
        .ok_or_else(|| format!("bad summary `{last}`"))?;
    ensure(passed == total, || last.clone())?;
    let lines = String::from_utf8_lossy(&out.stdout).lines().count();
    ensure(lines.to_string() == total, || {
        format!("{lines} report lines vs {total}")
    })?;
    ensure_time(t, 180.0)?;
    Ok(format!("{last} in {:.1} s", t.as_secs_f64()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "bezout constructions agree for 0 <= n, m <= 20",
            c1_bezout_cross_check,
        ),
        (
            "Chaundy-Bullard expansion equals 1 for 0 <= n, m <= 20",
            c2_chaundy_bullard,
        ),
        (
            "second-proof coefficients cancel for 0 <= n, m <= 12",
            c3_second_proof,
        ),
        ("Brill and S = R = T with telescoping witness", c4_lemmas),
        ("incomplete-beta identity, exact and numeric", c5_beta),
        ("three-way rising-factorial identity", c6_remark62),
        ("alternating double-binomial sum", c7_remark63),
        ("twin identity and its ratio form", c8_twin),
        ("negative controls and exit statuses", c9_negative_controls),
        ("full check sweep under 3 minutes", c10_full_sweep),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
