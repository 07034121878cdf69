//! Brill's alternating sum and the three-way binomial sum identity with its
//! telescoping witness `W`.

use num_traits::Zero;

use super::{bump, nmk, CheckReport, ParamValue, Residual, Tamper};
use crate::error::{Error, Result};
use crate::numeric::{binom_q, gen_binomial, int, sign, Index, Rational};

/// `(sum_{nu=0}^{p} (-1)^nu C(x+nu, nu+1) C(x, p-nu), C(x, p+1))`.
pub fn brill_sum(p: Index, x: &Rational) -> (Rational, Rational) {
    brill_sum_with(p, x, None)
}

/// Tamper target: term `nu` of the alternating sum.
pub fn brill_sum_with(p: Index, x: &Rational, tamper: Option<&Tamper>) -> (Rational, Rational) {
    let lhs = (0..=p)
        .map(|nu| {
            sign(nu) * gen_binomial(&(x + int(nu as i64)), nu + 1) * gen_binomial(x, p - nu)
                + bump(tamper, nu, p + 1)
        })
        .sum();
    (lhs, gen_binomial(x, p + 1))
}

pub fn verify_brill(p: Index, x: &Rational) -> CheckReport {
    verify_brill_with(p, x, None)
}

pub fn verify_brill_with(p: Index, x: &Rational, tamper: Option<&Tamper>) -> CheckReport {
    let (lhs, rhs) = brill_sum_with(p, x, tamper);
    CheckReport::new(
        "brill",
        vec![
            ("p", ParamValue::Int(p as u64)),
            ("x", ParamValue::Rational(x.clone())),
        ],
        Residual::Scalar(lhs - rhs),
        "exact rational evaluation of both sides",
    )
}

fn require_k_le_n(k: Index, n: Index) -> Result<()> {
    if k > n {
        Err(Error::Precondition(format!("k = {k} exceeds n = {n}")))
    } else {
        Ok(())
    }
}

/// `S_n(k, m) = sum_{nu=k}^{n} C(m+nu, nu) C(nu, k)`
fn s_sum(k: Index, n: Index, m: Index, tamper: Option<&Tamper>) -> Rational {
    (k..=n)
        .map(|nu| binom_q(m + nu, nu) * binom_q(nu, k) + bump(tamper, nu - k, n - k + 1))
        .sum()
}

/// `R_m(k, n) = (-1)^m sum_{nu=0}^{m} (-1)^nu C(n+nu, nu) C(n+1, m+k+1-nu)`
fn r_sum(k: Index, n: Index, m: Index) -> Rational {
    let s: Rational = (0..=m)
        .map(|nu| sign(nu) * binom_q(n + nu, nu) * binom_q(n + 1, m + k + 1 - nu))
        .sum();
    sign(m) * s
}

/// `T_n(k, m) = (n+m+1)/(m+k+1) C(n+m, m) C(n, k)`
fn t_closed(k: Index, n: Index, m: Index) -> Rational {
    int((n + m + 1) as i64) / int((m + k + 1) as i64) * binom_q(n + m, m) * binom_q(n, k)
}

/// `(S_n, R_m, T_n)`; all three coincide for `k <= n`.
pub fn lemma42_triple(k: Index, n: Index, m: Index) -> Result<(Rational, Rational, Rational)> {
    require_k_le_n(k, n)?;
    Ok((s_sum(k, n, m, None), r_sum(k, n, m), t_closed(k, n, m)))
}

/// Induction step `n -> n+1`: `(S_{n+1} - S_n, C(n+m+1, m) C(n+1, k), T_{n+1} - T_n)`.
pub fn lemma42_step(k: Index, n: Index, m: Index) -> Result<(Rational, Rational, Rational)> {
    require_k_le_n(k, n)?;
    let ds = s_sum(k, n + 1, m, None) - s_sum(k, n, m, None);
    let mid = binom_q(n + m + 1, m) * binom_q(n + 1, k);
    let dt = t_closed(k, n + 1, m) - t_closed(k, n, m);
    Ok((ds, mid, dt))
}

pub fn verify_lemma42(k: Index, n: Index, m: Index) -> Result<CheckReport> {
    verify_lemma42_with(k, n, m, None)
}

/// `S = R = T` and the induction step. Tamper target: the terms of `S`.
pub fn verify_lemma42_with(
    k: Index,
    n: Index,
    m: Index,
    tamper: Option<&Tamper>,
) -> Result<CheckReport> {
    require_k_le_n(k, n)?;
    let s = s_sum(k, n, m, tamper);
    let r = r_sum(k, n, m);
    let t = t_closed(k, n, m);
    let (ds, mid, dt) = lemma42_step(k, n, m)?;
    let mut parts = vec![
        ("S-T".to_string(), Residual::Scalar(&s - &t)),
        ("R-T".into(), Residual::Scalar(&r - &t)),
        ("dS-step".into(), Residual::Scalar(&ds - &mid)),
        ("dT-step".into(), Residual::Scalar(&dt - &mid)),
    ];
    if k == n {
        parts.push(("base".into(), Residual::Scalar(&s - binom_q(m + k, m))));
    }
    Ok(CheckReport::new(
        "lemma42",
        nmk(n, m, k),
        Residual::Parts(parts),
        "three independent exact summations plus the n -> n+1 step",
    ))
}

/// `W_nu = (-1)^(m-nu) nu (nu+n-k-m) / ((n+1)(k+m+1)) C(n+1, m+k+1-nu) C(n+nu, n)`
/// for `0 <= nu <= m + k + 1`.
pub fn w_value(nu: Index, k: Index, n: Index, m: Index) -> Rational {
    let top = m + k + 1;
    if nu > top {
        return Rational::zero();
    }
    let factor = int(nu as i64) * int(nu as i64 + n as i64 - k as i64 - m as i64)
        / (int((n + 1) as i64) * int((k + m + 1) as i64));
    sign(m + nu) * factor * binom_q(n + 1, top - nu) * binom_q(n + nu, n)
}

pub fn verify_w_telescoping(k: Index, n: Index, m: Index) -> Result<CheckReport> {
    verify_w_telescoping_with(k, n, m, None)
}

/// `W_0 = 0`, `W_nu - W_(nu+1) = (-1)^(m+nu) C(n+nu, nu) C(n+1, m+k+1-nu)`
/// for `0 <= nu <= m`, `-W_(m+1) = T_n`, and the telescoped sum equals `R_m`.
/// Tamper target: the alternating summands.
pub fn verify_w_telescoping_with(
    k: Index,
    n: Index,
    m: Index,
    tamper: Option<&Tamper>,
) -> Result<CheckReport> {
    require_k_le_n(k, n)?;
    let w: Vec<Rational> = (0..=m + 1).map(|nu| w_value(nu, k, n, m)).collect();
    let summands: Vec<Rational> = (0..=m)
        .map(|nu| {
            sign(m + nu) * binom_q(n + nu, nu) * binom_q(n + 1, m + k + 1 - nu)
                + bump(tamper, nu, m + 1)
        })
        .collect();
    let mut parts = vec![("W0".to_string(), Residual::Scalar(w[0].clone()))];
    for nu in 0..=m {
        parts.push((
            format!("W{nu}-W{}", nu + 1),
            Residual::Scalar(&w[nu] - &w[nu + 1] - &summands[nu]),
        ));
    }
    let t = t_closed(k, n, m);
    parts.push(("-W(m+1)-T".into(), Residual::Scalar(-&w[m + 1] - &t)));
    let total: Rational = summands.iter().sum();
    parts.push(("sum-R".into(), Residual::Scalar(total - r_sum(k, n, m))));
    Ok(CheckReport::new(
        "w-telescoping",
        nmk(n, m, k),
        Residual::Parts(parts),
        "term-by-term telescoping of the W witness",
    ))
}
