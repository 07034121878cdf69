//! Incomplete beta function `B_a(x, y) = int_0^a t^(x-1) (1-t)^(y-1) dt`:
//! an exact polynomial-in-`a` form for positive integer parameters, adaptive
//! quadrature for real parameters, and the shift ratio
//! `B(alpha+p, beta+q) / B(alpha, beta)`.

mod quadrature;

pub use quadrature::integrate;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::identities::{bump, CheckReport, ParamValue, Residual, Tamper};
use crate::numeric::{
    as_positive_index, binom_q, int, rising_factorial, sign, to_f64, Index, Rational,
};
use crate::poly::DensePoly;

/// Target absolute accuracy of [`incomplete_beta_numeric`].
pub const QUADRATURE_TOLERANCE: f64 = 1e-12;
/// Acceptance bound for the numeric defect of the beta identity. Each of the
/// at most `n+m+3` evaluations carries error well under
/// [`QUADRATURE_TOLERANCE`], leaving two orders of magnitude of headroom.
pub const IDENTITY_TOLERANCE: f64 = 1e-10;
/// Default subinterval budget of the adaptive quadrature.
pub const MAX_SEGMENTS: usize = 4000;

/// `B_a(p, q) = sum_{j<q} (-1)^j C(q-1, j) a^(p+j) / (p+j)` as a polynomial in `a`.
pub fn incomplete_beta_exact(p: Index, q: Index) -> Result<DensePoly> {
    if p == 0 || q == 0 {
        return Err(Error::Domain(format!(
            "incomplete beta needs positive parameters, got ({p}, {q})"
        )));
    }
    let mut coeffs = vec![Rational::zero(); p + q];
    for j in 0..q {
        coeffs[p + j] = sign(j) * binom_q(q - 1, j) / int((p + j) as i64);
    }
    Ok(DensePoly::monomial(coeffs))
}

/// `B_a(x, y)` for real `x, y > 0` and `0 <= a <= 1`.
///
/// The range is split at `1/2`. On `[0, min(a, 1/2)]` with `x < 1` the
/// substitution `t = u^(1/x)` removes the `t^(x-1)` singularity; on
/// `[1/2, a]` with `y < 1` the mirrored substitution `1 - t = v^(1/y)` does
/// the same for `(1-t)^(y-1)`.
pub fn incomplete_beta_numeric(x: f64, y: f64, a: f64) -> Result<f64> {
    incomplete_beta_numeric_with_budget(x, y, a, MAX_SEGMENTS)
}

/// As [`incomplete_beta_numeric`] with an explicit subinterval budget per
/// half of the range.
pub fn incomplete_beta_numeric_with_budget(
    x: f64,
    y: f64,
    a: f64,
    max_segments: usize,
) -> Result<f64> {
    if !(x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite()) {
        return Err(Error::Domain(format!(
            "incomplete beta needs x > 0 and y > 0, got ({x}, {y})"
        )));
    }
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::Domain(format!("upper limit a = {a} outside [0, 1]")));
    }
    if a == 0.0 {
        return Ok(0.0);
    }
    let tol = QUADRATURE_TOLERANCE * 0.25;
    let split = a.min(0.5);
    let lower = if x < 1.0 {
        let inv = 1.0 / x;
        integrate(
            |u: f64| (1.0 - u.powf(inv)).powf(y - 1.0) * inv,
            0.0,
            split.powf(x),
            tol,
            max_segments,
        )?
    } else {
        integrate(
            |t: f64| t.powf(x - 1.0) * (1.0 - t).powf(y - 1.0),
            0.0,
            split,
            tol,
            max_segments,
        )?
    };
    if a <= 0.5 {
        return Ok(lower);
    }
    let upper = if y < 1.0 {
        let inv = 1.0 / y;
        integrate(
            |v: f64| (1.0 - v.powf(inv)).powf(x - 1.0) * inv,
            (1.0 - a).powf(y),
            0.5f64.powf(y),
            tol,
            max_segments,
        )?
    } else {
        integrate(
            |t: f64| t.powf(x - 1.0) * (1.0 - t).powf(y - 1.0),
            0.5,
            a,
            tol,
            max_segments,
        )?
    };
    Ok(lower + upper)
}

/// `B(alpha+p, beta+q) / B(alpha, beta) = alpha^(p) beta^(q) / (alpha+beta)^(p+q)`.
pub fn beta_shift_ratio(p: Index, q: Index, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let denom = rising_factorial(&(alpha + beta), p + q);
    if denom.is_zero() {
        return Err(Error::SingularDenominator(format!(
            "(alpha + beta)^({}) vanishes for alpha = {alpha}, beta = {beta}",
            p + q
        )));
    }
    Ok(rising_factorial(alpha, p) * rising_factorial(beta, q) / denom)
}

/// The beta identity at `a = 1` divided through by `B(alpha, beta)`:
/// `sum_{k<=m} C(n+k,k) r(k, n+1) + sum_{k<=n} C(m+k,k) r(m+1, k)` with
/// `r = beta_shift_ratio`. Equals one.
pub fn complete_beta_ratio_sum(
    n: Index,
    m: Index,
    alpha: &Rational,
    beta: &Rational,
) -> Result<Rational> {
    let mut total = Rational::zero();
    for k in 0..=m {
        total += binom_q(n + k, k) * beta_shift_ratio(k, n + 1, alpha, beta)?;
    }
    for k in 0..=n {
        total += binom_q(m + k, k) * beta_shift_ratio(m + 1, k, alpha, beta)?;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaMode {
    /// Positive integer `alpha`, `beta`: polynomial identity in `a`.
    Exact,
    /// Real parameters: quadrature at a fixed `a`.
    Numeric,
}

pub fn verify_beta_identity(
    n: Index,
    m: Index,
    alpha: &Rational,
    beta: &Rational,
    a: Option<&Rational>,
) -> Result<CheckReport> {
    verify_beta_identity_with(n, m, alpha, beta, a, None)
}

/// `sum_{k<=m} C(n+k,k) B_a(alpha+k, beta+n+1) + sum_{k<=n} C(m+k,k) B_a(alpha+m+1, beta+k) = B_a(alpha, beta)`.
///
/// Exact mode is chosen when `alpha` and `beta` are positive integers (then
/// every shifted parameter is too); `a` is then symbolic. Otherwise `a` is
/// required and the defect must stay within [`IDENTITY_TOLERANCE`]. Tamper
/// target: the weights `C(n+k, k)` of the first sum.
pub fn verify_beta_identity_with(
    n: Index,
    m: Index,
    alpha: &Rational,
    beta: &Rational,
    a: Option<&Rational>,
    tamper: Option<&Tamper>,
) -> Result<CheckReport> {
    if !alpha.is_positive() || !beta.is_positive() {
        return Err(Error::Domain(format!(
            "beta identity needs alpha > 0 and beta > 0, got ({alpha}, {beta})"
        )));
    }
    if let Some(a) = a {
        if a.is_negative() || a > &Rational::one() {
            return Err(Error::Domain(format!("upper limit a = {a} outside [0, 1]")));
        }
    }
    let mode = match (as_positive_index(alpha), as_positive_index(beta)) {
        (Some(_), Some(_)) => BetaMode::Exact,
        _ => BetaMode::Numeric,
    };
    let mut params = vec![
        ("n", ParamValue::Int(n as u64)),
        ("m", ParamValue::Int(m as u64)),
        ("alpha", ParamValue::Rational(alpha.clone())),
        ("beta", ParamValue::Rational(beta.clone())),
    ];
    if let Some(a) = a {
        params.push(("a", ParamValue::Rational(a.clone())));
    }
    let first_weight = |k: Index| binom_q(n + k, k) + bump(tamper, k, m + 1);
    match mode {
        BetaMode::Exact => {
            let al = as_positive_index(alpha).expect("exact mode");
            let be = as_positive_index(beta).expect("exact mode");
            let mut lhs = DensePoly::zero();
            for k in 0..=m {
                lhs = &lhs + &incomplete_beta_exact(al + k, be + n + 1)?.scale(&first_weight(k));
            }
            for k in 0..=n {
                lhs = &lhs + &incomplete_beta_exact(al + m + 1, be + k)?.scale(&binom_q(m + k, k));
            }
            let defect = &lhs - &incomplete_beta_exact(al, be)?;
            Ok(CheckReport::new(
                "beta",
                params,
                Residual::Poly {
                    poly: defect,
                    var: "a",
                },
                "exact: polynomial identity in a",
            ))
        }
        BetaMode::Numeric => {
            let a = a.ok_or_else(|| {
                Error::Domain("numeric beta identity needs a value for a".to_string())
            })?;
            let (x, y, t) = (to_f64(alpha), to_f64(beta), to_f64(a));
            let mut lhs = 0.0;
            for k in 0..=m {
                lhs += to_f64(&first_weight(k))
                    * incomplete_beta_numeric(x + k as f64, y + (n + 1) as f64, t)?;
            }
            for k in 0..=n {
                lhs += to_f64(&binom_q(m + k, k))
                    * incomplete_beta_numeric(x + (m + 1) as f64, y + k as f64, t)?;
            }
            let rhs = incomplete_beta_numeric(x, y, t)?;
            Ok(CheckReport::new(
                "beta",
                params,
                Residual::Real {
                    defect: lhs - rhs,
                    tolerance: IDENTITY_TOLERANCE,
                },
                format!("numeric: adaptive Gauss-Kronrod, |defect| <= {IDENTITY_TOLERANCE:e}"),
            ))
        }
    }
}
