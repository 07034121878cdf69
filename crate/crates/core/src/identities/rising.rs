//! Identities in rising factorials: the three-way polynomial identity in
//! `(alpha, beta)`, the alternating double-binomial sum, and the twin of the
//! partition of unity in the `x^(k)/k!` basis.

use num_traits::{One, Zero};

use super::{bump, nm, nmk, CheckReport, ParamValue, Residual, Tamper};
use crate::bezout::closed_form;
use crate::error::{Error, Result};
use crate::numeric::{
    binom_q, factorial, from_bigint, int, rising_factorial, sign, Index, Rational,
};
use crate::poly::{affine_power, Basis, BiPoly, DensePoly};

fn lead_constant(n: Index, m: Index) -> Rational {
    int((n + m + 1) as i64) * binom_q(n + m, m)
}

/// The three expressions
/// `sum_k C(n+m+1,k) a^(k) b^(m-k)`,
/// `sum_k C(n+k,k) a^(k) (a+b+k)^(m-k)` and
/// `(n+m+1) C(n+m,m) sum_k (-1)^k/(k+n+1) C(m,k) b^(k) (a+b+k)^(m-k)`
/// as polynomials in `(alpha, beta)`.
pub fn remark62_bivariate(n: Index, m: Index) -> [BiPoly; 3] {
    remark62_bivariate_with(n, m, None)
}

fn remark62_bivariate_with(n: Index, m: Index, tamper: Option<&Tamper>) -> [BiPoly; 3] {
    let alpha = BiPoly::alpha();
    let beta = BiPoly::beta();
    let sum = &alpha + &beta;
    let shifted = |k: Index| &sum + &BiPoly::constant(int(k as i64));
    let mut first = BiPoly::zero();
    let mut second = BiPoly::zero();
    let mut third = BiPoly::zero();
    for k in 0..=m {
        let w = binom_q(n + m + 1, k) + bump(tamper, k, m + 1);
        let term = &BiPoly::rising(&alpha, k) * &BiPoly::rising(&beta, m - k);
        first = &first + &term.scale(&w);
        let tail = BiPoly::rising(&shifted(k), m - k);
        let term = &BiPoly::rising(&alpha, k) * &tail;
        second = &second + &term.scale(&binom_q(n + k, k));
        let w = sign(k) / int((k + n + 1) as i64) * binom_q(m, k);
        let term = &BiPoly::rising(&beta, k) * &tail;
        third = &third + &term.scale(&w);
    }
    third = third.scale(&lead_constant(n, m));
    [first, second, third]
}

/// The three expressions above evaluated directly with scalar rising factorials.
pub fn remark62_scalar(n: Index, m: Index, alpha: &Rational, beta: &Rational) -> [Rational; 3] {
    let sum = alpha + beta;
    let mut out = [Rational::zero(), Rational::zero(), Rational::zero()];
    for k in 0..=m {
        let tail = rising_factorial(&(&sum + int(k as i64)), m - k);
        out[0] +=
            binom_q(n + m + 1, k) * rising_factorial(alpha, k) * rising_factorial(beta, m - k);
        out[1] += binom_q(n + k, k) * rising_factorial(alpha, k) * &tail;
        out[2] +=
            sign(k) / int((k + n + 1) as i64) * binom_q(m, k) * rising_factorial(beta, k) * &tail;
    }
    out[2] *= lead_constant(n, m);
    out
}

/// `sum_k C(n+m+1,k) x^k (1-x)^(m-k)`, `sum_k C(n+k,k) x^k` and
/// `(n+m+1) C(n+m,m) sum_k (-1)^k/(k+n+1) C(m,k) (1-x)^k`.
pub fn remark62_univariate(n: Index, m: Index) -> [DensePoly; 3] {
    let one = Rational::one();
    let one_minus = |e: usize| affine_power(&one, &-one.clone(), e);
    let mut first = DensePoly::zero();
    let mut third = DensePoly::zero();
    for k in 0..=m {
        first = &first + &one_minus(m - k).shift(k).scale(&binom_q(n + m + 1, k));
        let w = sign(k) / int((k + n + 1) as i64) * binom_q(m, k);
        third = &third + &one_minus(k).scale(&w);
    }
    let second = DensePoly::monomial((0..=m).map(|k| binom_q(n + k, k)).collect());
    [first, second, third.scale(&lead_constant(n, m))]
}

pub fn verify_remark62(n: Index, m: Index) -> CheckReport {
    verify_remark62_with(n, m, None)
}

/// Tamper target: the weights `C(n+m+1, k)` of the first bivariate sum.
pub fn verify_remark62_with(n: Index, m: Index, tamper: Option<&Tamper>) -> CheckReport {
    let [a, b, c] = remark62_bivariate_with(n, m, tamper);
    let [u1, u2, u3] = remark62_univariate(n, m);
    let q = closed_form(n, m).q;
    CheckReport::new(
        "remark62",
        nm(n, m),
        Residual::Parts(vec![
            ("A-B".into(), Residual::BiPoly(&a - &b)),
            ("A-C".into(), Residual::BiPoly(&a - &c)),
            ("u1-u2".into(), Residual::poly(&u1 - &u2)),
            ("u1-u3".into(), Residual::poly(&u1 - &u3)),
            ("u2-Q".into(), Residual::poly(&u2 - &q)),
        ]),
        "structural equality in Q[alpha, beta], hence for all complex alpha, beta; \
         univariate chain compared with Q_{n,m}",
    )
}

fn require_k_le_m(k: Index, m: Index) -> Result<()> {
    if k > m {
        Err(Error::Precondition(format!("k = {k} exceeds m = {m}")))
    } else {
        Ok(())
    }
}

/// `(sum_{nu=k}^{m} (-1)^nu/(nu+n+1) C(m,nu) C(nu,k), (-1)^k/(n+m+1) C(n+k,k)/C(n+m,m))`.
pub fn remark63_sides(k: Index, m: Index, n: Index) -> Result<(Rational, Rational)> {
    remark63_sides_with(k, m, n, None)
}

fn remark63_sides_with(
    k: Index,
    m: Index,
    n: Index,
    tamper: Option<&Tamper>,
) -> Result<(Rational, Rational)> {
    require_k_le_m(k, m)?;
    let lhs = (k..=m)
        .map(|nu| {
            sign(nu) / int((nu + n + 1) as i64) * binom_q(m, nu) * binom_q(nu, k)
                + bump(tamper, nu - k, m - k + 1)
        })
        .sum();
    let rhs = sign(k) / int((n + m + 1) as i64) * binom_q(n + k, k) / binom_q(n + m, m);
    Ok((lhs, rhs))
}

pub fn verify_remark63(k: Index, m: Index, n: Index) -> Result<CheckReport> {
    verify_remark63_with(k, m, n, None)
}

pub fn verify_remark63_with(
    k: Index,
    m: Index,
    n: Index,
    tamper: Option<&Tamper>,
) -> Result<CheckReport> {
    let (lhs, rhs) = remark63_sides_with(k, m, n, tamper)?;
    Ok(CheckReport::new(
        "remark63",
        nmk(n, m, k),
        Residual::Scalar(lhs - rhs),
        "exact rational evaluation of both sides",
    ))
}

/// ```text
/// (1-x)^(n+1)/(n+1)! sum_{k<=m} (n+1)/(n+k+1) x^(k)/k!
///   + x^(m+1)/(m+1)! sum_{k<=n} (m+1)/(m+k+1) (1-x)^(k)/k!
/// ```
///
/// in the monomial basis, every rising factorial expanded as a product of
/// affine factors.
pub fn twin_expansion(n: Index, m: Index) -> DensePoly {
    twin_expansion_with(n, m, None)
}

/// Tamper target: the weights `(n+1)/(n+k+1)` of the first sum.
pub fn twin_expansion_with(n: Index, m: Index, tamper: Option<&Tamper>) -> DensePoly {
    let x = DensePoly::x();
    let y = DensePoly::one_minus_x();
    let fact = |k: Index| from_bigint(factorial(k));
    let mut left_sum = DensePoly::zero();
    for k in 0..=m {
        let w = int((n + 1) as i64) / int((n + k + 1) as i64) / fact(k) + bump(tamper, k, m + 1);
        left_sum = &left_sum + &DensePoly::rising(&x, k).scale(&w);
    }
    let mut right_sum = DensePoly::zero();
    for k in 0..=n {
        let w = int((m + 1) as i64) / int((m + k + 1) as i64) / fact(k);
        right_sum = &right_sum + &DensePoly::rising(&y, k).scale(&w);
    }
    let left = DensePoly::rising(&y, n + 1).scale(&(Rational::one() / fact(n + 1)));
    let right = DensePoly::rising(&x, m + 1).scale(&(Rational::one() / fact(m + 1)));
    &(&left * &left_sum) + &(&right * &right_sum)
}

pub fn verify_twin(n: Index, m: Index) -> CheckReport {
    verify_twin_with(n, m, None)
}

pub fn verify_twin_with(n: Index, m: Index, tamper: Option<&Tamper>) -> CheckReport {
    let total = twin_expansion_with(n, m, tamper);
    let rising = total.to_rising_basis();
    let one_rising = DensePoly::new(vec![Rational::one()], Basis::RisingOverFactorial);
    CheckReport::new(
        "twin",
        nm(n, m),
        Residual::Parts(vec![
            (
                "monomial".into(),
                Residual::poly(&total - &DensePoly::one()),
            ),
            ("rising-basis".into(), Residual::poly(&rising - &one_rising)),
        ]),
        "exact expansion compared with 1 in the monomial and x^(k)/k! bases",
    )
}

/// `b^(n+1) sum_{k<=m} C(n+k,k) a^(k)/(a+b)^(n+k+1)
///  + a^(m+1) sum_{k<=n} C(m+k,k) b^(k)/(a+b)^(m+k+1)`.
pub fn gamma_ratio_form(n: Index, m: Index, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    gamma_ratio_form_with(n, m, alpha, beta, None)
}

fn gamma_ratio_form_with(
    n: Index,
    m: Index,
    alpha: &Rational,
    beta: &Rational,
    tamper: Option<&Tamper>,
) -> Result<Rational> {
    let sum = alpha + beta;
    // largest denominator is (a+b)^(n+m+1): factors a+b+j for j <= n+m
    if let Some(j) = (0..=n + m).find(|&j| (&sum + int(j as i64)).is_zero()) {
        return Err(Error::SingularDenominator(format!(
            "alpha + beta + {j} = 0 for alpha = {alpha}, beta = {beta}"
        )));
    }
    let left: Rational = (0..=m)
        .map(|k| {
            (binom_q(n + k, k) + bump(tamper, k, m + 1)) * rising_factorial(alpha, k)
                / rising_factorial(&sum, n + k + 1)
        })
        .sum();
    let right: Rational = (0..=n)
        .map(|k| binom_q(m + k, k) * rising_factorial(beta, k) / rising_factorial(&sum, m + k + 1))
        .sum();
    Ok(rising_factorial(beta, n + 1) * left + rising_factorial(alpha, m + 1) * right)
}

pub fn verify_gamma_ratio_form(
    n: Index,
    m: Index,
    alpha: &Rational,
    beta: &Rational,
) -> Result<CheckReport> {
    verify_gamma_ratio_form_with(n, m, alpha, beta, None)
}

/// Tamper target: the weights `C(n+k, k)` of the first sum.
pub fn verify_gamma_ratio_form_with(
    n: Index,
    m: Index,
    alpha: &Rational,
    beta: &Rational,
    tamper: Option<&Tamper>,
) -> Result<CheckReport> {
    let value = gamma_ratio_form_with(n, m, alpha, beta, tamper)?;
    let mut params = nm(n, m);
    params.push(("alpha", ParamValue::Rational(alpha.clone())));
    params.push(("beta", ParamValue::Rational(beta.clone())));
    Ok(CheckReport::new(
        "gamma-ratio",
        params,
        Residual::Scalar(value - Rational::one()),
        "exact rational evaluation compared with 1",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::ratio;

    #[test]
    fn remark62_examples() {
        for n in 0..4 {
            let [a, b, c] = remark62_bivariate(n, 0);
            assert_eq!(a, BiPoly::one());
            assert_eq!(b, BiPoly::one());
            assert_eq!(c, BiPoly::one());
        }
        // (n, m) = (0, 1): beta + 2 alpha
        let expect = &BiPoly::beta() + &BiPoly::alpha().scale(&int(2));
        let [a, b, c] = remark62_bivariate(0, 1);
        assert_eq!(a, expect);
        assert_eq!(b, expect);
        assert_eq!(c, expect);
        assert!(verify_remark62(2, 2).passed);
    }

    #[test]
    fn remark62_univariate_matches_q() {
        let [a, b, c] = remark62_univariate(1, 2);
        let q = DensePoly::from_ints(&[1, 2, 3]);
        assert_eq!((a, b, c), (q.clone(), q.clone(), q));
    }

    #[test]
    fn remark63_examples() {
        for m in 0..6 {
            for n in 0..6 {
                let (l, r) = remark63_sides(m, m, n).unwrap();
                assert_eq!(l, r);
            }
        }
        assert_eq!(remark63_sides(0, 1, 0).unwrap(), (ratio(1, 2), ratio(1, 2)));
        // (k, m, n) = (1, 3, 2), by hand: nu = 1..3 with C(3,nu) C(nu,1) = 3, 6, 3
        // -3/4 + 6/5 - 3/6 = -1/20; rhs = -1/6 * C(3,1)/C(5,3) = -1/6 * 3/10
        let (l, r) = remark63_sides(1, 3, 2).unwrap();
        assert_eq!(l, ratio(-1, 20));
        assert_eq!(r, ratio(-1, 20));
        assert!(matches!(
            remark63_sides(2, 1, 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn twin_examples() {
        assert_eq!(twin_expansion(0, 0), DensePoly::one());
        // (1,0): (1-x)(2-x)/2 + x (1 + (1-x)/2) = (2 - 3x + x^2)/2 + x(3 - x)/2
        let by_hand = &DensePoly::monomial(vec![int(1), ratio(-3, 2), ratio(1, 2)])
            + &DensePoly::monomial(vec![int(0), ratio(3, 2), ratio(-1, 2)]);
        assert_eq!(by_hand, DensePoly::one());
        assert_eq!(twin_expansion(1, 0), DensePoly::one());
        let r = verify_twin(3, 4);
        assert!(r.passed, "{}", r.residual.render());
    }

    #[test]
    fn gamma_ratio_examples() {
        let a = ratio(2, 7);
        let b = ratio(5, 3);
        // b/(a+b) + a/(a+b)
        assert_eq!(gamma_ratio_form(0, 0, &a, &b).unwrap(), int(1));
        assert!(
            verify_gamma_ratio_form(1, 1, &ratio(1, 2), &ratio(1, 3))
                .unwrap()
                .passed
        );
        assert!(
            verify_gamma_ratio_form(2, 3, &int(3), &int(2))
                .unwrap()
                .passed
        );
        let err = gamma_ratio_form(1, 1, &int(-2), &int(1));
        assert!(matches!(err, Err(Error::SingularDenominator(_))));
    }

    #[test]
    fn tampered_rising_checks_fail() {
        let t = Tamper::unit();
        assert!(!verify_remark62_with(2, 2, Some(&t)).passed);
        assert!(!verify_remark63_with(1, 3, 2, Some(&t)).unwrap().passed);
        assert!(!verify_twin_with(2, 2, Some(&t)).passed);
        assert!(
            !verify_gamma_ratio_form_with(2, 2, &ratio(1, 2), &ratio(3, 4), Some(&t))
                .unwrap()
                .passed
        );
    }
}
