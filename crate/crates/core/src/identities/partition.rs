//! The partition of unity `(1-x)^(n+1) sum C(n+k,k) x^k + x^(m+1) sum C(m+k,k) (1-x)^k = 1`
//! and the coefficient bookkeeping of its combinatorial proof.

use num_traits::{One, Zero};

use super::{nm, CheckReport, Residual, Tamper};
use crate::bezout::closed_form;
use crate::numeric::{binom_q, sign, Index, Rational};
use crate::poly::{affine_power, DensePoly};

fn one_minus_x_pow(e: usize) -> DensePoly {
    affine_power(&Rational::one(), &-Rational::one(), e)
}

fn binomial_series(shift: Index, len: Index) -> Vec<Rational> {
    (0..=len).map(|k| binom_q(shift + k, k)).collect()
}

/// `U_{n,m}(x) = x^(m+1) sum_{k<=n} C(m+k, k) (1-x)^k`.
pub fn u_poly(n: Index, m: Index) -> DensePoly {
    let inner = DensePoly::monomial(binomial_series(m, n))
        .compose_one_minus_x()
        .expect("monomial basis");
    inner.shift(m + 1)
}

/// `V_{n,m}(x) = (1-x)^(n+1) sum_{k<=m} C(n+k, k) x^k`.
pub fn v_poly(n: Index, m: Index) -> DensePoly {
    &one_minus_x_pow(n + 1) * &DensePoly::monomial(binomial_series(n, m))
}

pub fn verify_chaundy_bullard(n: Index, m: Index) -> CheckReport {
    verify_chaundy_bullard_with(n, m, None)
}

/// Tamper target: the coefficients `C(n+k, k)` of the `(1-x)^(n+1)` factor.
pub fn verify_chaundy_bullard_with(n: Index, m: Index, tamper: Option<&Tamper>) -> CheckReport {
    let mut left = binomial_series(n, m);
    if let Some(t) = tamper {
        t.apply(&mut left);
    }
    let left = &one_minus_x_pow(n + 1) * &DensePoly::monomial(left);
    let total = &left + &u_poly(n, m);
    CheckReport::new(
        "chaundy-bullard",
        nm(n, m),
        Residual::poly(&total - &DensePoly::one()),
        "monomial expansion compared with the constant 1",
    )
}

pub fn verify_symmetry(n: Index, m: Index) -> CheckReport {
    verify_symmetry_with(n, m, None)
}

/// `P_{n,m}(x) = Q_{m,n}(1-x)`, plus the induced `V_{n,m}(x) = U_{m,n}(1-x)`.
/// Tamper target: the coefficients of `P_{n,m}`.
pub fn verify_symmetry_with(n: Index, m: Index, tamper: Option<&Tamper>) -> CheckReport {
    let mut p = closed_form(n, m).p.into_coeffs();
    if let Some(t) = tamper {
        t.apply(&mut p);
    }
    let p = DensePoly::monomial(p);
    let q_swapped = closed_form(m, n)
        .q
        .compose_one_minus_x()
        .expect("monomial basis");
    let u_swapped = u_poly(m, n).compose_one_minus_x().expect("monomial basis");
    CheckReport::new(
        "symmetry",
        nm(n, m),
        Residual::Parts(vec![
            ("P-Q(1-x)".into(), Residual::poly(&p - &q_swapped)),
            (
                "V-U(1-x)".into(),
                Residual::poly(&v_poly(n, m) - &u_swapped),
            ),
        ]),
        "closed-form P against the swapped Q composed with 1-x",
    )
}

/// `a`, `b`, `c`, `d` of the second proof.
///
/// `a_k = (-1)^k sum_{nu=k}^{n} C(m+nu, nu) C(nu, k)` are the coefficients of
/// `U_{n,m}` shifted down by `m+1`; `b_k = (-1)^k C(n+1, k)` (truncated at
/// `k = n+1`, beyond which it vanishes) and `c_k = C(n+k, k) [k <= m]` are the
/// factors of `V_{n,m}`, and `d` is their Cauchy product.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondProofCoefficients {
    pub n: Index,
    pub m: Index,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
    pub d: Vec<Rational>,
}

impl SecondProofCoefficients {
    /// `d_k = (-1)^k sum_{nu=0}^{m} (-1)^nu C(n+nu, nu) C(n+1, k-nu)`, the
    /// closed tail form valid for `k >= m+1`.
    pub fn tail_form(&self, k: Index) -> Rational {
        let (n, m) = (self.n, self.m);
        let s: Rational = (0..=m.min(k))
            .map(|nu| sign(nu) * binom_q(n + nu, nu) * binom_q(n + 1, k - nu))
            .sum();
        sign(k) * s
    }
}

pub fn second_proof_coefficients(n: Index, m: Index) -> SecondProofCoefficients {
    let a = (0..=n)
        .map(|k| {
            let s: Rational = (k..=n).map(|nu| binom_q(m + nu, nu) * binom_q(nu, k)).sum();
            sign(k) * s
        })
        .collect();
    let b: Vec<Rational> = (0..=n + 1).map(|k| sign(k) * binom_q(n + 1, k)).collect();
    debug_assert!(binom_q(n + 1, n + 2).is_zero());
    let top = n + m + 1;
    let c: Vec<Rational> = (0..=top)
        .map(|k| {
            if k <= m {
                binom_q(n + k, k)
            } else {
                Rational::zero()
            }
        })
        .collect();
    let d = (0..=top)
        .map(|k| {
            (0..=k)
                .filter(|&nu| k - nu < b.len())
                .map(|nu| &b[k - nu] * &c[nu])
                .sum()
        })
        .collect();
    SecondProofCoefficients { n, m, a, b, c, d }
}

pub fn verify_cancellation(n: Index, m: Index) -> CheckReport {
    verify_cancellation_with(n, m, None)
}

/// `d_0 = 1`, `d_k = 0` for `1 <= k <= m`, `a_{k-m-1} + d_k = 0` for
/// `m+1 <= k <= n+m+1`, the tail form of `d`, and `U + V = 1` recomputed from
/// the polynomial module. Tamper target: the `a` vector.
pub fn verify_cancellation_with(n: Index, m: Index, tamper: Option<&Tamper>) -> CheckReport {
    let mut coeffs = second_proof_coefficients(n, m);
    if let Some(t) = tamper {
        t.apply(&mut coeffs.a);
    }
    let top = n + m + 1;
    let low = DensePoly::monomial(
        (0..=m)
            .map(|k| {
                if k == 0 {
                    Rational::zero()
                } else {
                    coeffs.d[k].clone()
                }
            })
            .collect(),
    );
    let sums = DensePoly::monomial(
        (0..=top)
            .map(|k| {
                if k <= m {
                    Rational::zero()
                } else {
                    &coeffs.a[k - m - 1] + &coeffs.d[k]
                }
            })
            .collect(),
    );
    let tail = DensePoly::monomial(
        (0..=top)
            .map(|k| {
                if k <= m {
                    Rational::zero()
                } else {
                    &coeffs.d[k] - coeffs.tail_form(k)
                }
            })
            .collect(),
    );
    let u_from_a = DensePoly::monomial(coeffs.a.clone()).shift(m + 1);
    let u = u_poly(n, m);
    let v = v_poly(n, m);
    let v_from_d = DensePoly::monomial(coeffs.d.clone());
    let degree_ok = u.degree() == crate::poly::Degree::Finite(top)
        && v.degree() == crate::poly::Degree::Finite(top);
    let mut parts = vec![
        (
            "d0-1".into(),
            Residual::Scalar(&coeffs.d[0] - Rational::one()),
        ),
        ("d[1..=m]".into(), Residual::poly(low)),
        ("a+d".into(), Residual::poly(sums)),
        ("d-tail".into(), Residual::poly(tail)),
        ("U-a".into(), Residual::poly(&u - &u_from_a)),
        ("V-d".into(), Residual::poly(&v - &v_from_d)),
        (
            "U+V-1".into(),
            Residual::poly(&(&u + &v) - &DensePoly::one()),
        ),
    ];
    if !degree_ok {
        parts.push(("degree".into(), Residual::Scalar(Rational::one())));
    }
    CheckReport::new(
        "cancellation",
        nm(n, m),
        Residual::Parts(parts),
        "coefficient sums a_k, d_k (Cauchy product) and direct U+V expansion",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn chaundy_bullard_examples() {
        for (n, m) in [(0, 0), (1, 1), (3, 5)] {
            let r = verify_chaundy_bullard(n, m);
            assert!(r.passed, "({n},{m}): {}", r.residual.render());
            assert_eq!(r.residual.render(), "0");
        }
        // (1-x)^2 (1+2x) + x^2 (1 + 2(1-x)) by hand
        let lhs = &(&DensePoly::from_ints(&[1, -2, 1]) * &DensePoly::from_ints(&[1, 2]))
            + &DensePoly::from_ints(&[0, 0, 3, -2]);
        assert_eq!(lhs, DensePoly::one());
    }

    #[test]
    fn u_v_degrees() {
        for n in 0..=12 {
            for m in 0..=12 {
                assert_eq!(u_poly(n, m).degree().finite(), Some(n + m + 1));
                assert_eq!(v_poly(n, m).degree().finite(), Some(n + m + 1));
            }
        }
        assert_eq!(u_poly(0, 0), DensePoly::x());
        assert_eq!(v_poly(0, 0), DensePoly::one_minus_x());
    }

    #[test]
    fn symmetry_examples() {
        for (n, m) in [(0, 0), (1, 1), (2, 4)] {
            assert!(verify_symmetry(n, m).passed);
        }
        let q = closed_form(1, 1).q.compose_one_minus_x().unwrap();
        assert_eq!(q, DensePoly::from_ints(&[3, -2]));
    }

    #[test]
    fn second_proof_examples() {
        let c = second_proof_coefficients(1, 1);
        assert_eq!(c.a, ints(&[3, -2]));
        assert_eq!(c.b, ints(&[1, -2, 1]));
        assert_eq!(c.c, ints(&[1, 2, 0, 0]));
        // (1 - 2x + x^2)(1 + 2x) = 1 + 0x - 3x^2 + 2x^3
        assert_eq!(c.d, ints(&[1, 0, -3, 2]));
        assert_eq!(&c.a[0] + &c.d[2], int(0));
        assert_eq!(&c.a[1] + &c.d[3], int(0));
        let c = second_proof_coefficients(2, 3);
        assert_eq!(c.d[0], int(1));
        assert!(c.d[1..=3].iter().all(Zero::is_zero));
    }

    #[test]
    fn a_matches_brute_force_u_expansion() {
        // independent route: expand x^(m+1) sum C(m+k,k) (1-x)^k term by term
        for n in 0..=6 {
            for m in 0..=6 {
                let mut expect = vec![Rational::zero(); n + 1];
                for k in 0..=n {
                    for (nu, e) in expect.iter_mut().enumerate().take(k + 1) {
                        *e += binom_q(m + k, k) * binom_q(k, nu) * sign(nu);
                    }
                }
                assert_eq!(second_proof_coefficients(n, m).a, expect);
            }
        }
    }

    #[test]
    fn cancellation_examples() {
        let c = second_proof_coefficients(0, 0);
        assert_eq!((c.a[0].clone(), c.d[1].clone()), (int(1), int(-1)));
        for (n, m) in [(0, 0), (1, 1), (4, 2)] {
            let r = verify_cancellation(n, m);
            assert!(r.passed, "{}", r.residual.render());
        }
    }

    #[test]
    fn tampered_checks_fail() {
        let t = Tamper::unit();
        assert!(!verify_chaundy_bullard_with(2, 3, Some(&t)).passed);
        assert!(!verify_symmetry_with(2, 3, Some(&t)).passed);
        let r = verify_cancellation_with(2, 3, Some(&t));
        assert!(!r.passed);
        assert!(r.residual.render().contains("a+d"));
    }
}
