//! The unique pair `(P, Q)` with `deg P <= n`, `deg Q <= m` and
//! `x^(m+1) P(x) + (1-x)^(n+1) Q(x) = 1`.
//!
//! Three constructions are provided (coefficient closed form, the factored
//! mixed-basis sums, and the first-order recurrence driven by `mu`), plus a
//! generic extended-Euclid oracle. Agreement of all of them under the degree
//! bounds is the executable form of uniqueness.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::identities::{CheckReport, ParamValue, Residual, Tamper};
use crate::numeric::{binom_q, binomial, from_bigint, int, sign, Index, Rational};
use crate::poly::{affine_power, DensePoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    Recurrence,
    EuclidOracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::Recurrence => "recurrence",
            Method::EuclidOracle => "euclid-oracle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutSolution {
    pub n: Index,
    pub m: Index,
    pub p: DensePoly,
    pub q: DensePoly,
    pub method: Method,
}

impl BezoutSolution {
    /// `x^(m+1) P + (1-x)^(n+1) Q - 1`; zero for a valid pair.
    pub fn residual(&self) -> DensePoly {
        bezout_residual(self.n, self.m, &self.p, &self.q)
    }

    pub fn within_degree_bounds(&self) -> bool {
        self.p.degree().at_most(self.n) && self.q.degree().at_most(self.m)
    }
}

pub fn bezout_residual(n: Index, m: Index, p: &DensePoly, q: &DensePoly) -> DensePoly {
    let left = p.shift(m + 1);
    let right = &affine_power(&int(1), &int(-1), n + 1) * q;
    &(&left + &right) - &DensePoly::one()
}

/// `mu(n, m) = (n+1) C(n+m+1, m)`.
pub fn mu(n: Index, m: Index) -> BigInt {
    binomial(n + m + 1, m) * (n + 1)
}

/// `p_k = (-1)^k (n+m+1)/(k+m+1) C(n+m, m) C(n, k)` and `q_k = C(n+k, k)`.
pub fn closed_form(n: Index, m: Index) -> BezoutSolution {
    let lead = binom_q(n + m, m) * int((n + m + 1) as i64);
    let p = (0..=n)
        .map(|k| {
            let c = sign(k) * &lead * binom_q(n, k) / int((k + m + 1) as i64);
            assert!(
                c.is_integer(),
                "p_{k} for (n, m) = ({n}, {m}) is not an integer: {c}"
            );
            c
        })
        .collect();
    let q = (0..=m).map(|k| binom_q(n + k, k)).collect();
    BezoutSolution {
        n,
        m,
        p: DensePoly::monomial(p),
        q: DensePoly::monomial(q),
        method: Method::ClosedForm,
    }
}

/// Expands `P = sum_{k<=n} C(n+m+1, k) x^(n-k) (1-x)^k` and
/// `Q = sum_{k<=m} C(n+m+1, k) x^k (1-x)^(m-k)` into monomial form.
pub fn closed_form_factored(n: Index, m: Index) -> (DensePoly, DensePoly) {
    let one_minus = |e: usize| affine_power(&int(1), &int(-1), e);
    let total = n + m + 1;
    let p = (0..=n).fold(DensePoly::zero(), |acc, k| {
        &acc + &one_minus(k).shift(n - k).scale(&binom_q(total, k))
    });
    let q = (0..=m).fold(DensePoly::zero(), |acc, k| {
        &acc + &one_minus(m - k).shift(k).scale(&binom_q(total, k))
    });
    (p, q)
}

/// `q_0 = 1`, `q_(k+1) = (n+k+1)/(k+1) q_k`, and
/// `p_k = (-1)^k mu C(n, k) / (m+k+1)` from matching coefficients in the
/// first-order equations satisfied by `Q` and `P`.
pub fn recurrence_solution(n: Index, m: Index) -> BezoutSolution {
    let mut q = Vec::with_capacity(m + 1);
    let mut qk = Rational::one();
    for k in 0..=m {
        q.push(qk.clone());
        qk = qk * int((n + k + 1) as i64) / int((k + 1) as i64);
    }
    let mu = from_bigint(mu(n, m));
    let p = (0..=n)
        .map(|k| sign(k) * &mu * binom_q(n, k) / int((m + k + 1) as i64))
        .collect();
    BezoutSolution {
        n,
        m,
        p: DensePoly::monomial(p),
        q: DensePoly::monomial(q),
        method: Method::Recurrence,
    }
}

/// `((n+1) Q - (1-x) Q' - mu x^m, (m+1) P + x P' - mu (1-x)^n)`.
pub fn ode_residuals(sol: &BezoutSolution) -> (DensePoly, DensePoly) {
    let (n, m) = (sol.n, sol.m);
    let mu = from_bigint(mu(n, m));
    let dq = sol.q.derivative().expect("monomial basis");
    let dp = sol.p.derivative().expect("monomial basis");
    let first = &(&sol.q.scale(&int((n + 1) as i64)) - &(&DensePoly::one_minus_x() * &dq))
        - &DensePoly::term(mu.clone(), m);
    let second = &(&sol.p.scale(&int((m + 1) as i64)) + &dp.shift(1))
        - &affine_power(&int(1), &int(-1), n).scale(&mu);
    (first, second)
}

/// Extended Euclid over the rationals.
///
/// Returns `(u, v, g)` with `a u + b v = g`, `g` the monic gcd, and the
/// cofactors reduced to the minimal-degree pair: `deg u < deg b - deg g`,
/// `deg v < deg a - deg g`.
pub fn extended_euclid(a: &DensePoly, b: &DensePoly) -> Result<(DensePoly, DensePoly, DensePoly)> {
    for p in [a, b] {
        if p.basis() != crate::poly::Basis::Monomial {
            return Err(Error::UnsupportedBasis {
                op: "extended_euclid",
                basis: p.basis(),
            });
        }
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    // Invariant: a*s_i + b*t_i = r_i, every r_i monic.
    let normalize = |r: DensePoly, s: DensePoly, t: DensePoly| match r.leading() {
        Some(l) => {
            let inv = Rational::one() / l;
            (r.scale(&inv), s.scale(&inv), t.scale(&inv))
        }
        None => (r, s, t),
    };
    let (mut r0, mut s0, mut t0) = normalize(a.clone(), DensePoly::one(), DensePoly::zero());
    let (mut r1, mut s1, mut t1) = normalize(b.clone(), DensePoly::zero(), DensePoly::one());
    if r0.is_zero() {
        std::mem::swap(&mut r0, &mut r1);
        std::mem::swap(&mut s0, &mut s1);
        std::mem::swap(&mut t0, &mut t1);
    }
    while !r1.is_zero() {
        let (quot, rem) = r0.div_rem(&r1)?;
        let s2 = &s0 - &(&quot * &s1);
        let t2 = &t0 - &(&quot * &t1);
        let (r2, s2, t2) = normalize(rem, s2, t2);
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let g = r0;
    let (mut u, mut v) = (s0, t0);
    if !b.is_zero() {
        let (b_red, _) = b.div_rem(&g)?;
        let (k, u_red) = u.div_rem(&b_red)?;
        // a (u - k b/g) + b (v + k a/g) = g
        let (a_red, _) = a.div_rem(&g)?;
        u = u_red;
        v = &v + &(&k * &a_red);
    }
    Ok((u, v, g))
}

/// Runs [`extended_euclid`] on `(x^(m+1), (1-x)^(n+1))`.
pub fn euclid_solution(n: Index, m: Index) -> BezoutSolution {
    let a = DensePoly::term(Rational::one(), m + 1);
    let b = affine_power(&int(1), &int(-1), n + 1);
    let (u, v, g) = extended_euclid(&a, &b).expect("nonzero operands");
    assert!(
        g.is_constant(&Rational::one()),
        "x^(m+1) and (1-x)^(n+1) are coprime"
    );
    BezoutSolution {
        n,
        m,
        p: u,
        q: v,
        method: Method::EuclidOracle,
    }
}

fn tampered(poly: &DensePoly, tamper: Option<&Tamper>) -> DensePoly {
    match tamper {
        Some(t) => {
            let mut c = poly.coeffs().to_vec();
            t.apply(&mut c);
            DensePoly::monomial(c)
        }
        None => poly.clone(),
    }
}

/// All four constructions agree, satisfy the Bezout equation, respect the
/// degree bounds and satisfy both first-order equations.
pub fn verify_cross_check(n: Index, m: Index) -> CheckReport {
    verify_cross_check_with(n, m, None)
}

/// As [`verify_cross_check`]; `tamper` corrupts one coefficient of the
/// closed-form `P` before any comparison.
pub fn verify_cross_check_with(n: Index, m: Index, tamper: Option<&Tamper>) -> CheckReport {
    let mut base = closed_form(n, m);
    base.p = tampered(&base.p, tamper);
    let (fp, fq) = closed_form_factored(n, m);
    let rec = recurrence_solution(n, m);
    let euc = euclid_solution(n, m);
    let (ode_q, ode_p) = ode_residuals(&base);
    let poly = |p: DensePoly| Residual::poly(p);
    let mut parts = vec![
        ("bezout".to_string(), poly(base.residual())),
        ("factored.P".into(), poly(&fp - &base.p)),
        ("factored.Q".into(), poly(&fq - &base.q)),
        ("recurrence.P".into(), poly(&rec.p - &base.p)),
        ("recurrence.Q".into(), poly(&rec.q - &base.q)),
        ("euclid.P".into(), poly(&euc.p - &base.p)),
        ("euclid.Q".into(), poly(&euc.q - &base.q)),
        ("ode.Q".into(), poly(ode_q)),
        ("ode.P".into(), poly(ode_p)),
    ];
    if !base.within_degree_bounds() {
        parts.push(("degree-bound".into(), Residual::Scalar(Rational::one())));
    }
    let q_at_one = base.q.eval(&Rational::one()) - binom_q(n + m + 1, m);
    parts.push(("Q(1)".into(), Residual::Scalar(q_at_one)));
    CheckReport::new(
        "bezout-cross-check",
        vec![
            ("n", ParamValue::Int(n as u64)),
            ("m", ParamValue::Int(m as u64)),
        ],
        Residual::Parts(parts),
        "closed form vs factored sums vs recurrence vs extended Euclid; exact",
    )
}
