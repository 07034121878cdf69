use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::numeric::{int, Rational};

/// Dense polynomial in two variables `alpha`, `beta`.
///
/// `rows[i][j]` is the coefficient of `alpha^i beta^j`. After every operation
/// the grid is rectangular and trimmed, so no boundary row or column is all
/// zero and structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    rows: Vec<Vec<Rational>>,
}

impl BiPoly {
    pub fn new(rows: Vec<Vec<Rational>>) -> Self {
        let mut p = Self { rows };
        p.canonicalize();
        p
    }

    pub fn zero() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![vec![c]])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn alpha() -> Self {
        Self::new(vec![vec![Rational::zero()], vec![Rational::one()]])
    }

    pub fn beta() -> Self {
        Self::new(vec![vec![Rational::zero(), Rational::one()]])
    }

    fn canonicalize(&mut self) {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        for row in &mut self.rows {
            row.resize(width, Rational::zero());
        }
        while self
            .rows
            .last()
            .is_some_and(|r| r.iter().all(Zero::is_zero))
        {
            self.rows.pop();
        }
        let mut width = self.rows.first().map_or(0, Vec::len);
        while width > 0 && self.rows.iter().all(|r| r[width - 1].is_zero()) {
            width -= 1;
        }
        for row in &mut self.rows {
            row.truncate(width);
        }
        if width == 0 {
            self.rows.clear();
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.rows
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// `(alpha degree bound, beta degree bound)` of the stored grid; `None`
    /// for the zero polynomial.
    pub fn shape(&self) -> Option<(usize, usize)> {
        self.rows
            .first()
            .map(|r| (self.rows.len() - 1, r.len() - 1))
    }

    fn dims(&self) -> (usize, usize) {
        (self.rows.len(), self.rows.first().map_or(0, Vec::len))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(
            self.rows
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        )
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Rational, Rational) -> Rational) -> Self {
        let (r1, c1) = self.dims();
        let (r2, c2) = other.dims();
        let rows = (0..r1.max(r2))
            .map(|i| {
                (0..c1.max(c2))
                    .map(|j| f(self.coeff(i, j), other.coeff(i, j)))
                    .collect()
            })
            .collect();
        Self::new(rows)
    }

    pub fn eval(&self, alpha: &Rational, beta: &Rational) -> Rational {
        self.rows.iter().rev().fold(Rational::zero(), |acc, row| {
            let inner = row.iter().rev().fold(Rational::zero(), |a, c| a * beta + c);
            acc * alpha + inner
        })
    }

    /// `base (base+1) ... (base+n-1)`.
    pub fn rising(base: &Self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, j| {
            &acc * &(base + &Self::constant(int(j as i64)))
        })
    }

    pub fn render(&self) -> String {
        let mut terms = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let mut mono = Vec::new();
                match i {
                    0 => {}
                    1 => mono.push("alpha".to_string()),
                    i => mono.push(format!("alpha^{i}")),
                }
                match j {
                    0 => {}
                    1 => mono.push("beta".to_string()),
                    j => mono.push(format!("beta^{j}")),
                }
                terms.push((c, mono.join("*")));
            }
        }
        super::render_terms(terms)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let (r1, c1) = self.dims();
        let (r2, c2) = rhs.dims();
        let mut out = vec![vec![Rational::zero(); c1 + c2 - 1]; r1 + r2 - 1];
        for (i1, row1) in self.rows.iter().enumerate() {
            for (j1, a) in row1.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (i2, row2) in rhs.rows.iter().enumerate() {
                    for (j2, b) in row2.iter().enumerate() {
                        out[i1 + i2][j1 + j2] += a * b;
                    }
                }
            }
        }
        BiPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{ratio, rising_factorial};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let ab = &BiPoly::alpha() * &BiPoly::beta();
        assert_eq!(ab.eval(&int(2), &int(3)), int(6));
        assert_eq!(ab.coeff(1, 1), int(1));
        assert_eq!(ab.shape(), Some((1, 1)));
        let r = BiPoly::rising(&BiPoly::alpha(), 2);
        let expect = BiPoly::new(vec![vec![int(0)], vec![int(1)], vec![int(1)]]);
        assert_eq!(r, expect);
        assert_eq!(r.render(), "alpha + alpha^2");
    }

    #[test]
    fn canonical_trim() {
        let p = BiPoly::new(vec![
            vec![int(1), int(0), int(0)],
            vec![int(0), int(0), int(0)],
        ]);
        assert_eq!(p, BiPoly::one());
        assert!((&p - &p).is_zero());
        assert_eq!(BiPoly::zero().render(), "0");
        assert_eq!(BiPoly::new(vec![vec![int(0), int(0)]]), BiPoly::zero());
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-30i64..30, 1i64..10).prop_map(|(n, d)| ratio(n, d))
    }

    fn bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(prop::collection::vec(rational(), 0..4), 0..4).prop_map(BiPoly::new)
    }

    proptest! {
        #[test]
        fn ring_ops_match_pointwise(p in bipoly(), q in bipoly(), a in rational(), b in rational()) {
            prop_assert_eq!((&p * &q).eval(&a, &b), p.eval(&a, &b) * q.eval(&a, &b));
            prop_assert_eq!((&p + &q).eval(&a, &b), p.eval(&a, &b) + q.eval(&a, &b));
            prop_assert_eq!(&p * &q, &q * &p);
        }

        #[test]
        fn rising_matches_scalar(a in rational(), b in rational(), n in 0usize..6) {
            let base = &BiPoly::alpha() + &BiPoly::beta();
            let r = BiPoly::rising(&base, n);
            prop_assert_eq!(r.eval(&a, &b), rising_factorial(&(a.clone() + &b), n));
        }
    }
}
