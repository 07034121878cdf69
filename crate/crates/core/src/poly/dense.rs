use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{binom_q, int, Index, Rational};

/// Interpretation of coefficient `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `x^k`
    Monomial,
    /// `x^(k) / k!` with `x^(k) = x (x+1) ... (x+k-1)`
    RisingOverFactorial,
}

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// `deg <= bound`, with the zero polynomial satisfying every bound.
    pub fn at_most(self, bound: usize) -> bool {
        self <= Degree::Finite(bound)
    }
}

/// Univariate polynomial with exact rational coefficients.
///
/// `coeffs[k]` multiplies basis element `k`. The highest stored coefficient
/// is never zero; the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DensePoly {
    coeffs: Vec<Rational>,
    basis: Basis,
}

impl DensePoly {
    pub fn new(coeffs: Vec<Rational>, basis: Basis) -> Self {
        let mut p = Self { coeffs, basis };
        p.trim();
        p
    }

    pub fn monomial(coeffs: Vec<Rational>) -> Self {
        Self::new(coeffs, Basis::Monomial)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::monomial(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::zero_in(Basis::Monomial)
    }

    pub fn zero_in(basis: Basis) -> Self {
        Self {
            coeffs: Vec::new(),
            basis,
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `x`
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `1 - x`
    pub fn one_minus_x() -> Self {
        Self::from_ints(&[1, -1])
    }

    /// `c + d*x`
    pub fn affine(c: Rational, d: Rational) -> Self {
        Self::monomial(vec![c, d])
    }

    /// `c * x^k`
    pub fn term(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::monomial(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of basis element `k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self, c: &Rational) -> bool {
        if c.is_zero() {
            self.is_zero()
        } else {
            self.coeffs.len() == 1 && &self.coeffs[0] == c
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    fn same_basis(&self, other: &Self) -> Result<()> {
        if self.basis == other.basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                left: self.basis,
                right: other.basis,
            })
        }
    }

    fn require_monomial(&self, op: &'static str) -> Result<()> {
        match self.basis {
            Basis::Monomial => Ok(()),
            basis => Err(Error::UnsupportedBasis { op, basis }),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Ok(Self::new(coeffs, self.basis))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Ok(Self::new(coeffs, self.basis))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_basis(other)?;
        match self.basis {
            Basis::Monomial => Ok(self.convolve(other)),
            Basis::RisingOverFactorial => {
                let prod = self
                    .to_monomial_basis()
                    .convolve(&other.to_monomial_basis());
                Ok(prod.to_rising_basis())
            }
        }
    }

    fn convolve(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero_in(self.basis);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out, self.basis)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.basis)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::new(vec![Rational::one()], self.basis);
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same basis");
        }
        acc
    }

    /// Multiplies by `x^k` (monomial basis only).
    pub fn shift(&self, k: usize) -> Self {
        assert_eq!(
            self.basis,
            Basis::Monomial,
            "shift needs the monomial basis"
        );
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::monomial(coeffs)
    }

    /// Rising factorial of a polynomial argument, `base (base+1) ... (base+n-1)`,
    /// expanded as an explicit product.
    pub fn rising(base: &Self, n: Index) -> Self {
        let mut acc = Self::new(vec![Rational::one()], base.basis);
        for j in 0..n {
            let factor = base
                .checked_add(&Self::new(vec![int(j as i64)], base.basis))
                .expect("same basis");
            acc = acc.checked_mul(&factor).expect("same basis");
        }
        acc
    }

    pub fn derivative(&self) -> Result<Self> {
        self.require_monomial("derivative")?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * int(k as i64))
            .collect();
        Ok(Self::monomial(coeffs))
    }

    /// `q(x) = p(1 - x)`, by Horner accumulation in `(1 - x)`.
    pub fn compose_one_minus_x(&self) -> Result<Self> {
        self.require_monomial("compose_one_minus_x")?;
        let step = Self::one_minus_x();
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &step) + &Self::constant(c.clone());
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        match self.basis {
            Basis::Monomial => self
                .coeffs
                .iter()
                .rev()
                .fold(Rational::zero(), |acc, c| acc * x + c),
            Basis::RisingOverFactorial => {
                // term_k = x^(k) / k!
                let mut term = Rational::one();
                let mut acc = Rational::zero();
                for (k, c) in self.coeffs.iter().enumerate() {
                    if k > 0 {
                        term = term * (x + int(k as i64 - 1)) / int(k as i64);
                    }
                    acc += c * &term;
                }
                acc
            }
        }
    }

    /// Long division in the monomial basis.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.require_monomial("div_rem")?;
        divisor.require_monomial("div_rem")?;
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dlen - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dlen - 1);
        Ok((Self::monomial(quot), Self::monomial(rem)))
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(Rational::one() / l)),
            None => self.clone(),
        }
    }

    /// Monomial expansion of `x^(k) / k!` for `k = 0..=max`.
    ///
    /// These are the columns of the upper-triangular change-of-basis matrix.
    pub fn rising_basis_columns(max: usize) -> Vec<Self> {
        let mut cols = Vec::with_capacity(max + 1);
        let mut col = Self::one();
        cols.push(col.clone());
        for k in 0..max {
            let factor = Self::affine(int(k as i64), Rational::one());
            col = (&col * &factor).scale(&Rational::new(1.into(), ((k + 1) as i64).into()));
            cols.push(col.clone());
        }
        cols
    }

    /// Re-expresses a monomial-basis polynomial in the `x^(k)/k!` basis by back
    /// substitution against the triangular column matrix. Identity when the
    /// input is already in that basis.
    pub fn to_rising_basis(&self) -> Self {
        if self.basis == Basis::RisingOverFactorial || self.is_zero() {
            return Self::new(self.coeffs.clone(), Basis::RisingOverFactorial);
        }
        let deg = self.coeffs.len() - 1;
        let cols = Self::rising_basis_columns(deg);
        let mut rem = self.coeffs.clone();
        let mut out = vec![Rational::zero(); deg + 1];
        for d in (0..=deg).rev() {
            // diagonal entry of column d is 1/d!
            let c = &rem[d] / cols[d].coeff(d);
            if c.is_zero() {
                continue;
            }
            for (j, a) in cols[d].coeffs.iter().enumerate() {
                rem[j] -= &c * a;
            }
            out[d] = c;
        }
        debug_assert!(rem.iter().all(Zero::is_zero));
        Self::new(out, Basis::RisingOverFactorial)
    }

    pub fn to_monomial_basis(&self) -> Self {
        if self.basis == Basis::Monomial || self.is_zero() {
            return Self::new(self.coeffs.clone(), Basis::Monomial);
        }
        let cols = Self::rising_basis_columns(self.coeffs.len() - 1);
        self.coeffs
            .iter()
            .zip(&cols)
            .fold(Self::zero(), |acc, (c, col)| &acc + &col.scale(c))
    }

    /// Canonical ascending rendering in the variable `var`.
    pub fn render(&self, var: &str) -> String {
        let terms = self.coeffs.iter().enumerate().map(|(k, c)| {
            let mono = match (self.basis, k) {
                (_, 0) => String::new(),
                (Basis::Monomial, 1) => var.to_string(),
                (Basis::Monomial, k) => format!("{var}^{k}"),
                (Basis::RisingOverFactorial, 1) => format!("{var}^(1)"),
                (Basis::RisingOverFactorial, k) => format!("{var}^({k})/{k}!"),
            };
            (c, mono)
        });
        super::render_terms(terms)
    }

    /// Coefficients as exact decimal strings, ascending.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

/// Monomial expansion of `(q0 + q1 x)^e` by the binomial theorem.
pub fn affine_power(q0: &Rational, q1: &Rational, e: usize) -> DensePoly {
    let mut coeffs = Vec::with_capacity(e + 1);
    for k in 0..=e {
        let mut c = binom_q(e, k);
        for _ in 0..k {
            c *= q1;
        }
        for _ in 0..e - k {
            c *= q0;
        }
        coeffs.push(c);
    }
    DensePoly::monomial(coeffs)
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl Add for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        self.scale(&-Rational::one())
    }
}
