//! Exact integers, rationals and the combinatorial scalars built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced fraction over arbitrary-precision integers.
///
/// `num_rational::Ratio` normalizes on construction, so the denominator is
/// always positive, `gcd(|num|, den) = 1`, and zero is stored as `0/1`.
pub type Rational = num_rational::BigRational;

/// Nonnegative summation index (`n`, `m`, `k`, `p`, `nu`, ...).
pub type Index = usize;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// `(-1)^k` as a rational.
pub fn sign(k: Index) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn factorial(n: Index) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
///
/// Multiplicative scheme: after step `i` the accumulator is `C(n-k+i, i)`,
/// so every division is exact.
pub fn binomial(n: Index, k: Index) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        let (q, r) = acc.div_rem(&BigInt::from(i));
        debug_assert!(r.is_zero());
        acc = q;
    }
    acc
}

/// `C(n, k)` lifted into the rationals.
pub fn binom_q(n: Index, k: Index) -> Rational {
    from_bigint(binomial(n, k))
}

/// Binomial coefficient with arbitrary rational upper argument:
/// `x (x-1) ... (x-k+1) / k!`.
pub fn gen_binomial(x: &Rational, k: Index) -> Rational {
    let mut num = Rational::one();
    for i in 0..k {
        num *= x - int(i as i64);
    }
    num / from_bigint(factorial(k))
}

/// Rising factorial `z (z+1) ... (z+n-1)`; the empty product when `n = 0`.
pub fn rising_factorial(z: &Rational, n: Index) -> Rational {
    let mut acc = Rational::one();
    for j in 0..n {
        acc *= z + int(j as i64);
    }
    acc
}

/// Parses `"3"`, `"-3/7"` or a decimal literal such as `"0.35"` / `"-1.5e-2"`
/// into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(pos) => {
            let e: i32 = t[pos + 1..].parse().map_err(|_| err())?;
            (&t[..pos], e)
        }
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(err());
    }
    let all: BigInt = format!("0{whole}{frac}").parse().map_err(|_| err())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(all);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -value } else { value })
}

pub fn to_f64(q: &Rational) -> f64 {
    // Ratio::to_f64 handles numerators and denominators beyond f64 range.
    q.to_f64().unwrap_or(f64::NAN)
}

/// `Some(v)` when `q` is a positive integer that fits in an `Index`.
pub fn as_positive_index(q: &Rational) -> Option<Index> {
    if q.is_integer() && q.is_positive() {
        q.to_integer().to_usize()
    } else {
        None
    }
}

pub fn is_reduced(q: &Rational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}
