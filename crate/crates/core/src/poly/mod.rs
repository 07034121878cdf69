//! Dense exact polynomials over [`Rational`](crate::Rational).

mod bivariate;
mod dense;

pub use bivariate::BiPoly;
pub use dense::{affine_power, Basis, Degree, DensePoly};

use crate::numeric::Rational;
use num_traits::{One, Signed, Zero};

/// Renders `coeff * monomial` terms in ascending order as `3 - 2*x + x^2`.
/// `terms` yields `(coefficient, monomial)` where an empty monomial is the
/// constant term.
pub(crate) fn render_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Rational, String)>,
{
    let mut out = String::new();
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
