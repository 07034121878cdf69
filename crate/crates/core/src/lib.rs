//! Exact rational machinery for the Bezout pair of `x^(m+1)` and `(1-x)^(n+1)`.
//!
//! The unique pair `(P, Q)` with `deg P <= n`, `deg Q <= m` and
//! `x^(m+1) P(x) + (1-x)^(n+1) Q(x) = 1` is built three independent ways in
//! [`bezout`] and cross-checked against an extended-Euclid oracle. The
//! [`identities`] and [`special_fn`] modules verify the binomial-sum,
//! incomplete-beta and rising-factorial identities that hang off that pair,
//! always by exact structural equality of polynomials over the rationals.
//! [`sweep`] runs those checks over parameter grids and backs the CLI.

pub mod bezout;
pub mod error;
pub mod identities;
pub mod numeric;
pub mod poly;
pub mod special_fn;
pub mod sweep;

pub use bezout::{BezoutSolution, Method};
pub use error::{Error, Result};
pub use identities::{CheckReport, Residual, Tamper};
pub use numeric::{Index, Rational};
pub use poly::{Basis, BiPoly, Degree, DensePoly};
