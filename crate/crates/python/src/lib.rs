//! Python bindings for `chaundy`.
//!
//! Rationals cross the boundary as `fractions.Fraction`. Inputs also accept
//! `int`, decimal strings like `"0.25"` and `"3/7"`; a `float` is read
//! through its shortest repr, so `0.1` means exactly `1/10`.

use chaundy::bezout;
use chaundy::identities::{ParamValue, Tamper};
use chaundy::numeric::{parse_rational, Index, Rational};
use chaundy::special_fn;
use chaundy::sweep::{self, IdentityKind, SweepConfig};
use chaundy::{Basis, CheckReport, DensePoly, Error};
use num_bigint::BigInt;
use pyo3::exceptions::{PyArithmeticError, PyTypeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyString, PyTuple};
use std::ops::RangeInclusive;

fn to_py_err(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::DivisionByZero | Error::SingularDenominator(_) => PyZeroDivisionError::new_err(msg),
        Error::NonConvergence { .. } => PyArithmeticError::new_err(msg),
        _ => PyValueError::new_err(msg),
    }
}

/// Reads an int, Fraction, float or string as an exact rational.
pub fn rational_arg(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(s) = obj.cast::<PyString>() {
        return parse_rational(s.to_str()?).map_err(to_py_err);
    }
    if let Ok(q) = obj.extract::<Rational>() {
        return Ok(q);
    }
    parse_rational(obj.str()?.to_str()?).map_err(to_py_err)
}

fn value_list(obj: &Bound<'_, PyAny>) -> PyResult<Vec<Rational>> {
    if let Ok(s) = obj.cast::<PyString>() {
        return sweep::parse_value_list(s.to_str()?).map_err(to_py_err);
    }
    if obj.is_instance_of::<PyList>() || obj.is_instance_of::<PyTuple>() {
        return obj.try_iter()?.map(|v| rational_arg(&v?)).collect();
    }
    Ok(vec![rational_arg(obj)?])
}

fn range_arg(obj: &Bound<'_, PyAny>) -> PyResult<RangeInclusive<Index>> {
    if let Ok(s) = obj.cast::<PyString>() {
        return sweep::parse_range(s.to_str()?).map_err(to_py_err);
    }
    match obj.extract::<Index>() {
        Ok(v) => Ok(v..=v),
        Err(_) => Err(PyTypeError::new_err(
            "expected a non-negative int or a range string such as \"0..5\"",
        )),
    }
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::Monomial => "monomial",
        Basis::RisingOverFactorial => "rising",
    }
}

/// Univariate polynomial with exact rational coefficients.
#[pyclass(name = "Poly", module = "chaundy", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyPoly {
    pub inner: DensePoly,
}

impl From<DensePoly> for PyPoly {
    fn from(inner: DensePoly) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyPoly {
    /// `coeffs[k]` multiplies `x^k` (`basis="monomial"`) or `x^(k)/k!` (`basis="rising"`).
    #[new]
    #[pyo3(signature = (coeffs, basis = "monomial"))]
    fn py_new(coeffs: &Bound<'_, PyAny>, basis: &str) -> PyResult<Self> {
        let basis = match basis {
            "monomial" => Basis::Monomial,
            "rising" => Basis::RisingOverFactorial,
            other => return Err(PyValueError::new_err(format!("unknown basis `{other}`"))),
        };
        let coeffs = coeffs
            .try_iter()?
            .map(|v| rational_arg(&v?))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(DensePoly::new(coeffs, basis).into())
    }

    #[getter]
    fn coeffs(&self) -> Vec<Rational> {
        self.inner.coeffs().to_vec()
    }

    #[getter]
    fn basis(&self) -> &'static str {
        basis_name(self.inner.basis())
    }

    /// `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.inner.degree().finite()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn __call__(&self, x: &Bound<'_, PyAny>) -> PyResult<Rational> {
        Ok(self.inner.eval(&rational_arg(x)?))
    }

    fn derivative(&self) -> PyResult<Self> {
        self.inner.derivative().map(Into::into).map_err(to_py_err)
    }

    fn to_rising_basis(&self) -> Self {
        self.inner.to_rising_basis().into()
    }

    fn to_monomial_basis(&self) -> Self {
        self.inner.to_monomial_basis().into()
    }

    #[pyo3(signature = (var = "x"))]
    fn render(&self, var: &str) -> String {
        self.inner.render(var)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.inner
            .checked_add(&other.inner)
            .map(Into::into)
            .map_err(to_py_err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.inner
            .checked_sub(&other.inner)
            .map(Into::into)
            .map_err(to_py_err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.inner
            .checked_mul(&other.inner)
            .map(Into::into)
            .map_err(to_py_err)
    }

    fn __neg__(&self) -> Self {
        self.inner
            .scale(&Rational::from_integer((-1).into()))
            .into()
    }

    fn __str__(&self) -> String {
        self.inner.render("x")
    }

    fn __repr__(&self) -> String {
        format!("Poly({}, basis={})", self.inner.render("x"), self.basis())
    }
}

/// A pair `(P, Q)` with `x^(m+1) P + (1-x)^(n+1) Q = 1`.
#[pyclass(name = "BezoutSolution", module = "chaundy", frozen)]
pub struct PyBezoutSolution {
    pub inner: bezout::BezoutSolution,
}

#[pymethods]
impl PyBezoutSolution {
    #[getter]
    fn n(&self) -> Index {
        self.inner.n
    }

    #[getter]
    fn m(&self) -> Index {
        self.inner.m
    }

    #[getter]
    fn p(&self) -> PyPoly {
        self.inner.p.clone().into()
    }

    #[getter]
    fn q(&self) -> PyPoly {
        self.inner.q.clone().into()
    }

    #[getter]
    fn method(&self) -> &'static str {
        self.inner.method.name()
    }

    /// Zero polynomial for a valid pair.
    fn residual(&self) -> PyPoly {
        self.inner.residual().into()
    }

    fn __repr__(&self) -> String {
        format!(
            "BezoutSolution(n={}, m={}, method={}, P={}, Q={})",
            self.inner.n,
            self.inner.m,
            self.inner.method.name(),
            self.inner.p,
            self.inner.q
        )
    }
}

/// Verdict for one identity at one parameter point. Truthy when it passed.
#[pyclass(name = "CheckReport", module = "chaundy", frozen)]
pub struct PyCheckReport {
    pub inner: CheckReport,
}

#[pymethods]
impl PyCheckReport {
    #[getter]
    fn identity(&self) -> &str {
        &self.inner.identity
    }

    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed
    }

    /// Rendered residual; `"0"` when every part vanishes.
    #[getter]
    fn residual(&self) -> String {
        self.inner.residual.render()
    }

    #[getter]
    fn method(&self) -> &str {
        &self.inner.method
    }

    #[getter]
    fn params<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let d = PyDict::new(py);
        for (k, v) in &self.inner.params {
            match v {
                ParamValue::Int(i) => d.set_item(k, i)?,
                ParamValue::Rational(q) => d.set_item(k, q)?,
            }
        }
        Ok(d)
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __bool__(&self) -> bool {
        self.inner.passed
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

/// Bezout pair by `method`: `"closed-form"`, `"recurrence"` or `"euclid"`.
#[pyfunction]
#[pyo3(signature = (n, m, method = "closed-form"))]
fn solve(n: Index, m: Index, method: &str) -> PyResult<PyBezoutSolution> {
    let inner = match method {
        "closed-form" => bezout::closed_form(n, m),
        "recurrence" => bezout::recurrence_solution(n, m),
        "euclid" => bezout::euclid_solution(n, m),
        other => return Err(PyValueError::new_err(format!("unknown method `{other}`"))),
    };
    Ok(PyBezoutSolution { inner })
}

#[pyfunction]
fn mu(n: Index, m: Index) -> BigInt {
    bezout::mu(n, m)
}

/// Returns `(u, v, g)` with `u a + v b = g`, `g` monic.
#[pyfunction]
fn extended_euclid(
    a: PyRef<'_, PyPoly>,
    b: PyRef<'_, PyPoly>,
) -> PyResult<(PyPoly, PyPoly, PyPoly)> {
    let (u, v, g) = bezout::extended_euclid(&a.inner, &b.inner).map_err(to_py_err)?;
    Ok((u.into(), v.into(), g.into()))
}

#[pyfunction]
fn u_poly(n: Index, m: Index) -> PyPoly {
    chaundy::identities::u_poly(n, m).into()
}

#[pyfunction]
fn v_poly(n: Index, m: Index) -> PyPoly {
    chaundy::identities::v_poly(n, m).into()
}

/// Runs one identity over a parameter grid.
///
/// `n`, `m`, `k` take an int or a range string (`"0..5"`, `"2..=4"`).
/// `alpha`, `beta`, `a`, `x` take one value, a list, or a comma-separated
/// string; unset continuous parameters are drawn from `seed`.
#[pyfunction]
#[pyo3(signature = (
    identity, n = None, m = None, k = None, *, alpha = None, beta = None, a = None, x = None,
    samples = 10, seed = 0, jobs = 1, tamper = false
))]
#[allow(clippy::too_many_arguments)]
fn check(
    py: Python<'_>,
    identity: &str,
    n: Option<&Bound<'_, PyAny>>,
    m: Option<&Bound<'_, PyAny>>,
    k: Option<&Bound<'_, PyAny>>,
    alpha: Option<&Bound<'_, PyAny>>,
    beta: Option<&Bound<'_, PyAny>>,
    a: Option<&Bound<'_, PyAny>>,
    x: Option<&Bound<'_, PyAny>>,
    samples: usize,
    seed: u64,
    jobs: usize,
    tamper: bool,
) -> PyResult<Vec<PyCheckReport>> {
    let kind: IdentityKind = identity.parse().map_err(to_py_err)?;
    let range =
        |v: Option<&Bound<'_, PyAny>>| v.map(range_arg).transpose().map(|r| r.unwrap_or(0..=0));
    let list = |v: Option<&Bound<'_, PyAny>>| v.map(value_list).transpose();
    let mut config = SweepConfig::new(kind)
        .grid(range(n)?, range(m)?)
        .with_k(range(k)?)
        .with_samples(samples, seed)
        .with_jobs(jobs);
    config.alpha = list(alpha)?;
    config.beta = list(beta)?;
    config.a = list(a)?;
    config.x = list(x)?;
    config.tamper = tamper.then(Tamper::unit);
    let reports = py.detach(|| sweep::run_sweep(&config)).map_err(to_py_err)?;
    Ok(reports
        .into_iter()
        .map(|inner| PyCheckReport { inner })
        .collect())
}

/// `B_a(p, q)` as an exact polynomial in `a`, for positive integers `p`, `q`.
#[pyfunction]
fn incomplete_beta_exact(p: Index, q: Index) -> PyResult<PyPoly> {
    special_fn::incomplete_beta_exact(p, q)
        .map(Into::into)
        .map_err(to_py_err)
}

/// `B_a(x, y)` by adaptive quadrature.
#[pyfunction]
fn incomplete_beta(x: f64, y: f64, a: f64) -> PyResult<f64> {
    special_fn::incomplete_beta_numeric(x, y, a).map_err(to_py_err)
}

/// `B(alpha+p, beta+q) / B(alpha, beta)` as an exact rational.
#[pyfunction]
fn beta_shift_ratio(
    p: Index,
    q: Index,
    alpha: &Bound<'_, PyAny>,
    beta: &Bound<'_, PyAny>,
) -> PyResult<Rational> {
    special_fn::beta_shift_ratio(p, q, &rational_arg(alpha)?, &rational_arg(beta)?)
        .map_err(to_py_err)
}

#[pymodule(name = "chaundy")]
pub fn chaundy_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyBezoutSolution>()?;
    m.add_class::<PyCheckReport>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(mu, m)?)?;
    m.add_function(wrap_pyfunction!(extended_euclid, m)?)?;
    m.add_function(wrap_pyfunction!(u_poly, m)?)?;
    m.add_function(wrap_pyfunction!(v_poly, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(incomplete_beta_exact, m)?)?;
    m.add_function(wrap_pyfunction!(incomplete_beta, m)?)?;
    m.add_function(wrap_pyfunction!(beta_shift_ratio, m)?)?;
    let names: Vec<&str> = IdentityKind::ALL.iter().map(|k| k.name()).collect();
    m.add("IDENTITIES", PyTuple::new(m.py(), names)?)?;
    Ok(())
}
