use std::fmt;

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::numeric::Rational;
use crate::poly::{BiPoly, DensePoly};

#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Int(u64),
    Rational(Rational),
}

impl ParamValue {
    fn to_json(&self) -> Value {
        match self {
            ParamValue::Int(v) => json!(v),
            ParamValue::Rational(q) => json!(q.to_string()),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Rational(q) => write!(f, "{q}"),
        }
    }
}

/// Exact defect of one identity instance.
#[derive(Debug, Clone, PartialEq)]
pub enum Residual {
    Scalar(Rational),
    Poly {
        poly: DensePoly,
        var: &'static str,
    },
    BiPoly(BiPoly),
    /// Floating-point defect with its acceptance tolerance.
    Real {
        defect: f64,
        tolerance: f64,
    },
    Parts(Vec<(String, Residual)>),
}

impl Residual {
    pub fn poly(poly: DensePoly) -> Self {
        Residual::Poly { poly, var: "x" }
    }

    /// Exact residuals pass only when identically zero; `Real` passes inside
    /// its tolerance.
    pub fn passes(&self) -> bool {
        match self {
            Residual::Scalar(q) => q.is_zero(),
            Residual::Poly { poly, .. } => poly.is_zero(),
            Residual::BiPoly(p) => p.is_zero(),
            Residual::Real { defect, tolerance } => defect.abs() <= *tolerance,
            Residual::Parts(parts) => parts.iter().all(|(_, r)| r.passes()),
        }
    }

    /// `"0"` for an exact pass; failing parts are listed as `name: value`.
    pub fn render(&self) -> String {
        match self {
            Residual::Scalar(q) => q.to_string(),
            Residual::Poly { poly, var } => poly.render(var),
            Residual::BiPoly(p) => p.render(),
            Residual::Real { defect, .. } => format!("{defect:e}"),
            Residual::Parts(parts) => {
                let failing: Vec<String> = parts
                    .iter()
                    .filter(|(_, r)| !r.passes())
                    .map(|(name, r)| format!("{name}: {}", r.render()))
                    .collect();
                if failing.is_empty() {
                    let real: Vec<String> = parts
                        .iter()
                        .filter(|(_, r)| matches!(r, Residual::Real { .. }))
                        .map(|(_, r)| r.render())
                        .collect();
                    match real.len() {
                        0 => "0".to_string(),
                        _ => real.join("; "),
                    }
                } else {
                    failing.join("; ")
                }
            }
        }
    }
}

/// Verdict for one identity at one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub identity: String,
    pub params: Vec<(String, ParamValue)>,
    pub passed: bool,
    pub residual: Residual,
    pub method: String,
}

impl CheckReport {
    pub fn new(
        identity: &str,
        params: Vec<(&str, ParamValue)>,
        residual: Residual,
        method: impl Into<String>,
    ) -> Self {
        Self {
            identity: identity.to_string(),
            params: params
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            passed: residual.passes(),
            residual,
            method: method.into(),
        }
    }

    pub fn param(&self, name: &str) -> Option<&ParamValue> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn params_compact(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self) -> Value {
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), v.to_json()))
            .collect();
        json!({
            "identity": self.identity,
            "params": params,
            "passed": self.passed,
            "residual": self.residual.render(),
            "method": self.method,
        })
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} residual={} ({})",
            if self.passed { "PASS" } else { "FAIL" },
            self.identity,
            self.params_compact(),
            self.residual.render(),
            self.method
        )
    }
}

/// Negative-control hook: adds `delta` to one coefficient of the first
/// ingredient a verifier builds. `index` is clamped to the ingredient length.
#[derive(Debug, Clone, PartialEq)]
pub struct Tamper {
    pub index: usize,
    pub delta: Rational,
}

impl Tamper {
    pub fn unit() -> Self {
        Self {
            index: 0,
            delta: crate::numeric::int(1),
        }
    }

    pub fn at(index: usize) -> Self {
        Self {
            index,
            ..Self::unit()
        }
    }

    pub fn apply(&self, coeffs: &mut Vec<Rational>) {
        if coeffs.is_empty() {
            coeffs.push(self.delta.clone());
            return;
        }
        let i = self.index.min(coeffs.len() - 1);
        coeffs[i] += &self.delta;
    }

    /// Delta to add to term `i` of a `len`-term sum.
    pub fn offset(&self, i: usize, len: usize) -> Option<&Rational> {
        (len > 0 && i == self.index.min(len - 1)).then_some(&self.delta)
    }
}

pub(crate) fn bump(tamper: Option<&Tamper>, i: usize, len: usize) -> Rational {
    tamper
        .and_then(|t| t.offset(i, len))
        .cloned()
        .unwrap_or_else(Rational::zero)
}
