//! Exact verifiers for the binomial-sum identities around the Bezout pair.
//!
//! Every `verify_*` function returns a [`CheckReport`] carrying the exact
//! residual. The `*_with` variants take an optional [`Tamper`] that corrupts
//! a single coefficient, which the negative-control tests rely on.

mod lemmas;
mod partition;
mod report;
mod rising;

pub use lemmas::{
    brill_sum, brill_sum_with, lemma42_step, lemma42_triple, verify_brill, verify_brill_with,
    verify_lemma42, verify_lemma42_with, verify_w_telescoping, verify_w_telescoping_with, w_value,
};
pub use partition::{
    second_proof_coefficients, u_poly, v_poly, verify_cancellation, verify_cancellation_with,
    verify_chaundy_bullard, verify_chaundy_bullard_with, verify_symmetry, verify_symmetry_with,
    SecondProofCoefficients,
};
pub(crate) use report::bump;
pub use report::{CheckReport, ParamValue, Residual, Tamper};
pub use rising::{
    gamma_ratio_form, remark62_bivariate, remark62_scalar, remark62_univariate, remark63_sides,
    twin_expansion, twin_expansion_with, verify_gamma_ratio_form, verify_gamma_ratio_form_with,
    verify_remark62, verify_remark62_with, verify_remark63, verify_remark63_with, verify_twin,
    verify_twin_with,
};

use crate::numeric::Index;

pub(crate) fn nm(n: Index, m: Index) -> Vec<(&'static str, ParamValue)> {
    vec![
        ("n", ParamValue::Int(n as u64)),
        ("m", ParamValue::Int(m as u64)),
    ]
}

pub(crate) fn nmk(n: Index, m: Index, k: Index) -> Vec<(&'static str, ParamValue)> {
    let mut p = nm(n, m);
    p.push(("k", ParamValue::Int(k as u64)));
    p
}
