//! Exact engine for the Schur coefficients of the degree-2 Delta operator
//! image of `e_n`, written `g_lambda` throughout, with positivity
//! certificates in q,t-analogs.
//!
//! The same coefficient is computed by four independent routes that must
//! agree exactly:
//! - [`delta_core::g_coefficient`] / [`delta_core::g_raw_quotient`]:
//!   algebraic quotients of Schur specializations,
//! - [`enriched::g_via_all_enriched`] / [`enriched::g_via_leftovers`]:
//!   decorated-tableau enumeration and the leftover characterization,
//! - [`recursion::g_via_recursion`]: the column-block closed forms,
//! - [`genfun::g_via_genfun`]: coefficients of a truncated three-variable
//!   rational generating function.
//!
//! All arithmetic is exact (`BigInt` coefficients, rational evaluation);
//! every divisibility step either succeeds or surfaces an error that the
//! callers treat as a falsified identity.

pub mod delta_core;
pub mod delta_e3;
pub mod enriched;
pub mod genfun;
pub mod qt_algebra;
pub mod recursion;
pub mod shapes;

pub use delta_core::{
    delta_e1_closed, delta_e1_coefficient, extract_certificate, f_poly, f_poly_tableau,
    g_coefficient, g_raw_quotient, reconstruct, Certificate,
};
pub use qt_algebra::{qt_analog, qt_analog_base, qt_range, DivisorSpec, NonDivisible, QtPoly};
pub use shapes::{enumerate_ssyt, schur_eval, Alphabet, Partition, Ssyt};
