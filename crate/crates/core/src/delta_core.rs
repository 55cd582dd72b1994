//! The Schur coefficient `g_lambda` of the image of `e_n` under the
//! degree-2 Delta operator, by two algebraic routes, plus the degree-1
//! coefficient and the nonnegative q,t-analog certificate.
//!
//! Writing `lambda'` for the conjugate shape and `tau` for the q/t swap,
//! the auxiliary polynomial is
//!
//! ```text
//! F_{lambda'} = ( s_{lambda'}[1+t+t^2] - s_{lambda'}[1+t+q] ) / (t^2 - q)
//! ```
//!
//! and `g_lambda = (F_{lambda'} - tau F_{lambda'}) / (t - q)`. Both
//! divisions are exact; a [`NonDivisible`] escaping from here falsifies the
//! identities this crate exists to verify, so callers must surface it.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::qt_algebra::{qt_analog, qt_range, DivisorSpec, NonDivisible, QtPoly};
use crate::shapes::{enumerate_ssyt, schur_eval, Alphabet, Partition};
use crate::qt_algebra::{qt_analog_base, AnalogBase};

fn alphabet(letters: &[(u32, u32)]) -> Alphabet {
    Alphabet::from_exponents(letters)
}

const ONE: (u32, u32) = (0, 0);
const Q: (u32, u32) = (1, 0);
const Q2: (u32, u32) = (2, 0);
const T: (u32, u32) = (0, 1);
const T2: (u32, u32) = (0, 2);

/// `F_{lambda'} = (s_{lambda'}[1+t+t^2] - s_{lambda'}[1+t+q]) / (t^2-q)`.
/// Zero when `lambda_1 > 3` (the conjugate has more than three rows).
pub fn f_poly(lambda: &Partition) -> Result<QtPoly, NonDivisible> {
    let lc = lambda.conjugate();
    let a = schur_eval(&lc, &alphabet(&[ONE, T, T2]));
    let b = schur_eval(&lc, &alphabet(&[ONE, T, Q]));
    (a - b).exact_div(DivisorSpec::T2MinusQ)
}

/// `F_{lambda'}` summed directly over tableaux:
/// `sum_T t^{kappa_1(T)} [kappa_2(T)]_{t^2,q}` over SSYT of shape
/// `lambda'` filled with `{0,1,2}`.
pub fn f_poly_tableau(lambda: &Partition) -> QtPoly {
    let lc = lambda.conjugate();
    let mut total = QtPoly::zero();
    for tab in enumerate_ssyt(&lc, 2) {
        let k1 = tab.count_entry(1);
        let k2 = tab.count_entry(2);
        total += qt_analog_base(k2, AnalogBase::T2Q).mul_monomial(0, k1);
    }
    total
}

/// `g_lambda = (F_{lambda'} - tau F_{lambda'}) / (t - q)`.
pub fn g_coefficient(lambda: &Partition) -> Result<QtPoly, NonDivisible> {
    if lambda.first_part() > 3 {
        return Ok(QtPoly::zero());
    }
    let f = f_poly(lambda)?;
    (&f - f.tau_swap()).exact_div(DivisorSpec::TMinusQ)
}

/// The three-term alternating quotient for `g_lambda`:
///
/// ```text
/// (t-q^2) s_{lambda'}[1+t+t^2] - (q+t+1)(t-q) s_{lambda'}[1+q+t] + (t^2-q) s_{lambda'}[1+q+q^2]
/// -----------------------------------------------------------------------------------------
///                              (t-q)(t^2-q)(t-q^2)
/// ```
pub fn g_raw_quotient(lambda: &Partition) -> Result<QtPoly, NonDivisible> {
    if lambda.first_part() > 3 {
        return Ok(QtPoly::zero());
    }
    let lc = lambda.conjugate();
    let s_tt2 = schur_eval(&lc, &alphabet(&[ONE, T, T2]));
    let s_qt = schur_eval(&lc, &alphabet(&[ONE, Q, T]));
    let s_qq2 = schur_eval(&lc, &alphabet(&[ONE, Q, Q2]));

    let t_minus_q2 = DivisorSpec::TMinusQ2.to_poly();
    let t_minus_q = DivisorSpec::TMinusQ.to_poly();
    let t2_minus_q = DivisorSpec::T2MinusQ.to_poly();
    let one_q_t = QtPoly::one() + QtPoly::monomial(1, 0) + QtPoly::monomial(0, 1);

    let numerator = t_minus_q2 * s_tt2 - one_q_t * t_minus_q * s_qt + t2_minus_q * s_qq2;
    numerator
        .exact_div(DivisorSpec::TMinusQ)?
        .exact_div(DivisorSpec::T2MinusQ)?
        .exact_div(DivisorSpec::TMinusQ2)
}

/// Coefficient of `s_lambda` in the degree-1 case:
/// `(s_{lambda'}[1+t] - s_{lambda'}[1+q]) / (t-q)`.
pub fn delta_e1_coefficient(lambda: &Partition) -> Result<QtPoly, NonDivisible> {
    let lc = lambda.conjugate();
    let a = schur_eval(&lc, &alphabet(&[ONE, T]));
    let b = schur_eval(&lc, &alphabet(&[ONE, Q]));
    (a - b).exact_div(DivisorSpec::TMinusQ)
}

/// Closed form for the degree-1 coefficient: `[m -> n-m]` when
/// `lambda = (2^m, 1^{n-2m})`, zero for every other shape.
pub fn delta_e1_closed(lambda: &Partition) -> QtPoly {
    if lambda.first_part() > 2 {
        return QtPoly::zero();
    }
    let n = lambda.size();
    let m = lambda.parts().iter().filter(|&&p| p == 2).count() as u32;
    qt_range(m, n - m)
}

/// One summand `mult * (qt)^shift * [length]_{q,t}` of a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertEntry {
    pub shift: u32,
    pub length: u32,
    pub mult: BigInt,
}

/// A q,t-analog decomposition `sum mult * (qt)^shift [length]_{q,t}`,
/// entries sorted by (shift, length) with no duplicates. The certificate
/// is *positive* when every multiplicity is nonnegative — a stronger
/// witness than coefficientwise nonnegativity of the reconstructed
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Certificate {
    entries: Vec<CertEntry>,
}

#[derive(Serialize)]
struct CertEntryJson {
    shift: u32,
    length: u32,
    mult: String,
}

#[derive(Serialize)]
struct CertJson {
    entries: Vec<CertEntryJson>,
    positive: bool,
}

impl Certificate {
    pub fn entries(&self) -> &[CertEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.entries.iter().all(|e| !e.mult.is_negative())
    }

    /// `{"entries":[{"shift":j,"length":d,"mult":"<int>"}],"positive":bool}`
    pub fn to_json(&self) -> serde_json::Value {
        let entries = self
            .entries
            .iter()
            .map(|e| CertEntryJson {
                shift: e.shift,
                length: e.length,
                mult: e.mult.to_string(),
            })
            .collect();
        serde_json::to_value(CertJson {
            entries,
            positive: self.is_positive(),
        })
        .expect("serialization cannot fail")
    }

    /// Paper-style rendering, e.g. `[2]+[3]+2[4]+[5]+[6]+qt(1+[2]+[3])`.
    pub fn analog_string(&self) -> String {
        if self.entries.is_empty() {
            return "0".to_string();
        }
        let mut groups: Vec<(u32, Vec<&CertEntry>)> = Vec::new();
        for e in &self.entries {
            match groups.last_mut() {
                Some((shift, list)) if *shift == e.shift => list.push(e),
                _ => groups.push((e.shift, vec![e])),
            }
        }
        let render_entry = |e: &CertEntry, in_group: bool| -> String {
            let mult = if e.mult.is_one() {
                String::new()
            } else {
                e.mult.to_string()
            };
            // [1] is the constant 1; inside a (qt)^j group it prints bare
            if e.length == 1 && in_group {
                if mult.is_empty() {
                    "1".to_string()
                } else {
                    mult
                }
            } else {
                format!("{mult}[{}]", e.length)
            }
        };
        let mut pieces = Vec::new();
        for (shift, list) in groups {
            let inner: Vec<String> = list.iter().map(|e| render_entry(e, shift > 0)).collect();
            let body = inner.join("+").replace("+-", "-");
            let piece = match shift {
                0 => body,
                _ => {
                    let prefix = if shift == 1 {
                        "qt".to_string()
                    } else {
                        format!("(qt)^{shift}")
                    };
                    // bare juxtaposition only for a lone bracket like (qt)^2[2]
                    if list.len() == 1 && body.starts_with('[') {
                        format!("{prefix}{body}")
                    } else {
                        format!("{prefix}({body})")
                    }
                }
            };
            pieces.push(piece);
        }
        pieces.join("+").replace("+-", "-")
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.analog_string())
    }
}

/// Read the certificate off a polynomial `f`: writing `a_{i,j}` for the
/// coefficient of `t^i q^j`, each pair `i > j` with
/// `a_{i,j} - a_{j,i} != 0` contributes the entry
/// `(shift j, length i-j, mult a_{i,j} - a_{j,i})`.
///
/// The orientation (`i` indexes `t`) is the one that makes
/// `reconstruct(extract_certificate(F)) = (F - tau F)/(t - q)`.
pub fn extract_certificate(f: &QtPoly) -> Certificate {
    let mut entries = Vec::new();
    let mut pairs: std::collections::BTreeSet<(u32, u32)> = std::collections::BTreeSet::new();
    for (&(qe, te), _) in f.terms() {
        if qe != te {
            let (i, j) = if te > qe { (te, qe) } else { (qe, te) };
            pairs.insert((j, i - j));
        }
    }
    for (shift, length) in pairs {
        let (j, i) = (shift, shift + length);
        let mult = f.coeff(j, i) - f.coeff(i, j);
        if !mult.is_zero() {
            entries.push(CertEntry {
                shift,
                length,
                mult,
            });
        }
    }
    Certificate { entries }
}

/// `sum mult * (qt)^shift * [length]_{q,t}`.
pub fn reconstruct(cert: &Certificate) -> QtPoly {
    let mut total = QtPoly::zero();
    for e in &cert.entries {
        total += qt_analog(e.length).mul_monomial(e.shift, e.shift).scale(&e.mult);
    }
    total
}
