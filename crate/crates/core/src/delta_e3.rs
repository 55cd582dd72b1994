//! The degree-3 coefficient `<Delta_{e_3} e_n, s_lambda>` from the
//! five-term Macdonald-specialization formula, with polynomiality
//! enforced by exact division and positivity probed rather than assumed.
//!
//! The five terms share the denominator
//! `(q-t)^2 (q+t) (q^2-t) (q^3-t) (q-t^2) (q-t^3)`; the combined
//! numerator is cleared factor by factor. The five-term formula pairs
//! against `s_{lambda'}`, so the conjugate is applied on entry and the
//! operation here exposes the coefficient of `s_lambda` itself; the
//! degree-3 case of the operator identity
//! `Delta_{e_k} e_n = Delta'_{e_k} e_n + Delta'_{e_{k-1}} e_n` at `n = 3`
//! pins that convention in the tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::qt_algebra::{DivisorSpec, QtPoly};
use crate::shapes::{schur_eval, Alphabet, Partition};

/// The four-letter alphabet `B_mu = { q^{a'(c)} t^{l'(c)} : c in mu }`
/// of a partition of 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BAlphabet {
    pub mu: Partition,
    pub alphabet: Alphabet,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Delta3Error {
    #[error("mu must be a partition of 4, got {0}")]
    WrongSize(Partition),
    #[error("clearing the denominator left a remainder at factor {0}")]
    NonPolynomial(DivisorSpec),
    #[error("sample (q0, t0) = ({}, {}) hits a pole of the sampled formula", .0.0, .0.1)]
    InvalidSample(Box<(BigRational, BigRational)>),
}

/// Cell monomials of `mu |- 4`: cell (row i, col j), 0-based, contributes
/// `q^j t^i`.
pub fn b_alphabet(mu: &Partition) -> Result<BAlphabet, Delta3Error> {
    if mu.size() != 4 {
        return Err(Delta3Error::WrongSize(mu.clone()));
    }
    let mut letters = Vec::with_capacity(4);
    for (i, &len) in mu.parts().iter().enumerate() {
        for j in 0..len {
            letters.push((j, i as u32));
        }
    }
    Ok(BAlphabet {
        mu: mu.clone(),
        alphabet: Alphabet::from_exponents(&letters),
    })
}

fn poly(d: DivisorSpec) -> QtPoly {
    d.to_poly()
}

/// `<Delta_{e_3} e_n, s_lambda>`: zero when `lambda_1 > 4`, otherwise the
/// five-term combination cleared by exact division.
pub fn delta3_coefficient(lambda: &Partition) -> Result<QtPoly, Delta3Error> {
    if lambda.first_part() > 4 {
        return Ok(QtPoly::zero());
    }
    let lc = lambda.conjugate();
    let s_of = |mu_parts: &[u32]| -> Result<QtPoly, Delta3Error> {
        let mu = Partition::new(mu_parts.to_vec());
        Ok(schur_eval(&lc, &b_alphabet(&mu)?.alphabet))
    };
    let s4 = s_of(&[4])?;
    let s31 = s_of(&[3, 1])?;
    let s22 = s_of(&[2, 2])?;
    let s211 = s_of(&[2, 1, 1])?;
    let s1111 = s_of(&[1, 1, 1, 1])?;

    let q_minus_t = poly(DivisorSpec::QMinusT);
    let q_plus_t = poly(DivisorSpec::QPlusT);
    let q2_minus_t = poly(DivisorSpec::Q2MinusT);
    let q3_minus_t = poly(DivisorSpec::Q3MinusT);
    let q_minus_t2 = poly(DivisorSpec::QMinusT2);
    let q_minus_t3 = poly(DivisorSpec::QMinusT3);

    // cofactors against the common denominator
    // (q-t)^2 (q+t) (q^2-t) (q^3-t) (q-t^2) (q-t^3)
    let term1 = s4 * &q_minus_t * &q_plus_t * &q_minus_t2 * &q_minus_t3;
    let c31 = QtPoly::monomial(2, 0) + QtPoly::monomial(1, 0) + QtPoly::monomial(0, 1) + QtPoly::one();
    let term2 = c31 * s31 * &q2_minus_t * &q_minus_t2 * &q_minus_t3;
    let c22 = QtPoly::monomial(1, 1) - QtPoly::one();
    let term3 = c22 * s22 * &q_plus_t * &q3_minus_t * &q_minus_t3;
    let c211 = QtPoly::monomial(0, 2) + QtPoly::monomial(1, 0) + QtPoly::monomial(0, 1) + QtPoly::one();
    let term4 = c211 * s211 * &q2_minus_t * &q3_minus_t * &q_minus_t2;
    let term5 = s1111 * &q_minus_t * &q_plus_t * &q2_minus_t * &q3_minus_t;

    let numerator = term1 - term2 - term3 + term4 - term5;
    let sequence = [
        DivisorSpec::QMinusT,
        DivisorSpec::QMinusT,
        DivisorSpec::QPlusT,
        DivisorSpec::Q2MinusT,
        DivisorSpec::Q3MinusT,
        DivisorSpec::QMinusT2,
        DivisorSpec::QMinusT3,
    ];
    let mut value = numerator;
    for d in sequence {
        value = value
            .exact_div(d)
            .map_err(|e| Delta3Error::NonPolynomial(e.divisor))?;
    }
    Ok(value)
}

fn pole_free(q0: &BigRational, t0: &BigRational) -> bool {
    let one = BigRational::one();
    !q0.is_zero()
        && !t0.is_zero()
        && *q0 != one
        && *t0 != one
        && q0 != t0
        && *q0 != -t0.clone()
        && q0 * q0 != *t0
        && q0 * q0 * q0 != *t0
        && t0 * t0 != *q0
        && t0 * t0 * t0 != *q0
}

/// Evaluate the alternative partial-fraction formula at exact rational
/// sample points and compare against [`delta3_coefficient`]. The formula
/// is verified only numerically; it carries the constant 2 and mixed
/// denominators that symbolic clearing would not simplify.
pub fn delta3_via_f_samplecheck(
    lambda: &Partition,
    samples: &[(BigRational, BigRational)],
) -> Result<bool, Delta3Error> {
    for (q0, t0) in samples {
        if !pole_free(q0, t0) {
            return Err(Delta3Error::InvalidSample(Box::new((q0.clone(), t0.clone()))));
        }
    }
    let reference = delta3_coefficient(lambda)?;
    let lc = lambda.conjugate();
    let s_qqq = schur_eval(&lc, &Alphabet::from_exponents(&[(0, 0), (1, 0), (2, 0), (3, 0)]));
    let s_qt_qt = schur_eval(&lc, &Alphabet::from_exponents(&[(0, 0), (1, 0), (0, 1), (1, 1)]));
    let s_qt_q2 = schur_eval(&lc, &Alphabet::from_exponents(&[(0, 0), (1, 0), (0, 1), (2, 0)]));
    let s_qt_t2 = schur_eval(&lc, &Alphabet::from_exponents(&[(0, 0), (1, 0), (0, 1), (0, 2)]));

    // F(x, y): the s-values were built with q as the first slot, so
    // evaluating them at (x, y) realizes the q <-> t swapped variant too.
    let f_at = |x: &BigRational, y: &BigRational| -> BigRational {
        let one = BigRational::one();
        let two = BigRational::from_integer(2.into());
        let sq = |v: &BigRational| v * v;
        let x2 = sq(x);
        let x3 = &x2 * x;
        let a = s_qqq.eval_rational(x, y);
        let b = s_qt_qt.eval_rational(x, y);
        let c = s_qt_q2.eval_rational(x, y);
        (a.clone() - b.clone()) / ((x - &one) * &x2 * (&x2 - y))
            - (a - c.clone()) / (&x2 * (x - &one) * (&x3 - y))
            - (x + &one) * (c - b.clone()) / (&two * (x - y) * &x2 * (x - &one))
            + b / (&two * &x2 * y)
    };

    for (q0, t0) in samples {
        let two = BigRational::from_integer(2.into());
        let q2 = q0 * q0;
        let t2 = t0 * t0;
        let correction =
            (s_qt_q2.eval_rational(q0, t0) / &q2 - s_qt_t2.eval_rational(q0, t0) / &t2)
                / (&two * (&q2 - &t2));
        let lhs = (f_at(q0, t0) - f_at(t0, q0)) / (q0 - t0) - correction;
        if lhs != reference.eval_rational(q0, t0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Positivity is conjectural at degree 3: the report carries the verdicts
/// instead of asserting them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositivityReport {
    Polynomial {
        polynomial: QtPoly,
        nonnegative: bool,
        tau_symmetric: bool,
        value_at_one_one: BigInt,
    },
    NonPolynomial {
        divisor: DivisorSpec,
    },
}

impl PositivityReport {
    pub fn is_clean(&self) -> bool {
        matches!(
            self,
            PositivityReport::Polynomial {
                nonnegative: true,
                tau_symmetric: true,
                ..
            }
        )
    }
}

pub fn positivity_report(lambda: &Partition) -> PositivityReport {
    match delta3_coefficient(lambda) {
        Ok(polynomial) => {
            let value_at_one_one = polynomial.terms().map(|(_, c)| c.clone()).sum();
            PositivityReport::Polynomial {
                nonnegative: polynomial.is_nonnegative(),
                tau_symmetric: polynomial.is_tau_symmetric(),
                polynomial,
                value_at_one_one,
            }
        }
        Err(Delta3Error::NonPolynomial(divisor)) => PositivityReport::NonPolynomial { divisor },
        Err(other) => unreachable!("unexpected error from delta3_coefficient: {other}"),
    }
}
