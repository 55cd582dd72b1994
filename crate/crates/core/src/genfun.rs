//! Truncated three-variable series verification of the seven-term
//! rational decomposition of the generating function
//! `F(u1,u2,u3) = sum b_{i,j}(u) t^i q^j` over `i > j >= 0`.
//!
//! Each printed term is `- numerator / prod (m - 1)` with every
//! denominator monomial `m` carrying at least one `u` variable, so
//! `1/(m - 1) = -(1 + m + m^2 + ...)` expands as a power series in the
//! `u`'s. Seven sign flips cancel the leading minus, which is what makes
//! the nonnegativity of every expanded coefficient visible term by term.
//!
//! `g_lambda` is recovered from the coefficient of `u1^a u2^b u3^c` as
//! `(id - tau)/(t - q)` of that coefficient, with
//! `lambda = (3^c 2^b 1^a)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::qt_algebra::{rat_pow, DivisorSpec, NonDivisible, QtPoly};

/// A monic monomial `q^a t^b u1^c u2^d u3^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UMonomial {
    pub q: u32,
    pub t: u32,
    pub u: [u32; 3],
}

impl UMonomial {
    pub fn u_degree(&self) -> u32 {
        self.u.iter().sum()
    }

    fn pow(&self, k: u32) -> UMonomial {
        UMonomial {
            q: self.q * k,
            t: self.t * k,
            u: [self.u[0] * k, self.u[1] * k, self.u[2] * k],
        }
    }

    fn eval_rational(&self, u: &[BigRational; 3], q0: &BigRational, t0: &BigRational) -> BigRational {
        rat_pow(q0, self.q)
            * rat_pow(t0, self.t)
            * rat_pow(&u[0], self.u[0])
            * rat_pow(&u[1], self.u[1])
            * rat_pow(&u[2], self.u[2])
    }
}

/// One printed fraction: `sign * (sum of numerator monomials) / prod (m - 1)`.
#[derive(Clone, Debug)]
pub struct RationalTerm {
    pub sign: i64,
    pub numerator: Vec<UMonomial>,
    pub denominator: Vec<UMonomial>,
}

impl RationalTerm {
    /// Exact rational value at a point; `None` on a pole (some `m = 1`).
    pub fn eval_rational(
        &self,
        u: &[BigRational; 3],
        q0: &BigRational,
        t0: &BigRational,
    ) -> Option<BigRational> {
        let mut value: BigRational = self
            .numerator
            .iter()
            .map(|m| m.eval_rational(u, q0, t0))
            .sum();
        value *= BigRational::from_integer(BigInt::from(self.sign));
        for m in &self.denominator {
            let f = m.eval_rational(u, q0, t0) - BigRational::one();
            if f.is_zero() {
                return None;
            }
            value /= f;
        }
        Some(value)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenfunError {
    #[error("monomial has zero u-degree; its geometric series would not truncate")]
    InvalidMonomial,
    #[error("coefficient ({0},{1},{2}) lies beyond the truncation bound {3}")]
    OutOfBound(u32, u32, u32, u32),
    #[error(transparent)]
    NonDivisible(#[from] NonDivisible),
}

/// A power series in `u1, u2, u3` with [`QtPoly`] coefficients, truncated
/// past total u-degree `bound`. Operations discard everything above the
/// bound, consistently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries {
    bound: u32,
    coeffs: BTreeMap<[u32; 3], QtPoly>,
}

impl USeries {
    pub fn zero(bound: u32) -> Self {
        USeries {
            bound,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(bound: u32) -> Self {
        let mut s = USeries::zero(bound);
        s.add_term([0, 0, 0], QtPoly::one());
        s
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn add_term(&mut self, key: [u32; 3], value: QtPoly) {
        if key.iter().sum::<u32>() > self.bound || value.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(key).or_insert_with(QtPoly::zero);
        *slot = std::mem::take(slot) + value;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// Coefficient of `u1^a u2^b u3^c` (zero if absent).
    pub fn coeff(&self, a: u32, b: u32, c: u32) -> QtPoly {
        self.coeffs.get(&[a, b, c]).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &QtPoly)> {
        self.coeffs.iter()
    }

    pub fn mul(&self, rhs: &USeries) -> USeries {
        assert_eq!(self.bound, rhs.bound, "mismatched truncation bounds");
        let mut out = USeries::zero(self.bound);
        for (ka, ca) in &self.coeffs {
            let da: u32 = ka.iter().sum();
            for (kb, cb) in &rhs.coeffs {
                if da + kb.iter().sum::<u32>() > self.bound {
                    continue;
                }
                out.add_term([ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]], ca * cb);
            }
        }
        out
    }
}

impl std::ops::Add<&USeries> for &USeries {
    type Output = USeries;
    fn add(self, rhs: &USeries) -> USeries {
        assert_eq!(self.bound, rhs.bound, "mismatched truncation bounds");
        let mut out = self.clone();
        for (k, v) in &rhs.coeffs {
            out.add_term(*k, v.clone());
        }
        out
    }
}

/// `1 + m + m^2 + ...` truncated; requires positive u-degree so the sum
/// is finite at each truncation order.
pub fn geom_expand(m: &UMonomial, bound: u32) -> Result<USeries, GenfunError> {
    let ud = m.u_degree();
    if ud == 0 {
        return Err(GenfunError::InvalidMonomial);
    }
    let mut out = USeries::zero(bound);
    let mut k = 0;
    while k * ud <= bound {
        let p = m.pow(k);
        out.add_term(p.u, QtPoly::monomial(p.q, p.t));
        k += 1;
    }
    Ok(out)
}

/// The seven fractions as one fixed table. Numerators are fully
/// expanded; denominators list the monomials `m` of the `(m - 1)` factors.
pub fn f_decomposition() -> Vec<RationalTerm> {
    fn m(q: u32, t: u32, u1: u32, u2: u32, u3: u32) -> UMonomial {
        UMonomial { q, t, u: [u1, u2, u3] }
    }
    vec![
        // (q t u1^3 + q t u1^2 u2 + q t u1 u2^2 + t u1^2 + t u1 u2 + t u2^2) * t
        RationalTerm {
            sign: -1,
            numerator: vec![
                m(1, 2, 3, 0, 0),
                m(1, 2, 2, 1, 0),
                m(1, 2, 1, 2, 0),
                m(0, 2, 2, 0, 0),
                m(0, 2, 1, 1, 0),
                m(0, 2, 0, 2, 0),
            ],
            denominator: vec![
                m(0, 0, 1, 0, 0),
                m(0, 1, 0, 1, 0),
                m(0, 3, 0, 0, 1),
                m(0, 2, 1, 0, 0),
                m(0, 3, 0, 1, 0),
                m(2, 2, 3, 0, 0),
                m(2, 2, 0, 3, 0),
            ],
        },
        // u2^3 t (t^3 + q t)
        RationalTerm {
            sign: -1,
            numerator: vec![m(0, 4, 0, 3, 0), m(1, 2, 0, 3, 0)],
            denominator: vec![
                m(0, 0, 1, 0, 0),
                m(0, 1, 0, 1, 0),
                m(0, 3, 0, 0, 1),
                m(0, 2, 1, 0, 0),
                m(0, 3, 0, 1, 0),
                m(2, 2, 0, 3, 0),
                m(0, 2, 0, 1, 0),
            ],
        },
        // u2 t (q^2 t^4 u1^2 u2^2 + q^2 t^2 u1^2 u2 + q^2 t^2 u1 u2^2
        //       + q t^2 u1^2 + q t^2 u1 u2 + q t^2 u2^2 + t^2 u1 + t^2 u2 + 1)
        RationalTerm {
            sign: -1,
            numerator: vec![
                m(2, 5, 2, 3, 0),
                m(2, 3, 2, 2, 0),
                m(2, 3, 1, 3, 0),
                m(1, 3, 2, 1, 0),
                m(1, 3, 1, 2, 0),
                m(1, 3, 0, 3, 0),
                m(0, 3, 1, 1, 0),
                m(0, 3, 0, 2, 0),
                m(0, 1, 0, 1, 0),
            ],
            denominator: vec![
                m(0, 0, 1, 0, 0),
                m(0, 1, 0, 1, 0),
                m(0, 3, 0, 0, 1),
                m(0, 3, 0, 1, 0),
                m(2, 2, 3, 0, 0),
                m(2, 2, 0, 3, 0),
                m(1, 1, 0, 1, 0),
            ],
        },
        // (q t u1 + t) t^2 u1^3
        RationalTerm {
            sign: -1,
            numerator: vec![m(1, 3, 4, 0, 0), m(0, 3, 3, 0, 0)],
            denominator: vec![
                m(2, 2, 3, 0, 0),
                m(0, 2, 1, 0, 0),
                m(0, 3, 0, 0, 1),
                m(0, 1, 0, 1, 0),
                m(1, 1, 0, 1, 0),
                m(0, 0, 1, 0, 0),
                m(0, 1, 1, 0, 0),
            ],
        },
        // u1 u2 t^2
        RationalTerm {
            sign: -1,
            numerator: vec![m(0, 2, 1, 1, 0)],
            denominator: vec![
                m(0, 2, 1, 0, 0),
                m(0, 3, 0, 0, 1),
                m(0, 1, 0, 1, 0),
                m(1, 1, 0, 1, 0),
                m(0, 0, 1, 0, 0),
                m(0, 1, 1, 0, 0),
                m(0, 3, 0, 1, 0),
            ],
        },
        // u1 t^2 u3 (q t^2 u1^2 + t^2 u1 + 1)
        RationalTerm {
            sign: -1,
            numerator: vec![m(1, 4, 3, 0, 1), m(0, 4, 2, 0, 1), m(0, 2, 1, 0, 1)],
            denominator: vec![
                m(0, 0, 1, 0, 0),
                m(1, 1, 0, 1, 0),
                m(0, 1, 0, 1, 0),
                m(0, 3, 0, 0, 1),
                m(2, 2, 3, 0, 0),
                m(1, 1, 0, 0, 1),
                m(0, 1, 1, 0, 0),
            ],
        },
        // (q^2 t^4 u1^2 u2^2 + q^2 t^2 u1^2 u2 + q^2 t^2 u1 u2^2 + q t^2 u1^2
        //  + q t^2 u1 u2 + q t^2 u2^2 + t^2 u1 + t^2 u2 + 1) t u3
        RationalTerm {
            sign: -1,
            numerator: vec![
                m(2, 5, 2, 2, 1),
                m(2, 3, 2, 1, 1),
                m(2, 3, 1, 2, 1),
                m(1, 3, 2, 0, 1),
                m(1, 3, 1, 1, 1),
                m(1, 3, 0, 2, 1),
                m(0, 3, 1, 0, 1),
                m(0, 3, 0, 1, 1),
                m(0, 1, 0, 0, 1),
            ],
            denominator: vec![
                m(0, 0, 1, 0, 0),
                m(1, 1, 0, 1, 0),
                m(0, 1, 0, 1, 0),
                m(0, 3, 0, 0, 1),
                m(2, 2, 3, 0, 0),
                m(2, 2, 0, 3, 0),
                m(1, 1, 0, 0, 1),
            ],
        },
    ]
}

/// Expand one term as a truncated series:
/// `sign * numerator * prod (-geom(m))`.
pub fn expand_term(term: &RationalTerm, bound: u32) -> Result<USeries, GenfunError> {
    let mut numerator = USeries::zero(bound);
    for mono in &term.numerator {
        let mut s = USeries::zero(bound);
        s.add_term(mono.u, QtPoly::monomial(mono.q, mono.t));
        numerator = &numerator + &s;
    }
    let mut acc = numerator;
    let mut sign = term.sign;
    for m in &term.denominator {
        acc = acc.mul(&geom_expand(m, bound)?);
        sign = -sign;
    }
    if sign < 0 {
        let mut neg = USeries::zero(bound);
        for (k, v) in acc.terms() {
            neg.add_term(*k, -v);
        }
        acc = neg;
    }
    Ok(acc)
}

/// The truncated series for `F`: the sum of the seven expanded terms.
pub fn build_f(bound: u32) -> USeries {
    let mut total = USeries::zero(bound);
    for term in f_decomposition() {
        let expanded =
            expand_term(&term, bound).expect("every tabulated denominator carries a u");
        total = &total + &expanded;
    }
    total
}

/// `g_lambda` for `lambda = (3^c 2^b 1^a)` from the series coefficient:
/// `(coeff - tau coeff)/(t - q)` at `u1^a u2^b u3^c`.
pub fn g_via_genfun(a: u32, b: u32, c: u32, bound: u32) -> Result<QtPoly, GenfunError> {
    if a + b + c > bound {
        return Err(GenfunError::OutOfBound(a, b, c, bound));
    }
    let f = build_f(bound);
    g_from_series(&f, a, b, c)
}

/// Same as [`g_via_genfun`] against an already-built series.
pub fn g_from_series(f: &USeries, a: u32, b: u32, c: u32) -> Result<QtPoly, GenfunError> {
    if a + b + c > f.bound() {
        return Err(GenfunError::OutOfBound(a, b, c, f.bound()));
    }
    let coeff = f.coeff(a, b, c);
    Ok((&coeff - coeff.tau_swap()).exact_div(DivisorSpec::TMinusQ)?)
}

/// The two structural facts about the expanded `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FPropertyReport {
    /// every integer coefficient of every series coefficient is >= 0
    pub nonnegative: bool,
    /// every monomial `q^i t^j` anywhere has `j > i` strictly
    pub t_heavy: bool,
    /// number of (u-key, qt-term) pairs scanned
    pub terms_scanned: u64,
}

impl FPropertyReport {
    pub fn all_ok(&self) -> bool {
        self.nonnegative && self.t_heavy
    }
}

/// Scan every truncated coefficient of `F` for nonnegativity and strict
/// t-dominance.
pub fn check_f_properties(bound: u32) -> FPropertyReport {
    let f = build_f(bound);
    let mut report = FPropertyReport {
        nonnegative: true,
        t_heavy: true,
        terms_scanned: 0,
    };
    for (_, poly) in f.terms() {
        for (&(qe, te), c) in poly.terms() {
            report.terms_scanned += 1;
            if c < &BigInt::zero() {
                report.nonnegative = false;
            }
            if te <= qe {
                report.t_heavy = false;
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta_core::g_coefficient;
    use crate::shapes::Partition;
    use proptest::prelude::*;

    #[test]
    fn geom_examples() {
        // t*u2 to bound 2: 1 + t u2 + t^2 u2^2
        let m = UMonomial { q: 0, t: 1, u: [0, 1, 0] };
        let s = geom_expand(&m, 2).unwrap();
        assert_eq!(s.coeff(0, 0, 0), QtPoly::one());
        assert_eq!(s.coeff(0, 1, 0), QtPoly::monomial(0, 1));
        assert_eq!(s.coeff(0, 2, 0), QtPoly::monomial(0, 2));
        // q^2 t^2 u1^3 to bound 2: just 1
        let m = UMonomial { q: 2, t: 2, u: [3, 0, 0] };
        let s = geom_expand(&m, 2).unwrap();
        assert_eq!(s.terms().count(), 1);
        assert_eq!(s.coeff(0, 0, 0), QtPoly::one());
        // no u at all is an error
        let m = UMonomial { q: 1, t: 0, u: [0, 0, 0] };
        assert!(matches!(
            geom_expand(&m, 2),
            Err(GenfunError::InvalidMonomial)
        ));
    }

    /// Exact rational values of the seven terms at
    /// (u1,u2,u3,q,t) = (1/3,1/5,1/7,2,7), computed independently of the
    /// table above. A mismatch means a typo in the term table.
    #[test]
    fn term_table_checksums() {
        let point: [BigRational; 3] = [
            BigRational::new(1.into(), 3.into()),
            BigRational::new(1.into(), 5.into()),
            BigRational::new(1.into(), 7.into()),
        ];
        let q0 = BigRational::from_integer(2.into());
        let t0 = BigRational::from_integer(7.into());
        let expected: [(i64, i64); 7] = [
            (4501875, 11939868928),
            (937125, 3108604928),
            (19319125, 778687104),
            (42875, 5970432),
            (1225, 11940864),
            (22225, 64896),
            (2759875, 2303808),
        ];
        let terms = f_decomposition();
        assert_eq!(terms.len(), 7);
        for (term, (num, den)) in terms.iter().zip(expected) {
            let value = term.eval_rational(&point, &q0, &t0).unwrap();
            assert_eq!(value, BigRational::new(num.into(), den.into()));
        }
    }

    #[test]
    fn constant_coefficient_vanishes() {
        let f = build_f(2);
        assert!(f.coeff(0, 0, 0).is_zero());
    }

    #[test]
    fn f_properties_small() {
        assert!(check_f_properties(0).all_ok());
        let report = check_f_properties(3);
        assert!(report.nonnegative);
        assert!(report.t_heavy);
        assert!(report.terms_scanned > 0);
    }

    #[test]
    fn genfun_matches_algebraic_route() {
        let bound = 3;
        let f = build_f(bound);
        for a in 0..=bound {
            for b in 0..=bound - a {
                for c in 0..=bound - a - b {
                    let got = g_from_series(&f, a, b, c).unwrap();
                    let mut parts: Vec<u32> = Vec::new();
                    parts.extend(std::iter::repeat_n(3, c as usize));
                    parts.extend(std::iter::repeat_n(2, b as usize));
                    parts.extend(std::iter::repeat_n(1, a as usize));
                    let lambda = if parts.is_empty() {
                        Partition::empty()
                    } else {
                        Partition::new(parts)
                    };
                    assert_eq!(
                        got,
                        g_coefficient(&lambda).unwrap(),
                        "(a,b,c) = ({a},{b},{c})"
                    );
                }
            }
        }
    }

    #[test]
    fn out_of_bound_is_an_error() {
        assert!(matches!(
            g_via_genfun(2, 1, 1, 3),
            Err(GenfunError::OutOfBound(2, 1, 1, 3))
        ));
    }

    #[test]
    fn sum_order_does_not_matter() {
        let bound = 2;
        let forward = build_f(bound);
        let mut reversed = USeries::zero(bound);
        for term in f_decomposition().iter().rev() {
            reversed = &reversed + &expand_term(term, bound).unwrap();
        }
        assert_eq!(forward, reversed);
    }

    fn arb_useries(bound: u32) -> impl Strategy<Value = USeries> {
        proptest::collection::vec(
            ((0u32..3, 0u32..3, 0u32..3), (0u32..3, 0u32..3), -5i64..5),
            0..6,
        )
        .prop_map(move |items| {
            let mut s = USeries::zero(bound);
            for ((a, b, c), (qe, te), coeff) in items {
                s.add_term([a, b, c], QtPoly::term(qe, te, coeff));
            }
            s
        })
    }

    proptest! {
        #[test]
        fn useries_mul_commutes(x in arb_useries(4), y in arb_useries(4)) {
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }

        #[test]
        fn useries_mul_associates(
            x in arb_useries(4),
            y in arb_useries(4),
            z in arb_useries(4),
        ) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }
    }
}
