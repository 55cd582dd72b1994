//! Exact sparse polynomial arithmetic in the two variables `q` and `t`
//! over arbitrary-precision integers.
//!
//! Everything downstream is built on three things defined here:
//! - [`QtPoly`]: the universal value type, a canonical sparse polynomial
//!   in `N[q,t]`-shaped storage with `BigInt` coefficients,
//! - the analog constructors [`qt_analog`], [`qt_analog_base`] and
//!   [`qt_range`], where `[n]_{q,t} = (q^n - t^n)/(q - t)` and
//!   `[n -> m] = [n] + [n+1] + ... + [m]`,
//! - [`QtPoly::exact_div`]: exact division by one of the fixed binomial
//!   divisors in [`DivisorSpec`]. A nonzero remainder is an error, and that
//!   error is the failure signal for every divisibility identity checked by
//!   this crate.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

/// A sparse polynomial in `q` and `t` with integer coefficients.
///
/// Canonical form: zero coefficients are never stored, so structural
/// equality of the term maps is semantic equality. Exponents are
/// nonnegative; all quantities in scope are genuine polynomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QtPoly {
    /// (q exponent, t exponent) -> coefficient, never zero.
    terms: BTreeMap<(u32, u32), BigInt>,
}

/// The fixed divisors the pipeline divides by, each of degree 1 in a
/// designated variable with leading coefficient `±1` in that variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorSpec {
    /// t - q
    TMinusQ,
    /// q - t
    QMinusT,
    /// t^2 - q
    T2MinusQ,
    /// q - t^2
    QMinusT2,
    /// q^2 - t
    Q2MinusT,
    /// t - q^2
    TMinusQ2,
    /// q^3 - t
    Q3MinusT,
    /// q - t^3
    QMinusT3,
    /// q + t
    QPlusT,
    /// a nonzero integer constant
    Const(i64),
}

/// Exact division failed: the dividend is not a multiple of the divisor.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial is not divisible by {divisor}")]
pub struct NonDivisible {
    pub divisor: DivisorSpec,
}

/// The base pair of the two-parameter analog `[n]_{x,y}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalogBase {
    /// `[n]_{t^2,q} = sum_s t^{2(n-1-s)} q^s`
    T2Q,
    /// `[n]_{q^2,t} = sum_s q^{2(n-1-s)} t^s`
    Q2T,
}

#[derive(Clone, Copy)]
enum Var {
    Q,
    T,
}

impl fmt::Display for DivisorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisorSpec::TMinusQ => write!(f, "t - q"),
            DivisorSpec::QMinusT => write!(f, "q - t"),
            DivisorSpec::T2MinusQ => write!(f, "t^2 - q"),
            DivisorSpec::QMinusT2 => write!(f, "q - t^2"),
            DivisorSpec::Q2MinusT => write!(f, "q^2 - t"),
            DivisorSpec::TMinusQ2 => write!(f, "t - q^2"),
            DivisorSpec::Q3MinusT => write!(f, "q^3 - t"),
            DivisorSpec::QMinusT3 => write!(f, "q - t^3"),
            DivisorSpec::QPlusT => write!(f, "q + t"),
            DivisorSpec::Const(c) => write!(f, "{c}"),
        }
    }
}

impl DivisorSpec {
    /// Every non-constant divisor, normalized as `flip * (V - c * W^e)`
    /// where `V` is the designated degree-1 variable and `W` the other one.
    fn normalized(self) -> Option<(Var, bool, i64, u32)> {
        match self {
            DivisorSpec::TMinusQ => Some((Var::T, false, 1, 1)),
            DivisorSpec::QMinusT => Some((Var::Q, false, 1, 1)),
            DivisorSpec::T2MinusQ => Some((Var::Q, true, 1, 2)),
            DivisorSpec::QMinusT2 => Some((Var::Q, false, 1, 2)),
            DivisorSpec::Q2MinusT => Some((Var::T, true, 1, 2)),
            DivisorSpec::TMinusQ2 => Some((Var::T, false, 1, 2)),
            DivisorSpec::Q3MinusT => Some((Var::T, true, 1, 3)),
            DivisorSpec::QMinusT3 => Some((Var::Q, false, 1, 3)),
            DivisorSpec::QPlusT => Some((Var::Q, false, -1, 1)),
            DivisorSpec::Const(_) => None,
        }
    }

    /// The divisor as a plain polynomial.
    pub fn to_poly(self) -> QtPoly {
        match self {
            DivisorSpec::TMinusQ => QtPoly::term(0, 1, 1) + QtPoly::term(1, 0, -1),
            DivisorSpec::QMinusT => QtPoly::term(1, 0, 1) + QtPoly::term(0, 1, -1),
            DivisorSpec::T2MinusQ => QtPoly::term(0, 2, 1) + QtPoly::term(1, 0, -1),
            DivisorSpec::QMinusT2 => QtPoly::term(1, 0, 1) + QtPoly::term(0, 2, -1),
            DivisorSpec::Q2MinusT => QtPoly::term(2, 0, 1) + QtPoly::term(0, 1, -1),
            DivisorSpec::TMinusQ2 => QtPoly::term(0, 1, 1) + QtPoly::term(2, 0, -1),
            DivisorSpec::Q3MinusT => QtPoly::term(3, 0, 1) + QtPoly::term(0, 1, -1),
            DivisorSpec::QMinusT3 => QtPoly::term(1, 0, 1) + QtPoly::term(0, 3, -1),
            DivisorSpec::QPlusT => QtPoly::term(1, 0, 1) + QtPoly::term(0, 1, 1),
            DivisorSpec::Const(c) => QtPoly::constant(c),
        }
    }
}

#[derive(Serialize)]
struct TermJson {
    q: u32,
    t: u32,
    c: String,
}

#[derive(Serialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly::default()
    }

    pub fn one() -> Self {
        QtPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QtPoly::term(0, 0, c)
    }

    /// `q^i t^j` with coefficient 1.
    pub fn monomial(q_exp: u32, t_exp: u32) -> Self {
        QtPoly::term(q_exp, t_exp, 1)
    }

    /// `c * q^i t^j`.
    pub fn term(q_exp: u32, t_exp: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((q_exp, t_exp), c);
        }
        QtPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^i t^j` (zero if absent).
    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> BigInt {
        self.terms
            .get(&(q_exp, t_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Iterate terms in (q, t) ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True iff every coefficient is >= 0.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn add_term(&mut self, q_exp: u32, t_exp: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((q_exp, t_exp)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(q_exp, t_exp));
        }
    }

    pub fn scale(&self, k: &BigInt) -> QtPoly {
        if k.is_zero() {
            return QtPoly::zero();
        }
        QtPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn scale_i64(&self, k: i64) -> QtPoly {
        self.scale(&BigInt::from(k))
    }

    /// Multiply by the monomial `q^i t^j`.
    pub fn mul_monomial(&self, q_exp: u32, t_exp: u32) -> QtPoly {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + q_exp, b + t_exp), c.clone()))
                .collect(),
        }
    }

    /// Swap `q` and `t` in every term.
    pub fn tau_swap(&self) -> QtPoly {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// True iff `tau_swap` fixes the polynomial.
    pub fn is_tau_symmetric(&self) -> bool {
        *self == self.tau_swap()
    }

    /// Exact quotient `self / d`; the remainder must vanish.
    ///
    /// The non-constant divisors are degree 1 in a designated variable, so
    /// this is synthetic division treating `self` as univariate in that
    /// variable with polynomial coefficients in the other.
    pub fn exact_div(&self, d: DivisorSpec) -> Result<QtPoly, NonDivisible> {
        if self.is_zero() {
            return Ok(QtPoly::zero());
        }
        let Some((var, flip, root_coeff, root_exp)) = d.normalized() else {
            let DivisorSpec::Const(c) = d else { unreachable!() };
            assert!(c != 0, "division by the zero constant");
            let c = BigInt::from(c);
            let mut out = BTreeMap::new();
            for (&e, coeff) in &self.terms {
                let (quo, rem) = num_integer::Integer::div_rem(coeff, &c);
                if !rem.is_zero() {
                    return Err(NonDivisible { divisor: d });
                }
                out.insert(e, quo);
            }
            return Ok(QtPoly { terms: out });
        };

        // Split into coefficient maps indexed by the exponent of the
        // designated variable: other-exponent -> coefficient.
        let mut by_v: BTreeMap<u32, BTreeMap<u32, BigInt>> = BTreeMap::new();
        for (&(qe, te), c) in &self.terms {
            let (ve, we) = match var {
                Var::Q => (qe, te),
                Var::T => (te, qe),
            };
            by_v.entry(ve).or_default().insert(we, c.clone());
        }
        let deg = *by_v.keys().next_back().expect("nonzero polynomial");
        if deg == 0 {
            return Err(NonDivisible { divisor: d });
        }

        // Horner for division by (V - c*W^e): carry = P_k + c*W^e * carry,
        // descending in k; the final carry is the remainder.
        let root = BigInt::from(root_coeff);
        let mut quotient: BTreeMap<u32, BTreeMap<u32, BigInt>> = BTreeMap::new();
        let mut carry: BTreeMap<u32, BigInt> = BTreeMap::new();
        for k in (0..=deg).rev() {
            let mut next: BTreeMap<u32, BigInt> = carry
                .iter()
                .map(|(&we, c)| (we + root_exp, c * &root))
                .collect();
            if let Some(pk) = by_v.get(&k) {
                for (&we, c) in pk {
                    let entry = next.entry(we).or_insert_with(BigInt::zero);
                    *entry += c;
                    if entry.is_zero() {
                        next.remove(&we);
                    }
                }
            }
            if k > 0 {
                if !next.is_empty() {
                    quotient.insert(k - 1, next.clone());
                }
                carry = next;
            } else {
                carry = next;
            }
        }
        if !carry.is_empty() {
            return Err(NonDivisible { divisor: d });
        }

        let mut terms = BTreeMap::new();
        for (ve, ws) in quotient {
            for (we, c) in ws {
                let key = match var {
                    Var::Q => (ve, we),
                    Var::T => (we, ve),
                };
                let c = if flip { -c } else { c };
                terms.insert(key, c);
            }
        }
        Ok(QtPoly { terms })
    }

    /// Evaluate at exact rational `(q0, t0)`.
    pub fn eval_rational(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (&(qe, te), c) in &self.terms {
            total += BigRational::from(c.clone()) * rat_pow(q0, qe) * rat_pow(t0, te);
        }
        total
    }

    /// Serialize to the fixed JSON schema:
    /// `{"terms":[{"q":i,"t":j,"c":"<decimal>"}]}` sorted by (q, t).
    pub fn to_json(&self) -> serde_json::Value {
        let terms = self
            .terms
            .iter()
            .map(|(&(qe, te), c)| TermJson {
                q: qe,
                t: te,
                c: c.to_string(),
            })
            .collect();
        serde_json::to_value(PolyJson { terms }).expect("serialization cannot fail")
    }
}

/// `base^exp` for exact rationals.
pub fn rat_pow(base: &BigRational, exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut sq = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

/// `[n]_{q,t} = q^{n-1} + q^{n-2} t + ... + t^{n-1}`, with `[0] = 0`.
///
/// Only nonnegative indices exist here. The Laurent convention
/// `[-n] = -[n]/(qt)^n` shows up in derivations but is never
/// materialized; cancellations that would need it are arranged so that
/// every stored value stays a polynomial.
pub fn qt_analog(n: u32) -> QtPoly {
    let mut p = QtPoly::zero();
    let one = BigInt::one();
    for s in 0..n {
        p.add_term(n - 1 - s, s, &one);
    }
    p
}

/// The two-parameter analog `[n]_{x,y} = sum_{s=0}^{n-1} x^{n-1-s} y^s`
/// at `(x,y) = (t^2,q)` or `(q^2,t)`.
pub fn qt_analog_base(n: u32, base: AnalogBase) -> QtPoly {
    let mut p = QtPoly::zero();
    let one = BigInt::one();
    for s in 0..n {
        match base {
            AnalogBase::T2Q => p.add_term(s, 2 * (n - 1 - s), &one),
            AnalogBase::Q2T => p.add_term(2 * (n - 1 - s), s, &one),
        }
    }
    p
}

/// `[lo -> hi] = sum_{i=lo}^{hi} [i]_{q,t}`; empty (zero) when `hi < lo`.
pub fn qt_range(lo: u32, hi: u32) -> QtPoly {
    let mut p = QtPoly::zero();
    let mut i = lo;
    while i <= hi {
        p += qt_analog(i);
        i += 1;
        if i == 0 {
            break;
        }
    }
    p
}

impl fmt::Debug for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QtPoly({self})")
    }
}

impl fmt::Display for QtPoly {
    /// Human-readable form, terms ordered by total degree then t-exponent:
    /// `q^2 + q*t + t^2`, `1 - 2*q*t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&(u32, u32), &BigInt)> = self.terms.iter().collect();
        ordered.sort_by_key(|(&(qe, te), _)| (qe + te, te, qe));
        for (idx, (&(qe, te), c)) in ordered.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (qe == 0 && te == 0) {
                factors.push(abs.to_string());
            }
            match qe {
                0 => {}
                1 => factors.push("q".into()),
                _ => factors.push(format!("q^{qe}")),
            }
            match te {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{te}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<QtPoly> for QtPoly {
            type Output = QtPoly;
            fn $method(self, rhs: QtPoly) -> QtPoly {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&QtPoly> for QtPoly {
            type Output = QtPoly;
            fn $method(self, rhs: &QtPoly) -> QtPoly {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<QtPoly> for &QtPoly {
            type Output = QtPoly;
            fn $method(self, rhs: QtPoly) -> QtPoly {
                self.$method(&rhs)
            }
        }
    };
}

impl std::ops::Add<&QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for (&(qe, te), c) in &rhs.terms {
            out.add_term(qe, te, c);
        }
        out
    }
}
forward_binop!(Add, add);

impl std::ops::Sub<&QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        for (&(qe, te), c) in &rhs.terms {
            out.add_term(qe, te, &-c.clone());
        }
        out
    }
}
forward_binop!(Sub, sub);

impl std::ops::Mul<&QtPoly> for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, &(c1 * c2));
            }
        }
        out
    }
}
forward_binop!(Mul, mul);

impl std::ops::Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        QtPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl std::ops::Neg for QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        -&self
    }
}

impl std::ops::AddAssign<QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: QtPoly) {
        for (&(qe, te), c) in &rhs.terms {
            self.add_term(qe, te, c);
        }
    }
}

impl std::iter::Sum for QtPoly {
    fn sum<I: Iterator<Item = QtPoly>>(iter: I) -> QtPoly {
        let mut total = QtPoly::zero();
        for p in iter {
            total += p;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> QtPoly {
        QtPoly::monomial(1, 0)
    }

    fn t() -> QtPoly {
        QtPoly::monomial(0, 1)
    }

    #[test]
    fn ring_ops_basic() {
        // (q+t)(q-t) = q^2 - t^2
        let prod = (q() + t()) * (q() - t());
        assert_eq!(prod, QtPoly::monomial(2, 0) - QtPoly::monomial(0, 2));
        // p + 0 = p
        let p = QtPoly::term(3, 1, 7) + QtPoly::constant(-2);
        assert_eq!(&p + QtPoly::zero(), p);
        // (q+t)(q^2+qt+t^2) = q^3 + 2q^2 t + 2q t^2 + t^3, expanded by hand
        let prod = (q() + t()) * (QtPoly::monomial(2, 0) + QtPoly::monomial(1, 1) + QtPoly::monomial(0, 2));
        let expected = QtPoly::monomial(3, 0)
            + QtPoly::term(2, 1, 2)
            + QtPoly::term(1, 2, 2)
            + QtPoly::monomial(0, 3);
        assert_eq!(prod, expected);
    }

    #[test]
    fn tau_swap_examples() {
        assert_eq!(QtPoly::monomial(2, 1).tau_swap(), QtPoly::monomial(1, 2));
        let sym = q() + t();
        assert_eq!(sym.tau_swap(), sym);
        let p = QtPoly::monomial(3, 0) + QtPoly::term(1, 2, 2);
        assert_eq!(p.tau_swap(), QtPoly::monomial(0, 3) + QtPoly::term(2, 1, 2));
    }

    #[test]
    fn exact_div_examples() {
        // (t^2 - q^2) / (t - q) = t + q
        let p = QtPoly::monomial(0, 2) - QtPoly::monomial(2, 0);
        assert_eq!(p.exact_div(DivisorSpec::TMinusQ).unwrap(), q() + t());
        // 0 / d = 0 for every divisor
        for d in ALL_DIVISORS {
            assert_eq!(QtPoly::zero().exact_div(d).unwrap(), QtPoly::zero());
        }
        // (t^4 - q^2) / (t^2 - q) = t^2 + q; multiply back to confirm
        let p = QtPoly::monomial(0, 4) - QtPoly::monomial(2, 0);
        let u = p.exact_div(DivisorSpec::T2MinusQ).unwrap();
        assert_eq!(u, QtPoly::monomial(0, 2) + q());
        assert_eq!(&u * DivisorSpec::T2MinusQ.to_poly(), p);
        // q + t is not divisible by t - q
        let err = (q() + t()).exact_div(DivisorSpec::TMinusQ).unwrap_err();
        assert_eq!(err.divisor, DivisorSpec::TMinusQ);
    }

    #[test]
    fn exact_div_constant() {
        let p = QtPoly::term(1, 1, 6) + QtPoly::constant(-4);
        let u = p.exact_div(DivisorSpec::Const(2)).unwrap();
        assert_eq!(u, QtPoly::term(1, 1, 3) + QtPoly::constant(-2));
        assert!(p.exact_div(DivisorSpec::Const(4)).is_err());
    }

    #[test]
    fn analog_examples() {
        assert_eq!(qt_analog(0), QtPoly::zero());
        assert_eq!(qt_analog(1), QtPoly::one());
        assert_eq!(qt_analog(2), q() + t());
        let expected = QtPoly::monomial(3, 0)
            + QtPoly::monomial(2, 1)
            + QtPoly::monomial(1, 2)
            + QtPoly::monomial(0, 3);
        assert_eq!(qt_analog(4), expected);
    }

    #[test]
    fn analog_base_examples() {
        assert_eq!(qt_analog_base(1, AnalogBase::T2Q), QtPoly::one());
        assert_eq!(
            qt_analog_base(2, AnalogBase::T2Q),
            QtPoly::monomial(0, 2) + q()
        );
        assert_eq!(qt_analog_base(0, AnalogBase::Q2T), QtPoly::zero());
    }

    #[test]
    fn range_examples() {
        assert_eq!(qt_range(1, 0), QtPoly::zero());
        assert_eq!(qt_range(3, 3), qt_analog(3));
        assert_eq!(qt_range(2, 3), qt_analog(2) + qt_analog(3));
    }

    #[test]
    fn eval_examples() {
        let one = BigRational::one();
        assert_eq!(
            (q() + t()).eval_rational(&one, &one),
            BigRational::from_integer(2.into())
        );
        assert_eq!(
            qt_analog(3).eval_rational(&one, &one),
            BigRational::from_integer(3.into())
        );
        let half = BigRational::new(1.into(), 2.into());
        let three = BigRational::from_integer(3.into());
        assert_eq!(
            QtPoly::monomial(2, 1).eval_rational(&half, &three),
            BigRational::new(3.into(), 4.into())
        );
    }

    #[test]
    fn values_cross_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<QtPoly>();
        assert_send_sync::<DivisorSpec>();
    }

    #[test]
    fn json_shape() {
        // keys come out alphabetically sorted, terms by (q, t) ascending
        let p = QtPoly::term(0, 2, 1) + QtPoly::term(1, 0, -12);
        assert_eq!(
            serde_json::to_string(&p.to_json()).unwrap(),
            r#"{"terms":[{"c":"1","q":0,"t":2},{"c":"-12","q":1,"t":0}]}"#
        );
    }

    const ALL_DIVISORS: [DivisorSpec; 10] = [
        DivisorSpec::TMinusQ,
        DivisorSpec::QMinusT,
        DivisorSpec::T2MinusQ,
        DivisorSpec::QMinusT2,
        DivisorSpec::Q2MinusT,
        DivisorSpec::TMinusQ2,
        DivisorSpec::Q3MinusT,
        DivisorSpec::QMinusT3,
        DivisorSpec::QPlusT,
        DivisorSpec::Const(-3),
    ];

    fn arb_poly() -> impl Strategy<Value = QtPoly> {
        proptest::collection::vec(((0u32..6, 0u32..6), -20i64..20), 0..8).prop_map(|terms| {
            let mut p = QtPoly::zero();
            for ((qe, te), c) in terms {
                p.add_term(qe, te, &BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn tau_is_involution(p in arb_poly()) {
            prop_assert_eq!(p.tau_swap().tau_swap(), p);
        }

        #[test]
        fn tau_is_ring_homomorphism(p in arb_poly(), r in arb_poly()) {
            prop_assert_eq!((&p * &r).tau_swap(), p.tau_swap() * r.tau_swap());
            prop_assert_eq!((&p + &r).tau_swap(), p.tau_swap() + r.tau_swap());
        }

        #[test]
        fn exact_div_round_trip(p in arb_poly(), di in 0usize..10) {
            let d = ALL_DIVISORS[di];
            let prod = &p * d.to_poly();
            prop_assert_eq!(prod.exact_div(d).unwrap(), p);
        }

        #[test]
        fn analog_is_tau_symmetric(n in 0u32..12) {
            prop_assert_eq!(qt_analog(n).tau_swap(), qt_analog(n));
        }

        #[test]
        fn analog_counts_at_one_one(n in 0u32..12) {
            let one = BigRational::one();
            prop_assert_eq!(
                qt_analog(n).eval_rational(&one, &one),
                BigRational::from_integer(n.into())
            );
        }

        #[test]
        fn analog_base_is_doubled_analog(n in 0u32..12) {
            // [n]_{t^2,q} equals [n]_{q,t} with every t-exponent doubled, termwise.
            let base = qt_analog_base(n, AnalogBase::T2Q);
            let mut doubled = QtPoly::zero();
            for (&(qe, te), c) in qt_analog(n).terms() {
                doubled.add_term(qe, 2 * te, c);
            }
            prop_assert_eq!(base, doubled);
        }
    }
}
