//! Direct computation of `g_lambda` by column blocks.
//!
//! A three-row filling splits into height-3 columns, height-2 columns
//! over 0 or over 1, and height-1 cells; a filling with `omega_1` 1's and
//! `omega_2` 2's weighs
//!
//! ```text
//! w(omega_1, omega_2) = ( t^{omega_1} [omega_2]_{t^2,q} - q^{omega_1} [omega_2]_{q^2,t} ) / (t - q).
//! ```
//!
//! Summing `w` over a block family gives `g_lambda[a, k1, k2]`, computed
//! here four ways: the defining double sum ([`g_block_bruteforce`], the
//! oracle), the closed form for `g[0,0,k]`, the `(qt)^a` shift formula for
//! `g[a,0,k]`, and the `k1`-fold reduction; [`g_via_recursion`] assembles
//! `g_lambda` for `lambda = (3^a 2^b 1^c)` from these blocks.
//!
//! The shift formula's exponents `[k+3i-2 -> 2k+3i-2]` are pinned by
//! `g[1,0,0] = [1]` and `g[1,0,1] = [2]+[3]`; the off-by-two variant
//! `[k+3i -> 2k+3i]` fails both, so the brute-force agreement test is
//! what guards this formula.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::delta_core::g_coefficient;
use crate::qt_algebra::{
    qt_analog_base, qt_range, rat_pow, AnalogBase, DivisorSpec, NonDivisible, QtPoly,
};
use crate::shapes::{classify_blocks, enumerate_ssyt, MiddleBlock, Partition};

/// `lambda = (3^a, 2^b, 1^c)`, the only shapes with nonzero `g_lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThreePartShape {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl ThreePartShape {
    pub fn to_partition(self) -> Partition {
        let mut parts = Vec::new();
        parts.extend(std::iter::repeat_n(3, self.a as usize));
        parts.extend(std::iter::repeat_n(2, self.b as usize));
        parts.extend(std::iter::repeat_n(1, self.c as usize));
        if parts.is_empty() {
            Partition::empty()
        } else {
            Partition::new(parts)
        }
    }

    pub fn size(self) -> u32 {
        3 * self.a + 2 * self.b + self.c
    }

    /// Every `(a, b, c)` with `3a + 2b + c = n`.
    pub fn all_of(n: u32) -> Vec<ThreePartShape> {
        let mut out = Vec::new();
        for a in 0..=n / 3 {
            for b in 0..=(n - 3 * a) / 2 {
                out.push(ThreePartShape {
                    a,
                    b,
                    c: n - 3 * a - 2 * b,
                });
            }
        }
        out
    }
}

/// Arguments of the block sum `g_lambda[a, k1, k2]`, symmetric in
/// `(k1, k2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockArgs {
    pub a: u32,
    pub k1: u32,
    pub k2: u32,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecializationError {
    #[error("sample point {0} is invalid: q0 must avoid {{0, 1, -1}}")]
    InvalidSample(BigRational),
}

/// `w(omega_1, omega_2)`; zero whenever `omega_2 = 0`.
pub fn w_weight(omega1: u32, omega2: u32) -> Result<QtPoly, NonDivisible> {
    let lhs = qt_analog_base(omega2, AnalogBase::T2Q).mul_monomial(0, omega1);
    let rhs = qt_analog_base(omega2, AnalogBase::Q2T).mul_monomial(omega1, 0);
    (lhs - rhs).exact_div(DivisorSpec::TMinusQ)
}

/// The defining double sum
/// `sum_{j=0}^{k1} sum_{i=0}^{k2} w(a+i+j, a+k1+k2-i-j)` — the oracle
/// against which every closed form below is checked.
pub fn g_block_bruteforce(args: BlockArgs) -> QtPoly {
    let BlockArgs { a, k1, k2 } = args;
    let mut total = QtPoly::zero();
    for j in 0..=k1 {
        for i in 0..=k2 {
            total += w_weight(a + i + j, a + k1 + k2 - i - j)
                .expect("w is always an exact quotient");
        }
    }
    total
}

/// Closed form
/// `g[0,0,k] = sum_i (qt)^i [ k - i - floor((i+1)/2) -> 2k - 2 - 3i ]`
/// with the sum running to `floor((2k-2)/3)`, one less when
/// `k = 1 (mod 3)`; zero for `k <= 1`.
pub fn g_00k_closed(k: u32) -> QtPoly {
    if k <= 1 {
        return QtPoly::zero();
    }
    let mut upper = (2 * k - 2) / 3;
    if k % 3 == 1 {
        upper -= 1;
    }
    let mut total = QtPoly::zero();
    for i in 0..=upper {
        let lo = k - i - i.div_ceil(2);
        let hi = 2 * k - 2 - 3 * i;
        total += qt_range(lo, hi).mul_monomial(i, i);
    }
    total
}

/// `g[a,0,k] = (qt)^a g[0,0,k] + sum_{i=1}^{a} (qt)^{a-i} [k+3i-2 -> 2k+3i-2]`.
pub fn g_a0k_closed(a: u32, k: u32) -> QtPoly {
    let mut total = g_00k_closed(k).mul_monomial(a, a);
    for i in 1..=a {
        total += qt_range(k + 3 * i - 2, 2 * k + 3 * i - 2).mul_monomial(a - i, a - i);
    }
    total
}

/// `g[a,k1,k2] = sum_{i=0}^{k1} g[a+i, 0, k1+k2-2i]` after reordering so
/// `k1 <= k2`.
pub fn g_block(args: BlockArgs) -> QtPoly {
    let BlockArgs { a, k1, k2 } = args;
    let (k1, k2) = if k1 <= k2 { (k1, k2) } else { (k2, k1) };
    let mut total = QtPoly::zero();
    for i in 0..=k1 {
        total += g_a0k_closed(a + i, k1 + k2 - 2 * i);
    }
    total
}

/// Assemble `g_lambda` for `lambda = (3^a 2^b 1^c)`:
/// `sum_{i=0}^{b} g[a+i, b-i, c] + sum_{i=1}^{c} g[a, b, c-i]`.
pub fn g_via_recursion(shape: ThreePartShape) -> QtPoly {
    let ThreePartShape { a, b, c } = shape;
    let mut total = QtPoly::zero();
    for i in 0..=b {
        total += g_block(BlockArgs {
            a: a + i,
            k1: b - i,
            k2: c,
        });
    }
    for i in 1..=c {
        total += g_block(BlockArgs {
            a,
            k1: b,
            k2: c - i,
        });
    }
    total
}

/// The multiset of block signatures over all fillings of `lambda'`
/// matches the index sets summed by the recursion: `(a, b-i, A2(i), c)`
/// with multiplicity `(b-i+1)(c+1)` and `(a, b, A0(i), c-i)` with
/// multiplicity `(b+1)(c-i+1)`.
pub fn block_completeness(shape: ThreePartShape) -> bool {
    let ThreePartShape { a, b, c } = shape;
    let conj = shape.to_partition().conjugate();
    let mut observed: std::collections::BTreeMap<(u32, u32, i64, u32), u64> =
        std::collections::BTreeMap::new();
    for tab in enumerate_ssyt(&conj, 2) {
        let sig = classify_blocks(&tab);
        let middle = match sig.middle {
            MiddleBlock::A2(x) => x as i64,
            MiddleBlock::A0(x) => -(x as i64),
        };
        *observed
            .entry((sig.a1, sig.k1, middle, sig.k2))
            .or_insert(0) += 1;
    }
    let mut expected: std::collections::BTreeMap<(u32, u32, i64, u32), u64> =
        std::collections::BTreeMap::new();
    for i in 0..=b {
        expected.insert(
            (a, b - i, i as i64, c),
            u64::from(b - i + 1) * u64::from(c + 1),
        );
    }
    for i in 1..=c {
        expected.insert(
            (a, b, -(i as i64), c - i),
            u64::from(b + 1) * u64::from(c - i + 1),
        );
    }
    observed == expected
}

/// `g_{(1^n)}(1,1) = 2 binom(n+2, 4)`.
pub fn check_qt1(n: u32) -> Result<bool, NonDivisible> {
    assert!(n >= 2);
    let lambda = Partition::new(vec![1; n as usize]);
    let g = g_coefficient(&lambda)?;
    let one = BigRational::one();
    let expected = BigInt::from(2) * num_integer::binomial(BigInt::from(n + 2), BigInt::from(4));
    Ok(g.eval_rational(&one, &one) == BigRational::from_integer(expected))
}

/// Gaussian binomial `[n choose k]_q` at an exact rational point.
fn q_binomial_at(n: u32, k: u32, q0: &BigRational) -> BigRational {
    let mut value = BigRational::one();
    for i in 1..=k {
        let num = BigRational::one() - rat_pow(q0, n - k + i);
        let den = BigRational::one() - rat_pow(q0, i);
        value *= num / den;
    }
    value
}

/// The rank specialization at `t = 1/q`:
/// `g_{(1^n)}(q0, 1/q0) = q0^{1-2(n-1)} / [3]_{q0} * [n choose 2]_{q0} [n+2 choose 2]_{q0}`
/// for every sample `q0` outside `{0, 1, -1}`.
pub fn check_rank(n: u32, samples: &[BigRational]) -> Result<bool, SpecializationError> {
    assert!(n >= 2);
    let lambda = Partition::new(vec![1; n as usize]);
    let g = g_coefficient(&lambda).expect("g route is exact");
    for q0 in samples {
        if q0.is_zero() || q0.abs().is_one() {
            return Err(SpecializationError::InvalidSample(q0.clone()));
        }
        let lhs = g.eval_rational(q0, &q0.recip());
        // q0^(1 - 2(n-1)) with a negative exponent for n >= 2
        let power = rat_pow(q0, 2 * n - 3).recip();
        let three_analog = BigRational::one() + q0 + q0 * q0;
        let rhs = power / three_analog
            * q_binomial_at(n, 2, q0)
            * q_binomial_at(n + 2, 2, q0);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `g[0,0,n](1,1) = 2 binom(n+1, 3)` — the counting consequence of the
/// closed form.
pub fn check_00n_count(n: u32) -> bool {
    let one = BigRational::one();
    let expected = BigInt::from(2) * num_integer::binomial(BigInt::from(n + 1), BigInt::from(3));
    g_00k_closed(n).eval_rational(&one, &one) == BigRational::from_integer(expected)
}
