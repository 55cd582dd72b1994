//! Partitions, semi-standard Young tableaux over a bounded 0-based
//! alphabet, Schur specialization at monomial alphabets, and the
//! column-block classification of three-row fillings.
//!
//! Diagrams are in French orientation throughout: row 1 is the bottom
//! (longest) row, entries weakly increase along rows and strictly
//! increase up columns.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::qt_algebra::QtPoly;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParsePartitionError {
    #[error("invalid part `{0}`: parts are positive integers")]
    InvalidPart(String),
    #[error("parts must be weakly decreasing")]
    NotDecreasing,
}

impl Partition {
    /// Panics if the parts are not weakly decreasing positive integers.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let parts = parts.into();
        assert!(
            parts.iter().all(|&p| p > 0),
            "partition parts must be positive"
        );
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The size `n` with `lambda |- n`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part at `i` (0-based), 0 beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The conjugate partition: column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `lambda = (3^a 2^b 1^c)` written as multiplicities, if all parts <= 3.
    pub fn as_three_two_one(&self) -> Option<(u32, u32, u32)> {
        if self.first_part() > 3 {
            return None;
        }
        let count = |v| self.parts.iter().filter(|&&p| p == v).count() as u32;
        Some((count(3), count(2), count(1)))
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = Vec::new();
        fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            let hi = remaining.min(max);
            for p in (1..=hi).rev() {
                current.push(p);
                rec(remaining - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n.max(1), &mut current, &mut out);
        out
    }
}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    /// CLI syntax: comma-separated weakly decreasing positive integers,
    /// e.g. `3,2,2,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let p: u32 = piece
                .parse()
                .ok()
                .filter(|&p| p > 0)
                .ok_or_else(|| ParsePartitionError::InvalidPart(piece.to_string()))?;
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(ParsePartitionError::NotDecreasing);
        }
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A semi-standard Young tableau in French orientation with entries
/// `0..=max_entry` for some bound fixed at enumeration time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ssyt {
    shape: Partition,
    /// rows[0] is the bottom row; rows[r].len() == shape.part(r).
    rows: Vec<Vec<u8>>,
}

impl Ssyt {
    /// Panics unless `rows` is a valid filling of `shape`.
    pub fn new(shape: Partition, rows: Vec<Vec<u8>>) -> Self {
        assert_eq!(rows.len(), shape.num_parts(), "row count mismatch");
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len() as u32, shape.part(r), "row {r} length mismatch");
            assert!(
                row.windows(2).all(|w| w[0] <= w[1]),
                "row {r} not weakly increasing"
            );
            if r > 0 {
                assert!(
                    row.iter().enumerate().all(|(c, &e)| e > rows[r - 1][c]),
                    "column not strictly increasing at row {r}"
                );
            }
        }
        Ssyt { shape, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.rows[row][col]
    }

    /// Number of cells holding `e`.
    pub fn count_entry(&self, e: u8) -> u32 {
        self.rows
            .iter()
            .map(|row| row.iter().filter(|&&x| x == e).count() as u32)
            .sum()
    }

    /// Height of column `col` (number of rows reaching it).
    pub fn column_height(&self, col: usize) -> usize {
        self.rows.iter().filter(|row| row.len() > col).count()
    }
}

impl fmt::Debug for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // top row first, the way diagrams are drawn
        for row in self.rows.iter().rev() {
            writeln!(f)?;
            for e in row {
                write!(f, "{e} ")?;
            }
        }
        Ok(())
    }
}

/// All SSYT of `shape` with entries in `{0,..,max_entry}`, each exactly
/// once, in lexicographic order of the row-major entry sequence
/// (bottom row first). Empty when the shape has more than
/// `max_entry + 1` rows.
pub fn enumerate_ssyt(shape: &Partition, max_entry: u8) -> Vec<Ssyt> {
    if shape.num_parts() > max_entry as usize + 1 {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> = (0..shape.num_parts())
        .flat_map(|r| (0..shape.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u8>> = shape
        .parts()
        .iter()
        .map(|&len| vec![0u8; len as usize])
        .collect();
    let mut out = Vec::new();
    fill_cell(shape, max_entry, &cells, &mut grid, 0, &mut out);
    out
}

fn fill_cell(
    shape: &Partition,
    max_entry: u8,
    cells: &[(usize, usize)],
    grid: &mut Vec<Vec<u8>>,
    idx: usize,
    out: &mut Vec<Ssyt>,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        out.push(Ssyt {
            shape: shape.clone(),
            rows: grid.clone(),
        });
        return;
    };
    let mut lo = if c > 0 { grid[r][c - 1] as u16 } else { 0 };
    if r > 0 {
        lo = lo.max(grid[r - 1][c] as u16 + 1);
    }
    for v in lo..=max_entry as u16 {
        grid[r][c] = v as u8;
        fill_cell(shape, max_entry, cells, grid, idx + 1, out);
    }
}

/// An alphabet of monic monomials, the argument of a plethystic bracket
/// such as `s_lambda[1 + t + t^2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<(u32, u32)>,
}

impl Alphabet {
    /// Letters given as (q exponent, t exponent) pairs.
    pub fn from_exponents(letters: &[(u32, u32)]) -> Self {
        Alphabet {
            letters: letters.to_vec(),
        }
    }

    /// Panics unless every letter is a single term with coefficient 1.
    pub fn from_monomials(letters: &[QtPoly]) -> Self {
        let letters = letters
            .iter()
            .map(|p| {
                let mut it = p.terms();
                let (&(qe, te), c) = it.next().expect("letter must be a monic monomial");
                assert!(
                    it.next().is_none() && c.is_one(),
                    "letter must be a monic monomial"
                );
                (qe, te)
            })
            .collect();
        Alphabet { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[(u32, u32)] {
        &self.letters
    }

    pub fn letter_polys(&self) -> Vec<QtPoly> {
        self.letters
            .iter()
            .map(|&(qe, te)| QtPoly::monomial(qe, te))
            .collect()
    }
}

/// `s_lambda[a_0 + ... + a_{N-1}]`: the sum over SSYT of shape `lambda`
/// with entries `0..N` of the product `prod_e a_e^{count of e}`.
/// Zero when `lambda` has more rows than the alphabet has letters.
pub fn schur_eval(lambda: &Partition, alphabet: &Alphabet) -> QtPoly {
    let n = alphabet.len();
    if lambda.num_parts() > n {
        return QtPoly::zero();
    }
    let one = BigInt::one();
    let mut total = QtPoly::zero();
    for tab in enumerate_ssyt(lambda, n.saturating_sub(1) as u8) {
        let mut qe = 0u32;
        let mut te = 0u32;
        for row in tab.rows() {
            for &e in row {
                let (lq, lt) = alphabet.letters[e as usize];
                qe += lq;
                te += lt;
            }
        }
        total.add_term(qe, te, &one);
    }
    total
}

/// The column-block decomposition of a three-row filling over `{0,1,2}`:
/// `a1` full height-3 columns, `k1` height-2 columns over a 0, then either
/// `a2` height-2 columns over a 1 or `a0` trailing height-1 zeros, and
/// `k2` nonzero height-1 cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockSignature {
    pub a1: u32,
    pub k1: u32,
    pub middle: MiddleBlock,
    pub k2: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MiddleBlock {
    /// height-2 columns with bottom entry 1 (no height-1 zeros exist)
    A2(u32),
    /// height-1 cells filled 0 (no 1-over-2 columns exist)
    A0(u32),
}

/// Classify a filling over `{0,1,2}` with at most 3 rows into its block
/// signature. Panics on taller shapes or larger entries.
pub fn classify_blocks(tab: &Ssyt) -> BlockSignature {
    assert!(tab.num_rows() <= 3, "at most 3 rows");
    assert!(
        tab.rows().iter().all(|row| row.iter().all(|&e| e <= 2)),
        "entries must lie in {{0,1,2}}"
    );
    let shape = tab.shape();
    let a1 = shape.part(2);
    let h2_end = shape.part(1);
    let mut k1 = 0u32;
    let mut a2 = 0u32;
    for col in a1..h2_end {
        match tab.entry(0, col as usize) {
            0 => k1 += 1,
            _ => a2 += 1,
        }
    }
    let mut a0 = 0u32;
    let mut k2 = 0u32;
    for col in h2_end..shape.part(0) {
        match tab.entry(0, col as usize) {
            0 => a0 += 1,
            _ => k2 += 1,
        }
    }
    // a2 and a0 cannot both be nonzero: a 1-bottomed column followed by a
    // height-1 zero would break row 1.
    debug_assert!(a2 == 0 || a0 == 0);
    let middle = if a2 > 0 || a0 == 0 {
        MiddleBlock::A2(a2)
    } else {
        MiddleBlock::A0(a0)
    };
    BlockSignature { a1, k1, middle, k2 }
}
