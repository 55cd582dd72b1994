//! Enriched tableaux: SSYT over `{0,1,2}` whose 2's carry decorations.
//!
//! Reading the 2's left to right by column, an enriched tableau has some
//! undecorated 2's (weight `q`), then some barred 2's (weight `t^2`), then
//! a single hatted 2 (weight 1); 0's weigh 1 and 1's weigh `t`. Summing
//! the weights over all enriched tableaux of a shape reproduces the
//! auxiliary polynomial `F` of [`crate::delta_core`], and the *leftover*
//! tableaux — those not hit by the weight-swapping injection — carry the
//! positive q,t-analog expansion of `g_lambda`:
//!
//! ```text
//! g_lambda = sum over leftovers of (qt)^{kappa_2} [kappa_1 + 2 kappa_bar - kappa_2]_{q,t}
//! ```
//!
//! The count identities (per weight class: q-heavy count <= t-heavy count,
//! and the difference equals the leftover count) are exact and are the
//! checks that matter; the explicit map [`injection_case_maps`] is a
//! best-effort reconstruction of the two freeze/exchange cases and may
//! return [`MapUndefined`] without invalidating anything.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::qt_algebra::{qt_analog, DivisorSpec, NonDivisible, QtPoly};
use crate::shapes::{enumerate_ssyt, Partition, Ssyt};

/// Decoration of a single 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decoration {
    Plain,
    Barred,
    Hatted,
}

/// An SSYT over `{0,1,2}` with decorated 2's in canonical reading order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnrichedTableau {
    base: Ssyt,
    num_undecorated: u32,
    num_barred: u32,
}

/// The weight monomial `t^{t_exp} q^{q_exp}` of an enriched tableau,
/// with `t_exp = kappa_1 + 2 kappa_bar` and `q_exp` the undecorated count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightClass {
    pub t_exp: u32,
    pub q_exp: u32,
}

/// The best-effort injection could not produce a valid image.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapUndefined {
    #[error("input is not in weight class (t^{j}, q^{i}) with i > j")]
    WrongInputClass { i: u32, j: u32 },
    #[error("case 2 needs {needed} two-over-zero columns but only {available} exist")]
    TooFewTwosOverZeros { needed: u32, available: u32 },
    #[error("rearranged filling is not a valid tableau")]
    InvalidImage,
    #[error("image landed in class (t^{got_t}, q^{got_q}), wanted (t^{want_t}, q^{want_q})")]
    WrongImageClass {
        want_t: u32,
        want_q: u32,
        got_t: u32,
        got_q: u32,
    },
}

impl EnrichedTableau {
    /// Panics unless the decoration counts are consistent with the number
    /// of 2's in the base: `undecorated + barred + 1 = #2's` when 2's
    /// exist, both zero otherwise.
    pub fn new(base: Ssyt, num_undecorated: u32, num_barred: u32) -> Self {
        let total = base.count_entry(2);
        if total == 0 {
            assert!(num_undecorated == 0 && num_barred == 0, "no 2's to decorate");
        } else {
            assert!(
                num_undecorated + num_barred + 1 == total,
                "decorations must cover all 2's with exactly one hat"
            );
        }
        EnrichedTableau {
            base,
            num_undecorated,
            num_barred,
        }
    }

    pub fn base(&self) -> &Ssyt {
        &self.base
    }

    pub fn num_undecorated(&self) -> u32 {
        self.num_undecorated
    }

    pub fn num_barred(&self) -> u32 {
        self.num_barred
    }

    /// The 2's in reading order (by column, left to right) with their
    /// decorations. Column-strictness over `{0,1,2}` allows at most one 2
    /// per column, so the order needs no tie-break; asserted here.
    pub fn decorated_twos(&self) -> Vec<(usize, usize, Decoration)> {
        let mut cells: Vec<(usize, usize)> = Vec::new();
        for (r, row) in self.base.rows().iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == 2 {
                    cells.push((r, c));
                }
            }
        }
        cells.sort_by_key(|&(_, c)| c);
        assert!(
            cells.windows(2).all(|w| w[0].1 != w[1].1),
            "two 2's in one column"
        );
        cells
            .into_iter()
            .enumerate()
            .map(|(idx, (r, c))| {
                let dec = if (idx as u32) < self.num_undecorated {
                    Decoration::Plain
                } else if (idx as u32) < self.num_undecorated + self.num_barred {
                    Decoration::Barred
                } else {
                    Decoration::Hatted
                };
                (r, c, dec)
            })
            .collect()
    }

    pub fn weight_class(&self) -> WeightClass {
        WeightClass {
            t_exp: self.base.count_entry(1) + 2 * self.num_barred,
            q_exp: self.num_undecorated,
        }
    }

    /// Whether the base holds any 2 (and hence the decoration a hat).
    /// A hatless tableau is enumerated for completeness but carries the
    /// empty analog `[0] = 0`, so it contributes nothing to `F` or to
    /// any of the weight sums below.
    pub fn has_hat(&self) -> bool {
        self.base.count_entry(2) > 0
    }

    /// `kappa_1 + 2 kappa_bar - kappa_2` as a signed quantity.
    pub fn analog_length(&self) -> i64 {
        let wc = self.weight_class();
        wc.t_exp as i64 - wc.q_exp as i64
    }

    /// Row index (0-based, bottom = 0) of the hatted 2, if any 2 exists.
    pub fn hat_row(&self) -> Option<usize> {
        self.decorated_twos()
            .into_iter()
            .find(|&(_, _, d)| d == Decoration::Hatted)
            .map(|(r, _, _)| r)
    }

    fn plain_twos_in_bottom_row(&self) -> u32 {
        self.decorated_twos()
            .iter()
            .filter(|&&(r, _, d)| r == 0 && d == Decoration::Plain)
            .count() as u32
    }

    fn ones_atop_height2_columns(&self) -> u32 {
        let rows = self.base.rows();
        if rows.len() < 2 {
            return 0;
        }
        (0..rows[1].len())
            .filter(|&c| self.base.column_height(c) == 2 && rows[1][c] == 1)
            .count() as u32
    }

    /// The three leftover conditions. A leftover additionally needs
    /// `d = kappa_1 + 2 kappa_bar - kappa_2 >= 1`, otherwise its analog
    /// weight would vanish or be undefined.
    pub fn is_leftover(&self) -> bool {
        let d = self.analog_length();
        if d < 1 {
            return false;
        }
        let d = d as u32;
        let twos = self.decorated_twos();
        let third_row_mark = twos
            .iter()
            .any(|&(r, _, dec)| r == 2 && dec != Decoration::Plain);
        if third_row_mark {
            return true;
        }
        let Some(hat_row) = twos
            .iter()
            .find(|&&(_, _, dec)| dec == Decoration::Hatted)
            .map(|&(r, _, _)| r)
        else {
            return false;
        };
        let ones_on_top = self.ones_atop_height2_columns();
        match hat_row {
            1 => ones_on_top < d,
            0 => {
                self.plain_twos_in_bottom_row() < 2 * self.num_barred && ones_on_top < d
            }
            _ => false,
        }
    }

    /// The analog weight `(qt)^{kappa_2} [d]_{q,t}` of a leftover.
    pub fn analog_weight(&self) -> QtPoly {
        let wc = self.weight_class();
        let d = self.analog_length();
        assert!(d >= 1, "analog weight only defined for d >= 1");
        qt_analog(d as u32).mul_monomial(wc.q_exp, wc.q_exp)
    }
}

/// Every enriched tableau of the shape: each base SSYT over `{0,1,2}`
/// paired with every split of its 2's into (undecorated, barred, hat).
pub fn enumerate_enriched(shape: &Partition) -> Vec<EnrichedTableau> {
    let mut out = Vec::new();
    for base in enumerate_ssyt(shape, 2) {
        let total = base.count_entry(2);
        if total == 0 {
            out.push(EnrichedTableau::new(base, 0, 0));
        } else {
            for undecorated in 0..total {
                out.push(EnrichedTableau::new(
                    base.clone(),
                    undecorated,
                    total - 1 - undecorated,
                ));
            }
        }
    }
    out
}

/// Tally of enriched tableaux by weight class.
pub fn weight_counts(shape: &Partition) -> BTreeMap<WeightClass, u64> {
    let mut counts = BTreeMap::new();
    for t in enumerate_enriched(shape) {
        *counts.entry(t.weight_class()).or_insert(0) += 1;
    }
    counts
}

/// `g_lambda` summed over all enriched tableaux of shape `lambda'`:
/// a hat-carrying tableau of class `(i, j)` contributes
/// `(t^i q^j - t^j q^i)/(t-q)`, which vanishes on the diagonal; hatless
/// tableaux weigh zero.
pub fn g_via_all_enriched(lambda: &Partition) -> Result<QtPoly, NonDivisible> {
    let shape = lambda.conjugate();
    let mut total = QtPoly::zero();
    for t in enumerate_enriched(&shape) {
        if !t.has_hat() {
            continue;
        }
        let wc = t.weight_class();
        let diff = QtPoly::monomial(wc.q_exp, wc.t_exp) - QtPoly::monomial(wc.t_exp, wc.q_exp);
        total += diff.exact_div(DivisorSpec::TMinusQ)?;
    }
    Ok(total)
}

/// `g_lambda` summed over leftover tableaux only, by the analog weight.
pub fn g_via_leftovers(lambda: &Partition) -> QtPoly {
    let shape = lambda.conjugate();
    enumerate_enriched(&shape)
        .into_iter()
        .filter(EnrichedTableau::is_leftover)
        .map(|t| t.analog_weight())
        .sum()
}

/// Per-class tally: total enriched tableaux and leftovers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassTally {
    pub count: u64,
    pub leftover: u64,
}

/// The count data behind the injection argument for one shape.
#[derive(Clone, Debug, Default)]
pub struct InjectionAccounting {
    pub classes: BTreeMap<WeightClass, ClassTally>,
}

impl InjectionAccounting {
    fn tally(&self, t_exp: u32, q_exp: u32) -> ClassTally {
        self.classes
            .get(&WeightClass { t_exp, q_exp })
            .copied()
            .unwrap_or_default()
    }

    /// For every `i > j`: the q-heavy class `(j, i)` is at most as large
    /// as the t-heavy class `(i, j)`.
    pub fn monotone_ok(&self) -> bool {
        self.class_pairs()
            .into_iter()
            .all(|(i, j)| self.tally(j, i).count <= self.tally(i, j).count)
    }

    /// For every `i > j`: count(i,j) - count(j,i) equals the number of
    /// leftovers in class `(i, j)` — the exact accounting identity.
    pub fn exact_ok(&self) -> bool {
        self.class_pairs().into_iter().all(|(i, j)| {
            let heavy = self.tally(i, j);
            let light = self.tally(j, i);
            heavy.count >= light.count && heavy.count - light.count == heavy.leftover
        })
    }

    /// No leftover sits in a class with `t_exp <= q_exp`.
    pub fn leftovers_are_t_heavy(&self) -> bool {
        self.classes
            .iter()
            .all(|(wc, tally)| tally.leftover == 0 || wc.t_exp > wc.q_exp)
    }

    /// All (i, j) with i > j such that either orientation is inhabited.
    fn class_pairs(&self) -> Vec<(u32, u32)> {
        let mut pairs = std::collections::BTreeSet::new();
        for wc in self.classes.keys() {
            if wc.t_exp != wc.q_exp {
                let (i, j) = if wc.t_exp > wc.q_exp {
                    (wc.t_exp, wc.q_exp)
                } else {
                    (wc.q_exp, wc.t_exp)
                };
                pairs.insert((i, j));
            }
        }
        pairs.into_iter().collect()
    }
}

/// Tally counts and leftovers per weight class for a shape. Only
/// hat-carrying tableaux count: `a_{i,j}` is the coefficient of
/// `t^i q^j` in `F`, and hatless tableaux have zero `F`-weight.
pub fn injection_accounting(shape: &Partition) -> InjectionAccounting {
    let mut acc = InjectionAccounting::default();
    for t in enumerate_enriched(shape) {
        if !t.has_hat() {
            continue;
        }
        let entry = acc.classes.entry(t.weight_class()).or_default();
        entry.count += 1;
        if t.is_leftover() {
            entry.leftover += 1;
        }
    }
    acc
}

/// Column-type counts of a filling with at most three rows: full
/// height-3 columns, the three height-2 column types (bottom, top), and
/// the height-1 cell values.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct ColumnCounts {
    h3: u32,
    n01: u32,
    n02: u32,
    n12: u32,
    n0: u32,
    n1: u32,
    n2: u32,
}

impl ColumnCounts {
    fn of(tab: &Ssyt) -> ColumnCounts {
        let mut cc = ColumnCounts::default();
        let shape = tab.shape();
        cc.h3 = shape.part(2);
        for col in shape.part(2)..shape.part(1) {
            match (tab.entry(0, col as usize), tab.entry(1, col as usize)) {
                (0, 1) => cc.n01 += 1,
                (0, 2) => cc.n02 += 1,
                (1, 2) => cc.n12 += 1,
                other => unreachable!("impossible height-2 column {other:?}"),
            }
        }
        for col in shape.part(1)..shape.part(0) {
            match tab.entry(0, col as usize) {
                0 => cc.n0 += 1,
                1 => cc.n1 += 1,
                _ => cc.n2 += 1,
            }
        }
        cc
    }

    /// Rebuild the unique sorted filling with these counts, if valid.
    fn build(&self, shape: &Partition) -> Option<Ssyt> {
        if self.n12 > 0 && self.n0 > 0 {
            return None;
        }
        if self.n01 + self.n02 + self.n12 != shape.part(1) - shape.part(2)
            || self.n0 + self.n1 + self.n2 != shape.part(0) - shape.part(1)
        {
            return None;
        }
        let mut rows: Vec<Vec<u8>> = Vec::new();
        let push_run = |row: &mut Vec<u8>, v: u8, n: u32| {
            row.extend(std::iter::repeat_n(v, n as usize));
        };
        if shape.num_parts() >= 1 {
            let mut r0 = Vec::new();
            push_run(&mut r0, 0, self.h3 + self.n01 + self.n02);
            push_run(&mut r0, 1, self.n12);
            push_run(&mut r0, 0, self.n0);
            push_run(&mut r0, 1, self.n1);
            push_run(&mut r0, 2, self.n2);
            rows.push(r0);
        }
        if shape.num_parts() >= 2 {
            let mut r1 = Vec::new();
            push_run(&mut r1, 1, self.h3 + self.n01);
            push_run(&mut r1, 2, self.n02 + self.n12);
            rows.push(r1);
        }
        if shape.num_parts() >= 3 {
            let mut r2 = Vec::new();
            push_run(&mut r2, 2, self.h3);
            rows.push(r2);
        }
        Some(Ssyt::new(shape.clone(), rows))
    }
}

/// Best-effort realization of the two injection cases on a tableau of
/// weight class `(t_exp = j, q_exp = i)` with `i > j`, producing a
/// tableau of class `(t_exp = i, q_exp = j)`.
///
/// Case 1 (hat in the bottom row with at least `2 kappa_bar` undecorated
/// 2's there): freeze `2 kappa_bar` bottom-row 2's, exchange the counts
/// of 1's and unfrozen undecorated 2's in the bottom row and of 1's and
/// 2's atop 0's in the second row. Case 2 (otherwise): turn the leftmost
/// `i - j` 2-over-0 columns into 1-over-0 columns. Decorations of the
/// image are reassigned canonically.
pub fn injection_case_maps(
    t: &EnrichedTableau,
    i: u32,
    j: u32,
) -> Result<EnrichedTableau, MapUndefined> {
    let wc = t.weight_class();
    if i <= j || wc.q_exp != i || wc.t_exp != j {
        return Err(MapUndefined::WrongInputClass { i, j });
    }
    let barred = t.num_barred();
    let cc = ColumnCounts::of(t.base());
    let plain_bottom = t.plain_twos_in_bottom_row();
    let case1 = t.hat_row() == Some(0) && plain_bottom >= 2 * barred;

    let mut new = cc;
    if case1 {
        let unfrozen = plain_bottom - 2 * barred;
        new.n01 = cc.n02;
        new.n02 = cc.n01;
        new.n1 = unfrozen;
        new.n2 = cc.n2 - unfrozen + cc.n1;
    } else {
        let d = i - j;
        if cc.n02 < d {
            return Err(MapUndefined::TooFewTwosOverZeros {
                needed: d,
                available: cc.n02,
            });
        }
        new.n02 = cc.n02 - d;
        new.n01 = cc.n01 + d;
    }

    let base = new
        .build(t.base().shape())
        .ok_or(MapUndefined::InvalidImage)?;
    let total = base.count_entry(2);
    if total == 0 || j > total - 1 {
        return Err(MapUndefined::InvalidImage);
    }
    let image = EnrichedTableau::new(base, j, total - 1 - j);
    let got = image.weight_class();
    if got != (WeightClass { t_exp: i, q_exp: j }) {
        return Err(MapUndefined::WrongImageClass {
            want_t: i,
            want_q: j,
            got_t: got.t_exp,
            got_q: got.q_exp,
        });
    }
    Ok(image)
}

/// Outcome of running the best-effort map over every q-heavy tableau of
/// a shape. Failures here are warnings; the count identities in
/// [`InjectionAccounting`] are the authoritative check.
#[derive(Clone, Debug, Default)]
pub struct InjectionMapStats {
    pub attempted: u64,
    pub mapped: u64,
    pub undefined: u64,
    /// images within each class pair are pairwise distinct
    pub images_distinct: bool,
    /// no image is a leftover (images must be exactly the non-leftovers)
    pub images_avoid_leftovers: bool,
}

pub fn injection_map_stats(shape: &Partition) -> InjectionMapStats {
    let mut stats = InjectionMapStats {
        images_distinct: true,
        images_avoid_leftovers: true,
        ..Default::default()
    };
    let mut images: BTreeMap<(u32, u32), Vec<EnrichedTableau>> = BTreeMap::new();
    for t in enumerate_enriched(shape) {
        let wc = t.weight_class();
        if wc.q_exp <= wc.t_exp {
            continue;
        }
        stats.attempted += 1;
        match injection_case_maps(&t, wc.q_exp, wc.t_exp) {
            Ok(img) => {
                stats.mapped += 1;
                if img.is_leftover() {
                    stats.images_avoid_leftovers = false;
                }
                images.entry((wc.q_exp, wc.t_exp)).or_default().push(img);
            }
            Err(_) => stats.undefined += 1,
        }
    }
    for (_, imgs) in images {
        for a in 0..imgs.len() {
            for b in a + 1..imgs.len() {
                if imgs[a] == imgs[b] {
                    stats.images_distinct = false;
                }
            }
        }
    }
    stats
}
