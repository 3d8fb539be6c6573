//! Exhaustive censuses over coefficient boxes.

mod lemma_l3;
mod pell;
mod trinomial;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::ffpoly::Budget;
use crate::fielddisc::field_disc;
use crate::intarith::{is_perfect_square, squarefree_part};
use crate::irreducibility::is_irreducible;
use crate::poly::MonicIntPoly;

pub use lemma_l3::{lemma_l3_solution_count, L3Count, Line};
pub use pell::{pell_count, PellCount, PellRoute};
pub use trinomial::{
    eisenstein_family_distinctness, quadratic_field_count, quadratic_field_count_by_disc,
    trinomial_count, EisensteinFamilyReport, QuadraticFieldCount, TrinomialBox, TrinomialCount,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoxMode {
    /// `|a_i| < H` for every coefficient.
    StrictSymmetric,
    /// Arbitrary closed intervals.
    Closed,
}

/// Per-coefficient ranges for `a_0, ..., a_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightBox {
    pub intervals: Vec<(i64, i64)>,
    pub mode: BoxMode,
}

impl HeightBox {
    /// `|a_i| < h` for all `i`.
    pub fn strict(n: usize, h: u64) -> Result<Self> {
        if n < 1 || h < 1 {
            return invalid("need n >= 1 and H >= 1");
        }
        let hi = i64::try_from(h).map_err(|_| Error::InvalidInput("height too large".into()))? - 1;
        Ok(Self {
            intervals: vec![(-hi, hi); n],
            mode: BoxMode::StrictSymmetric,
        })
    }

    pub fn closed(intervals: Vec<(i64, i64)>) -> Result<Self> {
        if intervals.is_empty() {
            return invalid("box needs at least one coefficient");
        }
        if let Some((lo, hi)) = intervals.iter().find(|(lo, hi)| lo > hi) {
            return invalid(format!("empty interval [{lo}, {hi}]"));
        }
        Ok(Self {
            intervals,
            mode: BoxMode::Closed,
        })
    }

    pub fn degree(&self) -> usize {
        self.intervals.len()
    }

    /// Number of lattice points, `None` on overflow.
    pub fn volume(&self) -> Option<u64> {
        self.intervals.iter().try_fold(1u64, |acc, (lo, hi)| {
            let w = u64::try_from(hi - lo + 1).ok()?;
            acc.checked_mul(w)
        })
    }

    fn check(&self, budget: Budget, what: &str) -> Result<u64> {
        match self.volume() {
            Some(v) if v <= budget.0 => Ok(v),
            _ => Err(Error::BudgetExceeded(format!(
                "{what}: box volume exceeds enumeration budget {}",
                budget.0
            ))),
        }
    }

    /// Visits the box slice with `a_{n-1} = top` in lexicographic order of
    /// `(a_{n-1}, ..., a_0)`.
    fn for_each_with_top(&self, top: i64, mut visit: impl FnMut(&[i64])) {
        let n = self.intervals.len();
        let mut lower: Vec<i64> = self.intervals.iter().map(|(lo, _)| *lo).collect();
        lower[n - 1] = top;
        loop {
            visit(&lower);
            let mut k = 0;
            loop {
                if k + 1 >= n {
                    return;
                }
                lower[k] += 1;
                if lower[k] <= self.intervals[k].1 {
                    break;
                }
                lower[k] = self.intervals[k].0;
                k += 1;
            }
        }
    }
}

/// Runs `visit` on every irreducible polynomial of the box, partitioned over
/// the top coefficient. Results come back in enumeration order.
pub(crate) fn scan_irreducible<T: Send>(
    bx: &HeightBox,
    budget: Budget,
    what: &str,
    visit: impl Fn(&MonicIntPoly, &BigInt) -> Result<Option<T>> + Sync,
) -> Result<Vec<T>> {
    bx.check(budget, what)?;
    let (lo, hi) = bx.intervals[bx.degree() - 1];
    let chunks = (lo..=hi)
        .into_par_iter()
        .map(|top| -> Result<Vec<T>> {
            let mut out = Vec::new();
            let mut err = None;
            bx.for_each_with_top(top, |lower| {
                if err.is_some() {
                    return;
                }
                let step = || -> Result<Option<T>> {
                    let f = MonicIntPoly::from_i64(lower)?;
                    if !is_irreducible(&f)?.is_irreducible() {
                        return Ok(None);
                    }
                    let disc = f.discriminant();
                    visit(&f, &disc)
                };
                match step() {
                    Ok(Some(t)) => out.push(t),
                    Ok(None) => {}
                    Err(e) => err = Some(e),
                }
            });
            err.map_or(Ok(out), Err)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KeyKind {
    /// Signed square-free part `u` of the discriminant.
    SignedSquarefreeU,
    /// `|u|`, matching `|Δ(f)| = r^2 u` with `u >= 1`.
    AbsoluteU,
    DiscValue,
}

/// Counts of irreducible polynomials per key.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub key_kind: KeyKind,
    pub n: usize,
    pub height_box: HeightBox,
    pub filter: String,
    pub counts: BTreeMap<BigInt, u64>,
}

impl CountTable {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Largest class; ties go to the smallest key.
    pub fn argmax(&self) -> Option<(BigInt, u64)> {
        self.counts
            .iter()
            .fold(None, |best: Option<(&BigInt, u64)>, (k, &c)| match best {
                Some((_, b)) if b >= c => best,
                _ => Some((k, c)),
            })
            .map(|(k, c)| (k.clone(), c))
    }

    /// Re-keys a disc-value table by square-free part.
    pub fn regroup(&self, kind: KeyKind) -> Result<CountTable> {
        if self.key_kind != KeyKind::DiscValue {
            return invalid("only disc-value tables can be regrouped");
        }
        let mut counts = BTreeMap::new();
        for (d, c) in &self.counts {
            *counts.entry(class_key(d, kind)?).or_insert(0) += c;
        }
        Ok(CountTable {
            key_kind: kind,
            counts,
            ..self.clone()
        })
    }
}

fn class_key(disc: &BigInt, kind: KeyKind) -> Result<BigInt> {
    Ok(match kind {
        KeyKind::DiscValue => disc.clone(),
        KeyKind::SignedSquarefreeU => squarefree_part(disc)?.u,
        KeyKind::AbsoluteU => squarefree_part(disc)?.u.abs(),
    })
}

/// `T_n(H, u)` for every class `u` met in the box (irreducible polynomials only).
pub fn count_by_squarefree_class(bx: &HeightBox, key: KeyKind, budget: Budget) -> Result<CountTable> {
    let keys = scan_irreducible(bx, budget, "count_by_squarefree_class", |_, d| {
        class_key(d, key).map(Some)
    })?;
    let mut counts = BTreeMap::new();
    for k in keys {
        *counts.entry(k).or_insert(0) += 1;
    }
    Ok(CountTable {
        key_kind: key,
        n: bx.degree(),
        height_box: bx.clone(),
        filter: "irreducible".into(),
        counts,
    })
}

/// Whether `|u|(n-1)^{n-1}` or `|u| n^n` is a perfect square, the case in
/// which only the weaker class bound applies.
pub fn square_condition_fails(n: usize, u: &BigInt) -> bool {
    let a = u.abs();
    let m1 = BigInt::from(n as u64 - 1).pow(n as u32 - 1);
    let m2 = BigInt::from(n as u64).pow(n as u32);
    is_perfect_square(&(&a * m1)).is_some() || is_perfect_square(&(&a * m2)).is_some()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassMultiplicity {
    pub n: usize,
    pub h: u64,
    /// `|u|` of the largest class.
    pub u: BigInt,
    pub count: u64,
    pub square_condition_fails: bool,
    /// Classes (by `|u|`) for which the square condition fails.
    pub flagged_classes: Vec<(BigInt, u64)>,
}

/// Largest `T_n(H, u)` over `|u|`, with the square-condition flag.
pub fn max_class_multiplicity(n: usize, h: u64, budget: Budget) -> Result<ClassMultiplicity> {
    let table = count_by_squarefree_class(&HeightBox::strict(n, h)?, KeyKind::AbsoluteU, budget)?;
    let (u, count) = table
        .argmax()
        .ok_or_else(|| Error::EmptySample(format!("no irreducible polynomials for n={n}, H={h}")))?;
    let flagged_classes = table
        .counts
        .iter()
        .filter(|(k, _)| square_condition_fails(n, k))
        .map(|(k, c)| (k.clone(), *c))
        .collect();
    Ok(ClassMultiplicity {
        n,
        h,
        square_condition_fails: square_condition_fails(n, &u),
        u,
        count,
        flagged_classes,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SmallDiscMass {
    pub n: usize,
    pub h: u64,
    pub d: BigInt,
    /// Irreducible `f` with certified `|Δ(f)| <= D`.
    pub certified: u64,
    /// Uncertified `f` whose square-free part still allows `|Δ(f)| <= D`.
    pub unresolved: u64,
    /// Certified counts per field discriminant.
    pub groups: BTreeMap<BigInt, u64>,
}

enum Stratum {
    Certified(BigInt),
    Unresolved,
}

pub fn small_disc_mass(n: usize, h: u64, d: &BigInt, budget: Budget) -> Result<SmallDiscMass> {
    if d.is_negative() {
        return invalid("D must be non-negative");
    }
    let strata = scan_irreducible(&HeightBox::strict(n, h)?, budget, "small_disc_mass", |f, _| {
        let report = field_disc(f)?;
        Ok(match report.certified_field_disc {
            Some(delta) if delta.abs() <= *d => Some(Stratum::Certified(delta)),
            Some(_) => None,
            None if report.sf_part_of_field_disc.u.abs() <= *d => Some(Stratum::Unresolved),
            None => None,
        })
    })?;
    let mut groups = BTreeMap::new();
    let mut unresolved = 0;
    for s in strata {
        match s {
            Stratum::Certified(delta) => *groups.entry(delta).or_insert(0) += 1,
            Stratum::Unresolved => unresolved += 1,
        }
    }
    Ok(SmallDiscMass {
        n,
        h,
        d: d.clone(),
        certified: groups.values().sum(),
        unresolved,
        groups,
    })
}

/// `D_n(H)` (or its square-free-class coarsening) over `I_n(H)`.
pub fn distinct_disc_count(n: usize, h: u64, key: KeyKind, budget: Budget) -> Result<usize> {
    let keys = scan_irreducible(&HeightBox::strict(n, h)?, budget, "distinct_disc_count", |_, d| {
        class_key(d, key).map(Some)
    })?;
    Ok(keys.into_iter().collect::<BTreeSet<_>>().len())
}

pub(crate) fn square_class_match(value: &BigInt, s: &BigInt) -> bool {
    if value.is_zero() || s.is_zero() {
        return false;
    }
    let (q, r) = (value / s, value % s);
    r.is_zero() && q.is_positive() && is_perfect_square(&q).is_some()
}

pub(crate) fn require_squarefree(s: &BigInt) -> Result<()> {
    if s.is_zero() {
        return invalid("s must be nonzero");
    }
    let sf = squarefree_part(s)?;
    if !sf.v.is_one() {
        return invalid(format!("{s} is not square-free"));
    }
    Ok(())
}
