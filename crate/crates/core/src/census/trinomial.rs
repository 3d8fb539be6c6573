use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{require_squarefree, square_class_match};
use crate::error::{invalid, Error, Result};
use crate::ffpoly::Budget;
use crate::intarith::squarefree_part;
use crate::irreducibility::{eisenstein_test, is_irreducible};
use crate::poly::{trinomial_disc, MonicIntPoly};

/// `(a, b) in [C, C + A] x [D, D + B]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrinomialBox {
    pub a_start: i64,
    pub a_len: u64,
    pub b_start: i64,
    pub b_len: u64,
}

impl TrinomialBox {
    pub fn new(a_len: u64, b_len: u64, a_start: i64, b_start: i64) -> Self {
        Self {
            a_start,
            a_len,
            b_start,
            b_len,
        }
    }

    fn check(&self, budget: Budget, what: &str) -> Result<()> {
        let pts = (self.a_len as u128 + 1) * (self.b_len as u128 + 1);
        if pts > budget.0 as u128 {
            return Err(Error::BudgetExceeded(format!("{what}: {pts} pairs exceed budget {}", budget.0)));
        }
        Ok(())
    }

    fn a_range(&self) -> std::ops::RangeInclusive<i64> {
        self.a_start..=self.a_start + self.a_len as i64
    }

    fn b_range(&self) -> std::ops::RangeInclusive<i64> {
        self.b_start..=self.b_start + self.b_len as i64
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrinomialCount {
    pub n: usize,
    pub s: BigInt,
    pub count: u64,
    /// Nonzero per-`a` counts.
    pub per_a: BTreeMap<i64, u64>,
    pub max_per_a: u64,
}

fn trinomial(n: usize, a: i64, b: i64) -> Result<MonicIntPoly> {
    let mut lower = vec![BigInt::zero(); n];
    lower[0] = BigInt::from(b);
    lower[1] += BigInt::from(a);
    MonicIntPoly::new(lower)
}

/// Pairs in the box with `Disc(X^n + aX + b) = s r^2` for a positive integer `r`.
pub fn trinomial_count(n: usize, bx: &TrinomialBox, s: &BigInt, budget: Budget) -> Result<TrinomialCount> {
    if n < 2 {
        return invalid("need n >= 2");
    }
    require_squarefree(s)?;
    bx.check(budget, "trinomial_count")?;
    let per_a: BTreeMap<i64, u64> = bx
        .a_range()
        .into_par_iter()
        .map(|a| -> Result<(i64, u64)> {
            let ab = BigInt::from(a);
            let mut k = 0;
            for b in bx.b_range() {
                let d = trinomial_disc(n, &ab, &BigInt::from(b))?;
                k += square_class_match(&d, s) as u64;
            }
            Ok((a, k))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, k)| *k > 0)
        .collect();
    Ok(TrinomialCount {
        n,
        s: s.clone(),
        count: per_a.values().sum(),
        max_per_a: per_a.values().copied().max().unwrap_or(0),
        per_a,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuadraticFieldCount {
    pub n: usize,
    pub irreducible_pairs: u64,
    /// Square-free parts `u != 1`, one per quadratic field.
    pub classes: BTreeSet<BigInt>,
    /// Whether some discriminant was a perfect square (`u = 1`).
    pub rational_class: bool,
}

impl QuadraticFieldCount {
    pub fn distinct(&self) -> usize {
        self.classes.len()
    }

    fn from_discs(n: usize, discs: impl IntoIterator<Item = BigInt>) -> Result<Self> {
        let mut out = Self {
            n,
            irreducible_pairs: 0,
            classes: BTreeSet::new(),
            rational_class: false,
        };
        for d in discs {
            out.irreducible_pairs += 1;
            let u = squarefree_part(&d)?.u;
            if u.is_one() {
                out.rational_class = true;
            } else {
                out.classes.insert(u);
            }
        }
        Ok(out)
    }
}

fn irreducible_disc(n: usize, a: i64, b: i64) -> Result<Option<BigInt>> {
    let f = trinomial(n, a, b)?;
    if !is_irreducible(&f)?.is_irreducible() {
        return Ok(None);
    }
    trinomial_disc(n, &BigInt::from(a), &BigInt::from(b)).map(Some)
}

/// Distinct quadratic fields `Q(sqrt(Disc))` over irreducible `X^n + aX + b` in the box.
pub fn quadratic_field_count(n: usize, bx: &TrinomialBox, budget: Budget) -> Result<QuadraticFieldCount> {
    if n < 2 {
        return invalid("need n >= 2");
    }
    bx.check(budget, "quadratic_field_count")?;
    let discs = bx
        .a_range()
        .into_par_iter()
        .map(|a| -> Result<Vec<BigInt>> {
            let mut v = Vec::new();
            for b in bx.b_range() {
                v.extend(irreducible_disc(n, a, b)?);
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    QuadraticFieldCount::from_discs(n, discs.into_iter().flatten())
}

/// Same count over all `a, b >= 1` with `|Disc(X^n + aX + b)| <= delta`, for `n = 1 mod 4`.
pub fn quadratic_field_count_by_disc(n: usize, delta: &BigInt, budget: Budget) -> Result<QuadraticFieldCount> {
    if n % 4 != 1 {
        return invalid("the discriminant-bounded count needs n = 1 mod 4");
    }
    let mut discs = Vec::new();
    let mut visited = 0u64;
    for a in 1i64.. {
        if trinomial_disc(n, &BigInt::from(a), &BigInt::one())? > *delta {
            break;
        }
        for b in 1i64.. {
            let d = trinomial_disc(n, &BigInt::from(a), &BigInt::from(b))?;
            if d > *delta {
                break;
            }
            visited += 1;
            if visited > budget.0 {
                return Err(Error::BudgetExceeded("quadratic_field_count_by_disc".into()));
            }
            discs.extend(irreducible_disc(n, a, b)?);
        }
    }
    QuadraticFieldCount::from_discs(n, discs)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EisensteinFamilyReport {
    pub n: usize,
    pub h: u64,
    pub pairs: u64,
    pub distinct: u64,
    pub all_eisenstein: bool,
}

impl EisensteinFamilyReport {
    pub fn all_distinct(&self) -> bool {
        self.pairs == self.distinct
    }
}

/// `X^n + aX - b` with `a` even in `[H/2, H]` and `b = 2 mod 4` in `[1, H/(3n)]`:
/// Eisenstein at 2, and the discriminants should be pairwise distinct.
pub fn eisenstein_family_distinctness(n: usize, h: u64) -> Result<EisensteinFamilyReport> {
    if n < 2 || h < 2 {
        return invalid("need n >= 2 and H >= 2");
    }
    let h = h as i64;
    let a_lo = (h + 1) / 2;
    let b_hi = h / (3 * n as i64);
    let mut discs = BTreeSet::new();
    let (mut pairs, mut all_eisenstein) = (0, true);
    for a in (a_lo..=h).filter(|a| a % 2 == 0) {
        for b in (1..=b_hi).filter(|b| b % 4 == 2) {
            pairs += 1;
            let f = trinomial(n, a, -b)?;
            all_eisenstein &= eisenstein_test(&f)? == Some(2u32.into());
            discs.insert(trinomial_disc(n, &BigInt::from(a), &BigInt::from(-b))?);
        }
    }
    Ok(EisensteinFamilyReport {
        n,
        h: h as u64,
        pairs,
        distinct: discs.len() as u64,
        all_eisenstein,
    })
}
