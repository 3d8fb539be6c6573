use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::require_squarefree;
use crate::error::{invalid, Error, Result};
use crate::ffpoly::Budget;
use crate::intarith::{factorize, is_perfect_square, FactorizationLimits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PellRoute {
    /// `sM = w^2`: `(sr - wc)(sr + wc) = s·RHS`, one solution per signed divisor.
    DivisorPairs,
    /// `sM < 0`: the form is definite, so loop over `r` instead of `c`.
    DefiniteLoop,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PellCount {
    pub count: u64,
    pub second_route: Option<(PellRoute, u64)>,
}

fn isqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    is_perfect_square(x).map(BigInt::from)
}

/// Solutions `(r, c)` of `s r^2 - M c^2 = RHS` with `|r|, |c| <= bound`.
///
/// Counted by looping over `c`; when the equation factors or is definite a
/// second independent count is made and must agree.
pub fn pell_count(s: &BigInt, m: &BigInt, rhs: &BigInt, bound: u64, budget: Budget) -> Result<PellCount> {
    require_squarefree(s)?;
    if rhs.is_zero() {
        return invalid("RHS must be nonzero");
    }
    if 2 * bound + 1 > budget.0 {
        return Err(Error::BudgetExceeded(format!("pell_count: bound {bound} exceeds budget")));
    }
    let b = BigInt::from(bound);
    let within = |x: &BigInt| x.abs() <= b;
    let pm = |x: &BigInt| if x.is_zero() { 1 } else { 2 };

    let mut count = 0;
    for c in -(bound as i64)..=bound as i64 {
        let t = rhs + m * BigInt::from(c) * BigInt::from(c);
        if !t.is_multiple_of(s) {
            continue;
        }
        if let Some(r) = isqrt(&(t / s)) {
            if within(&r) {
                count += pm(&r);
            }
        }
    }

    let sm = s * m;
    let second = if sm.is_positive() && is_perfect_square(&sm).is_some() {
        let w = isqrt(&sm).expect("square");
        let n = s * rhs;
        let fac = factorize(&n, &FactorizationLimits::default())?;
        let mut divisors = vec![BigInt::from(1)];
        for (p, e) in &fac.factors {
            let p = BigInt::from(p.clone());
            let mut next = Vec::new();
            for d in &divisors {
                let mut q = d.clone();
                for _ in 0..=*e {
                    next.push(q.clone());
                    q *= &p;
                }
            }
            divisors = next;
        }
        let mut k = 0;
        for d in divisors.iter().flat_map(|d| [d.clone(), -d]) {
            let e = &n / &d;
            let (sr2, wc2) = (&d + &e, &e - &d);
            if sr2.is_odd() || wc2.is_odd() {
                continue;
            }
            let (sr, wc): (BigInt, BigInt) = (sr2 / 2, wc2 / 2);
            if !sr.is_multiple_of(s) || !wc.is_multiple_of(&w) {
                continue;
            }
            let (r, c) = (sr / s, wc / &w);
            if within(&r) && within(&c) {
                k += 1;
            }
        }
        Some((PellRoute::DivisorPairs, k))
    } else if sm.is_negative() {
        let mut k = 0;
        for r in -(bound as i64)..=bound as i64 {
            let t = s * BigInt::from(r) * BigInt::from(r) - rhs;
            if !t.is_multiple_of(m) {
                continue;
            }
            if let Some(c) = isqrt(&(t / m)) {
                if within(&c) {
                    k += pm(&c);
                }
            }
        }
        Some((PellRoute::DefiniteLoop, k))
    } else {
        None
    };
    if let Some((route, k)) = second {
        if k != count {
            return Err(Error::InternalInconsistency(format!(
                "pell_count routes disagree: loop {count}, {route:?} {k}"
            )));
        }
    }
    Ok(PellCount {
        count,
        second_route: second,
    })
}
