use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::square_condition_fails;
use crate::error::{invalid, Error, Result};
use crate::ffpoly::Budget;
use crate::intarith::is_perfect_square;
use crate::poly::MonicIntPoly;

/// The line `d_0 a_0 + d_1 a_1 + d_2 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Line {
    pub d0: i64,
    pub d1: i64,
    pub d2: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct L3Count {
    /// Triples `(z, a_0, a_1)`; `z` and `-z` count separately.
    pub count: u64,
    pub points_on_line: u64,
    pub z_bound: BigInt,
    /// Neither `|u|(n-1)^{n-1}` nor `|u| n^n` is a square.
    pub hypotheses_hold: bool,
}

/// Counts `(z, a_0, a_1)` with `z^2 = u Disc(X^n + ... + a_2 X^2 + a_1 X + a_0)`,
/// `(a_0, a_1)` on the line, `|a_0|, |a_1| <= H` and `|z| <= H^c`.
///
/// `upper` holds the fixed coefficients `a_2, ..., a_{n-1}`.
pub fn lemma_l3_solution_count(
    n: usize,
    upper: &[i64],
    u: i64,
    line: Line,
    h: u64,
    c: f64,
    budget: Budget,
) -> Result<L3Count> {
    if n < 2 || upper.len() != n - 2 {
        return invalid(format!("need n >= 2 and {} fixed coefficients", n.saturating_sub(2)));
    }
    if line.d0 == 0 && line.d1 == 0 {
        return invalid("(d_0, d_1) must not both vanish");
    }
    if u == 0 {
        return invalid("u must be nonzero");
    }
    if !(c.is_finite() && c >= 0.0) {
        return invalid("z exponent must be a non-negative number");
    }
    if 2 * h + 1 > budget.0 {
        return Err(Error::BudgetExceeded("lemma_l3_solution_count".into()));
    }
    let hi = h as i64;
    let points: Vec<(i64, i64)> = if line.d1 != 0 {
        (-hi..=hi)
            .filter_map(|a0| {
                let num = -(line.d0 * a0 + line.d2);
                (num % line.d1 == 0)
                    .then(|| (a0, num / line.d1))
                    .filter(|(_, a1)| a1.abs() <= hi)
            })
            .collect()
    } else if line.d2 % line.d0 == 0 && (line.d2 / line.d0).abs() <= hi {
        let a0 = -line.d2 / line.d0;
        (-hi..=hi).map(|a1| (a0, a1)).collect()
    } else {
        Vec::new()
    };
    let z_bound = BigInt::from((h as f64).powf(c).floor() as u128);
    let ub = BigInt::from(u);
    let mut count = 0;
    for &(a0, a1) in &points {
        let mut lower = vec![a0, a1];
        lower.extend_from_slice(upper);
        lower.truncate(n);
        let f = MonicIntPoly::from_i64(&lower)?;
        let v = &ub * f.discriminant();
        if v.is_negative() {
            continue;
        }
        if let Some(z) = is_perfect_square(&v) {
            if BigInt::from(z.clone()) <= z_bound {
                count += if z.is_zero() { 1 } else { 2 };
            }
        }
    }
    Ok(L3Count {
        count,
        points_on_line: points.len() as u64,
        z_bound,
        hypotheses_hold: !square_condition_fails(n, &ub),
    })
}
