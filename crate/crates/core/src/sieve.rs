//! The square sieve over windows of primes `(z, 2z]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::HeightBox;
use crate::error::{invalid, Error, Result};
use crate::ffpoly::Budget;
use crate::intarith::{is_perfect_square, jacobi_u64, primes_in_range, squarefree_part};
use crate::irreducibility::is_irreducible;
use crate::poly::MonicIntPoly;

const MAX_Z: f64 = 1e8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SieveWindow {
    pub z: f64,
    pub primes: Vec<u64>,
    pub pi_count: usize,
}

/// All primes in `(z, 2z]`.
pub fn make_window(z: f64) -> Result<SieveWindow> {
    if z.is_nan() || z < 2.0 {
        return invalid(format!("window parameter must be at least 2, got {z}"));
    }
    if z > MAX_Z {
        return invalid(format!("window parameter {z} exceeds the limit {MAX_Z}"));
    }
    let primes = primes_in_range(z.floor() as u64, (2.0 * z).floor() as u64);
    Ok(SieveWindow {
        z,
        pi_count: primes.len(),
        primes,
    })
}

fn residue(k: &BigInt, p: u64) -> u64 {
    k.mod_floor(&BigInt::from(p)).to_u64().expect("residue")
}

/// `sum_{p in window} (k / p)`.
fn window_sum(k: &BigInt, window: &SieveWindow) -> i64 {
    window
        .primes
        .iter()
        .map(|&p| jacobi_u64(residue(k, p), p) as i64)
        .sum()
}

fn window_divisors(k: &BigInt, window: &SieveWindow) -> usize {
    window.primes.iter().filter(|&&p| residue(k, p) == 0).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveIdentity {
    pub lhs: i64,
    pub rhs: i64,
    pub equal: bool,
}

/// Compares `sum_p (u Disc f / p)` with `π(z, 2z) - #{p | Disc f}` where `u`
/// is the square-free part of `Disc f`.
pub fn sieve_identity_check(f: &MonicIntPoly, window: &SieveWindow) -> Result<SieveIdentity> {
    let disc = f.discriminant();
    if disc.is_zero() {
        return invalid(format!("{f} has a repeated factor"));
    }
    let u = squarefree_part(&disc)?.u;
    let lhs = window_sum(&(u * &disc), window);
    let rhs = window.pi_count as i64 - window_divisors(&disc, window) as i64;
    Ok(SieveIdentity {
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SieveLabel {
    /// `π(z, 2z) >= 2·max ω_window` held over the class: a rigorous upper bound.
    Bound,
    /// The window condition failed for some member of the class.
    Estimate,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SieveBound {
    pub n: usize,
    pub h: u64,
    pub u: BigInt,
    pub window: SieveWindow,
    /// `sum_{f in P_n(H)} |sum_p (u Disc f / p)|^2`.
    pub sum_of_squares: u128,
    /// `4 · sum_of_squares / π(z, 2z)^2`.
    pub value: f64,
    /// Exact `T_n(H, u)`, a by-product of the enumeration.
    pub class_size: u64,
    /// Largest number of window primes dividing `Disc f` over the class.
    pub max_window_omega: usize,
    pub label: SieveLabel,
}

impl SieveBound {
    /// The report as a bound, or `ConditionFailed` when it is only an estimate.
    pub fn require_bound(self) -> Result<Self> {
        match self.label {
            SieveLabel::Bound => Ok(self),
            SieveLabel::Estimate => Err(Error::ConditionFailed(format!(
                "pi(z,2z) = {} < 2 * {} window prime divisors; value {} is only an estimate",
                self.window.pi_count, self.max_window_omega, self.value
            ))),
        }
    }
}

/// Square-sieve upper bound for `T_n(H, u)` (signed square-free class `u`)
/// evaluated by direct summation over `P_n(H)`.
pub fn sieve_upper_bound(n: usize, h: u64, u: &BigInt, z: f64, budget: Budget) -> Result<SieveBound> {
    if u.is_zero() || !squarefree_part(u)?.v.to_u64().is_some_and(|v| v == 1) {
        return invalid(format!("{u} is not a nonzero square-free integer"));
    }
    let window = make_window(z)?;
    if window.pi_count == 0 {
        return invalid(format!("window ({z}, {}] contains no primes", 2.0 * z));
    }
    let bx = HeightBox::strict(n, h)?;
    if bx.volume().is_none_or(|v| v > budget.0) {
        return Err(Error::BudgetExceeded(format!("sieve_upper_bound: box exceeds budget {}", budget.0)));
    }
    let hi = h as i64 - 1;
    let parts = (-hi..=hi)
        .into_par_iter()
        .map(|top| -> Result<(u128, u64, usize)> {
            let (mut sq, mut members, mut omega) = (0u128, 0u64, 0usize);
            let mut err = None;
            crate::poly::for_each_box_with_top(n, -hi, hi, top, |lower| {
                if err.is_some() {
                    return;
                }
                let mut step = || -> Result<()> {
                    let f = MonicIntPoly::from_i64(lower)?;
                    let disc = f.discriminant();
                    let k = u * &disc;
                    let s = window_sum(&k, &window);
                    sq += (s * s) as u128;
                    if k.is_positive() && is_perfect_square(&k).is_some() && is_irreducible(&f)?.is_irreducible() {
                        members += 1;
                        omega = omega.max(window_divisors(&disc, &window));
                    }
                    Ok(())
                };
                if let Err(e) = step() {
                    err = Some(e);
                }
            });
            err.map_or(Ok((sq, members, omega)), Err)
        })
        .collect::<Result<Vec<_>>>()?;
    let (sum_of_squares, class_size, max_window_omega) = parts
        .into_iter()
        .fold((0, 0, 0), |(a, b, c), (x, y, w)| (a + x, b + y, c.max(w)));
    let pi = window.pi_count as f64;
    let label = if window.pi_count >= 2 * max_window_omega {
        SieveLabel::Bound
    } else {
        SieveLabel::Estimate
    };
    Ok(SieveBound {
        n,
        h,
        u: u.clone(),
        value: 4.0 * sum_of_squares as f64 / (pi * pi),
        window,
        sum_of_squares,
        class_size,
        max_window_omega,
        label,
    })
}

/// `z = H^{n/(2n-1)} (log H)^{-(n-1)/(2n-1)}`, at least `(log H)^2`.
pub fn optimal_z(n: usize, h: f64) -> Result<f64> {
    if n < 3 {
        return invalid("the sieve window is defined for n >= 3");
    }
    if h.is_nan() || h < 3.0 {
        return invalid("need H >= 3");
    }
    let (nf, l) = (n as f64, h.ln());
    let z = h.powf(nf / (2.0 * nf - 1.0)) * l.powf(-(nf - 1.0) / (2.0 * nf - 1.0));
    Ok(z.max(l * l))
}
