use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::primes::{is_prime, is_prime_u64, primes_up_to};
use super::mul_mod;
use crate::error::{invalid, Error, Result};

/// Knobs for [`factorize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationLimits {
    pub trial_division_bound: u64,
    /// Total Brent-rho iterations allowed across all cofactors.
    pub rho_iteration_budget: u64,
    /// Random Miller-Rabin rounds used above the deterministic range.
    pub primality_rounds: u32,
}

impl Default for FactorizationLimits {
    fn default() -> Self {
        Self {
            trial_division_bound: 100_000,
            rho_iteration_budget: 50_000_000,
            primality_rounds: 16,
        }
    }
}

impl FactorizationLimits {
    pub fn validate(&self) -> Result<()> {
        if self.trial_division_bound == 0 || self.rho_iteration_budget == 0 || self.primality_rounds == 0
        {
            return invalid("factorization limits must be positive");
        }
        Ok(())
    }
}

/// Signed prime factorization, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn value(&self) -> BigInt {
        let mag = self
            .factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        let sign = if self.sign < 0 { Sign::Minus } else { Sign::Plus };
        BigInt::from_biguint(sign, mag)
    }

    /// Number of distinct prime divisors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, e)| *e)
    }
}

fn default_trial_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(FactorizationLimits::default().trial_division_bound))
}

/// Factorization with [`FactorizationLimits::default`].
pub fn factorize_default(k: &BigInt) -> Result<Factorization> {
    factorize(k, &FactorizationLimits::default())
}

/// Trial division up to the configured bound, then Brent's rho.
pub fn factorize(k: &BigInt, limits: &FactorizationLimits) -> Result<Factorization> {
    limits.validate()?;
    if k.is_zero() {
        return invalid("cannot factor 0");
    }
    let sign = if k.sign() == Sign::Minus { -1 } else { 1 };
    let mut rest = k.magnitude().clone();
    let mut found: Vec<(BigUint, u32)> = Vec::new();

    let owned;
    let trial: &[u64] = if limits.trial_division_bound == FactorizationLimits::default().trial_division_bound {
        default_trial_primes()
    } else {
        owned = primes_up_to(limits.trial_division_bound);
        &owned
    };
    for &p in trial {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            found.push((pb, e));
        }
    }

    if !rest.is_one() {
        let mut budget = limits.rho_iteration_budget;
        let mut stack = vec![rest];
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_prime(&m, limits.primality_rounds) {
                found.push((m, 1));
                continue;
            }
            let root = m.sqrt();
            if &root * &root == m {
                stack.push(root.clone());
                stack.push(root);
                continue;
            }
            let d = split(&m, &mut budget).ok_or_else(|| {
                Error::BudgetExceeded(format!(
                    "rho budget of {} iterations exhausted on cofactor {m}",
                    limits.rho_iteration_budget
                ))
            })?;
            stack.push(&m / &d);
            stack.push(d);
        }
    }

    found.sort();
    let mut merged: Vec<(BigUint, u32)> = Vec::with_capacity(found.len());
    for (p, e) in found {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    Ok(Factorization { sign, factors: merged })
}

/// Nontrivial divisor of the composite `m`, or `None` once the budget runs out.
fn split(m: &BigUint, budget: &mut u64) -> Option<BigUint> {
    if let Some(small) = m.to_u64() {
        let mut c = 1;
        while *budget > 0 {
            if let Some(d) = brent_u64(small, c, budget) {
                return Some(BigUint::from(d));
            }
            c += 1;
        }
        return None;
    }
    let mut c = 1u64;
    while *budget > 0 {
        if let Some(d) = brent_big(m, &BigUint::from(c), budget) {
            return Some(d);
        }
        c += 1;
    }
    None
}

const BATCH: u64 = 128;

fn brent_u64(n: u64, c: u64, budget: &mut u64) -> Option<u64> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    debug_assert!(!is_prime_u64(n));
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
    let mut x;
    let mut ys;
    loop {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        loop {
            ys = y;
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            *budget = budget.saturating_sub(steps);
            let g = q.gcd(&n);
            k += steps;
            if g != 1 {
                if g != n {
                    return Some(g);
                }
                // backtrack one step at a time
                loop {
                    ys = f(ys);
                    let g = x.abs_diff(ys).gcd(&n);
                    if g != 1 {
                        return (g != n).then_some(g);
                    }
                }
            }
            if k >= r || *budget == 0 {
                break;
            }
        }
        if *budget == 0 {
            return None;
        }
        r *= 2;
    }
}

fn brent_big(n: &BigUint, c: &BigUint, budget: &mut u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u8));
    }
    let f = |x: &BigUint| (x * x + c) % n;
    let absdiff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let mut y = BigUint::from(2u8);
    let mut r = 1u64;
    let mut q = BigUint::one();
    loop {
        let x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        loop {
            let mut ys = y.clone();
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(&y);
                q = (&q * absdiff(&x, &y)) % n;
            }
            *budget = budget.saturating_sub(steps);
            k += steps;
            let g = q.gcd(n);
            if !g.is_one() {
                if &g != n {
                    return Some(g);
                }
                loop {
                    ys = f(&ys);
                    let g = absdiff(&x, &ys).gcd(n);
                    if !g.is_one() {
                        return (&g != n).then_some(g);
                    }
                }
            }
            if k >= r || *budget == 0 {
                break;
            }
        }
        if *budget == 0 {
            return None;
        }
        r *= 2;
    }
}
