use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{for_each_monic_with_top, legendre, Budget, FpPoly};
use crate::error::{invalid, Error, Result};
use crate::intarith::{is_prime_u64, jacobi_i64, pow_mod};
use crate::poly::discriminant_i64;

/// Frequency vector `(λ_1, ..., λ_n)` paired with a monic polynomial as
/// `λ_1 a_{n-1} + ... + λ_n a_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaVector {
    p: u64,
    lambda: Vec<u64>,
}

impl LambdaVector {
    pub fn new(p: u64, lambda: Vec<u64>) -> Self {
        Self {
            p,
            lambda: lambda.into_iter().map(|l| l % p).collect(),
        }
    }

    pub fn zero(p: u64, n: usize) -> Self {
        Self::new(p, vec![0; n])
    }

    pub fn components(&self) -> &[u64] {
        &self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.iter().all(|&l| l == 0)
    }

    /// `<λ∘f>` for a monic `f` given by its lower coefficients `a_0..a_{n-1}`.
    pub fn pair(&self, lower: &[u64]) -> u64 {
        let n = lower.len();
        debug_assert_eq!(n, self.lambda.len());
        self.lambda
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &l)| (acc + l * lower[n - 1 - k]) % self.p)
    }
}

/// `sum_r counts[r] · e(r / modulus)`, held exactly as an integer vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactCharSum {
    pub modulus: u64,
    pub counts: Vec<i64>,
}

impl ExactCharSum {
    fn empty(modulus: u64) -> Self {
        Self {
            modulus,
            counts: vec![0; modulus as usize],
        }
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    pub fn value(&self) -> Complex64 {
        let m = self.modulus as f64;
        self.counts
            .iter()
            .enumerate()
            .map(|(r, &c)| Complex64::from_polar(c as f64, TAU * r as f64 / m))
            .sum()
    }

    pub fn abs(&self) -> f64 {
        self.value().norm()
    }

    /// Exact zero test. For a prime modulus the only relation among the
    /// roots of unity is that they sum to zero, so the value vanishes iff all
    /// counts are equal. For other moduli only the all-zero vector is
    /// recognised as exactly zero.
    pub fn is_exact_zero(&self) -> bool {
        if is_prime_u64(self.modulus) {
            self.counts.windows(2).all(|w| w[0] == w[1])
        } else {
            self.counts.iter().all(|&c| c == 0)
        }
    }

    /// Sends `e(r/self.modulus)` to `e(r·scale/target)`.
    fn embed(&self, target: u64, scale: u64) -> Self {
        let mut out = Self::empty(target);
        for (r, &c) in self.counts.iter().enumerate() {
            out.counts[((r as u64 * scale) % target) as usize] += c;
        }
        out
    }

    fn convolve(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus);
        let m = self.modulus as usize;
        let mut out = Self::empty(self.modulus);
        for (i, &a) in self.counts.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.counts.iter().enumerate() {
                out.counts[(i + j) % m] += a * b;
            }
        }
        out
    }
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime_u64(p) {
        return invalid(format!("{p} is not an odd prime"));
    }
    if p >= 1 << 32 {
        return invalid(format!("prime {p} too large"));
    }
    Ok(())
}

fn chi(p: u64, lower: &[u64]) -> i8 {
    let f = FpPoly::monic(p, lower).expect("validated prime");
    legendre(f.discriminant(), p)
}

/// `sum_{f in M_{n,p}} (Disc f / p)` by exhaustive enumeration.
pub fn charsum_disc_total(p: u64, n: usize, budget: Budget) -> Result<i64> {
    require_odd_prime(p)?;
    if n < 2 {
        return invalid("degree must be at least 2");
    }
    budget.check_power(p, n as u32, "charsum_disc_total")?;
    Ok((0..p)
        .into_par_iter()
        .map(|top| {
            let mut s = 0i64;
            for_each_monic_with_top(p, n, top, |lower| s += chi(p, lower) as i64);
            s
        })
        .sum())
}

/// `S(λ) = sum_{f in M_{n,p}} (Disc f / p) e_p(<λ∘f>)` by direct enumeration.
pub fn mixed_charsum(p: u64, n: usize, lambda: &LambdaVector, budget: Budget) -> Result<ExactCharSum> {
    require_odd_prime(p)?;
    if n < 2 {
        return invalid("degree must be at least 2");
    }
    if lambda.p != p || lambda.lambda.len() != n {
        return invalid(format!("lambda must have {n} components modulo {p}"));
    }
    budget.check_power(p, n as u32, "mixed_charsum")?;
    Ok((0..p)
        .into_par_iter()
        .map(|top| {
            let mut acc = ExactCharSum::empty(p);
            for_each_monic_with_top(p, n, top, |lower| {
                acc.counts[lambda.pair(lower) as usize] += chi(p, lower) as i64;
            });
            acc
        })
        .reduce(|| ExactCharSum::empty(p), ExactCharSum::merge))
}

/// Result of evaluating `S(λ)` for every `λ` at once.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub p: u64,
    pub n: usize,
    /// `max_{λ ≠ 0} |S(λ)| / p^{n-1}`.
    pub max_ratio: f64,
    pub argmax: Vec<u64>,
    /// True when `S(0)` vanished exactly.
    pub zero_frequency_vanishes: bool,
}

/// All `p^n` exact sums `S(λ)`, indexed by `λ` in base `p` with `λ_1` most
/// significant. Computed as a separable transform, one coefficient axis at a
/// time, so the cost is `n·p^{n+2}` rather than `p^{2n}`.
pub(crate) fn sweep_tensor(p: u64, n: usize, budget: Budget) -> Result<Vec<ExactCharSum>> {
    require_odd_prime(p)?;
    if n < 2 {
        return invalid("degree must be at least 2");
    }
    budget.check_power(p, n as u32 + 1, "mixed_charsum_sweep")?;
    let pu = p as usize;
    let size = pu.pow(n as u32);
    let mut table = vec![0i64; size * pu];
    for top in 0..p {
        let mut idx = top as usize * pu.pow(n as u32 - 1);
        for_each_monic_with_top(p, n, top, |lower| {
            table[idx * pu] = chi(p, lower) as i64;
            idx += 1;
        });
    }
    for axis in 0..n {
        let stride = pu.pow((n - 1 - axis) as u32);
        let src = &table;
        let mut out = vec![0i64; size * pu];
        out.par_chunks_mut(pu).enumerate().for_each(|(idx, cell)| {
            let freq = (idx / stride) % pu;
            let base = idx - freq * stride;
            for a in 0..pu {
                let from = &src[(base + a * stride) * pu..][..pu];
                let shift = (freq * a) % pu;
                for (r, &c) in from.iter().enumerate() {
                    if c != 0 {
                        cell[(r + shift) % pu] += c;
                    }
                }
            }
        });
        table = out;
    }
    Ok(table
        .chunks(pu)
        .map(|c| ExactCharSum {
            modulus: p,
            counts: c.to_vec(),
        })
        .collect())
}

/// Maximum of `|S(λ)| / p^{n-1}` over all nonzero `λ`.
pub fn mixed_charsum_sweep(p: u64, n: usize, budget: Budget) -> Result<SweepReport> {
    let sums = sweep_tensor(p, n, budget)?;
    let scale = (p as f64).powi(n as i32 - 1);
    let mut best = (0.0f64, 0usize);
    for (idx, s) in sums.iter().enumerate().skip(1) {
        let r = s.abs() / scale;
        if r > best.0 {
            best = (r, idx);
        }
    }
    Ok(SweepReport {
        p,
        n,
        max_ratio: best.0,
        argmax: digits(best.1, p as usize, n),
        zero_frequency_vanishes: sums[0].is_exact_zero(),
    })
}

fn digits(mut idx: usize, base: usize, n: usize) -> Vec<u64> {
    let mut d = vec![0u64; n];
    for slot in d.iter_mut().rev() {
        *slot = (idx % base) as u64;
        idx /= base;
    }
    d
}

/// Direct and CRT-composed values of the modulus-`pq` sum.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JacobiCharsum {
    pub m: u64,
    pub n: usize,
    pub direct: ExactCharSum,
    pub crt: ExactCharSum,
}

fn disc_mod(lower: &[i64], m: u64) -> i64 {
    discriminant_i64(lower)
        .mod_floor(&BigInt::from(m))
        .to_i64()
        .expect("residue")
}

/// `sum_{a mod m} (Disc f_a / m) e_m(sum_j λ_j a_j)` with `m = pq`, where
/// `λ_j` pairs with the coefficient of `X^j`.
///
/// The sum is computed by direct enumeration over `(Z/m)^n` and again as
/// `S_p(q̄λ)·S_q(p̄λ)`; the two exact values must coincide.
pub fn jacobi_charsum(p: u64, q: u64, n: usize, lambda: &[u64], budget: Budget) -> Result<JacobiCharsum> {
    require_odd_prime(p)?;
    require_odd_prime(q)?;
    if p == q {
        return invalid("the two primes must be distinct");
    }
    if n < 2 || lambda.len() != n {
        return invalid(format!("need n >= 2 and {n} frequency components"));
    }
    let m = p * q;
    budget.check_power(m, n as u32, "jacobi_charsum")?;
    let lam: Vec<u64> = lambda.iter().map(|l| l % m).collect();

    let direct = (0..m)
        .into_par_iter()
        .map(|top| {
            let mut acc = ExactCharSum::empty(m);
            let mut lower = vec![0i64; n];
            lower[n - 1] = top as i64;
            loop {
                let j = jacobi_i64(disc_mod(&lower, m), m);
                if j != 0 {
                    let phase = lower
                        .iter()
                        .zip(&lam)
                        .fold(0, |s, (&a, &l)| (s + a as u64 * l) % m);
                    acc.counts[phase as usize] += j as i64;
                }
                let mut k = 0;
                loop {
                    if k + 1 >= n {
                        return acc;
                    }
                    lower[k] += 1;
                    if (lower[k] as u64) < m {
                        break;
                    }
                    lower[k] = 0;
                    k += 1;
                }
            }
        })
        .reduce(|| ExactCharSum::empty(m), ExactCharSum::merge);

    let q_bar = pow_mod(q % p, p - 2, p);
    let p_bar = pow_mod(p % q, q - 2, q);
    let as_vector = |modulus: u64, twist: u64| {
        // LambdaVector pairs λ_k with a_{n-k}
        let comps = (0..n)
            .map(|k| (lam[n - 1 - k] % modulus) * twist % modulus)
            .collect();
        LambdaVector::new(modulus, comps)
    };
    let sp = mixed_charsum(p, n, &as_vector(p, q_bar), budget)?;
    let sq = mixed_charsum(q, n, &as_vector(q, p_bar), budget)?;
    let crt = sp.embed(m, q).convolve(&sq.embed(m, p));

    if crt != direct {
        return Err(Error::InternalInconsistency(format!(
            "CRT composition disagrees with direct sum for m={m}, n={n}, lambda={lam:?}"
        )));
    }
    Ok(JacobiCharsum { m, n, direct, crt })
}

/// Exhaustive `sum_{f in P_n(H)} (Disc f / m)` with the comparison value
/// `H^{n-1} log m + m^{n-1} (log m)^n`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoxCharsum {
    pub m: u64,
    pub n: usize,
    pub h: u64,
    pub polynomials: u64,
    pub sum: i64,
    pub bound: f64,
}

pub fn box_charsum(p: u64, q: u64, n: usize, h: u64, budget: Budget) -> Result<BoxCharsum> {
    require_odd_prime(p)?;
    require_odd_prime(q)?;
    if p == q {
        return invalid("the two primes must be distinct");
    }
    if n < 1 || h < 1 {
        return invalid("need n >= 1 and H >= 1");
    }
    let side = 2 * h - 1;
    let total = budget.check_power(side, n as u32, "box_charsum")?;
    let m = p * q;
    let hi = h as i64 - 1;
    let sum = (-hi..=hi)
        .into_par_iter()
        .map(|top| {
            let mut s = 0i64;
            let mut lower = vec![-hi; n];
            lower[n - 1] = top;
            loop {
                s += jacobi_i64(disc_mod(&lower, m), m) as i64;
                let mut k = 0;
                loop {
                    if k + 1 >= n {
                        return s;
                    }
                    lower[k] += 1;
                    if lower[k] <= hi {
                        break;
                    }
                    lower[k] = -hi;
                    k += 1;
                }
            }
        })
        .sum();
    let lm = (m as f64).ln();
    let bound = (h as f64).powi(n as i32 - 1) * lm + (m as f64).powi(n as i32 - 1) * lm.powi(n as i32);
    Ok(BoxCharsum {
        m,
        n,
        h,
        polynomials: total,
        sum,
        bound,
    })
}
