//! Exact irreducibility over Q for monic integer polynomials.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::ffpoly::{distinct_degree_factorization, factor_mod_p, Budget, FpPoly};
use crate::intarith::{factorize, is_prime_u64, FactorizationLimits};
use crate::poly::{for_each_box_with_top, IntPoly, MonicIntPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IrreducibilityStatus {
    Irreducible,
    Reducible,
    InconclusiveEscalated,
}

/// Which step of the pipeline settled the question.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    Linear,
    RepeatedFactor,
    RationalRoot(BigInt),
    NoRationalRoot,
    Eisenstein(BigUint),
    DegreePatterns(Vec<u64>),
    FactorCombination { prime: u64, modular_factors: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityVerdict {
    pub status: IrreducibilityStatus,
    /// Nontrivial monic factor, present exactly for reducible verdicts.
    pub witness: Option<MonicIntPoly>,
    pub certificate: Certificate,
}

impl IrreducibilityVerdict {
    fn irreducible(certificate: Certificate) -> Self {
        Self {
            status: IrreducibilityStatus::Irreducible,
            witness: None,
            certificate,
        }
    }

    fn reducible(witness: MonicIntPoly, certificate: Certificate) -> Self {
        Self {
            status: IrreducibilityStatus::Reducible,
            witness: Some(witness),
            certificate,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.status == IrreducibilityStatus::Irreducible
    }

    /// Re-multiplication check: the witness must divide `f` exactly and be a
    /// proper factor.
    pub fn witness_divides(&self, f: &MonicIntPoly) -> bool {
        match &self.witness {
            None => self.status != IrreducibilityStatus::Reducible,
            Some(g) => {
                g.degree() < f.degree()
                    && f.to_int_poly().exact_div_monic(&g.to_int_poly()).is_some()
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityOptions {
    /// Number of good primes used for the degree-pattern screen.
    pub pattern_primes: usize,
    /// Maximum number of modular-factor subsets tried by the fallback.
    pub node_budget: u64,
    /// Skip the screens and go straight to the exact fallback.
    pub force_fallback: bool,
}

impl Default for IrreducibilityOptions {
    fn default() -> Self {
        Self {
            pattern_primes: 6,
            node_budget: 1 << 22,
            force_fallback: false,
        }
    }
}

/// A prime `p` with Eisenstein's criterion satisfied, searched among the
/// prime divisors of `a_0`.
pub fn eisenstein_test(f: &MonicIntPoly) -> Result<Option<BigUint>> {
    let a0 = &f.coeffs()[0];
    if a0.is_zero() {
        return Ok(None);
    }
    let fac = factorize(a0, &FactorizationLimits::default())?;
    for (p, e) in &fac.factors {
        if *e != 1 {
            continue;
        }
        let pb = BigInt::from(p.clone());
        if f.coeffs().iter().all(|c| c.is_multiple_of(&pb)) {
            return Ok(Some(p.clone()));
        }
    }
    Ok(None)
}

fn linear(root: &BigInt) -> MonicIntPoly {
    MonicIntPoly::new(vec![-root]).expect("degree 1")
}

/// Integer roots of `f` (all rational roots of a monic integer polynomial
/// are integers dividing `a_0`).
fn integer_root(f: &MonicIntPoly) -> Result<Option<BigInt>> {
    let a0 = &f.coeffs()[0];
    if a0.is_zero() {
        return Ok(Some(BigInt::zero()));
    }
    let cauchy = f.height() + 1u32;
    let limit = a0.abs().min(cauchy);
    let test = |d: &BigInt| -> Option<BigInt> {
        [d.clone(), -d]
            .into_iter()
            .find(|r| f.eval(r).is_zero())
    };
    if let Some(small) = limit.to_u64().filter(|&l| l <= 1_000_000) {
        let a0_small = a0.abs();
        for d in 1..=small {
            let d = BigInt::from(d);
            if a0_small.is_multiple_of(&d) {
                if let Some(r) = test(&d) {
                    return Ok(Some(r));
                }
            }
        }
        return Ok(None);
    }
    let fac = factorize(a0, &FactorizationLimits::default())?;
    let mut divisors = vec![BigInt::one()];
    for (p, e) in &fac.factors {
        let p = BigInt::from(p.clone());
        let mut next = Vec::new();
        for d in &divisors {
            let mut q = d.clone();
            for _ in 0..=*e {
                if q <= limit {
                    next.push(q.clone());
                }
                q *= &p;
            }
        }
        divisors = next;
    }
    Ok(divisors.iter().find_map(test))
}

/// Monic gcd over Q of two integer polynomials.
fn rational_gcd(a: &IntPoly, b: &IntPoly) -> Vec<BigRational> {
    let to_q = |p: &IntPoly| -> Vec<BigRational> {
        p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()
    };
    let trim = |v: &mut Vec<BigRational>| {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
    };
    let (mut x, mut y) = (to_q(a), to_q(b));
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let mut r = x.clone();
        let dy = y.len() - 1;
        let lc = y[dy].clone();
        while r.len() > dy {
            let c = r.last().unwrap().clone() / &lc;
            let shift = r.len() - 1 - dy;
            for (i, yc) in y.iter().enumerate() {
                r[shift + i] -= &c * yc;
            }
            r.pop();
            trim(&mut r);
        }
        x = y;
        y = r;
    }
    let lc = x.last().cloned().unwrap_or_else(BigRational::one);
    x.into_iter().map(|c| c / &lc).collect()
}

/// Factor-degree multiset of `f` mod `p` (squarefree reduction assumed).
fn degree_pattern(f: &MonicIntPoly, p: u64) -> Result<Vec<usize>> {
    let fp = FpPoly::from_int_poly(&f.to_int_poly(), p)?;
    let mut degs = Vec::new();
    for (g, d) in distinct_degree_factorization(&fp)? {
        degs.extend(std::iter::repeat_n(d, g.degree() as usize / d));
    }
    Ok(degs)
}

fn subset_sums(degs: &[usize], n: usize) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0]);
    for &d in degs {
        let shifted: Vec<usize> = sums.iter().map(|s| s + d).filter(|&s| s <= n).collect();
        sums.extend(shifted);
    }
    sums.retain(|&s| s > 0 && s < n);
    sums
}

/// Intersects the achievable proper-factor degrees over several good primes.
/// `Some(primes)` proves irreducibility; `None` is inconclusive.
pub fn degree_pattern_screen(f: &MonicIntPoly, disc: &BigInt, count: usize) -> Result<Option<Vec<u64>>> {
    let n = f.degree();
    let mut possible: BTreeSet<usize> = (1..n).collect();
    let mut used = Vec::new();
    let mut p = 2u64;
    while used.len() < count {
        p += 1;
        if !is_prime_u64(p) || (p as usize) <= n || disc.is_multiple_of(&BigInt::from(p)) {
            continue;
        }
        let sums = subset_sums(&degree_pattern(f, p)?, n);
        possible = possible.intersection(&sums).copied().collect();
        used.push(p);
        if possible.is_empty() {
            return Ok(Some(used));
        }
    }
    Ok(None)
}

fn mignotte_bound(f: &MonicIntPoly) -> BigInt {
    // 2^n (1 + H sqrt(n)), with sqrt(n) rounded up
    let n = f.degree();
    let root_n = (1..).find(|k: &u64| k * k >= n as u64).unwrap();
    (BigInt::one() << n) * (f.height() * root_n + 1u32)
}

fn symmetric_lift(g: &FpPoly) -> Option<MonicIntPoly> {
    let p = g.p();
    let c: Vec<BigInt> = g.coeffs()[..g.coeffs().len() - 1]
        .iter()
        .map(|&c| {
            if c > p / 2 {
                BigInt::from(c) - p
            } else {
                BigInt::from(c)
            }
        })
        .collect();
    MonicIntPoly::new(c).ok()
}

/// Exact test: factor mod a prime `P > 2B` (with `B` the Mignotte bound) and
/// try every product of at most half the modular factors as an integer divisor.
pub fn factor_combination_verdict(
    f: &MonicIntPoly,
    disc: &BigInt,
    node_budget: u64,
) -> Result<IrreducibilityVerdict> {
    let n = f.degree();
    let bound = mignotte_bound(f) * 2u32;
    let start = bound
        .to_u64()
        .filter(|&b| b < (1 << 31))
        .ok_or_else(|| Error::BudgetExceeded(format!("Mignotte bound {bound} too large for the modular fallback")))?;
    let mut prime = start + 1;
    while !is_prime_u64(prime) || disc.is_multiple_of(&BigInt::from(prime)) {
        prime += 1;
    }
    let fp = FpPoly::from_int_poly(&f.to_int_poly(), prime)?;
    let factors: Vec<FpPoly> = factor_mod_p(&fp)?.into_iter().map(|(g, _)| g).collect();
    let r = factors.len();
    let certificate = Certificate::FactorCombination {
        prime,
        modular_factors: r,
    };
    if r == 1 {
        return Ok(IrreducibilityVerdict::irreducible(certificate));
    }
    let nodes = 1u64.checked_shl(r as u32 - 1).unwrap_or(u64::MAX);
    if nodes > node_budget {
        return Err(Error::BudgetExceeded(format!(
            "{r} modular factors exceed the fallback node budget {node_budget}"
        )));
    }
    let target = f.to_int_poly();
    let mut best: Option<MonicIntPoly> = None;
    // subsets that include factor 0 cover every split up to complement
    for mask in 0u64..(1 << (r - 1)) {
        let mut g = factors[0].clone();
        for (i, h) in factors.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                g = g.mul(h);
            }
        }
        if g.degree() as usize == n {
            continue;
        }
        for candidate in [g.clone(), fp.div_rem(&g).0] {
            let lifted = symmetric_lift(&candidate).expect("positive degree");
            let smaller = best
                .as_ref()
                .is_none_or(|b| (lifted.degree(), &lifted) < (b.degree(), b));
            if smaller && target.exact_div_monic(&lifted.to_int_poly()).is_some() {
                best = Some(lifted);
            }
        }
    }
    Ok(match best {
        Some(g) => IrreducibilityVerdict::reducible(g, certificate),
        None => IrreducibilityVerdict::irreducible(certificate),
    })
}

pub fn is_irreducible(f: &MonicIntPoly) -> Result<IrreducibilityVerdict> {
    is_irreducible_with(f, &IrreducibilityOptions::default())
}

pub fn is_irreducible_with(f: &MonicIntPoly, opts: &IrreducibilityOptions) -> Result<IrreducibilityVerdict> {
    let n = f.degree();
    if n == 1 {
        return Ok(IrreducibilityVerdict::irreducible(Certificate::Linear));
    }
    if !opts.force_fallback {
        if let Some(root) = integer_root(f)? {
            return Ok(IrreducibilityVerdict::reducible(linear(&root), Certificate::RationalRoot(root)));
        }
    }
    let disc = f.discriminant();
    if disc.is_zero() {
        let g = rational_gcd(&f.to_int_poly(), &f.derivative());
        let lower: Vec<BigInt> = g[..g.len() - 1]
            .iter()
            .map(|c| {
                if !c.is_integer() {
                    return Err(Error::InternalInconsistency("non-integral repeated factor".into()));
                }
                Ok(c.to_integer())
            })
            .collect::<Result<_>>()?;
        return Ok(IrreducibilityVerdict::reducible(
            MonicIntPoly::new(lower)?,
            Certificate::RepeatedFactor,
        ));
    }
    if !opts.force_fallback {
        if n <= 3 {
            return Ok(IrreducibilityVerdict::irreducible(Certificate::NoRationalRoot));
        }
        if let Some(p) = eisenstein_test(f)? {
            return Ok(IrreducibilityVerdict::irreducible(Certificate::Eisenstein(p)));
        }
        if let Some(primes) = degree_pattern_screen(f, &disc, opts.pattern_primes)? {
            return Ok(IrreducibilityVerdict::irreducible(Certificate::DegreePatterns(primes)));
        }
    }
    factor_combination_verdict(f, &disc, opts.node_budget)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IrreducibleCount {
    pub n: usize,
    pub h: u64,
    pub irreducible: u64,
    /// `(2H - 1)^n`, the number of polynomials in the box.
    pub lattice_points: u64,
    /// `2^n H^n`.
    pub main_term: f64,
}

impl IrreducibleCount {
    pub fn ratio_to_main_term(&self) -> f64 {
        self.irreducible as f64 / self.main_term
    }

    pub fn ratio_to_lattice_points(&self) -> f64 {
        self.irreducible as f64 / self.lattice_points as f64
    }
}

/// `#I_n(H)`: monic irreducible degree-`n` polynomials with all `|a_i| < H`.
pub fn count_irreducible(n: usize, h: u64, budget: Budget) -> Result<IrreducibleCount> {
    if n < 1 || h < 1 {
        return invalid("need n >= 1 and H >= 1");
    }
    let total = budget.check_power(2 * h - 1, n as u32, "count_irreducible")?;
    let hi = h as i64 - 1;
    let irreducible = (-hi..=hi)
        .into_par_iter()
        .map(|top| -> Result<u64> {
            let mut count = 0;
            let mut err = None;
            for_each_box_with_top(n, -hi, hi, top, |lower| {
                if err.is_some() {
                    return;
                }
                match MonicIntPoly::from_i64(lower).and_then(|f| is_irreducible(&f)) {
                    Ok(v) => count += v.is_irreducible() as u64,
                    Err(e) => err = Some(e),
                }
            });
            err.map_or(Ok(count), Err)
        })
        .collect::<Result<Vec<u64>>>()?
        .into_iter()
        .sum();
    Ok(IrreducibleCount {
        n,
        h,
        irreducible,
        lattice_points: total,
        main_term: (2.0 * h as f64).powi(n as i32),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(lower: &[i64]) -> MonicIntPoly {
        MonicIntPoly::from_i64(lower).unwrap()
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(eisenstein_test(&poly(&[-2, 0, 0, 0])).unwrap(), Some(BigUint::from(2u32)));
        assert_eq!(eisenstein_test(&poly(&[-2, 4, 0])).unwrap(), Some(BigUint::from(2u32)));
        assert_eq!(eisenstein_test(&poly(&[-1, 0])).unwrap(), None);
        assert_eq!(eisenstein_test(&poly(&[0, 0])).unwrap(), None);
    }

    #[test]
    fn documented_verdicts() {
        assert!(is_irreducible(&poly(&[-1, -1, 0])).unwrap().is_irreducible());
        let v = is_irreducible(&poly(&[1, 1, 0, 0, 0])).unwrap();
        assert_eq!(v.witness, Some(poly(&[1, 1])));
        assert!(v.witness_divides(&poly(&[1, 1, 0, 0, 0])));
        for n in 2..7 {
            let v = is_irreducible(&MonicIntPoly::from_i64(&vec![0; n]).unwrap()).unwrap();
            assert_eq!(v.witness, Some(poly(&[0])));
        }
    }

    #[test]
    fn fallback_finds_quadratic_products() {
        // (X^2 + X + 1)(X^2 - 3X + 5), no rational roots
        let f = poly(&[5, 2, 3, -2]);
        let opts = IrreducibilityOptions {
            force_fallback: true,
            ..Default::default()
        };
        let v = is_irreducible_with(&f, &opts).unwrap();
        assert_eq!(v.status, IrreducibilityStatus::Reducible);
        assert!(v.witness_divides(&f));
        let v = is_irreducible(&f).unwrap();
        assert_eq!(v.status, IrreducibilityStatus::Reducible);
        assert!(v.witness_divides(&f));
        // X^4 + 1 is reducible modulo every prime but irreducible over Q
        let g = poly(&[1, 0, 0, 0]);
        assert!(is_irreducible(&g).unwrap().is_irreducible());
        assert!(is_irreducible_with(&g, &opts).unwrap().is_irreducible());
    }

    #[test]
    fn repeated_factors() {
        // (X^2 + 1)^2 (X^2 + 2) = X^6 + 4X^4 + 5X^2 + 2
        let f = poly(&[2, 0, 5, 0, 4, 0]);
        let v = is_irreducible(&f).unwrap();
        assert_eq!(v.witness, Some(poly(&[1, 0])));
        assert!(v.witness_divides(&f));
    }

    #[test]
    fn small_counts() {
        // a_i in {-1,0,1}: reducible quadratics are those with an integer root
        let mut oracle = 0;
        for b in -1i64..=1 {
            for c in -1i64..=1 {
                let has_root = (-2i64..=2).any(|r| r * r + b * r + c == 0);
                oracle += (!has_root) as u64;
            }
        }
        let got = count_irreducible(2, 2, Budget::default()).unwrap();
        assert_eq!(got.irreducible, oracle);
        assert_eq!(got.lattice_points, 9);
        assert_eq!(count_irreducible(3, 1, Budget::default()).unwrap().irreducible, 0);
    }
}
