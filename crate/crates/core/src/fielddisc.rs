//! Field discriminants through Dedekind's criterion.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::ffpoly::{squarefree_factorization, Budget, FpPoly};
use crate::intarith::{factorize, is_prime_u64, FactorizationLimits, SquarefreeDecomposition};
use crate::irreducibility::is_irreducible;
use crate::poly::{for_each_box_with_top, IntPoly, MonicIntPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PMaximality {
    Maximal,
    NotMaximal,
}

/// Dedekind's criterion at `p`, assuming `f` is already known irreducible.
fn dedekind_unchecked(f: &MonicIntPoly, p: u64) -> Result<PMaximality> {
    let int_f = f.to_int_poly();
    let fbar = FpPoly::from_int_poly(&int_f, p)?;
    let mut g = FpPoly::new(p, vec![1])?;
    for (part, _) in squarefree_factorization(&fbar)? {
        g = g.mul(&part);
    }
    let (h, rem) = fbar.div_rem(&g);
    debug_assert!(rem.is_zero());
    let lifted = g.to_int_poly().mul(&h.to_int_poly()).sub(&int_f);
    let pb = BigInt::from(p);
    let big_f = IntPoly::new(
        lifted
            .coeffs()
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(&pb);
                debug_assert!(r.is_zero());
                q
            })
            .collect(),
    );
    let fbar_big = FpPoly::from_int_poly(&big_f, p)?;
    let common = fbar_big.gcd(&g).gcd(&h);
    Ok(if common.degree() >= 1 {
        PMaximality::NotMaximal
    } else {
        PMaximality::Maximal
    })
}

fn small_prime(p: &BigUint) -> Result<u64> {
    p.to_u64()
        .filter(|&q| q < 1 << 62)
        .ok_or_else(|| Error::BudgetExceeded(format!("prime {p} too large for the local test")))
}

/// Is `Z[α]` maximal at `p`, for `α` a root of the irreducible `f`?
pub fn dedekind_p_maximal(f: &MonicIntPoly, p: u64) -> Result<PMaximality> {
    if !is_prime_u64(p) {
        return invalid(format!("{p} is not prime"));
    }
    if !is_irreducible(f)?.is_irreducible() {
        return invalid(format!("{f} is reducible"));
    }
    dedekind_unchecked(f, p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DedekindReport {
    pub polynomial: MonicIntPoly,
    pub disc: BigInt,
    /// One entry per prime whose square divides `disc`.
    pub tested_primes: Vec<(BigUint, PMaximality)>,
    /// `Δ(f)`, present when every tested prime is maximal (and then equal to `disc`).
    pub certified_field_disc: Option<BigInt>,
    /// Square-free part of `Δ(f)`, which always equals that of `disc`.
    pub sf_part_of_field_disc: SquarefreeDecomposition,
    /// `r` with `disc = r^2 Δ(f)`, when `Δ(f)` is certified.
    pub index: Option<BigUint>,
}

impl DedekindReport {
    pub fn is_certified(&self) -> bool {
        self.certified_field_disc.is_some()
    }
}

fn report_for_irreducible(f: &MonicIntPoly, limits: &FactorizationLimits) -> Result<DedekindReport> {
    let disc = f.discriminant();
    let fac = factorize(&disc, limits)?;
    let mut u = BigInt::from(fac.sign);
    let mut v = BigUint::one();
    let mut tested = Vec::new();
    for (p, e) in &fac.factors {
        if e % 2 == 1 {
            u *= BigInt::from(p.clone());
        }
        v *= p.pow(e / 2);
        if *e >= 2 {
            tested.push((p.clone(), dedekind_unchecked(f, small_prime(p)?)?));
        }
    }
    let all_maximal = tested.iter().all(|(_, m)| *m == PMaximality::Maximal);
    Ok(DedekindReport {
        polynomial: f.clone(),
        certified_field_disc: all_maximal.then(|| disc.clone()),
        index: all_maximal.then(BigUint::one),
        disc,
        tested_primes: tested,
        sf_part_of_field_disc: SquarefreeDecomposition { u, v },
    })
}

/// Field-discriminant report for an irreducible `f`.
pub fn field_disc(f: &MonicIntPoly) -> Result<DedekindReport> {
    field_disc_with(f, &FactorizationLimits::default())
}

pub fn field_disc_with(f: &MonicIntPoly, limits: &FactorizationLimits) -> Result<DedekindReport> {
    if !is_irreducible(f)?.is_irreducible() {
        return invalid(format!("{f} is reducible"));
    }
    report_for_irreducible(f, limits)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonogenicDensity {
    pub n: usize,
    pub h: u64,
    pub irreducible: u64,
    pub certified: u64,
    pub fraction: BigRational,
}

impl MonogenicDensity {
    pub fn estimate(&self) -> f64 {
        self.certified as f64 / self.irreducible as f64
    }
}

/// Fraction of `f in I_n(H)` for which Dedekind certifies `Δ(f) = Disc(f)`.
pub fn monogenic_density(n: usize, h: u64, budget: Budget) -> Result<MonogenicDensity> {
    if n < 2 || h < 1 {
        return invalid("need n >= 2 and H >= 1");
    }
    budget.check_power(2 * h - 1, n as u32, "monogenic_density")?;
    let hi = h as i64 - 1;
    let limits = FactorizationLimits::default();
    let parts = (-hi..=hi)
        .into_par_iter()
        .map(|top| -> Result<(u64, u64)> {
            let (mut irr, mut cert) = (0, 0);
            let mut err = None;
            for_each_box_with_top(n, -hi, hi, top, |lower| {
                if err.is_some() {
                    return;
                }
                let mut step = || -> Result<()> {
                    let f = MonicIntPoly::from_i64(lower)?;
                    if is_irreducible(&f)?.is_irreducible() {
                        irr += 1;
                        cert += report_for_irreducible(&f, &limits)?.is_certified() as u64;
                    }
                    Ok(())
                };
                if let Err(e) = step() {
                    err = Some(e);
                }
            });
            err.map_or(Ok((irr, cert)), Err)
        })
        .collect::<Result<Vec<_>>>()?;
    let (irreducible, certified) = parts
        .into_iter()
        .fold((0, 0), |(a, b), (c, d)| (a + c, b + d));
    if irreducible == 0 {
        return Err(Error::EmptySample(format!("no irreducible polynomials for n={n}, H={h}")));
    }
    Ok(MonogenicDensity {
        n,
        h,
        irreducible,
        certified,
        fraction: BigRational::new(certified.into(), irreducible.into()),
    })
}
