use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{for_each_monic_with_top, Budget, FpPoly};
use crate::error::{invalid, Result};
use crate::intarith::{is_prime_u64, mul_mod, pow_mod};

/// Lower coefficients of `u^n f((X + v)/u)` over `F_p` for monic `f` given by
/// `a_0..a_{n-1}`. The result is again monic.
pub fn transform_mod_p(p: u64, lower: &[u64], u: u64, v: u64) -> Vec<u64> {
    let n = lower.len();
    let u_inv = pow_mod(u % p, p - 2, p);
    // y = (X + v)/u, Horner: acc = acc·y + a_k, coefficients low-first
    let y = [mul_mod(v % p, u_inv, p), u_inv];
    let mut acc = vec![1u64];
    for k in (0..n).rev() {
        let mut next = vec![0u64; acc.len() + 1];
        for (i, &c) in acc.iter().enumerate() {
            next[i] = (next[i] + mul_mod(c, y[0], p)) % p;
            next[i + 1] = (next[i + 1] + mul_mod(c, y[1], p)) % p;
        }
        next[0] = (next[0] + lower[k]) % p;
        acc = next;
    }
    let un = pow_mod(u % p, n as u64, p);
    acc.truncate(n);
    acc.into_iter().map(|c| mul_mod(c, un, p)).collect()
}

fn validate(p: u64, n: usize, budget: Budget, what: &str) -> Result<()> {
    if p < 3 || !is_prime_u64(p) || p >= 1 << 32 {
        return invalid(format!("{p} is not an admissible odd prime"));
    }
    if n < 1 {
        return invalid("degree must be at least 1");
    }
    budget.check_power(p, n as u32 + 2, what)?;
    Ok(())
}

/// Checks `Disc(f_{u,v}) = u^{n(n-1)} Disc(f)` over `F_p` for every monic
/// `f` of degree `n` and every `(u, v) in F_p^* x F_p`.
pub fn ff_transform_disc_check(p: u64, n: usize, budget: Budget) -> Result<bool> {
    validate(p, n, budget, "ff_transform_disc_check")?;
    let e = (n * n.saturating_sub(1)) as u64;
    Ok((0..p).into_par_iter().all(|top| {
        let mut ok = true;
        for_each_monic_with_top(p, n, top, |lower| {
            if !ok {
                return;
            }
            let d = FpPoly::monic(p, lower).expect("prime").discriminant();
            for u in 1..p {
                let expected = mul_mod(pow_mod(u, e, p), d, p);
                for v in 0..p {
                    let g = FpPoly::monic(p, &transform_mod_p(p, lower, u, v)).expect("prime");
                    if g.discriminant() != expected {
                        ok = false;
                        return;
                    }
                }
            }
        });
        ok
    }))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExceptionalSetReport {
    pub p: u64,
    pub n: usize,
    pub count: u64,
    pub constant: f64,
    pub bound: f64,
    pub within_bound: bool,
}

/// Counts monic `f` over `F_p` whose `p(p-1)` transforms `f_{u,v}` are not
/// pairwise distinct, and compares with `C·p^{floor(n/2)+1}`.
pub fn exceptional_set_count(p: u64, n: usize, constant: f64, budget: Budget) -> Result<ExceptionalSetReport> {
    validate(p, n, budget, "exceptional_set_count")?;
    if p as usize <= n {
        return invalid(format!("need p > n, got p={p}, n={n}"));
    }
    if constant.is_nan() || constant <= 0.0 {
        return invalid("constant must be positive");
    }
    let count: u64 = (0..p)
        .into_par_iter()
        .map(|top| {
            let mut c = 0u64;
            let mut seen = HashSet::with_capacity((p * (p - 1)) as usize);
            for_each_monic_with_top(p, n, top, |lower| {
                seen.clear();
                let distinct = (1..p)
                    .flat_map(|u| (0..p).map(move |v| (u, v)))
                    .all(|(u, v)| seen.insert(transform_mod_p(p, lower, u, v)));
                if !distinct {
                    c += 1;
                }
            });
            c
        })
        .sum();
    let bound = constant * (p as f64).powi(n as i32 / 2 + 1);
    Ok(ExceptionalSetReport {
        p,
        n,
        count,
        constant,
        bound,
        within_bound: count as f64 <= bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::ToPrimitive;

    #[test]
    fn documented_single_case() {
        // X^2 + 1, u = 2, v = 1 over F_5 gives X^2 + 2X
        assert_eq!(transform_mod_p(5, &[1, 0], 2, 1), vec![0, 2]);
        let g = FpPoly::monic(5, &[0, 2]).unwrap();
        assert_eq!(g.discriminant(), 4);
    }

    #[test]
    fn matches_rational_transform() {
        use crate::poly::{tschirnhaus_transform, MonicIntPoly};
        let p = 11u64;
        let f = MonicIntPoly::from_i64(&[3, -2, 5]).unwrap();
        for u in 1..p {
            for v in 0..p {
                let t = tschirnhaus_transform(
                    &f,
                    &BigRational::from_integer(BigInt::from(u)),
                    &BigRational::from_integer(BigInt::from(v)),
                ).unwrap();
                let pb = BigRational::from_integer(BigInt::from(p));
                let expected: Vec<u64> = t
                    .lower
                    .iter()
                    .take(3)
                    .map(|c| {
                        assert!(c.is_integer());
                        let r = c.to_integer() % pb.to_integer();
                        ((r.to_i64().unwrap() + p as i64) % p as i64) as u64
                    })
                    .collect();
                assert_eq!(transform_mod_p(p, &[3, p - 2, 5], u, v), expected);
            }
        }
    }

    #[test]
    fn sweeps() {
        assert!(ff_transform_disc_check(5, 2, Budget::default()).unwrap());
        assert!(ff_transform_disc_check(5, 3, Budget::default()).unwrap());
    }

    #[test]
    fn quadratic_exceptional_count_matches_pairwise_oracle() {
        let p = 5u64;
        let mut oracle = 0;
        for a1 in 0..p {
            for a0 in 0..p {
                let mut images = Vec::new();
                for u in 1..p {
                    for v in 0..p {
                        // u^2((X+v)/u)^2 + a1 u^2 (X+v)/u + a0 u^2
                        let c1 = (2 * v + a1 * u) % p;
                        let c0 = (v * v + a1 * u * v + a0 * u * u) % p;
                        images.push((c0, c1));
                    }
                }
                let clash = (0..images.len())
                    .any(|i| (i + 1..images.len()).any(|j| images[i] == images[j]));
                oracle += clash as u64;
            }
        }
        let r = exceptional_set_count(5, 2, 8.0, Budget::default()).unwrap();
        assert_eq!(r.count, oracle);
        assert!(r.within_bound);
    }
}
