use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::factor::{factorize, FactorizationLimits};
use crate::error::{invalid, Result};

/// `k = u * v^2` with `u` square-free, `sign(u) = sign(k)` and `v >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SquarefreeDecomposition {
    pub u: BigInt,
    pub v: BigUint,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self) -> BigInt {
        &self.u * BigInt::from(&self.v * &self.v)
    }

    pub fn abs_u(&self) -> BigUint {
        self.u.magnitude().clone()
    }
}

/// Square-free part with default factorization limits.
pub fn squarefree_part(k: &BigInt) -> Result<SquarefreeDecomposition> {
    squarefree_part_with(k, &FactorizationLimits::default())
}

pub fn squarefree_part_with(
    k: &BigInt,
    limits: &FactorizationLimits,
) -> Result<SquarefreeDecomposition> {
    if k.is_zero() {
        return invalid("square-free part of 0 is undefined");
    }
    let f = factorize(k, limits)?;
    let mut u = BigUint::one();
    let mut v = BigUint::one();
    for (p, e) in &f.factors {
        if e % 2 == 1 {
            u *= p;
        }
        v *= p.pow(e / 2);
    }
    let sign = if k.is_negative() { Sign::Minus } else { Sign::Plus };
    Ok(SquarefreeDecomposition {
        u: BigInt::from_biguint(sign, u),
        v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intarith::factorize_default;
    use crate::Error;

    fn sf(k: i64) -> (i64, u64) {
        let d = squarefree_part(&BigInt::from(k)).unwrap();
        (
            i64::try_from(&d.u).unwrap(),
            u64::try_from(&d.v).unwrap(),
        )
    }

    #[test]
    fn documented_values() {
        assert_eq!(sf(12), (3, 2));
        assert_eq!(sf(-2048), (-2, 32));
        assert_eq!(sf(283), (283, 1));
        assert_eq!(sf(-1), (-1, 1));
        assert_eq!(sf(-4), (-1, 2));
    }

    #[test]
    fn zero_rejected() {
        assert!(matches!(
            squarefree_part(&BigInt::zero()),
            Err(Error::InvalidInput(_))
        ));
    }

    // Exhaustive round trip with the square-free check done by re-factoring u.
    #[test]
    fn round_trip_up_to_one_million() {
        let mut sf_table = vec![0u32; 1_000_001];
        // smallest-prime-factor sieve gives an independent square-freeness test
        let mut spf = vec![0u32; 1_000_001];
        for i in 2..=1_000_000usize {
            if spf[i] == 0 {
                let mut j = i;
                while j <= 1_000_000 {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        let is_sqfree = |mut n: usize| {
            while n > 1 {
                let p = spf[n] as usize;
                n /= p;
                if n.is_multiple_of(p) {
                    return false;
                }
            }
            true
        };
        for k in 1..=1_000_000i64 {
            let d = squarefree_part(&BigInt::from(k)).unwrap();
            assert_eq!(d.reconstruct(), BigInt::from(k));
            let u = u64::try_from(&d.u).unwrap() as usize;
            assert!(is_sqfree(u), "u = {u} for k = {k}");
            sf_table[k as usize] = u as u32;
            let neg = squarefree_part(&BigInt::from(-k)).unwrap();
            assert_eq!(neg.u, -d.u.clone());
            assert_eq!(neg.v, d.v);
        }
        // spot-check re-factorization route on a stride
        for k in (1..=1_000_000usize).step_by(997) {
            let f = factorize_default(&BigInt::from(sf_table[k])).unwrap();
            assert!(f.factors.iter().all(|(_, e)| *e == 1));
        }
    }
}
