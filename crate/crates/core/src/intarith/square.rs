use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

use super::jacobi::jacobi_u64;
use super::primes::primes_up_to;

/// Returns the non-negative square root when `k` is a perfect square.
pub fn is_perfect_square(k: &BigInt) -> Option<BigUint> {
    if k.is_negative() {
        return None;
    }
    let m = k.magnitude();
    let r = m.sqrt();
    (&r * &r == *m).then_some(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SquareTestOutcome {
    CertainlyNotSquare,
    ProbablySquare,
}

fn sample_pool() -> &'static [u64] {
    static POOL: OnceLock<Vec<u64>> = OnceLock::new();
    POOL.get_or_init(|| primes_up_to(1 << 20).into_iter().skip(1).collect())
}

/// Quadratic-residue screen over sampled odd primes.
///
/// The first sampled prime is always the smallest odd prime not dividing `k`;
/// the remaining `prime_count - 1` are drawn from the odd primes below 2^20
/// with a ChaCha generator seeded by `seed`. Primes dividing `k` are skipped.
/// Returns `CertainlyNotSquare` exactly when some sampled prime has
/// `(k / p) = -1`.
pub fn probabilistic_square_test(k: &BigInt, prime_count: usize, seed: u64) -> SquareTestOutcome {
    assert!(prime_count >= 1, "prime_count must be at least 1");
    assert!(!k.is_zero(), "k must be nonzero");
    let pool = sample_pool();
    let residue = |p: u64| (k % p as i64).to_i64().unwrap().rem_euclid(p as i64) as u64;
    let mut symbols = Vec::with_capacity(prime_count);
    if let Some(&p) = pool.iter().find(|&&p| residue(p) != 0) {
        symbols.push(jacobi_u64(residue(p), p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while symbols.len() < prime_count && attempts < 64 * prime_count {
        attempts += 1;
        let p = pool[rng.gen_range(0..pool.len())];
        let r = residue(p);
        if r != 0 {
            symbols.push(jacobi_u64(r, p));
        }
    }
    if symbols.contains(&-1) {
        SquareTestOutcome::CertainlyNotSquare
    } else {
        SquareTestOutcome::ProbablySquare
    }
}
