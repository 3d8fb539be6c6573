use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{mul_mod, pow_mod};

/// Bases making Miller-Rabin deterministic for every `n < 3.317e24`.
const DETERMINISTIC_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Sieve of Eratosthenes, inclusive of `n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Primes in the half-open interval `(lo, hi]`.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    primes_up_to(hi).into_iter().filter(|&p| p > lo).collect()
}

fn mr_round_u64(n: u64, d: u64, s: u32, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &DETERMINISTIC_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    DETERMINISTIC_BASES[..12]
        .iter()
        .all(|&a| mr_round_u64(n, d, s, a))
}

fn mr_round_big(n: &BigUint, n1: &BigUint, d: &BigUint, s: u64, a: &BigUint) -> bool {
    let mut x = a.modpow(d, n);
    if x.is_one() || &x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if &x == n1 {
            return true;
        }
    }
    false
}

/// Miller-Rabin: deterministic below 3.317e24, otherwise the fixed base set
/// plus `extra_rounds` bases drawn from a fixed-seed generator.
pub fn is_prime(n: &BigUint, extra_rounds: u32) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &DETERMINISTIC_BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let fixed = DETERMINISTIC_BASES
        .iter()
        .all(|&a| mr_round_big(n, &n1, &d, s, &BigUint::from(a)));
    if !fixed {
        return false;
    }
    // 3.317e24 < 2^82
    if n.bits() <= 81 {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e_ed0f_9a1e);
    (0..extra_rounds).all(|_| {
        let a = BigUint::from(rng.gen_range(2u64..u64::MAX)) % &n1;
        let a = if a < BigUint::from(2u8) { BigUint::from(2u8) } else { a };
        mr_round_big(n, &n1, &d, s, &a)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_counts() {
        assert_eq!(primes_up_to(100).len(), 25);
        assert_eq!(primes_up_to(200).len(), 46);
        assert_eq!(primes_up_to(10_000).len(), 1229);
        assert_eq!(primes_in_range(10, 20), vec![11, 13, 17, 19]);
    }

    #[test]
    fn mr_matches_sieve() {
        let sieve = primes_up_to(20_000);
        let mut it = sieve.iter().peekable();
        for n in 0..=20_000u64 {
            let expect = it.peek().is_some_and(|&&p| p == n);
            if expect {
                it.next();
            }
            assert_eq!(is_prime_u64(n), expect, "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // 3215031751 fools bases 2, 3, 5, 7
        assert!(!is_prime_u64(3_215_031_751));
        assert!(!is_prime_u64(3_825_123_056_546_413_051));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }

    #[test]
    fn big_primes() {
        let m127 = (BigUint::one() << 127) - BigUint::one();
        assert!(is_prime(&m127, 8));
        let composite = &m127 * BigUint::from(3u8);
        assert!(!is_prime(&composite, 8));
        let p = BigUint::parse_bytes(b"857054278934851321", 10).unwrap();
        assert!(is_prime(&p, 8));
        let q = BigUint::parse_bytes(b"1521484680115687561", 10).unwrap();
        assert!(is_prime(&q, 8));
    }
}
