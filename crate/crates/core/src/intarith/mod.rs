//! Exact integer services: primality, factorization, square-free parts,
//! perfect squares and quadratic symbols.
//!
//! Everything here is a pure function of its arguments.

mod factor;
mod jacobi;
mod primes;
mod square;
mod squarefree;

pub use factor::{factorize, factorize_default, Factorization, FactorizationLimits};
pub use jacobi::{jacobi_i64, jacobi_symbol, jacobi_u64};
pub use primes::{is_prime, is_prime_u64, primes_in_range, primes_up_to};
pub use square::{is_perfect_square, probabilistic_square_test, SquareTestOutcome};
pub use squarefree::{squarefree_part, squarefree_part_with, SquarefreeDecomposition};

/// `a * b mod m` without overflow.
#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m`.
pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}
