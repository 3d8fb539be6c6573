use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::bareiss::{determinant, determinant_i128, determinant_rational};
use super::{sign_pow, IntPoly, MonicIntPoly};
use crate::error::{invalid, Result};

/// Sylvester matrix of `f` (degree `n`) and `g` (degree `m`), highest
/// coefficients in the leftmost column. `m` rows of `f` come first.
pub fn sylvester_matrix<T: Clone + Zero>(f: &[T], g: &[T]) -> Vec<Vec<T>> {
    let n = f.len() - 1;
    let m = g.len() - 1;
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for (src, shifts) in [(f, m), (g, n)] {
        for i in 0..shifts {
            let mut row = vec![T::zero(); size];
            for (j, c) in src.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res(f, g)` as the Sylvester determinant, evaluated by Bareiss elimination.
pub fn resultant(f: &MonicIntPoly, g: &IntPoly) -> Result<BigInt> {
    if g.is_zero() {
        return invalid("resultant with the zero polynomial");
    }
    let fc = f.to_int_poly();
    if g.degree() == Some(0) {
        return Ok(g.coeffs()[0].pow(f.degree() as u32));
    }
    Ok(determinant(sylvester_matrix(fc.coeffs(), g.coeffs())))
}

fn disc_sign(n: usize) -> BigInt {
    BigInt::from(sign_pow(n * (n - 1) / 2))
}

pub(crate) fn discriminant_big(f: &MonicIntPoly) -> BigInt {
    let n = f.degree();
    if n == 1 {
        return BigInt::one();
    }
    let fc = f.to_int_poly();
    let d = fc.derivative();
    disc_sign(n) * determinant(sylvester_matrix(fc.coeffs(), d.coeffs()))
}

/// Discriminant of `X^n + a_{n-1} X^{n-1} + ... + a_0` from `i64` coefficients.
///
/// Tries `i128` Bareiss first and falls back to big integers on overflow.
pub fn discriminant_i64(lower: &[i64]) -> BigInt {
    let n = lower.len();
    assert!(n >= 1, "degree must be at least 1");
    if n == 1 {
        return BigInt::one();
    }
    let mut f: Vec<i128> = lower.iter().map(|&c| c as i128).collect();
    f.push(1);
    let d: Vec<i128> = (1..=n).map(|i| f[i] * i as i128).collect();
    if let Some(det) = determinant_i128(sylvester_matrix(&f, &d)) {
        return BigInt::from(det) * disc_sign(n);
    }
    let fb: Vec<BigInt> = f.iter().map(|&c| BigInt::from(c)).collect();
    let db: Vec<BigInt> = d.iter().map(|&c| BigInt::from(c)).collect();
    disc_sign(n) * determinant(sylvester_matrix(&fb, &db))
}

/// Discriminant of a monic polynomial with rational coefficients
/// (`lower` = constant term first, leading 1 implicit).
pub fn discriminant_rational(lower: &[BigRational]) -> BigRational {
    let n = lower.len();
    assert!(n >= 1, "degree must be at least 1");
    if n == 1 {
        return BigRational::one();
    }
    let mut f = lower.to_vec();
    f.push(BigRational::one());
    let d: Vec<BigRational> = (1..=n)
        .map(|i| &f[i] * BigRational::from_integer(BigInt::from(i)))
        .collect();
    determinant_rational(sylvester_matrix(&f, &d)) * BigRational::from_integer(disc_sign(n))
}
