//! Fraction-free (Bareiss) determinants.
//!
//! Every intermediate entry is a minor of the input, so divisions are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Determinant over the integers.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Same elimination in `i128`; `None` as soon as any product overflows.
pub fn determinant_i128(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut negate = false;
    let mut prev: i128 = 1;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Some(0),
            }
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let a = row[j].checked_mul(pivot_row[k])?;
                let b = row[k].checked_mul(pivot_row[j])?;
                row[j] = a.checked_sub(b)? / prev;
            }
            row[k] = 0;
        }
        prev = m[k][k];
    }
    let det = m[n - 1][n - 1];
    Some(if negate { -det } else { det })
}

/// Plain Gaussian elimination over the rationals.
pub fn determinant_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::from_integer(1.into());
    for k in 0..n {
        let Some(i) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if i != k {
            m.swap(i, k);
            det = -det;
        }
        det *= &m[k][k];
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let factor = &row[k] / &pivot_row[k];
            for j in k..n {
                let d = &factor * &pivot_row[j];
                row[j] -= d;
            }
        }
    }
    det
}
