use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::error::{invalid, Result};

/// Jacobi symbol `(a / m)` for odd `m >= 1`, by quadratic reciprocity.
pub fn jacobi_u64(mut a: u64, mut m: u64) -> i8 {
    debug_assert!(m % 2 == 1);
    a %= m;
    let mut t = 1i8;
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && (m % 8 == 3 || m % 8 == 5) {
            t = -t;
        }
        if a % 4 == 3 && m % 4 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut m);
        a %= m;
    }
    if m == 1 {
        t
    } else {
        0
    }
}

/// Jacobi symbol for a signed numerator.
pub fn jacobi_i64(a: i64, m: u64) -> i8 {
    jacobi_u64(a.rem_euclid(m as i64) as u64, m)
}

/// Jacobi symbol `(u / m)`; `m` must be odd and positive.
///
/// The numerator is reduced modulo `m` first, so arbitrarily large `u` is
/// cheap as long as `m` fits in 64 bits.
pub fn jacobi_symbol(u: &BigInt, m: &BigInt) -> Result<i8> {
    if !m.is_positive() || m.is_even() {
        return invalid(format!("Jacobi modulus must be odd and positive, got {m}"));
    }
    if let Some(m64) = m.to_u64() {
        let r = u.mod_floor(m).to_u64().expect("residue fits");
        return Ok(jacobi_u64(r, m64));
    }
    let mut a = u.mod_floor(m);
    let mut m = m.clone();
    let mut t = 1i8;
    let zero = BigInt::from(0);
    while a != zero {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let m8 = (&m % 8u8).to_u8().unwrap();
        if tz % 2 == 1 && (m8 == 3 || m8 == 5) {
            t = -t;
        }
        if (&a % 4u8).to_u8() == Some(3) && m8 % 4 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut m);
        a = a.mod_floor(&m);
    }
    Ok(if m == BigInt::from(1) { t } else { 0 })
}
