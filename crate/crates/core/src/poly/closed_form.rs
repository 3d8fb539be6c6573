use num_bigint::BigInt;
use num_integer::Integer;

use super::sign_pow;
use crate::error::{invalid, Result};

/// `Disc(X^n + aX + b) = (-1)^{(n-1)(n+2)/2} ((n-1)^{n-1} a^n + n^n (-b)^{n-1})`.
///
/// For `n = 1 (mod 4)` this is `(n-1)^{n-1} a^n + n^n b^{n-1}`.
pub fn trinomial_disc(n: usize, a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if n < 2 {
        return invalid("trinomial degree must be at least 2");
    }
    let nb = BigInt::from(n);
    let n1 = BigInt::from(n - 1);
    let minus_b = -b;
    let inner = n1.pow(n as u32 - 1) * a.pow(n as u32) + nb.pow(n as u32) * minus_b.pow(n as u32 - 1);
    Ok(inner * sign_pow((n - 1) * (n + 2) / 2))
}

/// `Disc(X^n + aX^3 + b)` for `n >= 4` coprime to 3:
/// `(-1)^{n(n-1)/2} b^2 (n^n b^{n-3} + (-1)^{n+1} (n-3)^{n-3} 27 a^n)`.
pub fn quadrinomial_disc(n: usize, a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if n < 4 {
        return invalid("quadrinomial degree must be at least 4");
    }
    if n.gcd(&3) != 1 {
        return invalid(format!("degree {n} is divisible by 3"));
    }
    let nb = BigInt::from(n);
    let n3 = BigInt::from(n - 3);
    let inner = nb.pow(n as u32) * b.pow(n as u32 - 3)
        + n3.pow(n as u32 - 3) * BigInt::from(27) * a.pow(n as u32) * sign_pow(n + 1);
    Ok(b * b * inner * sign_pow(n * (n - 1) / 2))
}
