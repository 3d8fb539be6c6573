use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::MonicIntPoly;
use crate::error::{invalid, Result};

/// Monic polynomial over the rationals, constant term first, leading 1 implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    pub lower: Vec<BigRational>,
}

impl RatPoly {
    pub fn degree(&self) -> usize {
        self.lower.len()
    }

    pub fn from_monic(f: &MonicIntPoly) -> Self {
        Self {
            lower: f.coeffs().iter().cloned().map(BigRational::from_integer).collect(),
        }
    }

    pub fn discriminant(&self) -> BigRational {
        super::discriminant_rational(&self.lower)
    }

    /// Back to integers when every coefficient is integral.
    pub fn to_monic_int(&self) -> Option<MonicIntPoly> {
        let ints: Option<Vec<BigInt>> = self
            .lower
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect();
        MonicIntPoly::new(ints?).ok()
    }
}

/// `f_{u,v}(X) = u^n f(u^{-1}(X + v))`, expanded by composing with `(X + v)/u`.
pub fn tschirnhaus_transform(
    f: &MonicIntPoly,
    u: &BigRational,
    v: &BigRational,
) -> Result<RatPoly> {
    if u.is_zero() {
        return invalid("transform scale u must be nonzero");
    }
    let n = f.degree();
    let inv_u = u.recip();
    // Horner: g = sum c_i ((X+v)/u)^i, built as a dense rational polynomial.
    let lin = [v * &inv_u, inv_u.clone()];
    let mut acc: Vec<BigRational> = vec![BigRational::one()];
    for c in f.coeffs().iter().rev() {
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i] += a * &lin[0];
            next[i + 1] += a * &lin[1];
        }
        next[0] += BigRational::from_integer(c.clone());
        acc = next;
    }
    let scale = u.pow(n as i32);
    let mut lower: Vec<BigRational> = acc.into_iter().map(|c| c * &scale).collect();
    let lead = lower.pop().expect("degree n term");
    debug_assert!(lead.is_one());
    Ok(RatPoly { lower })
}

/// Coefficient of `X^{n-j}` in `f_{u,v}` via the Taylor form
/// `u^j f^{(n-j)}(v/u) / (n-j)!`, for `1 <= j <= n`.
pub fn taylor_coefficient(
    f: &MonicIntPoly,
    j: usize,
    u: &BigRational,
    v: &BigRational,
) -> Result<BigRational> {
    let n = f.degree();
    if j == 0 || j > n {
        return invalid(format!("Taylor index {j} out of range 1..={n}"));
    }
    if u.is_zero() {
        return invalid("transform scale u must be nonzero");
    }
    let k = n - j;
    // f^{(k)}(x) / k! = sum_i binom(i, k) c_i x^{i-k}
    let x = v / u;
    let full = f.to_int_poly();
    let mut value = BigRational::zero();
    let mut pow = BigRational::one();
    for (i, c) in full.coeffs().iter().enumerate().skip(k) {
        let binom = binomial(i, k);
        value += BigRational::from_integer(c * binom) * &pow;
        pow *= &x;
    }
    Ok(value * u.pow(j as i32))
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
