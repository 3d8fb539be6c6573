//! Monic integer polynomials, resultants and discriminants.
//!
//! Coefficients are stored constant term first. Text encodings (see
//! [`MonicIntPoly::parse_highest_first`]) list the highest degree first.

mod bareiss;
mod closed_form;
mod multivariate;
mod resultant;
mod tschirnhaus;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub use bareiss::{determinant, determinant_i128, determinant_rational};
pub use closed_form::{quadrinomial_disc, trinomial_disc};
pub use multivariate::{
    disc_multivariate, quadrinomial_leading_check, specialized_disc_leading, Monomial,
    MonomialList, QuadrinomialLeadingCheck, SpecializedLeading,
};
pub use resultant::{
    discriminant_i64, discriminant_rational, resultant, sylvester_matrix,
};
pub use tschirnhaus::{taylor_coefficient, tschirnhaus_transform, RatPoly};

/// Integer polynomial, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Division by a monic divisor. Returns `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let d = divisor.degree().expect("nonzero divisor");
        assert!(divisor.is_monic(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (IntPoly::default(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].clone();
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Exact division by a monic divisor, `None` when the remainder is nonzero.
    pub fn exact_div_monic(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_monic(divisor);
        r.is_zero().then_some(q)
    }

    pub fn to_monic(&self) -> Option<MonicIntPoly> {
        if !self.is_monic() || self.degree() == Some(0) {
            return None;
        }
        let mut c = self.coeffs.clone();
        c.pop();
        Some(MonicIntPoly { coeffs: c })
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let unit = mag.is_one();
        match i {
            0 => write!(f, "{mag}")?,
            1 if unit => write!(f, "X")?,
            1 => write!(f, "{mag}*X")?,
            _ if unit => write!(f, "X^{i}")?,
            _ => write!(f, "{mag}*X^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// `X^n + a_{n-1} X^{n-1} + ... + a_0` with `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonicIntPoly {
    coeffs: Vec<BigInt>,
}

impl MonicIntPoly {
    /// `lower` holds `a_0, ..., a_{n-1}`.
    pub fn new(lower: Vec<BigInt>) -> Result<Self> {
        if lower.is_empty() {
            return invalid("monic polynomial must have degree at least 1");
        }
        Ok(Self { coeffs: lower })
    }

    pub fn from_i64(lower: &[i64]) -> Result<Self> {
        Self::new(lower.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Parses `"1,0,0,0,-2"` (highest degree first, leading entry 1).
    pub fn parse_highest_first(text: &str) -> Result<Self> {
        let parsed: std::result::Result<Vec<BigInt>, _> =
            text.split(',').map(|t| t.trim().parse::<BigInt>()).collect();
        let Ok(mut all) = parsed else {
            return invalid(format!("cannot parse polynomial coefficients from {text:?}"));
        };
        if all.len() < 2 {
            return invalid("polynomial needs degree at least 1");
        }
        if !all[0].is_one() {
            return invalid(format!("leading coefficient must be 1, got {}", all[0]));
        }
        all.remove(0);
        all.reverse();
        Self::new(all)
    }

    pub fn to_highest_first(&self) -> String {
        let mut parts = vec!["1".to_string()];
        parts.extend(self.coeffs.iter().rev().map(|c| c.to_string()));
        parts.join(",")
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_0, ..., a_{n-1}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> BigInt {
        match j.cmp(&self.degree()) {
            std::cmp::Ordering::Less => self.coeffs[j].clone(),
            std::cmp::Ordering::Equal => BigInt::one(),
            std::cmp::Ordering::Greater => BigInt::zero(),
        }
    }

    pub fn to_int_poly(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.push(BigInt::one());
        IntPoly::new(c)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.to_int_poly().eval(x)
    }

    pub fn derivative(&self) -> IntPoly {
        self.to_int_poly().derivative()
    }

    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Coefficients as `i64` if they all fit.
    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// `(-1)^{n(n-1)/2} Res(f, f')`, exact.
    pub fn discriminant(&self) -> BigInt {
        match self.coeffs_i64() {
            Some(small) => discriminant_i64(&small),
            None => resultant::discriminant_big(self),
        }
    }
}

impl fmt::Display for MonicIntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.to_int_poly().coeffs())
    }
}

/// `(-1)^e`.
pub(crate) fn sign_pow(e: usize) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
/// Visits every `(a_0, ..., a_{n-1})` with `a_{n-1} = top` and the other
/// entries in `lo..=hi`, in lexicographic order of `(a_{n-1}, ..., a_0)`.
pub(crate) fn for_each_box_with_top(n: usize, lo: i64, hi: i64, top: i64, mut visit: impl FnMut(&[i64])) {
    let mut lower = vec![lo; n];
    lower[n - 1] = top;
    loop {
        visit(&lower);
        let mut k = 0;
        loop {
            if k + 1 >= n {
                return;
            }
            lower[k] += 1;
            if lower[k] <= hi {
                break;
            }
            lower[k] = lo;
            k += 1;
        }
    }
}
