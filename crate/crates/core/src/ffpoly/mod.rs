//! Polynomials over prime fields: factorization shape, Stickelberger's
//! symbol, and exhaustive character sums over monic polynomials.

mod charsum;
mod factor;
mod transform;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::intarith::{is_prime_u64, mul_mod, pow_mod};
use crate::poly::{discriminant_i64, IntPoly};

pub use charsum::{
    box_charsum, charsum_disc_total, jacobi_charsum, mixed_charsum, mixed_charsum_sweep,
    BoxCharsum, ExactCharSum, JacobiCharsum, LambdaVector, SweepReport,
};
pub use factor::{
    distinct_degree_factorization, distinct_irreducible_factor_count, factor_mod_p,
    squarefree_factorization,
};
pub use transform::{
    exceptional_set_count, ff_transform_disc_check, transform_mod_p, ExceptionalSetReport,
};

/// Cap on the number of polynomials an exhaustive routine may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(10_000_000)
    }
}

impl Budget {
    /// `base^exp`, or `BudgetExceeded` if it is larger than the budget.
    pub fn check_power(&self, base: u64, exp: u32, what: &str) -> Result<u64> {
        match base.checked_pow(exp) {
            Some(v) if v <= self.0 => Ok(v),
            _ => Err(Error::BudgetExceeded(format!(
                "{what}: {base}^{exp} exceeds enumeration budget {}",
                self.0
            ))),
        }
    }
}

/// Legendre symbol by Euler's criterion.
pub fn legendre(a: u64, p: u64) -> i8 {
    match pow_mod(a % p, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Polynomial over `F_p`, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    /// Validates that `p` is prime and reduces the coefficients.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return invalid(format!("{p} is not prime"));
        }
        if p >= 1 << 62 {
            return invalid(format!("prime {p} too large for word arithmetic"));
        }
        Ok(Self::from_raw(p, coeffs.into_iter().map(|c| c % p).collect()))
    }

    /// Monic polynomial of degree `lower.len()` with lower coefficients `lower`.
    pub fn monic(p: u64, lower: &[u64]) -> Result<Self> {
        let mut c = lower.to_vec();
        c.push(1);
        Self::new(p, c)
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Result<Self> {
        let pb = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue"))
            .collect();
        Self::new(p, coeffs)
    }

    pub(crate) fn from_raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    fn zero(p: u64) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub(crate) fn one(p: u64) -> Self {
        Self { p, coeffs: vec![1] }
    }

    pub(crate) fn x(p: u64) -> Self {
        Self { p, coeffs: vec![0, 1] }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, with `-1` standing in for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Integer lift with coefficients in `[0, p)`.
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn make_monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.inv(self.lc());
        Self::from_raw(self.p, self.coeffs.iter().map(|&c| mul_mod(c, inv, self.p)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                (self.coeffs.get(i).copied().unwrap_or(0) + other.coeffs.get(i).copied().unwrap_or(0))
                    % self.p
            })
            .collect();
        Self::from_raw(self.p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::from_raw(self.p, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Self::from_raw(self.p, out)
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::from_raw(self.p, self.coeffs.iter().map(|&c| mul_mod(c, k % self.p, self.p)).collect())
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let p = self.p;
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (Self::zero(p), self.clone());
        }
        let inv = self.inv(divisor.lc());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = mul_mod(rem[k + d], inv, p);
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = (rem[k + i] + p - mul_mod(c, dc, p)) % p;
            }
        }
        rem.truncate(d);
        (Self::from_raw(p, quot), Self::from_raw(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::from_raw(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::one(self.p).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        let d = self.derivative();
        !d.is_zero() && self.gcd(&d).is_one()
    }

    /// Discriminant in `F_p` via the Euclidean resultant `Res(f, f')`.
    ///
    /// The polynomial must be monic of degree at least 1.
    pub fn discriminant(&self) -> u64 {
        let n = self.degree();
        assert!(n >= 1 && self.lc() == 1, "discriminant needs a monic polynomial");
        let n = n as usize;
        let r = resultant_mod(self, &self.derivative());
        if (n * (n - 1) / 2) % 2 == 1 {
            (self.p - r) % self.p
        } else {
            r
        }
    }

    /// Discriminant of the integer lift, reduced mod p. Independent of the
    /// Euclidean route.
    pub fn discriminant_via_lift(&self) -> u64 {
        assert!(self.lc() == 1 && self.degree() >= 1);
        let lower: Vec<i64> = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|&c| c as i64)
            .collect();
        let d = discriminant_i64(&lower);
        d.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue")
    }
}

/// `lc(a)^{deg b} · prod_{a(α)=0} b(α)` computed by Euclid over `F_p`.
pub(crate) fn resultant_mod(a: &FpPoly, b: &FpPoly) -> u64 {
    let p = a.p;
    if a.is_zero() || b.is_zero() {
        return 0;
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = 1u64;
    loop {
        let da = a.degree() as u64;
        let db = b.degree() as u64;
        if db == 0 {
            return mul_mod(acc, pow_mod(b.lc(), da, p), p);
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return 0;
        }
        let dr = r.degree() as u64;
        if (da * db) % 2 == 1 {
            acc = (p - acc) % p;
        }
        acc = mul_mod(acc, pow_mod(b.lc(), da - dr, p), p);
        a = b;
        b = r;
    }
}

/// Stickelberger's symbol `(Disc f / p)` computed two ways that must agree:
/// Euler's criterion on the discriminant, and `(-1)^{n-r}` from the number
/// `r` of distinct irreducible factors (0 when `f` is not square-free).
pub fn stickelberger_symbol(f: &FpPoly) -> Result<i8> {
    let p = f.p();
    if p == 2 {
        return invalid("Stickelberger symbol needs an odd prime");
    }
    if f.lc() != 1 || f.degree() < 1 {
        return invalid("Stickelberger symbol needs a monic polynomial of positive degree");
    }
    let via_disc = legendre(f.discriminant_via_lift(), p);
    let (squarefree, r) = distinct_irreducible_factor_count(f)?;
    let via_factors = if squarefree {
        if (f.degree() as usize - r).is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    };
    if via_disc != via_factors {
        return Err(Error::InternalInconsistency(format!(
            "Stickelberger routes disagree for {:?} mod {p}: Euler {via_disc}, factor count {via_factors}",
            f.coeffs()
        )));
    }
    Ok(via_disc)
}

/// Calls `visit` on every monic degree-`n` polynomial over `F_p` whose leading
/// coefficient `a_{n-1}` equals `top`, in lexicographic order of
/// `(a_{n-1}, ..., a_0)`. The slice passed is `a_0..a_{n-1}`.
pub(crate) fn for_each_monic_with_top(p: u64, n: usize, top: u64, mut visit: impl FnMut(&[u64])) {
    let mut lower = vec![0u64; n];
    lower[n - 1] = top;
    loop {
        visit(&lower);
        // increment a_{n-2}..a_0 as an odometer with a_0 fastest
        let mut k = 0;
        loop {
            if k + 1 >= n {
                return;
            }
            lower[k] += 1;
            if lower[k] < p {
                break;
            }
            lower[k] = 0;
            k += 1;
        }
    }
}
