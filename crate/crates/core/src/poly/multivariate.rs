//! The discriminant as a polynomial in the coefficients, rebuilt by
//! evaluation and per-variable Newton interpolation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{discriminant_i64, discriminant_rational, sign_pow};
use crate::error::{invalid, Error, Result};

/// One term of the multivariate discriminant. `exponents[j]` is the power of
/// `a_j`, the coefficient of `X^j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    pub exponents: Vec<u32>,
    pub coefficient: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialList {
    pub n: usize,
    pub entries: Vec<Monomial>,
}

impl MonomialList {
    /// Weight of a monomial when `a_j` carries weight `n - j`.
    pub fn weighted_degree(&self, exponents: &[u32]) -> u32 {
        exponents
            .iter()
            .enumerate()
            .map(|(j, e)| (self.n - j) as u32 * e)
            .sum()
    }

    pub fn coefficient_of(&self, exponents: &[u32]) -> BigInt {
        self.entries
            .iter()
            .find(|m| m.exponents == exponents)
            .map_or_else(BigInt::zero, |m| m.coefficient.clone())
    }

    pub fn max_variable_degree(&self) -> u32 {
        self.entries
            .iter()
            .flat_map(|m| m.exponents.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Evaluates at `a_0, ..., a_{n-1}`.
    pub fn evaluate(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.n);
        self.entries
            .iter()
            .map(|m| {
                m.exponents
                    .iter()
                    .zip(point)
                    .fold(m.coefficient.clone(), |acc, (&e, x)| acc * x.pow(e))
            })
            .sum()
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        let target = (self.n * (self.n - 1)) as u32;
        self.entries
            .iter()
            .all(|m| self.weighted_degree(&m.exponents) == target)
    }
}

/// Values at nodes `0, 1, ..., d` to monomial coefficients.
fn interpolate_nodes(values: &[BigRational]) -> Vec<BigRational> {
    let d = values.len() - 1;
    let mut c = values.to_vec();
    for k in 1..=d {
        let kk = BigRational::from_integer(BigInt::from(k));
        for i in (k..=d).rev() {
            c[i] = (&c[i] - &c[i - 1]) / &kk;
        }
    }
    // Newton basis x(x-1)...(x-k+1) back to powers of x
    let mut poly = vec![c[d].clone()];
    for k in (0..d).rev() {
        let shift = BigRational::from_integer(BigInt::from(k));
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (i, a) in poly.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * &shift;
        }
        next[0] += &c[k];
        poly = next;
    }
    poly.truncate(d + 1);
    poly
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<MonomialList>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<MonomialList>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Full expansion of `Disc(X^n + a_{n-1}X^{n-1} + ... + a_0)` for `2 <= n <= 5`.
///
/// Every variable has degree at most `n`, so the grid `{0..n}^n` determines
/// the polynomial. Results are memoized per `n`.
pub fn disc_multivariate(n: usize) -> Result<Arc<MonomialList>> {
    if !(2..=5).contains(&n) {
        return invalid(format!("multivariate expansion supports 2 <= n <= 5, got {n}"));
    }
    if let Some(hit) = cache().lock().expect("cache poisoned").get(&n) {
        return Ok(hit.clone());
    }
    let side = n + 1;
    let total = side.pow(n as u32);
    let mut grid: Vec<BigRational> = (0..total)
        .map(|mut idx| {
            let mut lower = vec![0i64; n];
            for slot in lower.iter_mut() {
                *slot = (idx % side) as i64;
                idx /= side;
            }
            BigRational::from_integer(discriminant_i64(&lower))
        })
        .collect();

    let mut stride = 1;
    for _axis in 0..n {
        for base in 0..total {
            if (base / stride) % side != 0 {
                continue;
            }
            let slice: Vec<BigRational> =
                (0..side).map(|k| grid[base + k * stride].clone()).collect();
            for (k, c) in interpolate_nodes(&slice).into_iter().enumerate() {
                grid[base + k * stride] = c;
            }
        }
        stride *= side;
    }

    let mut entries = Vec::new();
    for (mut idx, c) in grid.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::InternalInconsistency(format!(
                "non-integral coefficient {c} in degree-{n} discriminant"
            )));
        }
        let mut exponents = vec![0u32; n];
        for e in exponents.iter_mut() {
            *e = (idx % side) as u32;
            idx /= side;
        }
        entries.push(Monomial { exponents, coefficient: c.to_integer() });
    }
    entries.sort();
    let list = Arc::new(MonomialList { n, entries });
    cache().lock().expect("cache poisoned").insert(n, list.clone());
    Ok(list)
}

/// Degree and leading coefficient of
/// `D(A) = Disc(X^n + a_{n-1}X^{n-1} + ... + a_2X^2 + (c_0 A + c_1) X + A)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecializedLeading {
    pub degree: usize,
    pub leading: BigRational,
    pub expected_degree: usize,
    pub expected_leading: BigRational,
}

impl SpecializedLeading {
    pub fn matches(&self) -> bool {
        self.degree == self.expected_degree && self.leading == self.expected_leading
    }
}

/// `upper` holds `a_2, ..., a_{n-1}`.
pub fn specialized_disc_leading(
    n: usize,
    upper: &[BigInt],
    c0: &BigRational,
    c1: &BigRational,
) -> Result<SpecializedLeading> {
    if n < 3 {
        return invalid("specialized leading form needs n >= 3");
    }
    if upper.len() != n - 2 {
        return invalid(format!("expected {} fixed coefficients a_2..a_{{n-1}}", n - 2));
    }
    // total degree in A is at most 2n
    let values: Vec<BigRational> = (0..=2 * n)
        .map(|t| {
            let t = BigRational::from_integer(BigInt::from(t));
            let mut lower = vec![t.clone(), c0 * &t + c1];
            lower.extend(upper.iter().cloned().map(BigRational::from_integer));
            discriminant_rational(&lower)
        })
        .collect();
    let mut coeffs = interpolate_nodes(&values);
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    let degree = coeffs.len().saturating_sub(1);
    let leading = coeffs.last().cloned().unwrap_or_else(BigRational::zero);

    let nn = BigInt::from(n);
    let (expected_degree, expected_leading) = if c0.is_zero() {
        (
            n - 1,
            BigRational::from_integer(nn.pow(n as u32) * sign_pow(n * (n - 1) / 2)),
        )
    } else {
        let lead = BigRational::from_integer(BigInt::from(n - 1).pow(n as u32 - 1))
            * c0.pow(n as i32)
            * BigRational::from_integer(BigInt::from(sign_pow((n - 1) * (n - 2) / 2)));
        (n, lead)
    };
    Ok(SpecializedLeading { degree, leading, expected_degree, expected_leading })
}

/// Structure of the discriminant in the two variables `a_3` (weight `n-3`)
/// and `a_0` (weight `n`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadrinomialLeadingCheck {
    pub n: usize,
    /// `(n-3)α + nβ <= n(n-1)` for every monomial `a_3^α a_0^β · (rest)`.
    pub weight_inequality_holds: bool,
    /// Distinct `(α, β)` with `α + β >= n + 2`.
    pub high_degree_pairs: Vec<(u32, u32)>,
    /// Coefficient of `a_3^n a_0^2`.
    pub delta: BigInt,
    /// `(-1)^{n(n-1)/2 + n + 1} (n-3)^{n-3} 27`.
    pub expected_delta: BigInt,
}

impl QuadrinomialLeadingCheck {
    pub fn holds(&self) -> bool {
        self.weight_inequality_holds
            && self.high_degree_pairs == vec![(self.n as u32, 2)]
            && self.delta == self.expected_delta
    }
}

/// Only `n = 4` and `n = 5` are both coprime to 3 and within the expansion guard.
pub fn quadrinomial_leading_check(n: usize) -> Result<QuadrinomialLeadingCheck> {
    if n != 4 && n != 5 {
        return invalid("quadrinomial leading check supports n in {4, 5}");
    }
    let list = disc_multivariate(n)?;
    let bound = (n * (n - 1)) as u32;
    let mut weight_ok = true;
    let mut pairs = Vec::new();
    for m in &list.entries {
        let (alpha, beta) = (m.exponents[3], m.exponents[0]);
        if (n as u32 - 3) * alpha + n as u32 * beta > bound {
            weight_ok = false;
        }
        if alpha + beta >= n as u32 + 2 && !pairs.contains(&(alpha, beta)) {
            pairs.push((alpha, beta));
        }
    }
    pairs.sort();
    let mut exps = vec![0u32; n];
    exps[3] = n as u32;
    exps[0] = 2;
    let expected_delta = BigInt::from(n - 3).pow(n as u32 - 3)
        * BigInt::from(27)
        * sign_pow(n * (n - 1) / 2 + n + 1);
    Ok(QuadrinomialLeadingCheck {
        n,
        weight_inequality_holds: weight_ok,
        high_degree_pairs: pairs,
        delta: list.coefficient_of(&exps),
        expected_delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonicIntPoly;
    use num_traits::One;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn quadratic_expansion() {
        let list = disc_multivariate(2).unwrap();
        assert_eq!(list.entries.len(), 2);
        assert_eq!(list.coefficient_of(&[0, 2]), BigInt::one());
        assert_eq!(list.coefficient_of(&[1, 0]), BigInt::from(-4));
    }

    #[test]
    fn cubic_expansion() {
        let list = disc_multivariate(3).unwrap();
        assert_eq!(list.coefficient_of(&[0, 2, 2]), BigInt::one());
        assert_eq!(list.coefficient_of(&[2, 0, 0]), BigInt::from(-27));
        assert_eq!(list.coefficient_of(&[0, 3, 0]), BigInt::from(-4));
        assert_eq!(list.coefficient_of(&[1, 0, 3]), BigInt::from(-4));
        assert_eq!(list.coefficient_of(&[1, 1, 1]), BigInt::from(18));
        assert_eq!(list.entries.len(), 5);
        assert!(list.is_weighted_homogeneous());
    }

    #[test]
    fn structural_properties_up_to_quintics() {
        for n in 2..=5 {
            let list = disc_multivariate(n).unwrap();
            assert!(list.is_weighted_homogeneous(), "n = {n}");
            assert!(list.max_variable_degree() <= n as u32, "n = {n}");
        }
        assert!(disc_multivariate(6).is_err());
        assert!(disc_multivariate(1).is_err());
    }

    #[test]
    fn expansion_reproduces_discriminant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=5 {
            let list = disc_multivariate(n).unwrap();
            for _ in 0..100 {
                let lower: Vec<i64> = (0..n).map(|_| rng.gen_range(-50..=50)).collect();
                let point: Vec<BigInt> = lower.iter().map(|&c| c.into()).collect();
                assert_eq!(
                    list.evaluate(&point),
                    MonicIntPoly::from_i64(&lower).unwrap().discriminant()
                );
            }
        }
    }

    #[test]
    fn specialized_documented_values() {
        let r = specialized_disc_leading(3, &[BigInt::zero()], &q(1), &q(0)).unwrap();
        assert_eq!((r.degree, r.leading.clone()), (3, q(-4)));
        assert!(r.matches());
        let r = specialized_disc_leading(3, &[BigInt::zero()], &q(0), &q(0)).unwrap();
        assert_eq!((r.degree, r.leading.clone()), (2, q(-27)));
        assert!(r.matches());
        let r = specialized_disc_leading(4, &[BigInt::zero(), BigInt::zero()], &q(2), &q(5)).unwrap();
        assert_eq!((r.degree, r.leading.clone()), (4, q(-432)));
        assert!(r.matches());
    }

    #[test]
    fn specialized_random_fixed_coefficients() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(3..=7usize);
            let upper: Vec<BigInt> = (0..n - 2).map(|_| BigInt::from(rng.gen_range(-5..=5))).collect();
            let c0 = BigRational::new(rng.gen_range(-4..=4).into(), rng.gen_range(1..=3).into());
            let c1 = BigRational::new(rng.gen_range(-4..=4).into(), rng.gen_range(1..=3).into());
            let r = specialized_disc_leading(n, &upper, &c0, &c1).unwrap();
            assert!(r.matches(), "n={n} upper={upper:?} c0={c0} c1={c1}: {r:?}");
        }
    }

    #[test]
    fn quadrinomial_structure() {
        let four = quadrinomial_leading_check(4).unwrap();
        assert!(four.holds(), "{four:?}");
        assert_eq!(four.delta, BigInt::from(-27));
        let five = quadrinomial_leading_check(5).unwrap();
        assert!(five.holds(), "{five:?}");
        assert_eq!(five.delta, BigInt::from(108));
        assert!(quadrinomial_leading_check(6).is_err());
    }
}
