#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Resultant of two polynomials over Q (constant term first) by the
/// Euclidean recurrence `Res(f, g) = (-1)^{deg f deg g} lc(g)^{deg f - deg r} Res(g, r)`.
pub fn resultant_q(f: &[BigRational], g: &[BigRational]) -> BigRational {
    let mut f = trim(f.to_vec());
    let mut g = trim(g.to_vec());
    let mut acc = BigRational::one();
    loop {
        if f.is_empty() || g.is_empty() {
            return BigRational::zero();
        }
        let (df, dg) = (f.len() - 1, g.len() - 1);
        if dg == 0 {
            return acc * pow(&g[0], df);
        }
        let r = trim(rem(&f, &g));
        if r.is_empty() {
            return BigRational::zero();
        }
        let dr = r.len() - 1;
        if (df * dg) % 2 == 1 {
            acc = -acc;
        }
        acc *= pow(g.last().unwrap(), df - dr);
        f = g;
        g = r;
    }
}

/// Discriminant of the monic polynomial with lower coefficients `lower`.
pub fn disc_oracle(lower: &[i64]) -> BigInt {
    let n = lower.len();
    let mut f: Vec<BigRational> = lower.iter().map(|&c| BigRational::from_integer(c.into())).collect();
    f.push(BigRational::one());
    let df: Vec<BigRational> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    let r = resultant_q(&f, &df);
    assert!(r.is_integer());
    let r = r.to_integer();
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Brute-force square-free part: the unique square-free `u` with `k = u v^2`.
pub fn squarefree_oracle(k: i64) -> i64 {
    assert!(k != 0);
    let mut m = k.abs();
    let mut u = 1i64;
    let mut p = 2i64;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e % 2 == 1 {
            u *= p;
        }
        p += 1;
    }
    u *= m;
    if k < 0 {
        -u
    } else {
        u
    }
}

/// Irreducibility over Q by brute force for small monic polynomials of
/// degree at most 3: a reducible cubic or quadratic has an integer root.
pub fn has_integer_root(lower: &[i64]) -> bool {
    let a0 = lower[0];
    if a0 == 0 {
        return true;
    }
    (1..=a0.unsigned_abs() as i64)
        .filter(|d| a0 % d == 0)
        .flat_map(|d| [d, -d])
        .any(|x| eval(lower, x) == BigInt::zero())
}

pub fn eval(lower: &[i64], x: i64) -> BigInt {
    let x = BigInt::from(x);
    let mut acc = BigInt::one();
    for &c in lower.iter().rev() {
        acc = acc * &x + c;
    }
    acc
}

pub fn is_prime_naive(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn rem(f: &[BigRational], g: &[BigRational]) -> Vec<BigRational> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    let lg = g.last().unwrap().clone();
    while r.len() > dg {
        let c = r.last().unwrap() / &lg;
        let shift = r.len() - 1 - dg;
        for (i, gc) in g.iter().enumerate() {
            r[shift + i] -= &c * gc;
        }
        r.pop();
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn pow(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}
