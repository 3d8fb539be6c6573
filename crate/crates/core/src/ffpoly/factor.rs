use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FpPoly;
use crate::error::{invalid, Result};

fn pth_root(f: &FpPoly) -> FpPoly {
    let p = f.p() as usize;
    let c: Vec<u64> = f.coeffs().iter().step_by(p).copied().collect();
    FpPoly::from_raw(f.p(), c)
}

/// Square-free factorization `f = prod g_i^{e_i}` of a monic polynomial,
/// with pairwise coprime square-free `g_i`. Handles `f' = 0` in characteristic p.
pub fn squarefree_factorization(f: &FpPoly) -> Result<Vec<(FpPoly, u32)>> {
    if f.degree() < 1 || f.lc() != 1 {
        return invalid("square-free factorization needs a monic polynomial of positive degree");
    }
    let mut out = Vec::new();
    sqf_into(f, 1, &mut out);
    Ok(out)
}

fn sqf_into(f: &FpPoly, mult: u32, out: &mut Vec<(FpPoly, u32)>) {
    if f.degree() < 1 {
        return;
    }
    let p = f.p() as u32;
    let d = f.derivative();
    if d.is_zero() {
        sqf_into(&pth_root(f), mult * p, out);
        return;
    }
    let mut c = f.gcd(&d);
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if !z.is_one() {
            out.push((z, i * mult));
        }
        i += 1;
        c = c.div_rem(&y).0;
        w = y;
    }
    if !c.is_one() {
        sqf_into(&pth_root(&c), mult * p, out);
    }
}

/// Distinct-degree factorization of a monic square-free polynomial: pairs
/// `(g_d, d)` where `g_d` is the product of all irreducible factors of degree `d`.
pub fn distinct_degree_factorization(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    if f.degree() < 1 || f.lc() != 1 {
        return invalid("distinct-degree factorization needs a monic polynomial of positive degree");
    }
    if !f.is_squarefree() {
        return invalid("distinct-degree factorization needs a square-free polynomial");
    }
    let p = f.p();
    let x = FpPoly::x(p);
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree() >= 2 * d as isize {
        h = h.pow_mod(p as u128, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree() >= 1 {
        let deg = rest.degree() as usize;
        out.push((rest, deg));
    }
    Ok(out)
}

/// `(is_squarefree, r)` where `r` counts the distinct monic irreducible factors.
pub fn distinct_irreducible_factor_count(f: &FpPoly) -> Result<(bool, usize)> {
    let parts = squarefree_factorization(f)?;
    let squarefree = parts.iter().all(|(_, e)| *e == 1);
    let mut r = 0;
    for (g, _) in &parts {
        for (h, d) in distinct_degree_factorization(g)? {
            r += h.degree() as usize / d;
        }
    }
    Ok((squarefree, r))
}

/// Splits a product of distinct irreducibles all of degree `d`.
fn equal_degree_split(g: &FpPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = g.degree() as usize;
    if n == d {
        out.push(g.clone());
        return;
    }
    let p = g.p();
    loop {
        let a = FpPoly::from_raw(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree() < 1 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^{2^{d-1}}
            let mut t = a.rem(g);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(g);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (p as u128).pow(d as u32) / 2;
            a.pow_mod(e, g).sub(&FpPoly::one(p))
        };
        let h = g.gcd(&b);
        if h.degree() >= 1 && h.degree() < g.degree() {
            let other = g.div_rem(&h).0;
            equal_degree_split(&h, d, rng, out);
            equal_degree_split(&other, d, rng, out);
            return;
        }
    }
}

/// Complete factorization of a monic polynomial into monic irreducibles with
/// multiplicities, sorted. Cantor-Zassenhaus with a fixed seed, so the result
/// is deterministic.
pub fn factor_mod_p(f: &FpPoly) -> Result<Vec<(FpPoly, u32)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let mut out = Vec::new();
    for (g, e) in squarefree_factorization(f)? {
        for (h, d) in distinct_degree_factorization(&g)? {
            let mut pieces = Vec::new();
            equal_degree_split(&h, d, &mut rng, &mut pieces);
            out.extend(pieces.into_iter().map(|q| (q, e)));
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::for_each_monic_with_top;
    use std::collections::BTreeSet;

    fn fp(p: u64, lower: &[u64]) -> FpPoly {
        FpPoly::monic(p, lower).unwrap()
    }

    /// All monic irreducibles of degree `d` by brute-force sieving of products.
    fn irreducibles(p: u64, d: usize) -> BTreeSet<Vec<u64>> {
        let mut all = BTreeSet::new();
        for top in 0..p {
            for_each_monic_with_top(p, d, top, |l| {
                all.insert(l.to_vec());
            });
        }
        for k in 1..=d / 2 {
            let small = irreducibles(p, k);
            let mut co = BTreeSet::new();
            for top in 0..p {
                for_each_monic_with_top(p, d - k, top, |l| {
                    co.insert(l.to_vec());
                });
            }
            for a in &small {
                for b in &co {
                    let prod = fp(p, a).mul(&fp(p, b));
                    let c = prod.coeffs();
                    all.remove(&c[..c.len() - 1]);
                }
            }
        }
        all
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree d over F_p
        assert_eq!(irreducibles(2, 4).len(), 3);
        assert_eq!(irreducibles(3, 3).len(), 8);
        assert_eq!(irreducibles(5, 2).len(), 10);
        for (p, d) in [(2u64, 4usize), (3, 3), (5, 2), (3, 4)] {
            for l in irreducibles(p, d) {
                let f = fp(p, &l);
                let (sf, r) = distinct_irreducible_factor_count(&f).unwrap();
                assert!(sf);
                assert_eq!(r, 1, "{l:?} mod {p}");
            }
        }
    }

    #[test]
    fn factorization_reconstructs_exhaustively() {
        for p in [2u64, 3, 5, 7] {
            for n in 1..=4usize {
                for top in 0..p {
                    for_each_monic_with_top(p, n, top, |l| {
                        let f = fp(p, l);
                        let fac = factor_mod_p(&f).unwrap();
                        let mut prod = FpPoly::one(p);
                        for (g, e) in &fac {
                            let (sf, r) = distinct_irreducible_factor_count(g).unwrap();
                            assert!(sf && r == 1);
                            for _ in 0..*e {
                                prod = prod.mul(g);
                            }
                        }
                        assert_eq!(prod, f);
                        let (sf, r) = distinct_irreducible_factor_count(&f).unwrap();
                        assert_eq!(r, fac.len());
                        assert_eq!(sf, fac.iter().all(|(_, e)| *e == 1));
                    });
                }
            }
        }
    }

    #[test]
    fn pth_powers_are_handled() {
        // (X^2 + 1)^3 over F_3 has zero derivative
        let g = fp(3, &[1, 0]);
        let f = g.mul(&g).mul(&g);
        assert!(f.derivative().is_zero());
        assert_eq!(squarefree_factorization(&f).unwrap(), vec![(g, 3)]);
        assert_eq!(distinct_irreducible_factor_count(&f).unwrap(), (false, 1));
    }

    #[test]
    fn large_prime_split() {
        let p = 1_000_003;
        // (X - 1)(X - 2)(X^2 + 1); -1 is a non-residue since p = 3 mod 4
        let f = fp(p, &[p - 1])
            .mul(&fp(p, &[p - 2]))
            .mul(&fp(p, &[1, 0]));
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.len(), 3);
    }
}
