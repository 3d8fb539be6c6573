mod oracle;

use disc_census::irreducibility::{
    count_irreducible, is_irreducible, is_irreducible_with, IrreducibilityOptions, IrreducibilityStatus,
};
use disc_census::{Budget, IntPoly, MonicIntPoly};
use proptest::prelude::*;

fn quintics() -> impl Iterator<Item = Vec<i64>> {
    (0..5i64.pow(5)).map(|mut k| {
        (0..5)
            .map(|_| {
                let c = k % 5 - 2;
                k /= 5;
                c
            })
            .collect()
    })
}

#[test]
fn fallback_agrees_with_screens_on_small_quintics() {
    let forced = IrreducibilityOptions { force_fallback: true, ..Default::default() };
    let mut irreducible = 0;
    for lower in quintics() {
        let f = MonicIntPoly::from_i64(&lower).unwrap();
        let fast = is_irreducible(&f).unwrap();
        let slow = is_irreducible_with(&f, &forced).unwrap();
        assert_eq!(fast.status, slow.status, "f={f}");
        assert_ne!(fast.status, IrreducibilityStatus::InconclusiveEscalated);
        assert!(fast.witness_divides(&f));
        assert!(slow.witness_divides(&f));
        irreducible += usize::from(fast.is_irreducible());
    }
    assert_eq!(irreducible, 1812);
}

#[test]
fn cubic_count_matches_root_oracle() {
    let h = 6u64;
    let m = h as i64 - 1;
    let mut expected = 0u64;
    for a0 in -m..=m {
        for a1 in -m..=m {
            for a2 in -m..=m {
                expected += u64::from(!oracle::has_integer_root(&[a0, a1, a2]));
            }
        }
    }
    let got = count_irreducible(3, h, Budget::default()).unwrap();
    assert_eq!(got.irreducible, expected);
    assert_eq!(got.lattice_points, (2 * h - 1).pow(3));
}

fn product(f: &[i64], g: &[i64]) -> MonicIntPoly {
    let mut a = f.to_vec();
    a.push(1);
    let mut b = g.to_vec();
    b.push(1);
    IntPoly::from_i64(&a).mul(&IntPoly::from_i64(&b)).to_monic().unwrap()
}

proptest! {
    #[test]
    fn products_are_reducible_with_valid_witness(
        f in prop::collection::vec(-5i64..=5, 1..=3),
        g in prop::collection::vec(-5i64..=5, 1..=3),
    ) {
        let h = product(&f, &g);
        let v = is_irreducible(&h).unwrap();
        prop_assert_eq!(v.status, IrreducibilityStatus::Reducible);
        prop_assert!(v.witness.is_some());
        prop_assert!(v.witness_divides(&h));
        let w = v.witness.unwrap();
        prop_assert!(w.degree() < h.degree());
    }

    #[test]
    fn verdict_is_stable_under_translation(lower in prop::collection::vec(-4i64..=4, 2..=5), c in -2i64..=2) {
        let f = MonicIntPoly::from_i64(&lower).unwrap();
        let x_plus_c = IntPoly::from_i64(&[c, 1]);
        let mut acc = IntPoly::from_i64(&[1]);
        let mut shifted = IntPoly::default();
        for coeff in f.to_int_poly().coeffs() {
            shifted = add(&shifted, &acc.mul(&IntPoly::new(vec![coeff.clone()])));
            acc = acc.mul(&x_plus_c);
        }
        let g = shifted.to_monic().unwrap();
        prop_assert_eq!(is_irreducible(&f).unwrap().status, is_irreducible(&g).unwrap().status);
    }
}

fn add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a.sub(&IntPoly::default().sub(b))
}
