mod oracle;

use disc_census::poly::{discriminant_i64, quadrinomial_disc, trinomial_disc};
use disc_census::MonicIntPoly;
use num_bigint::BigInt;
use proptest::prelude::*;

use oracle::disc_oracle;

fn shift(lower: &[i64], c: i64) -> Vec<i64> {
    let n = lower.len();
    let mut full: Vec<i128> = lower.iter().map(|&x| x as i128).collect();
    full.push(1);
    for i in 0..n {
        for j in (i..n).rev() {
            full[j] += c as i128 * full[j + 1];
        }
    }
    full[..n].iter().map(|&x| x as i64).collect()
}

#[test]
fn documented_values() {
    assert_eq!(discriminant_i64(&[-2, 0, 0, 0]), BigInt::from(-2048));
    assert_eq!(discriminant_i64(&[-1, -1, 0, 0]), BigInt::from(-283));
    assert_eq!(discriminant_i64(&[-1, -1, 0]), BigInt::from(-23));
    assert_eq!(discriminant_i64(&[1, 0]), BigInt::from(-4));
    assert_eq!(discriminant_i64(&[-8, -2, -1]), BigInt::from(-2012));
}

proptest! {
    #[test]
    fn bareiss_route_matches_euclid_oracle(lower in prop::collection::vec(-20i64..=20, 1..=6)) {
        prop_assert_eq!(discriminant_i64(&lower), disc_oracle(&lower));
    }

    #[test]
    fn big_route_matches_small_route(lower in prop::collection::vec(-50i64..=50, 1..=5)) {
        let f = MonicIntPoly::from_i64(&lower).unwrap();
        prop_assert_eq!(f.discriminant(), disc_oracle(&lower));
    }

    #[test]
    fn translation_invariance(lower in prop::collection::vec(-6i64..=6, 2..=5), c in -3i64..=3) {
        prop_assert_eq!(discriminant_i64(&lower), discriminant_i64(&shift(&lower, c)));
    }

    #[test]
    fn reversal_sign_rule(lower in prop::collection::vec(-9i64..=9, 1..=5)) {
        // (-1)^n f(-X) has the negated roots of f.
        let flipped: Vec<i64> = lower
            .iter()
            .enumerate()
            .map(|(i, &c)| if (lower.len() - i) % 2 == 1 { -c } else { c })
            .collect();
        prop_assert_eq!(discriminant_i64(&lower), discriminant_i64(&flipped));
    }

    #[test]
    fn trinomial_closed_form(n in 2usize..=9, a in -40i64..=40, b in -40i64..=40) {
        let mut lower = vec![0; n];
        lower[0] = b;
        lower[1] += a;
        let closed = trinomial_disc(n, &a.into(), &b.into()).unwrap();
        prop_assert_eq!(closed, disc_oracle(&lower));
    }

    #[test]
    fn quadrinomial_closed_form(n in prop::sample::select(vec![4usize, 5, 7, 8, 10]), a in -20i64..=20, b in -20i64..=20) {
        let mut lower = vec![0; n];
        lower[0] = b;
        lower[3] = a;
        let closed = quadrinomial_disc(n, &a.into(), &b.into()).unwrap();
        prop_assert_eq!(closed, discriminant_i64(&lower));
    }
}
