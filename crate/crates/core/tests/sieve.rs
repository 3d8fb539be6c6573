mod oracle;

use disc_census::census::{count_by_squarefree_class, HeightBox, KeyKind};
use disc_census::sieve::{make_window, optimal_z, sieve_identity_check, sieve_upper_bound, SieveLabel};
use disc_census::{Budget, MonicIntPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn window_counts_match_naive_prime_count() {
    let pi = |x: u64| (2..=x).filter(|&k| oracle::is_prime_naive(k)).count();
    for z in (2..=2000u64).step_by(37) {
        let w = make_window(z as f64).unwrap();
        assert_eq!(w.pi_count, pi(2 * z) - pi(z), "z={z}");
        assert!(w.primes.iter().all(|&p| p > z && p <= 2 * z));
    }
}

#[test]
fn identity_on_cubic_subgrid() {
    let windows: Vec<_> = [10.0, 20.0, 50.0].iter().map(|&z| make_window(z).unwrap()).collect();
    for a0 in (-10..=10).step_by(3) {
        for a1 in -10..=10 {
            for a2 in (-10..=10).step_by(2) {
                let lower = [a0, a1, a2];
                if oracle::has_integer_root(&lower) {
                    continue;
                }
                let f = MonicIntPoly::from_i64(&lower).unwrap();
                for w in &windows {
                    let r = sieve_identity_check(&f, w).unwrap();
                    assert!(r.equal, "f={f} z={}", w.z);
                }
            }
        }
    }
}

#[test]
fn bound_dominates_census_when_labelled() {
    let h = 5u64;
    let table = count_by_squarefree_class(&HeightBox::strict(3, h).unwrap(), KeyKind::SignedSquarefreeU, Budget::default())
        .unwrap();
    for z in [5.0, 10.0, 20.0] {
        for (u, &count) in table.counts.iter().take(12) {
            let b = sieve_upper_bound(3, h, u, z, Budget::default()).unwrap();
            assert_eq!(b.class_size, count, "u={u}");
            if b.label == SieveLabel::Bound {
                assert!(b.value >= count as f64, "u={u} z={z} value={} count={count}", b.value);
            }
        }
    }
    let empty = sieve_upper_bound(3, h, &BigInt::from(-1_000_003), 10.0, Budget::default()).unwrap();
    assert_eq!(empty.class_size, 0);
    assert!(empty.value >= 0.0);
}

#[test]
fn optimal_z_formula() {
    let z = optimal_z(3, 1e5).unwrap();
    assert!((z - 376.4).abs() < 0.5, "z={z}");
    let clamp = optimal_z(3, 10.0).unwrap();
    assert!(clamp >= 10f64.ln().powi(2) - 1e-12);
    assert!(optimal_z(2, 100.0).is_err());
}

proptest! {
    #[test]
    fn identity_holds_for_random_polynomials(lower in prop::collection::vec(-30i64..=30, 2..=5), z in 2.0f64..300.0) {
        let f = MonicIntPoly::from_i64(&lower).unwrap();
        prop_assume!(disc_census::irreducibility::is_irreducible(&f).unwrap().is_irreducible());
        let w = make_window(z).unwrap();
        prop_assert!(sieve_identity_check(&f, &w).unwrap().equal);
    }
}
