use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use k3n_core::lattice::{HLClass, Model};
use k3n_core::riemann_roch::{binomial, euler_characteristic, section_count, Justification};
use k3n_core::Error;

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// `C(top, k)` as the falling factorial over `k!`, computed in `i128`.
fn binomial_oracle(top: i128, k: u32) -> i128 {
    let mut num = 1i128;
    let mut den = 1i128;
    for i in 0..k as i128 {
        num *= top - i;
        den *= i + 1;
    }
    assert_eq!(num % den, 0);
    num / den
}

#[test]
fn degree_two_closed_form() {
    for d in -1000i64..=1000 {
        let chi = euler_characteristic(&big(2 * d), 2).unwrap();
        assert_eq!(chi, big((d + 2) * (d + 3) / 2), "d = {d}");
    }
}

#[test]
fn dimension_counts() {
    assert_eq!(euler_characteristic(&big(2), 2).unwrap(), big(6));
    assert_eq!(euler_characteristic(&big(6), 2).unwrap(), big(15));
    assert_eq!(euler_characteristic(&big(0), 2).unwrap(), big(3));
    for n in 1..=50u32 {
        assert_eq!(euler_characteristic(&big(0), n).unwrap(), big(n as i64 + 1));
    }
}

#[test]
fn odd_squares_and_bad_n_are_rejected() {
    assert!(matches!(
        euler_characteristic(&big(3), 2),
        Err(Error::OddSquare(_))
    ));
    assert!(euler_characteristic(&big(2), 0).is_err());
}

proptest! {
    #[test]
    fn matches_falling_factorial(half in -300i64..300, n in 1u32..12) {
        let chi = euler_characteristic(&big(2 * half), n).unwrap();
        let expected = binomial_oracle(half as i128 + n as i128 + 1, n);
        prop_assert_eq!(chi, BigInt::from(expected));
    }

    #[test]
    fn monotone_on_nonnegative_squares(half in 0i64..5000, n in 1u32..8) {
        let lo = euler_characteristic(&big(2 * half), n).unwrap();
        let hi = euler_characteristic(&big(2 * half + 2), n).unwrap();
        prop_assert!(hi > lo);
    }
}

#[test]
fn binomial_edge_cases() {
    assert!(binomial(&big(5), 0).is_one());
    assert!(binomial(&big(3), 5).is_zero());
    assert_eq!(binomial(&big(-1), 3), big(-1));
    assert_eq!(binomial(&big(-2), 2), big(3));
}

#[test]
fn section_counts() {
    let hl = section_count(&HLClass::new(1, 1), Model::X).unwrap();
    assert_eq!(hl.h0, Some(big(15)));
    assert_eq!(hl.justification, Justification::KodairaBigNef);
    let h = section_count(&HLClass::h(), Model::X).unwrap();
    assert_eq!(h.h0, Some(big(6)));
    let l = section_count(&HLClass::l(), Model::XPrime).unwrap();
    assert_eq!((l.chi.clone(), l.h0.clone()), (big(3), Some(big(3))));
    assert_eq!(l.justification, Justification::LagrangianPrimitive);
    let two_l = section_count(&HLClass::new(0, 2), Model::XPrime).unwrap();
    assert_eq!(two_l.h0, None);
    assert_eq!(two_l.justification, Justification::NotDetermined);
    assert!(matches!(
        section_count(&HLClass::l(), Model::X),
        Err(Error::NotNef { .. })
    ));
}
