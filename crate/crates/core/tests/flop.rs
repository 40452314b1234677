use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use k3n_core::cones::is_nef;
use k3n_core::flop::{
    flop_constant, line_degree, pullback_from_x, pullback_from_xprime, restrict_to_e,
    vanishing_argument_applies, BlowupClass, ExceptionalBidegree, Route,
};
use k3n_core::lattice::{HLClass, Model};
use k3n_core::Error;

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn degree_formula_examples() {
    assert_eq!(flop_constant(), BigRational::new(big(1), big(2)));
    assert_eq!(line_degree(&HLClass::h()), big(2));
    assert_eq!(line_degree(&HLClass::l()), big(-1));
    assert_eq!(line_degree(&HLClass::wall_ray()), big(0));
    assert_eq!(line_degree(&HLClass::delta()), big(3));
}

#[test]
fn degree_is_half_pairing_with_w() {
    let w = HLClass::w();
    assert_eq!(w.to_hdelta(), (big(2), big(-3)));
    for a in -100i64..=100 {
        for b in -100i64..=100 {
            let c = HLClass::new(a, b);
            let pairing = c.pair(&w);
            assert!((&pairing % big(2)).is_zero());
            assert_eq!(line_degree(&c) * 2, pairing);
            assert_eq!(line_degree(&c), big(2 * a - b));
        }
    }
}

/// `φ*(A)|_E = O(deg, 0)`, `E|_E = O(-1, -1)`, extended linearly.
fn restriction_oracle(c: &HLClass, gamma: i64) -> ExceptionalBidegree {
    let deg = 2 * i64::try_from(&c.a).unwrap() - i64::try_from(&c.b).unwrap();
    ExceptionalBidegree {
        s: big(deg - gamma),
        t: big(-gamma),
    }
}

#[test]
fn pullbacks_are_coherent() {
    for a in -40i64..=40 {
        for b in -40i64..=40 {
            let c = HLClass::new(a, b);
            let px = pullback_from_x(&c);
            let pxp = pullback_from_xprime(&c);
            assert_eq!(px.base, c);
            assert!(px.e_coeff.is_zero());
            assert_eq!(pxp.base, c);
            assert_eq!(pxp.e_coeff, BigRational::from_integer(line_degree(&c)));
            assert_eq!(restrict_to_e(&px).unwrap(), restriction_oracle(&c, 0));
            let deg = 2 * a - b;
            assert_eq!(restrict_to_e(&pxp).unwrap(), restriction_oracle(&c, deg));
            // φ'*A' restricts trivially to the first factor
            assert!(restrict_to_e(&pxp).unwrap().s.is_zero());
            for k in -3..=3 {
                assert_eq!(px.minus_e(k).restrict_to_e().unwrap(), restriction_oracle(&c, -k));
            }
        }
    }
}

#[test]
fn lagrangian_class_pulls_back_with_minus_e() {
    let l = HLClass::l();
    let p = pullback_from_xprime(&l);
    assert_eq!(p, pullback_from_x(&l).minus_e(1));
    assert_eq!(
        p.restrict_to_e().unwrap(),
        ExceptionalBidegree { s: big(0), t: big(1) }
    );
}

#[test]
fn wall_classes_pull_back_identically() {
    for k in 0..=100 {
        let c = &big(k) * &HLClass::wall_ray();
        assert!(pullback_from_xprime(&c).e_coeff.is_zero());
        assert_eq!(pullback_from_xprime(&c), pullback_from_x(&c));
    }
}

#[test]
fn fractional_exceptional_coefficient_is_rejected() {
    let bc = BlowupClass {
        base: HLClass::h(),
        e_coeff: BigRational::new(big(1), big(2)),
    };
    assert!(matches!(
        restrict_to_e(&bc),
        Err(Error::NonIntegralRestriction(_))
    ));
}

#[test]
fn traces_cover_every_nef_class() {
    for a in 0i64..=60 {
        for b in 0i64..=60 {
            let c = HLClass::new(a, b);
            if c.is_zero() {
                continue;
            }
            for model in [Model::X, Model::XPrime] {
                if !is_nef(&c, model) {
                    assert!(matches!(
                        vanishing_argument_applies(&c, model),
                        Err(Error::NotNef { .. })
                    ));
                    continue;
                }
                let t = vanishing_argument_applies(&c, model).unwrap();
                assert_eq!(t.applies, t.steps.iter().all(|s| s.holds));
                assert!(!t.steps.is_empty());
                assert!(!t.citations().is_empty());
                let exceptional = model == Model::X && a == 1 && b == 1;
                assert_eq!(t.applies, !exceptional, "{c} on {model}");
                let expected = match (model, a, b) {
                    (Model::X, 1, 1) => Route::NotApplicable,
                    (Model::X, _, 0) => Route::MultipleOfH,
                    (Model::X, _, 1) => Route::Tautological,
                    (Model::X, _, _) => Route::BlowupKodaira,
                    (Model::XPrime, 0, _) => Route::LagrangianMultiple,
                    (Model::XPrime, _, _) => Route::BlowupKodaira,
                };
                assert_eq!(t.route, expected, "{c} on {model}");
            }
        }
    }
}

#[test]
fn blowup_route_on_xprime_uses_nonnegative_restriction() {
    for a in 1i64..=30 {
        for b in 2 * a..=60 {
            let c = HLClass::new(a, b);
            let t = vanishing_argument_applies(&c, Model::XPrime).unwrap();
            assert_eq!(t.route, Route::BlowupKodaira);
            let shifted = pullback_from_xprime(&c).minus_e(2).restrict_to_e().unwrap();
            assert_eq!(
                shifted,
                ExceptionalBidegree {
                    s: big(2),
                    t: big(2 - (2 * a - b))
                }
            );
            assert!(shifted.is_nonnegative());
        }
    }
}
