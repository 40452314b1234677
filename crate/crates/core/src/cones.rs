//! Cone memberships in `Pic(X)_R` for `X = Hilb²(S)`, `S` a degree-two K3.
//!
//! In `(H, L)` coordinates the closed rational slices are
//!
//! | cone                          | generators        | inequalities          |
//! |-------------------------------|-------------------|-----------------------|
//! | positive cone                 | `H+δ`, `H-δ = L`  | `q ≥ 0`, `(c, H+L) ≥ 0` |
//! | birational Kähler cone        | `H`, `L`          | `a ≥ 0`, `b ≥ 0`      |
//! | `Nef(X)`                      | `H`, `H+2L`       | `b ≥ 0`, `2a ≥ b`     |
//! | `Nef(X')`                     | `H+2L`, `L`       | `a ≥ 0`, `b ≥ 2a`     |
//!
//! The wall divisors of the example are `±δ` and `±(3H ± 2δ)`; the wall
//! `(W)^⊥` with `W = 2H - 3δ` is the ray of `H + 2L = 3H - 2δ`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::lattice::{HLClass, Model};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConeReport {
    pub in_positive_cone_closure: bool,
    pub in_birational_kahler_closure: bool,
    pub in_nef_x: bool,
    pub in_nef_xprime: bool,
    pub on_flop_wall: bool,
    /// `q(c) > 0`.
    pub is_big: bool,
}

impl ConeReport {
    pub fn is_nef_on(&self, model: Model) -> bool {
        match model {
            Model::X => self.in_nef_x,
            Model::XPrime => self.in_nef_xprime,
        }
    }
}

pub fn in_nef_x(c: &HLClass) -> bool {
    !c.b.is_negative() && BigInt::from(2) * &c.a >= c.b
}

pub fn in_nef_xprime(c: &HLClass) -> bool {
    !c.a.is_negative() && c.b >= BigInt::from(2) * &c.a
}

pub fn is_nef(c: &HLClass, model: Model) -> bool {
    match model {
        Model::X => in_nef_x(c),
        Model::XPrime => in_nef_xprime(c),
    }
}

pub fn cone_report(c: &HLClass) -> ConeReport {
    let q = c.square();
    let h_plus_l = HLClass::new(1, 1);
    let nef_x = in_nef_x(c);
    let nef_xprime = in_nef_xprime(c);
    ConeReport {
        in_positive_cone_closure: !q.is_negative() && !c.pair(&h_plus_l).is_negative(),
        in_birational_kahler_closure: !c.a.is_negative() && !c.b.is_negative(),
        in_nef_x: nef_x,
        in_nef_xprime: nef_xprime,
        on_flop_wall: !c.is_zero() && c.is_nonneg_multiple_of(&HLClass::wall_ray()),
        is_big: q > BigInt::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        let h = cone_report(&HLClass::h());
        assert!(h.in_nef_x && !h.in_nef_xprime && h.in_birational_kahler_closure);

        let l = cone_report(&HLClass::l());
        assert!(l.in_nef_xprime && !l.in_nef_x && !l.is_big);

        let wall = cone_report(&HLClass::wall_ray());
        assert!(wall.in_nef_x && wall.in_nef_xprime && wall.on_flop_wall && wall.is_big);
        assert_eq!(HLClass::wall_ray().square(), BigInt::from(10));

        // H + δ = 2H - L
        let iso = HLClass::new(2, -1);
        assert_eq!(iso.square(), BigInt::zero());
        let r = cone_report(&iso);
        assert!(r.in_positive_cone_closure && !r.in_birational_kahler_closure && !r.is_big);
    }

    #[test]
    fn zero_class_is_in_every_closure_but_not_the_wall() {
        let r = cone_report(&HLClass::zero());
        assert!(r.in_positive_cone_closure && r.in_birational_kahler_closure);
        assert!(r.in_nef_x && r.in_nef_xprime);
        assert!(!r.on_flop_wall && !r.is_big);
    }

    #[test]
    fn negative_classes_are_outside() {
        let r = cone_report(&HLClass::new(-1, 0));
        assert!(!r.in_positive_cone_closure && !r.in_nef_x && !r.in_nef_xprime);
        let r = cone_report(&HLClass::delta());
        assert!(!r.in_positive_cone_closure);
        assert!(!cone_report(&HLClass::w()).in_positive_cone_closure);
    }

    #[test]
    fn ample_h_plus_l() {
        let r = cone_report(&HLClass::new(1, 1));
        assert!(r.in_nef_x && !r.in_nef_xprime && !r.on_flop_wall && r.is_big);
    }
}
