//! Euler characteristics and section counts on K3^[n]-type varieties.
//!
//! `χ(X, A) = C(q(A)/2 + n + 1, n)`. For big and nef `A` the higher
//! cohomology vanishes and `h⁰ = χ`; a primitive nef isotropic class induces
//! a Lagrangian fibration over `Pⁿ` and has `h⁰ = n + 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cones;
use crate::error::{Error, Result};
use crate::lattice::{HLClass, Model};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    /// Big and nef: Kodaira vanishing gives `h⁰ = χ`.
    KodairaBigNef,
    /// Primitive, nef, `q = 0`: Lagrangian fibration, `h⁰ = n + 1`.
    LagrangianPrimitive,
    NotDetermined,
}

impl Justification {
    pub fn name(self) -> &'static str {
        match self {
            Justification::KodairaBigNef => "KodairaBigNef",
            Justification::LagrangianPrimitive => "LagrangianPrimitive",
            Justification::NotDetermined => "NotDetermined",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionCount {
    pub chi: BigInt,
    pub h0: Option<BigInt>,
    pub justification: Justification,
}

/// `C(top, k)` as the polynomial `top(top-1)…(top-k+1)/k!`, valid for every
/// integer `top`; it vanishes for `0 ≤ top < k`.
pub fn binomial(top: &BigInt, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        // a product of i+1 consecutive integers is divisible by (i+1)!
        acc *= top - BigInt::from(i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// `χ = C(q/2 + n + 1, n)` for an even BBF square `q`.
pub fn euler_characteristic(q_value: &BigInt, n: u32) -> Result<BigInt> {
    if q_value.is_odd() {
        return Err(Error::OddSquare(q_value.to_string()));
    }
    if n < 1 {
        return Err(Error::InvalidHilbertParameter { min: 1, got: n });
    }
    let top = q_value / 2 + BigInt::from(n) + 1;
    Ok(binomial(&top, n))
}

/// Sections of `aH + bL` on the given model of the degree-two example (`n = 2`).
pub fn section_count(c: &HLClass, model: Model) -> Result<SectionCount> {
    if !cones::is_nef(c, model) {
        return Err(Error::NotNef {
            a: c.a.to_string(),
            b: c.b.to_string(),
            model: model.name(),
        });
    }
    let q = c.square();
    let chi = euler_characteristic(&q, 2)?;
    if q.is_positive() {
        return Ok(SectionCount {
            h0: Some(chi.clone()),
            chi,
            justification: Justification::KodairaBigNef,
        });
    }
    debug_assert!(q.is_zero());
    let lagrangian = model == Model::XPrime && !c.is_zero() && c.is_primitive()?;
    if lagrangian {
        return Ok(SectionCount {
            chi,
            h0: Some(BigInt::from(3)),
            justification: Justification::LagrangianPrimitive,
        });
    }
    Ok(SectionCount {
        chi,
        h0: None,
        justification: Justification::NotDetermined,
    })
}
