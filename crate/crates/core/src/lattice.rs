//! The Beauville–Bogomolov–Fujiki lattice `Λ_K3 ⊕ Zδ` in formal coordinates,
//! and the rank-two Picard lattice of `Hilb²(S)` for a degree-two K3 surface.
//!
//! A class of the big lattice is written `aλ + bδ` where `λ ∈ Λ_K3` is
//! primitive with `q(λ) = 2d₀`. Because `Λ_K3` is even unimodular, the
//! square, the pairing of two classes on the same `λ`-line, and the
//! divisibility only depend on `(a, b, d₀, n)`. The classes `λ` themselves
//! are opaque: two classes can be paired only when they carry the same
//! [`LambdaTag`] and the same `d₀`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Opaque identity of the primitive class `λ ∈ Λ_K3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LambdaTag(pub u32);

impl LambdaTag {
    /// `λ = H_S`, the ample generator of the degree-two K3 surface.
    pub const DEGREE_TWO: LambdaTag = LambdaTag(0);
}

/// `aλ + bδ` in `H²(X, Z) ≅ Λ_K3 ⊕ Zδ` with `q(λ) = 2d₀` and `q(δ) = -2(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralClass {
    a: BigInt,
    b: BigInt,
    half_lambda_square: BigInt,
    n: u32,
    lambda: LambdaTag,
}

impl GeneralClass {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        half_lambda_square: impl Into<BigInt>,
        n: u32,
    ) -> Result<Self> {
        Self::with_lambda(a, b, half_lambda_square, n, LambdaTag::default())
    }

    pub fn with_lambda(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        half_lambda_square: impl Into<BigInt>,
        n: u32,
        lambda: LambdaTag,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidHilbertParameter { min: 2, got: n });
        }
        Ok(GeneralClass {
            a: a.into(),
            b: b.into(),
            half_lambda_square: half_lambda_square.into(),
            n,
            lambda,
        })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// `d₀ = q(λ)/2`.
    pub fn half_lambda_square(&self) -> &BigInt {
        &self.half_lambda_square
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn lambda(&self) -> LambdaTag {
        self.lambda
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `-q(δ)/2 = n - 1`.
    fn delta_half_norm(&self) -> BigInt {
        BigInt::from(self.n - 1)
    }

    /// `q(aλ + bδ) = 2d₀a² - 2(n-1)b²`.
    pub fn square(&self) -> BigInt {
        let two = BigInt::from(2);
        &two * &self.half_lambda_square * &self.a * &self.a
            - &two * self.delta_half_norm() * &self.b * &self.b
    }

    fn check_ambient(&self, other: &GeneralClass) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MismatchedAmbient(format!(
                "n = {} vs n = {}",
                self.n, other.n
            )));
        }
        if self.lambda != other.lambda || self.half_lambda_square != other.half_lambda_square {
            return Err(Error::MismatchedAmbient(format!(
                "λ-tag {}/d₀ = {} vs λ-tag {}/d₀ = {}",
                self.lambda.0, self.half_lambda_square, other.lambda.0, other.half_lambda_square
            )));
        }
        Ok(())
    }

    /// `(α, β)_q = 2d₀·a₁a₂ - 2(n-1)·b₁b₂` for classes on the same `λ`-line.
    pub fn pair(&self, other: &GeneralClass) -> Result<BigInt> {
        self.check_ambient(other)?;
        let two = BigInt::from(2);
        Ok(&two * &self.half_lambda_square * &self.a * &other.a
            - &two * self.delta_half_norm() * &self.b * &other.b)
    }

    /// `div(α) = gcd(a, 2b(n-1))`, the positive generator of `(α, Λ)_q`.
    pub fn divisibility(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Err(Error::ZeroClass);
        }
        let rhs = BigInt::from(2) * &self.b * self.delta_half_norm();
        Ok(self.a.gcd(&rhs))
    }

    /// True iff the class is not a nontrivial multiple of another class.
    pub fn is_primitive(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroClass);
        }
        Ok(self.a.gcd(&self.b).is_one())
    }

    pub fn checked_add(&self, other: &GeneralClass) -> Result<GeneralClass> {
        self.check_ambient(other)?;
        Ok(GeneralClass {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            ..self.clone()
        })
    }

    pub fn scaled(&self, k: &BigInt) -> GeneralClass {
        GeneralClass {
            a: &self.a * k,
            b: &self.b * k,
            ..self.clone()
        }
    }
}

/// Discriminant of `Λ_K3 ⊕ Zδ`, which is `2(n-1)` since `Λ_K3` is unimodular.
pub fn k3n_discriminant(n: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidHilbertParameter { min: 2, got: n });
    }
    Ok(BigInt::from(2) * BigInt::from(n - 1))
}

/// The two birational hyperkähler models of the degree-two example.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    /// `X = Hilb²(S)`.
    X,
    /// The Mukai flop `X'` of `X` in the plane `P ⊂ X`.
    XPrime,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::X => "X",
            Model::XPrime => "X'",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `aH + bL` in `Pic(Hilb²(S))` for the degree-two K3 surface, where
/// `q(H) = 2`, `q(δ) = -2` and `L = H - δ`.
///
/// The same coordinates name the birational transforms `aH' + bL'` on `X'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HLClass {
    pub a: BigInt,
    pub b: BigInt,
}

impl HLClass {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        HLClass {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        HLClass::new(0, 0)
    }

    pub fn h() -> Self {
        HLClass::new(1, 0)
    }

    pub fn l() -> Self {
        HLClass::new(0, 1)
    }

    /// `δ = H - L`.
    pub fn delta() -> Self {
        HLClass::new(1, -1)
    }

    /// The wall divisor `W = 2H - 3δ = -H + 3L`.
    pub fn w() -> Self {
        HLClass::new(-1, 3)
    }

    /// `H + 2L = 3H - 2δ`, spanning the wall between `Nef(X)` and `Nef(X')`.
    pub fn wall_ray() -> Self {
        HLClass::new(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Coordinates over `(H, δ)`.
    pub fn to_hdelta(&self) -> (BigInt, BigInt) {
        hl_to_hdelta(self)
    }

    pub fn from_hdelta(h: impl Into<BigInt>, delta: impl Into<BigInt>) -> Self {
        hdelta_to_hl(&h.into(), &delta.into())
    }

    /// The class `(a+b)λ - bδ` with `λ = H_S`, `d₀ = 1`, `n = 2`.
    pub fn to_general(&self) -> GeneralClass {
        let (h, d) = self.to_hdelta();
        GeneralClass {
            a: h,
            b: d,
            half_lambda_square: BigInt::one(),
            n: 2,
            lambda: LambdaTag::DEGREE_TWO,
        }
    }

    pub fn square(&self) -> BigInt {
        self.to_general().square()
    }

    pub fn pair(&self, other: &HLClass) -> BigInt {
        self.to_general()
            .pair(&other.to_general())
            .expect("HL classes share one ambient lattice")
    }

    pub fn divisibility(&self) -> Result<BigInt> {
        self.to_general().divisibility()
    }

    pub fn is_primitive(&self) -> Result<bool> {
        self.to_general().is_primitive()
    }

    /// True iff `self = k·other` for some integer `k ≥ 0`.
    pub fn is_nonneg_multiple_of(&self, other: &HLClass) -> bool {
        debug_assert!(!other.is_zero());
        // collinear and pointing the same way (or zero)
        let cross = &self.a * &other.b - &self.b * &other.a;
        if !cross.is_zero() {
            return false;
        }
        let dot = &self.a * &other.a + &self.b * &other.b;
        if dot.is_negative() {
            return false;
        }
        let g = other.a.gcd(&other.b);
        let (pa, pb) = (&other.a / &g, &other.b / &g);
        // self = t·primitive(other); need other's multiplicity to divide t
        let t = if !pa.is_zero() {
            &self.a / &pa
        } else {
            &self.b / &pb
        };
        (t % g).is_zero()
    }
}

impl fmt::Display for HLClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}H + {}L", self.a, self.b)
    }
}

impl Add for &HLClass {
    type Output = HLClass;
    fn add(self, rhs: &HLClass) -> HLClass {
        HLClass {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &HLClass {
    type Output = HLClass;
    fn sub(self, rhs: &HLClass) -> HLClass {
        HLClass {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &HLClass {
    type Output = HLClass;
    fn neg(self) -> HLClass {
        HLClass {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Mul<&HLClass> for &BigInt {
    type Output = HLClass;
    fn mul(self, rhs: &HLClass) -> HLClass {
        HLClass {
            a: self * &rhs.a,
            b: self * &rhs.b,
        }
    }
}

/// `aH + bL = (a+b)H - bδ`.
pub fn hl_to_hdelta(c: &HLClass) -> (BigInt, BigInt) {
    (&c.a + &c.b, -&c.b)
}

/// Inverse of [`hl_to_hdelta`]: `xH + yδ = (x+y)H - yL`.
pub fn hdelta_to_hl(h: &BigInt, delta: &BigInt) -> HLClass {
    HLClass {
        a: h + delta,
        b: -delta,
    }
}

/// A lattice vector in the coordinates of a [`GramLattice`].
pub type LatticeVector = Vec<BigInt>;

/// An even integral lattice of rank one or two given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    gram: Vec<Vec<BigInt>>,
}

impl GramLattice {
    pub fn new(gram: Vec<Vec<BigInt>>) -> Result<Self> {
        let rank = gram.len();
        if rank == 0 || rank > 2 {
            return Err(Error::RankUnsupported(rank));
        }
        if gram.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidGram("matrix is not square".into()));
        }
        for (i, row) in gram.iter().enumerate() {
            if row[i].is_odd() {
                return Err(Error::InvalidGram(format!("diagonal entry {} is odd", row[i])));
            }
            if (0..i).any(|j| row[j] != gram[j][i]) {
                return Err(Error::InvalidGram("matrix is not symmetric".into()));
            }
        }
        Ok(GramLattice { gram })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<BigInt>] {
        &self.gram
    }

    fn check_dim(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                rank: self.rank(),
                got: v.len(),
            });
        }
        Ok(())
    }

    pub fn pair(&self, u: &[BigInt], v: &[BigInt]) -> Result<BigInt> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        let mut acc = BigInt::zero();
        for (i, ui) in u.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                acc += ui * &self.gram[i][j] * vj;
            }
        }
        Ok(acc)
    }

    pub fn square(&self, v: &[BigInt]) -> Result<BigInt> {
        self.pair(v, v)
    }

    /// Determinant of the Gram matrix.
    pub fn discriminant(&self) -> BigInt {
        match self.rank() {
            1 => self.gram[0][0].clone(),
            _ => &self.gram[0][0] * &self.gram[1][1] - &self.gram[0][1] * &self.gram[1][0],
        }
    }
}
