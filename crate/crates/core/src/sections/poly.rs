//! Multihomogeneous polynomials on `P² × P²`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a monomial in `x₀, x₁, x₂`.
///
/// `Ord` follows the graded-lexicographic listing with `x₀ > x₁ > x₂`,
/// largest monomial first: for degree two the order is
/// `x₀², x₀x₁, x₀x₂, x₁², x₁x₂, x₂²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn var(i: usize) -> Monomial {
        let mut e = [0; 3];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// All monomials of degree `d`, in `Ord` order.
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for e0 in (0..=d).rev() {
            for e1 in (0..=d - e0).rev() {
                out.push(Monomial([e0, e1, d - e0 - e1]));
            }
        }
        out
    }

    fn evaluate(&self, point: &[BigRational; 3]) -> BigRational {
        let mut acc = BigRational::one();
        for (x, &e) in point.iter().zip(&self.0) {
            for _ in 0..e {
                acc *= x;
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{i}")?,
                _ => write!(f, "x{i}^{e}")?,
            }
        }
        Ok(())
    }
}

/// A monomial pair `α ⊗ β`, first factor major.
pub type MonomialPair = (Monomial, Monomial);

/// All monomial pairs of bidegree `(d1, d2)` in column order.
pub fn monomial_pairs(d1: u32, d2: u32) -> Vec<MonomialPair> {
    let second = Monomial::all_of_degree(d2);
    Monomial::all_of_degree(d1)
        .into_iter()
        .flat_map(|a| second.iter().map(move |&b| (a, b)))
        .collect()
}

/// A section of `O(d₁, d₂)` on `P² × P²` with exact rational coefficients.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BidegreePoly {
    bidegree: (u32, u32),
    coeffs: BTreeMap<MonomialPair, BigRational>,
}

impl BidegreePoly {
    pub fn zero(bidegree: (u32, u32)) -> Self {
        BidegreePoly {
            bidegree,
            coeffs: BTreeMap::new(),
        }
    }

    /// `x_i ⊗ x_j`.
    pub fn pure_tensor(i: usize, j: usize) -> Self {
        let mut p = Self::zero((1, 1));
        p.add_term((Monomial::var(i), Monomial::var(j)), BigRational::one());
        p
    }

    pub fn from_terms(
        bidegree: (u32, u32),
        terms: impl IntoIterator<Item = (MonomialPair, BigRational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(bidegree);
        for (key, c) in terms {
            let got = (key.0.degree(), key.1.degree());
            if got != bidegree {
                return Err(Error::BidegreeMismatch {
                    expected: bidegree,
                    got,
                });
            }
            p.add_term(key, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, key: MonomialPair, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.bidegree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, key: &MonomialPair) -> BigRational {
        self.coeffs.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonomialPair, &BigRational)> {
        self.coeffs.iter()
    }

    /// Dense coefficient vector over [`monomial_pairs`] of the bidegree.
    pub fn coefficient_vector(&self) -> Vec<BigRational> {
        monomial_pairs(self.bidegree.0, self.bidegree.1)
            .iter()
            .map(|k| self.coefficient(k))
            .collect()
    }

    pub fn checked_add(&self, other: &BidegreePoly) -> Result<BidegreePoly> {
        if self.bidegree != other.bidegree {
            return Err(Error::BidegreeMismatch {
                expected: self.bidegree,
                got: other.bidegree,
            });
        }
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn scaled(&self, s: &BigRational) -> BidegreePoly {
        let mut out = Self::zero(self.bidegree);
        for (k, c) in &self.coeffs {
            out.add_term(*k, c * s);
        }
        out
    }

    /// Product of arbitrary bidegrees, `(A⊗B)·(C⊗D) = AC ⊗ BD`.
    pub fn product(&self, other: &BidegreePoly) -> BidegreePoly {
        let bidegree = (
            self.bidegree.0 + other.bidegree.0,
            self.bidegree.1 + other.bidegree.1,
        );
        let mut out = Self::zero(bidegree);
        for ((a, b), c) in &self.coeffs {
            for ((x, y), d) in &other.coeffs {
                out.add_term((a.mul(x), b.mul(y)), c * d);
            }
        }
        out
    }

    /// Value at `(p, q) ∈ Q³ × Q³`.
    pub fn evaluate(&self, p: &[BigRational; 3], q: &[BigRational; 3]) -> BigRational {
        self.coeffs
            .iter()
            .map(|((a, b), c)| c * a.evaluate(p) * b.evaluate(q))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    /// Exchanges the two factors of a `(d, d)` polynomial.
    pub fn swap_factors(&self) -> BidegreePoly {
        let mut out = Self::zero((self.bidegree.1, self.bidegree.0));
        for ((a, b), c) in &self.coeffs {
            out.add_term((*b, *a), c.clone());
        }
        out
    }
}

impl fmt::Display for BidegreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) {a}⊗{b}")?;
        }
        Ok(())
    }
}

/// Product of two sections of `O(1, 1)`.
pub fn multiply(p: &BidegreePoly, q: &BidegreePoly) -> Result<BidegreePoly> {
    for poly in [p, q] {
        if poly.bidegree != (1, 1) {
            return Err(Error::BidegreeMismatch {
                expected: (1, 1),
                got: poly.bidegree,
            });
        }
    }
    Ok(p.product(q))
}

pub(crate) fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_listing() {
        let names: Vec<String> = Monomial::all_of_degree(2).iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"]);
        let mut sorted = Monomial::all_of_degree(2);
        sorted.reverse();
        sorted.sort();
        assert_eq!(sorted, Monomial::all_of_degree(2));
        assert_eq!(monomial_pairs(2, 2).len(), 36);
        assert_eq!(monomial_pairs(1, 1).len(), 9);
    }

    #[test]
    fn monomial_product() {
        let p = BidegreePoly::pure_tensor(0, 1);
        let q = BidegreePoly::pure_tensor(1, 0);
        let r = multiply(&p, &q).unwrap();
        let x0x1 = Monomial([1, 1, 0]);
        assert_eq!(r.num_terms(), 1);
        assert_eq!(r.coefficient(&(x0x1, x0x1)), int(1));
        assert_eq!(r.bidegree(), (2, 2));
    }

    #[test]
    fn multiply_checks_bidegrees() {
        let p = BidegreePoly::pure_tensor(0, 1);
        let sq = p.product(&p);
        assert!(matches!(multiply(&sq, &p), Err(Error::BidegreeMismatch { .. })));
        assert!(matches!(p.checked_add(&sq), Err(Error::BidegreeMismatch { .. })));
        let bad = BidegreePoly::from_terms((1, 1), [((Monomial([2, 0, 0]), Monomial::var(0)), int(1))]);
        assert!(bad.is_err());
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = BidegreePoly::pure_tensor(1, 2);
        let sum = p.checked_add(&p.scaled(&int(-1))).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.coefficient_vector().len(), 9);
    }
}
