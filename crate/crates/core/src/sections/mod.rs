//! Section spaces of the degree-two example modelled on `P² × P²`.
//!
//! Sections of `L` and `H` on `X = Hilb²(S)` pull back to the spans
//!
//! * `V = ⟨s_i⟩`, `s_i = x_{i+1}⊗x_{i+2} - x_{i+2}⊗x_{i+1}` (antisymmetric),
//! * `W = ⟨t_i, v_i⟩`, `t_i = x_{i+1}⊗x_{i+2} + x_{i+2}⊗x_{i+1}`, `v_i = x_i⊗x_i`,
//!
//! inside `H⁰(P² × P², O(1, 1))`, indices taken in `Z/3`. The multiplication
//! map `μ': V ⊗ W → H⁰(O(2, 2))` has a three-dimensional kernel spanned by
//! `s_{k+1}⊗t_{k+2} + s_{k+2}⊗t_{k+1} + 2 s_k⊗v_k`, so its image has
//! dimension `18 - 3 = 15 = h⁰(X, H + L)`.
//!
//! Matrix conventions: the row of `(s_i, w_j)` is `6i + j` with `w` in the
//! order `t₀, t₁, t₂, v₀, v₁, v₂`; columns follow [`monomial_pairs`]`(2, 2)`.

pub mod matrix;
pub mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub use matrix::{rank_and_kernel, ExactMatrix, RankKernel};
pub use poly::{monomial_pairs, multiply, BidegreePoly, Monomial, MonomialPair};

use crate::citations::Citation;
use crate::error::{Error, Result};
use crate::riemann_roch;
use poly::int;

fn cyc(i: usize) -> usize {
    i % 3
}

fn tensor_combo(terms: &[(i64, usize, usize)]) -> BidegreePoly {
    terms.iter().fold(BidegreePoly::zero((1, 1)), |acc, &(c, i, j)| {
        acc.checked_add(&BidegreePoly::pure_tensor(i, j).scaled(&int(c)))
            .expect("all terms have bidegree (1, 1)")
    })
}

/// `s₀, s₁, s₂`.
pub fn basis_v() -> [BidegreePoly; 3] {
    std::array::from_fn(|i| tensor_combo(&[(1, cyc(i + 1), cyc(i + 2)), (-1, cyc(i + 2), cyc(i + 1))]))
}

/// `t₀, t₁, t₂, v₀, v₁, v₂`.
pub fn basis_w() -> [BidegreePoly; 6] {
    std::array::from_fn(|j| {
        if j < 3 {
            tensor_combo(&[(1, cyc(j + 1), cyc(j + 2)), (1, cyc(j + 2), cyc(j + 1))])
        } else {
            tensor_combo(&[(1, j - 3, j - 3)])
        }
    })
}

pub const V_DIM: usize = 3;
pub const W_DIM: usize = 6;

/// Row index of `s_i ⊗ w_j`.
pub fn mu_row(i: usize, j: usize) -> usize {
    W_DIM * i + j
}

/// The `18 × 36` matrix of `μ'`.
pub fn mu_matrix() -> ExactMatrix {
    let v = basis_v();
    let w = basis_w();
    let mut rows = Vec::with_capacity(V_DIM * W_DIM);
    for s in &v {
        for t in &w {
            rows.push(multiply(s, t).expect("(1, 1) inputs").coefficient_vector());
        }
    }
    ExactMatrix::from_rows(rows, monomial_pairs(2, 2).len())
}

/// The three claimed kernel elements, in row coordinates of [`mu_matrix`].
pub fn stated_kernel_vectors() -> [Vec<BigRational>; 3] {
    std::array::from_fn(|k| {
        let mut v = vec![BigRational::zero(); V_DIM * W_DIM];
        v[mu_row(cyc(k + 1), cyc(k + 2))] += int(1);
        v[mu_row(cyc(k + 2), cyc(k + 1))] += int(1);
        v[mu_row(k, 3 + k)] += int(2);
        v
    })
}

/// `s_{k+1}t_{k+2} + s_{k+2}t_{k+1} + 2 s_k v_k`, expanded as a polynomial.
pub fn stated_kernel_polynomial(k: usize) -> BidegreePoly {
    let v = basis_v();
    let w = basis_w();
    let prod = |i: usize, j: usize| multiply(&v[i], &w[j]).expect("(1, 1) inputs");
    prod(cyc(k + 1), cyc(k + 2))
        .checked_add(&prod(cyc(k + 2), cyc(k + 1)))
        .and_then(|p| p.checked_add(&prod(k, 3 + k).scaled(&int(2))))
        .expect("bidegree (2, 2)")
}

/// `Σ v_{ij} · s_i w_j` for a source vector in row coordinates.
pub fn combine(vector: &[BigRational]) -> BidegreePoly {
    let v = basis_v();
    let w = basis_w();
    let mut acc = BidegreePoly::zero((2, 2));
    for (i, s) in v.iter().enumerate() {
        for (j, t) in w.iter().enumerate() {
            let c = &vector[mu_row(i, j)];
            if !c.is_zero() {
                let term = multiply(s, t).expect("(1, 1) inputs").scaled(c);
                acc = acc.checked_add(&term).expect("bidegree (2, 2)");
            }
        }
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuReport {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub kernel_basis: Vec<Vec<BigRational>>,
    /// Per stated vector: `μ'` kills it, checked on the matrix and as a
    /// polynomial identity.
    pub stated_annihilated: [bool; 3],
    pub stated_independent: bool,
    pub stated_span_kernel: bool,
    pub image_dim: usize,
    /// `h⁰(X, H + L) = χ(q = 6, n = 2)`.
    pub h0_h_plus_l: BigInt,
    pub surjective: bool,
    pub citations: Vec<Citation>,
}

/// Checks the kernel and image of `μ'` exactly.
pub fn verify_kernel_basis() -> Result<MuReport> {
    let mat = mu_matrix();
    let rk = rank_and_kernel(&mat);
    let stated = stated_kernel_vectors();

    let mut stated_annihilated = [false; 3];
    for (k, vec) in stated.iter().enumerate() {
        let by_matrix = mat.apply_left(vec).iter().all(|x| x.is_zero());
        let by_poly = stated_kernel_polynomial(k).is_zero() && combine(vec).is_zero();
        stated_annihilated[k] = by_matrix && by_poly;
        if !stated_annihilated[k] {
            return Err(Error::VerificationFailed(format!(
                "stated kernel vector k = {k} is not annihilated"
            )));
        }
    }

    let stated_rank = ExactMatrix::from_rows(stated.to_vec(), V_DIM * W_DIM).rank();
    let stated_independent = stated_rank == 3;
    if !stated_independent {
        return Err(Error::VerificationFailed(format!(
            "stated kernel vectors span only {stated_rank} dimensions"
        )));
    }
    let kernel_dim = rk.kernel_basis.len();
    if kernel_dim != 3 {
        return Err(Error::VerificationFailed(format!(
            "kernel dimension is {kernel_dim}, not 3"
        )));
    }
    let stated_span_kernel = stated_independent && kernel_dim == stated_rank;

    let image_dim = rk.rank;
    let h0 = riemann_roch::euler_characteristic(&BigInt::from(6), 2)?;
    let surjective = BigInt::from(image_dim) == h0;
    if !surjective {
        return Err(Error::VerificationFailed(format!(
            "image dimension {image_dim} differs from h0(H + L) = {h0}"
        )));
    }

    Ok(MuReport {
        source_dim: mat.rows(),
        target_dim: mat.cols(),
        rank: rk.rank,
        kernel_dim,
        kernel_basis: rk.kernel_basis,
        stated_annihilated,
        stated_independent,
        stated_span_kernel,
        image_dim,
        h0_h_plus_l: h0,
        surjective,
        citations: vec![
            Citation::RiemannRoch,
            Citation::LagrangianFibration,
            Citation::KernelComparison,
            Citation::MuSurjective,
        ],
    })
}

/// `(p, q) ↦ (p × q)_i` as a section of `O(1, 1)`.
pub fn cross_product_form(i: usize) -> BidegreePoly {
    let mut terms = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            let mut p = [0i64; 3];
            let mut q = [0i64; 3];
            p[a] = 1;
            q[b] = 1;
            let cross = [
                p[1] * q[2] - p[2] * q[1],
                p[2] * q[0] - p[0] * q[2],
                p[0] * q[1] - p[1] * q[0],
            ];
            terms.push(((Monomial::var(a), Monomial::var(b)), int(cross[i])));
        }
    }
    BidegreePoly::from_terms((1, 1), terms).expect("bidegree (1, 1)")
}

/// True iff `candidates[i]` is the `i`-th coordinate of the cross product
/// for every `i`, i.e. `{s_i = 0}` pulls back the coordinate line
/// `{x_i∨ = 0}` under the map sending two points to the line they span.
pub fn cross_product_identity_holds(candidates: &[BidegreePoly]) -> bool {
    candidates.len() == 3
        && candidates
            .iter()
            .enumerate()
            .all(|(i, s)| *s == cross_product_form(i))
}

pub fn cross_product_identity_check() -> bool {
    cross_product_identity_holds(&basis_v())
}

#[cfg(test)]
mod tests {
    use super::*;
    use poly::Monomial;

    fn rat_vec(xs: &[i64]) -> [BigRational; 3] {
        [int(xs[0]), int(xs[1]), int(xs[2])]
    }

    #[test]
    fn s0_is_as_defined() {
        let s0 = &basis_v()[0];
        assert_eq!(s0.num_terms(), 2);
        assert_eq!(s0.coefficient(&(Monomial::var(1), Monomial::var(2))), int(1));
        assert_eq!(s0.coefficient(&(Monomial::var(2), Monomial::var(1))), int(-1));
        for s in basis_v() {
            assert!(s.terms().all(|(_, c)| *c == int(1) || *c == int(-1)));
        }
    }

    #[test]
    fn v_vanishes_on_the_diagonal() {
        for p in [[1, 2, 3], [-4, 0, 7], [5, 5, -1]] {
            let p = rat_vec(&p);
            for s in basis_v() {
                assert!(s.evaluate(&p, &p).is_zero());
            }
        }
    }

    #[test]
    fn w_is_symmetric() {
        let w = basis_w();
        assert_eq!(w[4], BidegreePoly::pure_tensor(1, 1));
        for t in &w {
            assert_eq!(t.swap_factors(), *t);
        }
        for s in basis_v() {
            assert_eq!(s.swap_factors(), s.scaled(&int(-1)));
        }
    }

    #[test]
    fn spans() {
        let v_rows: Vec<_> = basis_v().iter().map(|p| p.coefficient_vector()).collect();
        let w_rows: Vec<_> = basis_w().iter().map(|p| p.coefficient_vector()).collect();
        assert_eq!(ExactMatrix::from_rows(v_rows.clone(), 9).rank(), 3);
        assert_eq!(ExactMatrix::from_rows(w_rows.clone(), 9).rank(), 6);
        let all: Vec<_> = v_rows.into_iter().chain(w_rows).collect();
        assert_eq!(ExactMatrix::from_rows(all, 9).rank(), 9);
    }

    #[test]
    fn s0_times_v0_has_two_terms() {
        let p = multiply(&basis_v()[0], &basis_w()[3]).unwrap();
        assert_eq!(p.num_terms(), 2);
        let mat = mu_matrix();
        let nonzero = mat.row(mu_row(0, 3)).iter().filter(|x| !x.is_zero()).count();
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn mu_matrix_shape_and_entries() {
        let mat = mu_matrix();
        assert_eq!((mat.rows(), mat.cols()), (18, 36));
        assert!(mat
            .entries()
            .all(|x| *x == int(-1) || x.is_zero() || *x == int(1)));
    }

    #[test]
    fn stated_polynomials_vanish() {
        for k in 0..3 {
            assert!(stated_kernel_polynomial(k).is_zero(), "k = {k}");
        }
        // a near-miss is not in the kernel
        let v = basis_v();
        let w = basis_w();
        let wrong = multiply(&v[1], &w[2])
            .unwrap()
            .checked_add(&multiply(&v[2], &w[1]).unwrap())
            .unwrap()
            .checked_add(&multiply(&v[0], &w[3]).unwrap())
            .unwrap();
        assert!(!wrong.is_zero());
    }

    #[test]
    fn full_verification() {
        let report = verify_kernel_basis().unwrap();
        assert_eq!(report.rank, 15);
        assert_eq!(report.kernel_dim, 3);
        assert_eq!(report.image_dim, 15);
        assert_eq!(report.h0_h_plus_l, BigInt::from(15));
        assert!(report.surjective && report.stated_independent && report.stated_span_kernel);
        assert_eq!(report.stated_annihilated, [true; 3]);
        assert_eq!(report.source_dim, 18);
        assert_eq!(report.target_dim, 36);
    }

    #[test]
    fn cross_product() {
        assert!(cross_product_identity_check());
        assert_eq!(cross_product_form(0), basis_v()[0]);
        let mut perturbed = basis_v().to_vec();
        perturbed[0] = tensor_combo(&[(1, 1, 2), (1, 2, 1)]);
        assert!(!cross_product_identity_holds(&perturbed));
    }
}
