use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use k3n_core::riemann_roch::euler_characteristic;
use k3n_core::sections::{
    basis_v, basis_w, combine, monomial_pairs, mu_matrix, multiply, rank_and_kernel, stated_kernel_vectors,
    BidegreePoly, ExactMatrix, Monomial,
};

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn random_11(rng: &mut ChaCha8Rng) -> BidegreePoly {
    let terms = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| {
        let c = BigRational::new(
            BigInt::from(rng.gen_range(-9i64..=9)),
            BigInt::from(rng.gen_range(1i64..=4)),
        );
        ((Monomial::var(i), Monomial::var(j)), c)
    });
    let terms: Vec<_> = terms.collect();
    BidegreePoly::from_terms((1, 1), terms).unwrap()
}

#[test]
fn multiplication_is_commutative_and_distributive() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..100 {
        let p = random_11(&mut rng);
        let q = random_11(&mut rng);
        let r = random_11(&mut rng);
        assert_eq!(multiply(&p, &q).unwrap(), multiply(&q, &p).unwrap());
        let lhs = multiply(&p, &q.checked_add(&r).unwrap()).unwrap();
        let rhs = multiply(&p, &q)
            .unwrap()
            .checked_add(&multiply(&p, &r).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        // evaluation is a ring map
        let x = [rat(rng.gen_range(-5..=5)), rat(rng.gen_range(-5..=5)), rat(1)];
        let y = [rat(2), rat(rng.gen_range(-5..=5)), rat(rng.gen_range(-5..=5))];
        assert_eq!(
            multiply(&p, &q).unwrap().evaluate(&x, &y),
            p.evaluate(&x, &y) * q.evaluate(&x, &y)
        );
    }
}

/// μ' rebuilt from the index formulas, as `i64` entries.
fn mu_oracle() -> Vec<Vec<i64>> {
    let idx = |e: [u32; 3]| Monomial::all_of_degree(2).iter().position(|m| m.0 == e).unwrap();
    let lin = |i: usize, j: usize| -> [u32; 3] {
        let mut e = [0; 3];
        e[i] += 1;
        e[j] += 1;
        e
    };
    // each basis element as a list of (coefficient, first, second)
    let s: Vec<Vec<(i64, usize, usize)>> = (0..3)
        .map(|i| vec![(1, (i + 1) % 3, (i + 2) % 3), (-1, (i + 2) % 3, (i + 1) % 3)])
        .collect();
    let mut w: Vec<Vec<(i64, usize, usize)>> = (0..3)
        .map(|i| vec![(1, (i + 1) % 3, (i + 2) % 3), (1, (i + 2) % 3, (i + 1) % 3)])
        .collect();
    w.extend((0..3).map(|i| vec![(1, i, i)]));
    let mut rows = Vec::new();
    for si in &s {
        for wj in &w {
            let mut row = vec![0i64; 36];
            for &(c1, a1, b1) in si {
                for &(c2, a2, b2) in wj {
                    row[6 * idx(lin(a1, a2)) + idx(lin(b1, b2))] += c1 * c2;
                }
            }
            rows.push(row);
        }
    }
    rows
}

/// Rank over `F_p` by plain Gaussian elimination.
fn rank_mod_p(rows: &[Vec<i64>]) -> usize {
    const P: i64 = 1_000_000_007;
    let inv = |x: i64| {
        let (mut r, mut base, mut e) = (1i64, x.rem_euclid(P), P - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        r
    };
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(P)).collect())
        .collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let pinv = inv(a[rank][c]);
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c] * pinv % P;
                let pivot_row = a[rank].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x = (*x - f * p).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn mu_matrix_matches_independent_construction() {
    let oracle = mu_oracle();
    let mat = mu_matrix();
    for (i, row) in oracle.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            assert_eq!(*mat.get(i, j), rat(x), "entry ({i}, {j})");
        }
    }
    assert_eq!(rank_mod_p(&oracle), 15);
}

#[test]
fn rank_nullity_and_kernel_exactness() {
    let mat = mu_matrix();
    let rk = rank_and_kernel(&mat);
    assert_eq!(rk.rank, 15);
    assert_eq!(rk.rank + rk.kernel_basis.len(), 18);
    assert_eq!(
        BigInt::from(rk.rank),
        euler_characteristic(&BigInt::from(6), 2).unwrap()
    );
    for v in &rk.kernel_basis {
        assert!(mat.apply_left(v).iter().all(Zero::is_zero));
        assert!(combine(v).is_zero());
    }
    // the computed kernel and the stated vectors span the same space
    let stated = stated_kernel_vectors();
    let mut both = rk.kernel_basis.clone();
    both.extend(stated.iter().cloned());
    assert_eq!(ExactMatrix::from_rows(both, 18).rank(), 3);
}

#[test]
fn rank_is_invariant_under_permutations() {
    let mat = mu_matrix();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10 {
        let mut rows: Vec<usize> = (0..18).collect();
        let mut cols: Vec<usize> = (0..36).collect();
        rows.shuffle(&mut rng);
        cols.shuffle(&mut rng);
        let permuted = mat.permuted(&rows, &cols);
        let rk = rank_and_kernel(&permuted);
        assert_eq!(rk.rank, 15);
        assert_eq!(rk.kernel_basis.len(), 3);
        assert_eq!(permuted.transpose().rank(), 15);
    }
}

#[test]
fn v_and_w_split_the_bidegree_one_one_space() {
    let rows: Vec<_> = basis_v()
        .iter()
        .chain(basis_w().iter())
        .map(|p| p.coefficient_vector())
        .collect();
    let m = ExactMatrix::from_rows(rows, 9);
    assert_eq!(m.rank(), 9);
    assert_eq!(monomial_pairs(1, 1).len(), 9);
}

#[test]
fn matrix_serialization_is_stable() {
    let text = mu_matrix().to_string();
    assert_eq!(text.lines().count(), 18);
    assert!(text.ends_with('\n'));
    assert!(text.lines().all(|l| l.split(',').count() == 36));
    assert!(text
        .lines()
        .all(|l| l.split(',').all(|x| ["-1", "0", "1"].contains(&x))));
}
