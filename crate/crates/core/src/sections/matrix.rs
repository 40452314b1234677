//! Dense exact matrices and fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Builds a matrix from equally long rows. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(rows: Vec<Vec<BigRational>>, cols: usize) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        ExactMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigRational> {
        self.entries.iter()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Row `i` of the result is row `row_perm[i]` of `self`, likewise for columns.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> ExactMatrix {
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, &ri) in row_perm.iter().enumerate() {
            for (j, &cj) in col_perm.iter().enumerate() {
                out.set(i, j, self.get(ri, cj).clone());
            }
        }
        out
    }

    /// `vᵀ·self`, the image of a source vector under the map whose matrix
    /// has one row per source basis vector.
    pub fn apply_left(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .fold(BigRational::zero(), |acc, (i, x)| acc + x * self.get(i, j))
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        echelon(&integer_rows(self)).pivots.len()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(","))?;
        }
        Ok(())
    }
}

/// Rank of a matrix and a basis of its left kernel `{v : vᵀM = 0}`.
///
/// Rows index the source of the linear map, so `rank + kernel_basis.len()`
/// equals the number of rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankKernel {
    pub rank: usize,
    pub kernel_basis: Vec<Vec<BigRational>>,
}

pub fn rank_and_kernel(mat: &ExactMatrix) -> RankKernel {
    // Equations are the columns of `mat`, unknowns its rows.
    let system = integer_rows(&mat.transpose());
    let ech = echelon(&system);
    let nvars = mat.rows();
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let mut kernel_basis = Vec::new();
    for free in (0..nvars).filter(|c| !pivot_cols.contains(c)) {
        let mut x = vec![BigRational::zero(); nvars];
        x[free] = BigRational::one();
        for &(r, p) in ech.pivots.iter().rev() {
            let row = &ech.rows[r];
            let mut acc = BigRational::zero();
            for j in p + 1..nvars {
                if !row[j].is_zero() && !x[j].is_zero() {
                    acc += BigRational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[p] = -acc / BigRational::from_integer(row[p].clone());
        }
        kernel_basis.push(x);
    }
    RankKernel {
        rank: ech.pivots.len(),
        kernel_basis,
    }
}

/// Rows scaled by the lcm of their denominators.
fn integer_rows(mat: &ExactMatrix) -> Vec<Vec<BigInt>> {
    (0..mat.rows())
        .map(|i| {
            let row = mat.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// `(row, column)` of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
}

/// Bareiss fraction-free forward elimination.
///
/// The pivot for each step is the leftmost column with a nonzero entry among
/// the unprocessed rows, taking the first such row. Every division by the
/// previous pivot is exact.
fn echelon(input: &[Vec<BigInt>]) -> Echelon {
    let mut a = input.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..ncols {
                let num = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        pivots.push((r, c));
        r += 1;
    }
    Echelon { rows: a, pivots }
}
