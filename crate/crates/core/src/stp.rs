//! Exact-rational matrix kernel: semi-tensor product, Kronecker product,
//! swap matrices, the Khatri-Rao product and logical-matrix calculus.
//!
//! The semi-tensor product `A ⋉ B` of an `m×n` and a `p×q` matrix is
//! `(A ⊗ I_{t/n})(B ⊗ I_{t/p})` with `t = lcm(n, p)`; it coincides with the
//! ordinary product when `n = p`. Logical matrices (0/1 matrices with exactly
//! one 1 per column) are kept in column-index form `δ_m[i_1,…,i_r]` so that
//! products of logical factors reduce to index arithmetic.

use crate::rational::Rational;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        RationalMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Rational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// All-ones matrix; `ones(n, 1)` is the column 1_n.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Rational::one(); rows * cols])
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(rows, cols, data)
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        assert!(!rows.is_empty(), "need at least one row");
        let n_rows = rows.len();
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        Self::new(n_rows, cols, data)
    }

    pub fn row_vector(entries: Vec<Rational>) -> Self {
        let cols = entries.len();
        Self::new(1, cols, entries)
    }

    pub fn col_vector(entries: Vec<Rational>) -> Self {
        let rows = entries.len();
        Self::new(rows, 1, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Ordinary matrix product; inner dimensions must match.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must match");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * factor)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, a * b);
                    }
                }
            }
        }
        out
    }

    /// Semi-tensor product `self ⋉ other`.
    pub fn stp(&self, other: &Self) -> Self {
        let n = self.cols;
        let p = other.rows;
        let t = n.lcm(&p);
        let left = if t == n {
            self.clone()
        } else {
            self.kron(&Self::identity(t / n))
        };
        let right = if t == p {
            other.clone()
        } else {
            other.kron(&Self::identity(t / p))
        };
        left.mul(&right)
    }

    /// Khatri-Rao product: column-wise STP. Both factors must have the same
    /// number of columns.
    pub fn khatri_rao(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.cols,
            "Khatri-Rao factors need equal column counts"
        );
        let mut out = Self::zeros(self.rows * other.rows, self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.set(i * other.rows + k, j, a * b);
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Self::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    /// Column-index form of a dense logical matrix; `None` when some column
    /// is not a standard basis vector.
    pub fn to_logical(&self) -> Option<LogicalMatrix> {
        let mut indices = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            let mut hit = None;
            for i in 0..self.rows {
                let v = self.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if !v.is_one() || hit.is_some() {
                    return None;
                }
                hit = Some(i + 1);
            }
            indices.push(hit?);
        }
        Some(LogicalMatrix::new(self.rows, indices))
    }
}

/// 0/1 matrix with exactly one 1 per column, stored as `δ_m[i_1,…,i_r]`.
/// Entries of `col_indices` are 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LogicalMatrix {
    rows: usize,
    col_indices: Vec<usize>,
}

impl fmt::Debug for LogicalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ_{}{:?}", self.rows, self.col_indices)
    }
}

impl LogicalMatrix {
    pub fn new(rows: usize, col_indices: Vec<usize>) -> Self {
        assert!(rows > 0);
        assert!(
            col_indices.iter().all(|&i| i >= 1 && i <= rows),
            "column index out of range 1..={rows}"
        );
        LogicalMatrix { rows, col_indices }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, (1..=n).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.col_indices.len()
    }

    /// 1-based row index of the single 1 in column `j` (0-based `j`).
    pub fn col_index(&self, j: usize) -> usize {
        self.col_indices[j]
    }

    pub fn col_indices(&self) -> &[usize] {
        &self.col_indices
    }

    pub fn to_dense(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.rows, self.cols());
        for (j, &i) in self.col_indices.iter().enumerate() {
            out.set(i - 1, j, Rational::one());
        }
        out
    }

    /// Product of two logical matrices under matching dimensions, computed
    /// index-wise: column j of `self · other` is `δ^{a[b[j]]}`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols(), other.rows, "inner dimensions must match");
        let indices = other
            .col_indices
            .iter()
            .map(|&j| self.col_indices[j - 1])
            .collect();
        Self::new(self.rows, indices)
    }

    /// Kronecker product of logical factors stays logical.
    pub fn kron(&self, other: &Self) -> Self {
        let p = other.rows;
        let mut indices = Vec::with_capacity(self.cols() * other.cols());
        for &a in &self.col_indices {
            for &b in &other.col_indices {
                indices.push((a - 1) * p + b);
            }
        }
        Self::new(self.rows * p, indices)
    }

    pub fn is_permutation(&self) -> bool {
        if self.rows != self.cols() {
            return false;
        }
        let mut seen = vec![false; self.rows];
        for &i in &self.col_indices {
            if seen[i - 1] {
                return false;
            }
            seen[i - 1] = true;
        }
        true
    }

    /// Inverse (= transpose) of a permutation logical matrix.
    pub fn inverse(&self) -> Self {
        assert!(self.is_permutation(), "only permutation matrices invert");
        let mut indices = vec![0; self.rows];
        for (j, &i) in self.col_indices.iter().enumerate() {
            indices[i - 1] = j + 1;
        }
        Self::new(self.rows, indices)
    }

    /// Image of the basis vector `δ_rows^i` (1-based) under this matrix.
    /// Only meaningful when columns index the domain, i.e. `cols == domain`.
    pub fn apply(&self, i: usize) -> usize {
        self.col_indices[i - 1]
    }
}

/// `v · L` for a row `v` and logical `L`: a pure gather, `(v·L)_j = v[L_j]`.
pub fn row_times_logical(v: &[Rational], l: &LogicalMatrix) -> Vec<Rational> {
    assert_eq!(v.len(), l.rows(), "row length must equal logical row count");
    l.col_indices().iter().map(|&i| v[i - 1].clone()).collect()
}

/// Swap matrix `W_{[m,n]}`: the permutation with `W ⋉ x ⋉ y = y ⋉ x` for all
/// `x ∈ Δ_m`, `y ∈ Δ_n`.
pub fn swap_matrix(m: usize, n: usize) -> LogicalMatrix {
    assert!(m >= 1 && n >= 1);
    let mut indices = Vec::with_capacity(m * n);
    for i in 1..=m {
        for j in 1..=n {
            indices.push((j - 1) * m + i);
        }
    }
    LogicalMatrix::new(m * n, indices)
}

/// Structure matrix of negation, `M_n = δ_2[2,1]`.
pub fn negation_matrix() -> LogicalMatrix {
    LogicalMatrix::new(2, vec![2, 1])
}
