//! Exact Gaussian elimination over the rationals: reduced row-echelon form,
//! rank, nullspace bases and particular solutions of linear systems.
//!
//! Pivoting is first-nonzero (no magnitude heuristics are meaningful for
//! exact arithmetic) and free variables are always set to zero, so results
//! are deterministic.

use crate::rational::Rational;
use crate::stp::RationalMatrix;
use num_traits::{One, Zero};

/// Reduced row-echelon form together with the pivot column of each step.
pub struct Echelon {
    pub matrix: RationalMatrix,
    pub pivot_cols: Vec<usize>,
}

pub fn rref(input: &RationalMatrix) -> Echelon {
    let rows = input.rows();
    let cols = input.cols();
    let mut m: Vec<Vec<Rational>> = (0..rows).map(|i| input.row(i).to_vec()).collect();
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(src) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, src);
        let inv = m[pivot_row][col].recip();
        for j in col..cols {
            let v = &m[pivot_row][j] * &inv;
            m[pivot_row][j] = v;
        }
        for r in 0..rows {
            if r == pivot_row || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in col..cols {
                let v = &m[r][j] - &factor * &m[pivot_row][j];
                m[r][j] = v;
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    Echelon {
        matrix: RationalMatrix::from_rows(m),
        pivot_cols,
    }
}

pub fn rank(input: &RationalMatrix) -> usize {
    rref(input).pivot_cols.len()
}

/// Canonical nullspace basis of `A` (vectors `x` with `A x = 0`), returned as
/// rows. The basis is put into reduced row-echelon form so it is unique for a
/// given subspace regardless of how it was computed.
pub fn nullspace(a: &RationalMatrix) -> Vec<Vec<Rational>> {
    let ech = rref(a);
    let cols = a.cols();
    let pivots = &ech.pivot_cols;
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in pivots {
            v[c] = true;
        }
        v
    };
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut vec = vec![Rational::zero(); cols];
        vec[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            vec[pc] = -ech.matrix.get(row, free).clone();
        }
        basis.push(vec);
    }
    if basis.is_empty() {
        return basis;
    }
    let canon = rref(&RationalMatrix::from_rows(basis));
    (0..canon.pivot_cols.len())
        .map(|i| canon.matrix.row(i).to_vec())
        .collect()
}

/// Particular solution of `A x = b` with free variables set to zero, or
/// `None` when the system is inconsistent.
pub fn solve(a: &RationalMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let aug = a.hstack(&RationalMatrix::col_vector(b.to_vec()));
    let ech = rref(&aug);
    let cols = a.cols();
    // a pivot in the augmented column means 0 = 1 somewhere
    if ech.pivot_cols.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &pc) in ech.pivot_cols.iter().enumerate() {
        x[pc] = ech.matrix.get(row, cols).clone();
    }
    Some(x)
}

/// Rank of the row space spanned by `rows` (each of length `cols`).
pub fn row_space_rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rank(&RationalMatrix::from_rows(rows.to_vec()))
}

/// True when the row spans of the two sets coincide (mutual containment via
/// rank checks).
pub fn same_row_span(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> bool {
    let ra = row_space_rank(a);
    let rb = row_space_rank(b);
    if ra != rb {
        return false;
    }
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    row_space_rank(&all) == ra
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m(rows: usize, cols: usize, vals: &[i64]) -> RationalMatrix {
        RationalMatrix::new(rows, cols, vals.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn solves_square_system() {
        let a = m(2, 2, &[2, 1, 1, 3]);
        let x = solve(&a, &[rat(5), rat(10)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(3)]);
    }

    #[test]
    fn detects_inconsistency() {
        let a = m(2, 1, &[1, 1]);
        assert!(solve(&a, &[rat(1), rat(2)]).is_none());
        assert!(solve(&a, &[rat(3), rat(3)]).is_some());
    }

    #[test]
    fn underdetermined_sets_free_vars_to_zero() {
        let a = m(1, 3, &[1, 2, 0]);
        let x = solve(&a, &[rat(4)]).unwrap();
        assert_eq!(x, vec![rat(4), rat(0), rat(0)]);
    }

    #[test]
    fn nullspace_is_canonical() {
        // x + y + z = 0 has a 2-dimensional nullspace; the canonical basis is
        // the RREF of any spanning set.
        let a = m(1, 3, &[1, 1, 1]);
        let basis = nullspace(&a);
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], vec![rat(1), rat(0), rat(-1)]);
        assert_eq!(basis[1], vec![rat(0), rat(1), rat(-1)]);
        for v in &basis {
            let prod: Rational = v.iter().cloned().sum();
            assert_eq!(prod, rat(0));
        }
    }

    #[test]
    fn rank_and_span_checks() {
        let a = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let b = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        assert!(same_row_span(&a, &b));
        let c = vec![vec![rat(1), rat(1)]];
        assert!(!same_row_span(&a, &c));
        assert_eq!(row_space_rank(&c), 1);
    }

    #[test]
    fn rref_normalizes_pivots() {
        let a = m(2, 3, &[2, 4, 2, 1, 2, 3]);
        let ech = rref(&a);
        assert_eq!(ech.pivot_cols, vec![0, 2]);
        assert_eq!(ech.matrix.row(0), &[rat(1), rat(2), rat(0)]);
        assert_eq!(ech.matrix.row(1), &[rat(0), rat(0), rat(1)]);
    }
}
