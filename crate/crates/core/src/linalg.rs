//! Dense exact linear algebra over the rational-function field.
//!
//! Plain Gauss-Jordan elimination: every entry is kept in canonical reduced
//! form, so pivoting on the first nonzero entry is exact and the block
//! structure of weight-graded matrices is preserved automatically.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::ScalarQ;

/// Row-major matrix of exact scalars.
pub type Matrix = Vec<Vec<ScalarQ>>;

pub fn identity(n: usize) -> Matrix {
    let mut m = vec![vec![ScalarQ::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = ScalarQ::one();
    }
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![ScalarQ::zero(); cols]; rows];
    for r in 0..rows {
        for k in 0..inner {
            let x = &a[r][k];
            if x.is_zero() {
                continue;
            }
            for c in 0..cols {
                let y = &b[k][c];
                if !y.is_zero() {
                    out[r][c] = &out[r][c] + &(x * y);
                }
            }
        }
    }
    out
}

fn eliminate_column(aug: &mut Matrix, pivot_row: usize, col: usize) {
    let inv = aug[pivot_row][col].inv().expect("pivot is nonzero");
    let width = aug[pivot_row].len();
    for e in aug[pivot_row].iter_mut() {
        if !e.is_zero() {
            *e = &*e * &inv;
        }
    }
    // the pivot row is read while other rows are rewritten
    #[allow(clippy::needless_range_loop)]
    for r in 0..aug.len() {
        if r == pivot_row || aug[r][col].is_zero() {
            continue;
        }
        let factor = core::mem::replace(&mut aug[r][col], ScalarQ::zero());
        for c in 0..width {
            if c == col {
                continue;
            }
            let p = &aug[pivot_row][c];
            if !p.is_zero() {
                aug[r][c] = &aug[r][c] - &(&factor * p);
            }
        }
    }
}

/// Exact inverse of a square matrix.
pub fn invert(a: &Matrix) -> Result<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            debug_assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    ScalarQ::one()
                } else {
                    ScalarQ::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        aug.swap(col, pivot);
        eliminate_column(&mut aug, col, col);
    }
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `A X = B` exactly for a matrix `A` with full column rank; the
/// system may be overdetermined but must be consistent.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let rows = a.len();
    let n = if rows == 0 { 0 } else { a[0].len() };
    let _width = if b.is_empty() { 0 } else { b[0].len() };
    if b.len() != rows {
        return Err(Error::DimensionMismatch { expected: rows, got: b.len() });
    }
    let mut aug: Matrix = (0..rows)
        .map(|r| {
            let mut row = a[r].clone();
            row.extend(b[r].iter().cloned());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..rows).find(|&r| !aug[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
        aug.swap(col, pivot);
        eliminate_column(&mut aug, col, col);
    }
    // leftover rows must have vanished entirely
    for row in aug.iter().skip(n) {
        if row.iter().any(|e| !e.is_zero()) {
            return Err(Error::InconsistentSystem);
        }
    }
    Ok(aug.into_iter().take(n).map(|row| row[n..].to_vec()).collect())
}

/// Row-reduces in place; returns the pivot column of each pivot row.
fn rref(m: &mut Matrix, cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        eliminate_column(m, r, c);
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right kernel of a matrix with `cols` columns (the row count
/// may be zero, in which case the kernel is the whole space).
pub fn nullspace(a: &Matrix, cols: usize) -> Vec<Vec<ScalarQ>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m, cols);
    let mut basis = Vec::new();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    for (row, &c) in pivots.iter().enumerate() {
        pivot_of_col[c] = Some(row);
    }
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![ScalarQ::zero(); cols];
        v[free] = ScalarQ::one();
        for c in 0..cols {
            if let Some(row) = pivot_of_col[c] {
                v[c] = -m[row][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Exact rank.
pub fn rank(a: &Matrix) -> usize {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    let mut m = a.to_vec();
    rref(&mut m, cols).len()
}
