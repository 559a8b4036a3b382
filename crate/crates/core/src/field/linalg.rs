//! Gaussian elimination over a [`BaseField`].
//!
//! Matrices are row-major `Vec<Vec<Scalar>>`; every row has `ncols` entries.

use num::Zero;

use super::base::{BaseField, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row-echelon form with zero rows dropped. Returns the rows and their
/// pivot columns. The result is unique for a given row space.
pub fn rref(field: &BaseField, mut rows: Matrix, ncols: usize) -> (Matrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pivot_row) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot_row);
        let inv = field.inv(&rows[r][col]).expect("pivot is nonzero");
        for entry in rows[r].iter_mut() {
            *entry = field.mul(entry, &inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for j in col..ncols {
                    let t = field.mul(&factor, &rows[r][j]);
                    rows[i][j] = field.sub(&rows[i][j], &t);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(field: &BaseField, rows: Matrix, ncols: usize) -> usize {
    rref(field, rows, ncols).0.len()
}

/// Basis of `{x : A x = 0}` where `A` has `ncols` columns.
pub fn nullspace(field: &BaseField, rows: Matrix, ncols: usize) -> Matrix {
    let (reduced, pivots) = rref(field, rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = field.one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = field.neg(&row[f]);
            }
            v
        })
        .collect()
}

/// Solves `A x = b` for one particular solution, if any.
pub fn solve(field: &BaseField, a: &Matrix, b: &[Scalar], ncols: usize) -> Option<Vec<Scalar>> {
    let augmented: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (reduced, pivots) = rref(field, augmented, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (row, &p) in reduced.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}
