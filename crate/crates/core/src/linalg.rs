//! Dense linear algebra over the rationals (Gauss-Jordan elimination).

use num_traits::{One, Zero};

use crate::rational::{qi, Q};

pub type Matrix = Vec<Vec<Q>>;

pub fn from_int(m: &[Vec<i64>]) -> Matrix {
    m.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect()
}

/// Solves `m * x = rhs`. Returns `None` if `m` is singular or not square.
pub fn solve(m: &Matrix, rhs: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    if rhs.len() != n || m.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut aug: Matrix = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = Q::one() / aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x *= inv.clone();
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let v = aug[col][c].clone() * f.clone();
                    aug[r][c] -= v;
                }
            }
        }
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![Q::zero(); n];
        e[i] = Q::one();
        cols.push(solve(m, &e)?);
    }
    Some((0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect())
}

/// Rank by row reduction. Works for any shape.
pub fn rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Q::one() / a[r][c].clone();
        for x in a[r][c..].iter_mut() {
            *x *= inv.clone();
        }
        for i in (r + 1)..rows {
            if !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let v = a[r][j].clone() * f.clone();
                    a[i][j] -= v;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

pub fn mat_vec(m: &Matrix, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
