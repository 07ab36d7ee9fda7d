//! Exact dense linear algebra for the oracle: arbitrary-precision integer
//! matrices, fraction-free rank, and small rational inverses.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type IMat = Vec<Vec<BigInt>>;
pub type QMat = Vec<Vec<BigRational>>;

pub fn imat_zero(r: usize, c: usize) -> IMat {
    vec![vec![BigInt::zero(); c]; r]
}

pub fn imat_is_zero(m: &IMat) -> bool {
    m.iter().flatten().all(|e| e.is_zero())
}

pub fn imat_mul(a: &IMat, b: &IMat) -> IMat {
    let (ra, ca) = (a.len(), a[0].len());
    let cb = b[0].len();
    assert_eq!(ca, b.len());
    let mut out = imat_zero(ra, cb);
    for i in 0..ra {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..cb {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

pub fn imat_from_i64(m: &[Vec<i64>]) -> IMat {
    m.iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect()
}

/// Rank by fraction-free (Bareiss) elimination. Consumes the matrix.
pub fn rank_bareiss(mut m: IMat) -> usize {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        // pick a pivot with the smallest nonzero magnitude to slow growth
        let pivot = (row..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].magnitude().clone());
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                let (q, rem) = num_integer::div_rem(num, prev.clone());
                debug_assert!(rem.is_zero());
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// Inverse of a small square rational matrix by Gauss-Jordan elimination.
/// Panics if singular; callers only invert change-of-basis matrices.
pub fn qmat_inverse(a: &QMat) -> QMat {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a.iter().map(|r| r.to_vec()).collect();
    let mut inv: QMat = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("matrix is singular");
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..n {
            m[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                let mj = &m[col][j] * &f;
                m[r][j] -= mj;
                let ij = &inv[col][j] * &f;
                inv[r][j] -= ij;
            }
        }
    }
    inv
}

pub fn qmat_mul(a: &QMat, b: &QMat) -> QMat {
    let (ra, ca) = (a.len(), a[0].len());
    let cb = b[0].len();
    assert_eq!(ca, b.len());
    let mut out = vec![vec![BigRational::zero(); cb]; ra];
    for i in 0..ra {
        for k in 0..ca {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cb {
                if !b[k][j].is_zero() {
                    let t = &a[i][k] * &b[k][j];
                    out[i][j] += t;
                }
            }
        }
    }
    out
}
