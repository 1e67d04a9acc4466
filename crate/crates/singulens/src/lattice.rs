//! Integer and rational linear algebra on small dense matrices.
//!
//! Provides the three primitives the geometric modules are built on: Hermite
//! normal form (canonical lattice bases), integer kernels (relation lattices)
//! and Smith normal form invariant factors (lattice surjectivity tests),
//! together with rational rank / kernel / solve routines used by the convex
//! hull machinery.  Matrices are row-major `Vec<Vec<i64>>`; inputs stay small
//! enough that `i64` intermediates are ample.

use crate::arith::{rat_int, Rat};
use num_traits::Zero;

/// Hermite normal form of the lattice spanned by `rows`.
///
/// Returns the canonical basis: echelon rows with positive pivots, entries
/// above each pivot reduced into `[0, pivot)`, zero rows dropped.  Two
/// generating sets span the same lattice iff their forms are equal.
pub fn hermite_normal_form(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut work: Vec<Vec<i64>> = rows.to_vec();
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for c in 0..cols {
        // Euclid all rows with a nonzero entry in column c down to one.
        loop {
            let mut idx: Vec<usize> = (0..work.len()).filter(|&i| work[i][c] != 0).collect();
            if idx.len() <= 1 {
                break;
            }
            idx.sort_by_key(|&i| work[i][c].abs());
            let (small, big) = (idx[0], idx[1]);
            let q = work[big][c] / work[small][c];
            for j in 0..cols {
                work[big][j] -= q * work[small][j];
            }
        }
        if let Some(i) = (0..work.len()).find(|&i| work[i][c] != 0) {
            let mut row = work.remove(i);
            if row[c] < 0 {
                for x in row.iter_mut() {
                    *x = -*x;
                }
            }
            basis.push(row);
        }
    }
    // Reduce entries above each pivot.
    let pivots: Vec<usize> = basis
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).unwrap())
        .collect();
    for i in (0..basis.len()).rev() {
        for j in i + 1..basis.len() {
            let c = pivots[j];
            let p = basis[j][c];
            let q = basis[i][c].div_euclid(p);
            if q != 0 {
                for k in 0..cols {
                    basis[i][k] -= q * basis[j][k];
                }
            }
        }
    }
    basis
}

/// Basis of the integer kernel `{x : M x = 0}` of an `m x k` matrix, returned
/// in Hermite normal form.  `k` is taken from `cols` when `m == 0`.
pub fn kernel_basis(matrix: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    // Row-reduce the transpose with a unimodular transform; rows of the
    // transform matching zero rows of the echelon form span the kernel.
    let k = cols;
    let m = matrix.len();
    let mut a: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..m).map(|j| matrix[j][i]).collect())
        .collect();
    let mut u: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut pivot_row = 0;
    for c in 0..m {
        loop {
            let mut idx: Vec<usize> = (pivot_row..k).filter(|&i| a[i][c] != 0).collect();
            if idx.len() <= 1 {
                break;
            }
            idx.sort_by_key(|&i| a[i][c].abs());
            let (small, big) = (idx[0], idx[1]);
            let q = a[big][c] / a[small][c];
            for j in 0..m {
                a[big][j] -= q * a[small][j];
            }
            for j in 0..k {
                u[big][j] -= q * u[small][j];
            }
        }
        if let Some(i) = (pivot_row..k).find(|&i| a[i][c] != 0) {
            a.swap(i, pivot_row);
            u.swap(i, pivot_row);
            pivot_row += 1;
        }
    }
    let kernel: Vec<Vec<i64>> = (pivot_row..k).map(|i| u[i].clone()).collect();
    hermite_normal_form(&kernel)
}

/// Invariant factors (diagonal of the Smith normal form), nonnegative and in
/// divisibility order, zeros dropped.
pub fn invariant_factors(matrix: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = matrix.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag: Vec<i64> = Vec::new();
    let mut top = 0;
    let mut left = 0;
    while top < rows && left < cols {
        // Find the nonzero entry of least magnitude in the working block.
        let mut best: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in left..cols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(top, bi);
        for row in a.iter_mut() {
            row.swap(left, bj);
        }
        // Clear the pivot row and column by Euclidean steps.
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in top + 1..rows {
                if a[i][left] != 0 {
                    let q = a[i][left] / a[top][left];
                    for j in left..cols {
                        a[i][j] -= q * a[top][j];
                    }
                    if a[i][left] != 0 {
                        a.swap(top, i);
                        dirty = true;
                    }
                }
            }
            for j in left + 1..cols {
                if a[top][j] != 0 {
                    let q = a[top][j] / a[top][left];
                    for i in top..rows {
                        a[i][j] -= q * a[i][left];
                    }
                    if a[top][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(left, j);
                        }
                        dirty = true;
                    }
                }
            }
        }
        diag.push(a[top][left].abs());
        top += 1;
        left += 1;
    }
    // Enforce divisibility: repeatedly replace pairs by (gcd, lcm).
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..diag.len() {
            for j in i + 1..diag.len() {
                if diag[j] % diag[i] != 0 {
                    let g = num_integer::gcd(diag[i], diag[j]);
                    let l = diag[i] / g * diag[j];
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
            }
        }
    }
    diag.retain(|&d| d != 0);
    diag.sort_unstable();
    diag
}

/// Rank over the rationals.
pub fn rank(matrix: &[Vec<i64>]) -> usize {
    let a: Vec<Vec<Rat>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| rat_int(x)).collect())
        .collect();
    echelon(a).len()
}

/// Rank of a rational matrix.
pub fn rank_rational(matrix: &[Vec<Rat>]) -> usize {
    echelon(matrix.to_vec()).len()
}

/// Determinant of a square rational matrix by fraction-free pivoting.
pub fn det_rational(matrix: &[Vec<Rat>]) -> Rat {
    let n = matrix.len();
    let mut a = matrix.to_vec();
    let mut det = rat_int(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= &pivot;
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &pivot;
                for j in c..n {
                    a[i][j] = &a[i][j] - &f * &a[c][j];
                }
            }
        }
    }
    det
}

fn echelon(mut a: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let rows = a.len();
    if rows == 0 {
        return a;
    }
    let cols = a[0].len();
    let mut pivot = 0;
    for c in 0..cols {
        if pivot == rows {
            break;
        }
        if let Some(i) = (pivot..rows).find(|&i| !a[i][c].is_zero()) {
            a.swap(i, pivot);
            let p = a[pivot][c].clone();
            for j in c..cols {
                a[pivot][j] = &a[pivot][j] / &p;
            }
            for i in 0..rows {
                if i != pivot && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in c..cols {
                        a[i][j] = &a[i][j] - &f * &a[pivot][j];
                    }
                }
            }
            pivot += 1;
        }
    }
    a.truncate(pivot);
    a.retain(|r| r.iter().any(|x| !x.is_zero()));
    a
}

/// Basis of the rational row space as primitive integer vectors.
pub fn rowspace_basis(matrix: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let a: Vec<Vec<Rat>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| rat_int(x)).collect())
        .collect();
    echelon(a)
        .iter()
        .map(|r| crate::arith::primitive_of_rational(r))
        .collect()
}

/// Solve the square rational system `A x = b` for integer `A`.  Returns
/// `None` when `A` is singular.
pub fn solve_square(a: &[Vec<i64>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = a[i].iter().map(|&x| rat_int(x)).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    for c in 0..n {
        let pivot = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, pivot);
        let p = m[c][c].clone();
        for j in c..=n {
            m[c][j] = &m[c][j] / &p;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    m[i][j] = &m[i][j] - &f * &m[c][j];
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}
