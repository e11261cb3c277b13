//! Exact linear algebra over the rationals: row reduction, rank, linear
//! solves and determinants. Matrices are dense row-major `Vec<Vec<Rational>>`.

use num_traits::{One, Zero};

use crate::rational::{int, Rational};

pub type Matrix = Vec<Vec<Rational>>;

/// Integer matrix whose columns are the given integer vectors.
pub fn column_matrix<V: AsRef<[i64]>>(columns: &[V]) -> Matrix {
    let rows = columns.first().map_or(0, |c| c.as_ref().len());
    (0..rows)
        .map(|r| columns.iter().map(|c| int(c.as_ref()[r])).collect())
        .collect()
}

/// Integer matrix whose rows are the given integer vectors.
pub fn row_matrix<V: AsRef<[i64]>>(rows: &[V]) -> Matrix {
    rows.iter()
        .map(|r| r.as_ref().iter().map(|&x| int(x)).collect())
        .collect()
}

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns. `cols` is passed separately so that zero-row matrices work.
pub fn rref(m: &mut Matrix, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &Matrix, cols: usize) -> usize {
    rref(&mut m.clone(), cols).len()
}

#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Unique(Vec<Rational>),
    Inconsistent,
    /// Consistent but with a positive-dimensional solution set.
    Underdetermined,
}

/// Solves `a x = b` exactly for any shape of `a`.
pub fn solve(a: &Matrix, b: &[Rational], unknowns: usize) -> Solution {
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, unknowns + 1);
    if pivots.last() == Some(&unknowns) {
        return Solution::Inconsistent;
    }
    if pivots.len() < unknowns {
        return Solution::Underdetermined;
    }
    Solution::Unique(
        aug[..unknowns]
            .iter()
            .map(|r| r[unknowns].clone())
            .collect(),
    )
}

/// Determinant of a square matrix by elimination.
pub fn determinant(m: &Matrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= &a[col][col];
        let inv = a[col][col].recip();
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * p;
            }
        }
    }
    det
}

/// Basis of `{x : m x = 0}` read off the reduced row echelon form: one
/// vector per free column, with a 1 in that column.
pub fn null_space(m: &Matrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut reduced = m.clone();
    let pivots = rref(&mut reduced, cols);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = int(1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced[row][free].clone();
            }
            v
        })
        .collect()
}

/// `m v` for a rational matrix and vector.
pub fn mul_vec(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn dot_int(a: &[i64], x: &[Rational]) -> Rational {
    a.iter().zip(x).map(|(&a, x)| int(a) * x).sum()
}
