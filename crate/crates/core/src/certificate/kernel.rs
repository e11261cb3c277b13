//! Kernels of level matrices. A level `I` certifies when `Σ_{j ∈ I} c_j v_j = 0`
//! has a solution with every `c_j ≠ 0`, i.e. the null space of the matrix
//! with columns `v_j` is not contained in any coordinate hyperplane.

use num_traits::{One, Zero};

use crate::linalg::{self, Matrix};
use crate::rational::{int, Rational};

/// Exact basis of `{c : M c = 0}`; its length is `cols - rank(M)`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    linalg::null_space(m, cols)
}

/// A kernel vector with every coordinate nonzero, if one exists.
///
/// For a basis `b_1, ..., b_k` each coordinate of `c(t) = Σ t^(i-1) b_i` is
/// a polynomial in `t` of degree below `k`. It is identically zero only if
/// that coordinate vanishes on the whole kernel, and otherwise has fewer
/// than `k` roots, so among `(k - 1)·m + 1` consecutive integers some `t`
/// makes every coordinate nonzero. The search tries `t = 1, 2, ...`.
pub fn fully_supported_kernel_vector(m: &Matrix) -> Option<Vec<Rational>> {
    let basis = kernel_basis(m);
    let cols = m.first().map_or(0, Vec::len);
    if basis.is_empty() {
        return None;
    }
    if (0..cols).any(|j| basis.iter().all(|b| b[j].is_zero())) {
        return None;
    }
    let attempts = (basis.len() - 1) * cols + 1;
    (1..=attempts as i64).find_map(|t| {
        let t = int(t);
        let mut c = vec![Rational::zero(); cols];
        let mut power = Rational::one();
        for b in &basis {
            for (cj, bj) in c.iter_mut().zip(b) {
                *cj += &power * bj;
            }
            power *= &t;
        }
        c.iter().all(|x| !x.is_zero()).then_some(c)
    })
}
