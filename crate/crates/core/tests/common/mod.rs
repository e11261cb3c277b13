//! Test-side oracles, written independently of the library's linear algebra.
#![allow(dead_code)]

use rand::Rng;
use toric_floer::builtins;
use toric_floer::novikov::NovikovElement;
use toric_floer::polytope::Polytope;
use toric_floer::rational::{gaussian, rat, GaussianRational};

/// Rank of a small integer matrix by fraction-free (Bareiss) elimination.
pub fn rank_i128(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for c in col + 1..cols {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    rank
}

/// A kernel vector with every coordinate nonzero exists iff no coordinate
/// vanishes identically on the kernel, i.e. every column lies in the span
/// of the others.
pub fn fully_supported_exists(m: &[Vec<i64>]) -> bool {
    let cols = m.first().map_or(0, Vec::len);
    let full = rank_i128(m);
    (0..cols).all(|j| {
        let dropped: Vec<Vec<i64>> = m
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        rank_i128(&dropped) == full
    })
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

pub fn random_gaussian(rng: &mut impl Rng) -> GaussianRational {
    gaussian(
        rat(rng.gen_range(-6..=6), rng.gen_range(1..=4)),
        rat(rng.gen_range(-6..=6), rng.gen_range(1..=4)),
    )
}

pub fn random_novikov(rng: &mut impl Rng) -> NovikovElement<GaussianRational> {
    let terms = rng.gen_range(0..=4);
    NovikovElement::from_terms((0..terms).map(|_| {
        (
            rat(rng.gen_range(0..=12), rng.gen_range(1..=6)),
            random_gaussian(rng),
        )
    }))
}

/// Every builtin, parametric ones at a representative parameter.
pub fn all_builtins() -> Vec<Polytope> {
    vec![
        builtins::segment(),
        builtins::cp(1).unwrap(),
        builtins::cp(2).unwrap(),
        builtins::cp(3).unwrap(),
        builtins::hirzebruch1(),
        builtins::blowup3(rat(1, 8)).unwrap(),
        builtins::cube_blowup_a(rat(1, 4)).unwrap(),
        builtins::cube_blowup_b(rat(1, 4)).unwrap(),
        builtins::cube_reflexive(),
    ]
}
