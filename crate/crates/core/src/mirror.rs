//! Convergent version: substitute `T^(2π) = e^{-1}` and work with the
//! Landau-Ginzburg superpotential `W(z) = Σ_j e^{λ_j} z^{v_j}`, where
//! `z = e^{-θ + i h}` packs a fiber `θ` and holonomy angles `h`.
//!
//! Critical points of `W` (in the logarithmic sense, `z_i ∂W/∂z_i = 0`) are
//! exactly the fibers and holonomies at which the evaluated `m_{1,2}`
//! vanishes. Since `T` is a number here, terms of different energy can
//! cancel, and the resulting non-vanishing is not invariant under
//! Hamiltonian isotopy: nothing in this module certifies non-displaceability.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};
use std::fmt;

use itertools::Itertools;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::certificate::ComplexValue;
use crate::floer::{m12, BFieldWeights, DiscClassSet, LocalSystem};
use crate::novikov::Coefficient;
use crate::polytope::Polytope;
use crate::rational::{serde_rational, to_f64, Rational};
use crate::{Error, Result};

/// Environment variable that fixes the seed of the Newton starts.
pub const SEED_ENV: &str = "TORIC_FLOER_SEED";
pub const DEFAULT_SEED: u64 = 0x5eed_f10e;

/// Attached to every convergent-mode result.
pub const CONVERGENT_LABEL: &str =
    "convergent version (T^(2π) = e^-1): not a displaceability certificate";

/// Zero tolerance for evaluated `m_{1,2}` components.
pub const CONVERGENT_ZERO_TOL: f64 = 1e-10;

/// Interior test tolerance for recovered fibers.
pub const INTERIOR_TOL: f64 = 1e-9;

/// Largest dimension the critical-point solver accepts.
pub const MAX_SOLVER_DIM: usize = 3;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuperpotentialTerm {
    pub exponent: Vec<i64>,
    /// `λ_j`; the term is `e^{λ_j} z^{v_j}`.
    #[serde(with = "serde_rational")]
    pub log_coeff: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Superpotential {
    pub dim: usize,
    pub terms: Vec<SuperpotentialTerm>,
}

fn monomial(z: &[Complex64], exponent: &[i64]) -> Complex64 {
    exponent
        .iter()
        .zip(z)
        .map(|(&e, zk)| zk.powi(e as i32))
        .product()
}

impl Superpotential {
    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|t| to_f64(&t.log_coeff).exp() * monomial(z, &t.exponent))
            .sum()
    }

    /// `E(z)` and its log-coordinate Jacobian `∂E_i/∂w_k` at `z = e^w`.
    fn system(&self, w: &[Complex64]) -> (Vec<Complex64>, DMatrix<Complex64>) {
        let n = self.dim;
        let mut values = vec![Complex64::new(0.0, 0.0); n];
        let mut jac = DMatrix::zeros(n, n);
        for t in &self.terms {
            let exponent: Complex64 = t
                .exponent
                .iter()
                .zip(w)
                .map(|(&e, wk)| wk * e as f64)
                .sum::<Complex64>()
                + to_f64(&t.log_coeff);
            let value = exponent.exp();
            for i in 0..n {
                let vi = t.exponent[i] as f64;
                values[i] += value * vi;
                for k in 0..n {
                    jac[(i, k)] += value * (vi * t.exponent[k] as f64);
                }
            }
        }
        (values, jac)
    }

    /// Fiber `θ` with `<θ, v_j> - λ_j > tol` for every term.
    pub fn is_interior(&self, theta: &[f64], tol: f64) -> bool {
        self.terms.iter().all(|t| {
            let dot: f64 = t
                .exponent
                .iter()
                .zip(theta)
                .map(|(&e, x)| e as f64 * x)
                .sum();
            dot - to_f64(&t.log_coeff) > tol
        })
    }
}

impl fmt::Display for Superpotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|t| format!("e^({})·{}", t.log_coeff, format_monomial(&t.exponent)))
            .join(" + ");
        f.write_str(&terms)
    }
}

fn format_monomial(exponent: &[i64]) -> String {
    let factors: Vec<String> = exponent
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(k, &e)| {
            if e == 1 {
                format!("z{}", k + 1)
            } else {
                format!("z{}^{}", k + 1, e)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("·")
    }
}

/// One term per facet: `e^{λ_j} z^{v_j}`.
pub fn superpotential(p: &Polytope) -> Superpotential {
    Superpotential {
        dim: p.dim(),
        terms: p
            .facets()
            .iter()
            .map(|f| SuperpotentialTerm {
                exponent: f.normal.clone(),
                log_coeff: f.offset.clone(),
            })
            .collect(),
    }
}

/// `multiplier · e^{log_coeff} · z^{exponent}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LaurentTerm {
    pub multiplier: i64,
    #[serde(with = "serde_rational")]
    pub log_coeff: Rational,
    pub exponent: Vec<i64>,
}

impl LaurentTerm {
    pub fn coefficient(&self) -> f64 {
        self.multiplier as f64 * to_f64(&self.log_coeff).exp()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct LaurentPolynomial(pub Vec<LaurentTerm>);

impl LaurentPolynomial {
    pub fn eval(&self, z: &[Complex64]) -> Complex64 {
        self.0
            .iter()
            .map(|t| t.coefficient() * monomial(z, &t.exponent))
            .sum()
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms = self
            .0
            .iter()
            .map(|t| {
                format!(
                    "{}·e^({})·{}",
                    t.multiplier,
                    t.log_coeff,
                    format_monomial(&t.exponent)
                )
            })
            .join(" + ");
        f.write_str(&terms)
    }
}

/// `E_i(z) = z_i ∂W/∂z_i = Σ_j v_{ji} e^{λ_j} z^{v_j}`, zero multipliers dropped.
pub fn critical_equations(w: &Superpotential) -> Vec<LaurentPolynomial> {
    (0..w.dim)
        .map(|i| {
            LaurentPolynomial(
                w.terms
                    .iter()
                    .filter(|t| t.exponent[i] != 0)
                    .map(|t| LaurentTerm {
                        multiplier: t.exponent[i],
                        log_coeff: t.log_coeff.clone(),
                        exponent: t.exponent.clone(),
                    })
                    .collect(),
            )
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveOptions {
    pub starts: usize,
    pub max_iterations: usize,
    /// Maximum residual `max_i |E_i(z)|` of an accepted root.
    pub residual_tol: f64,
    /// Roots closer than this in `log z` (imaginary parts mod 2π) are merged.
    pub dedup_tol: f64,
    pub seed: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            starts: 200,
            max_iterations: 100,
            residual_tol: 1e-10,
            dedup_tol: 1e-8,
            seed: DEFAULT_SEED,
        }
    }
}

impl SolveOptions {
    /// Defaults, with the seed taken from `TORIC_FLOER_SEED` when set.
    pub fn from_env() -> Result<Self> {
        let mut opts = SolveOptions::default();
        if let Ok(text) = std::env::var(SEED_ENV) {
            opts.seed = text.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!(
                    "{SEED_ENV} must be an unsigned integer, got '{text}'"
                ))
            })?;
        }
        Ok(opts)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriticalPoint {
    pub z: Vec<Complex64>,
    pub residual: f64,
    /// `θ_k = -log|z_k|`.
    pub fiber: Vec<f64>,
    /// `h_k = arg z_k`.
    pub holonomy_angles: Vec<f64>,
    pub interior: bool,
}

impl CriticalPoint {
    pub fn log_z(&self) -> Vec<Complex64> {
        self.z.iter().map(|z| z.ln()).collect()
    }

    fn from_log(w: &[Complex64], residual: f64, sp: &Superpotential) -> Self {
        let z: Vec<Complex64> = w.iter().map(|w| w.exp()).collect();
        let fiber: Vec<f64> = z.iter().map(|z| -z.norm().ln()).collect();
        let interior = sp.is_interior(&fiber, INTERIOR_TOL);
        CriticalPoint {
            holonomy_angles: z.iter().map(|z| z.arg()).collect(),
            z,
            residual,
            fiber,
            interior,
        }
    }
}

impl Serialize for CriticalPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            z: Vec<ComplexValue>,
            residual: f64,
            theta: &'a [f64],
            h: &'a [f64],
            interior: bool,
        }
        Record {
            z: self.z.iter().map(|&z| z.into()).collect(),
            residual: self.residual,
            theta: &self.fiber,
            h: &self.holonomy_angles,
            interior: self.interior,
        }
        .serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalSolve {
    pub points: Vec<CriticalPoint>,
    pub starts: usize,
    pub converged_starts: usize,
    pub warnings: Vec<String>,
}

fn max_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Damped Newton on `E(e^w) = 0`; returns the final `w` and residual.
fn newton(
    sp: &Superpotential,
    start: Vec<Complex64>,
    max_iterations: usize,
) -> Option<(Vec<Complex64>, f64)> {
    const DIVERGED: f64 = 40.0;
    let mut w = start;
    let (mut values, mut jac) = sp.system(&w);
    let mut residual = max_norm(&values);
    for _ in 0..max_iterations {
        if residual < 1e-14 {
            break;
        }
        let rhs = DVector::from_iterator(values.len(), values.iter().map(|v| -v));
        let step = jac.clone().lu().solve(&rhs)?;
        let mut alpha = 1.0;
        let mut accepted = false;
        while alpha > 1e-8 {
            let trial: Vec<Complex64> = w
                .iter()
                .zip(step.iter())
                .map(|(w, s)| w + s * alpha)
                .collect();
            if trial
                .iter()
                .any(|x| !x.re.is_finite() || x.re.abs() > DIVERGED)
            {
                alpha *= 0.5;
                continue;
            }
            let (tv, tj) = sp.system(&trial);
            let tr = max_norm(&tv);
            if tr < residual {
                w = trial;
                values = tv;
                jac = tj;
                residual = tr;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    Some((w, residual))
}

fn wrap_angle(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    if y > PI {
        y - TAU
    } else {
        y
    }
}

fn log_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let re = x.re - y.re;
            let im = wrap_angle(x.im - y.im);
            re * re + im * im
        })
        .sum::<f64>()
        .sqrt()
}

fn lexicographic(a: &[Complex64], b: &[Complex64]) -> Ordering {
    a.iter()
        .map(|x| x.re)
        .chain(a.iter().map(|x| x.im))
        .zip(b.iter().map(|x| x.re).chain(b.iter().map(|x| x.im)))
        .map(|(x, y)| x.total_cmp(&y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

fn quantize(x: f64) -> i64 {
    (x * 1e9).round() as i64
}

/// Multi-start damped Newton in log coordinates.
///
/// Starts have `log|z_k|` uniform in `[-2, 2]` and `arg z_k` uniform in
/// `[0, 2π)`. Converged roots are merged when within `dedup_tol` in
/// `log z` and returned sorted by `(|z_1|, ..., |z_n|)`, then by argument.
pub fn solve_critical(sp: &Superpotential, opts: &SolveOptions) -> Result<CriticalSolve> {
    let n = sp.dim;
    if n == 0 || n > MAX_SOLVER_DIM {
        return Err(Error::InvalidArgument(format!(
            "critical-point solver supports dimensions 1..={MAX_SOLVER_DIM}, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let starts: Vec<Vec<Complex64>> = (0..opts.starts)
        .map(|_| {
            (0..n)
                .map(|_| Complex64::new(rng.gen_range(-2.0..=2.0), rng.gen_range(0.0..TAU)))
                .collect()
        })
        .collect();

    let mut roots: Vec<(Vec<Complex64>, f64)> = starts
        .into_par_iter()
        .filter_map(|s| newton(sp, s, opts.max_iterations))
        .filter(|(_, r)| *r < opts.residual_tol)
        .map(|(w, r)| {
            (
                w.into_iter()
                    .map(|x| Complex64::new(x.re, wrap_angle(x.im)))
                    .collect(),
                r,
            )
        })
        .collect();
    let converged_starts = roots.len();
    roots.sort_by(|a, b| lexicographic(&a.0, &b.0));

    let mut distinct: Vec<(Vec<Complex64>, f64)> = Vec::new();
    for (w, r) in roots {
        match distinct
            .iter_mut()
            .find(|(d, _)| log_distance(d, &w) < opts.dedup_tol)
        {
            Some(existing) if r < existing.1 => *existing = (w, r),
            Some(_) => {}
            None => distinct.push((w, r)),
        }
    }

    let mut points: Vec<CriticalPoint> = distinct
        .iter()
        .map(|(w, r)| CriticalPoint::from_log(w, *r, sp))
        .collect();
    points.sort_by_key(|p| {
        let moduli: Vec<i64> = p.z.iter().map(|z| quantize(z.norm())).collect();
        let args: Vec<i64> = p.holonomy_angles.iter().map(|&h| quantize(h)).collect();
        (moduli, args)
    });

    let mut warnings = Vec::new();
    if points.is_empty() {
        warnings.push(format!("no start out of {} converged", opts.starts));
    }
    Ok(CriticalSolve {
        points,
        starts: opts.starts,
        converged_starts,
        warnings,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ConvergentVerdict {
    NonVanishingConvergent,
    VanishingConvergent,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergentReport {
    pub verdict: ConvergentVerdict,
    pub values: Vec<ComplexValue>,
    pub label: &'static str,
}

fn report(values: Vec<Complex64>, tol: f64) -> ConvergentReport {
    let verdict = if values.iter().all(|v| v.norm() < tol) {
        ConvergentVerdict::NonVanishingConvergent
    } else {
        ConvergentVerdict::VanishingConvergent
    };
    ConvergentReport {
        verdict,
        values: values.into_iter().map(Into::into).collect(),
        label: CONVERGENT_LABEL,
    }
}

/// Evaluates each `m_{1,2}` component at `T^(2π) = e^{-1}`.
pub fn convergent_verdict<C: Coefficient>(
    discs: &DiscClassSet,
    local: &LocalSystem<C>,
    weights: &BFieldWeights<C>,
) -> Result<ConvergentReport> {
    let values = m12(discs, local, weights)?
        .iter()
        .map(|m| m.convergent_eval_default())
        .collect();
    Ok(report(values, CONVERGENT_ZERO_TOL))
}

/// Same evaluation at a real (possibly irrational) fiber `θ`, with disc
/// areas computed in floating point.
pub fn convergent_verdict_at(
    p: &Polytope,
    theta: &[f64],
    local: &LocalSystem<Complex64>,
    weights: &BFieldWeights<Complex64>,
    tol: f64,
) -> Result<ConvergentReport> {
    let n = p.dim();
    if theta.len() != n || local.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if theta.len() != n {
                theta.len()
            } else {
                local.dim()
            },
        });
    }
    if weights.len() != p.num_facets() {
        return Err(Error::DimensionMismatch {
            expected: p.num_facets(),
            found: weights.len(),
        });
    }
    let areas: Vec<f64> = p
        .facets()
        .iter()
        .map(|f| {
            f.normal
                .iter()
                .zip(theta)
                .map(|(&e, x)| e as f64 * x)
                .sum::<f64>()
                - to_f64(&f.offset)
        })
        .collect();
    if areas.iter().any(|&a| a <= 0.0) {
        return Err(Error::FiberNotInterior(format!("{theta:?}")));
    }
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let values = (0..n)
        .map(|i| {
            p.facets()
                .iter()
                .zip(&areas)
                .zip(weights.values())
                .map(|((f, &area), d)| {
                    d * local.monomial(&f.normal) * (f.normal[i] as f64 * sign * (-area).exp())
                })
                .sum()
        })
        .collect();
    Ok(report(values, tol))
}
