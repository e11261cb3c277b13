//! Maslov-index-2 disc classes at a torus fiber, their energy levels, and the
//! weighted differential `m_{1,2}`.
//!
//! At an interior fiber `A` each facet `j` contributes one disc class `β_j`
//! with boundary `∂β_j = v_j` and area `2π(<A, v_j> - λ_j)`. With holonomy
//! `x ∈ (C*)^n` and B-field weights `d_j = exp(∫_{β_j} B)`, the `i`-th
//! component of `m_{1,2}` is
//!
//! ```text
//! (-1)^n Σ_j v_{ji} · d_j · x^{v_j} · T^(2π r_j)
//! ```
//!
//! and Floer cohomology is non-vanishing exactly when every component is zero.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::novikov::{Coefficient, NovikovElement};
use crate::polytope::{FiberPoint, Polytope};
use crate::rational::{serde_rational, to_f64, Rational};
use crate::{Error, Result};

/// `|x_k| = 1` tolerance for unitary holonomy.
pub const UNITARY_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiscClass {
    pub facet: usize,
    pub boundary: Vec<i64>,
    /// `r_j` with `ω(β_j) = 2π r_j`.
    #[serde(with = "serde_rational")]
    pub area: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiscClassSet {
    fiber: FiberPoint,
    classes: Vec<DiscClass>,
}

impl DiscClassSet {
    pub fn fiber(&self) -> &FiberPoint {
        &self.fiber
    }

    pub fn classes(&self) -> &[DiscClass] {
        &self.classes
    }

    pub fn dim(&self) -> usize {
        self.fiber.dim()
    }

    pub fn areas(&self) -> Vec<Rational> {
        self.classes.iter().map(|c| c.area.clone()).collect()
    }
}

/// One disc class per facet, with area exponent `<A, v_j> - λ_j`.
pub fn disc_classes(p: &Polytope, fiber: &FiberPoint) -> Result<DiscClassSet> {
    if fiber.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: fiber.dim(),
        });
    }
    if !p.contains_interior(fiber) {
        return Err(Error::FiberNotInterior(fiber.to_string()));
    }
    let classes = p
        .facets()
        .iter()
        .enumerate()
        .map(|(j, f)| DiscClass {
            facet: j,
            boundary: f.normal.clone(),
            area: f.slack(fiber.coords()),
        })
        .collect();
    Ok(DiscClassSet {
        fiber: fiber.clone(),
        classes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnergyLevel {
    #[serde(with = "serde_rational")]
    pub area: Rational,
    pub facets: Vec<usize>,
}

/// Partition of the facets by equal disc area, areas strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct EnergyLevels(Vec<EnergyLevel>);

impl EnergyLevels {
    pub fn levels(&self) -> &[EnergyLevel] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn energy_levels(discs: &DiscClassSet) -> EnergyLevels {
    let mut groups: BTreeMap<&Rational, Vec<usize>> = BTreeMap::new();
    for class in &discs.classes {
        groups.entry(&class.area).or_default().push(class.facet);
    }
    EnergyLevels(
        groups
            .into_iter()
            .map(|(area, facets)| EnergyLevel {
                area: area.clone(),
                facets,
            })
            .collect(),
    )
}

/// A flat `C*`-local system on the torus, given by its holonomy point.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalSystem<C> {
    holonomy: Vec<C>,
    unitary: bool,
}

impl<C: Coefficient> LocalSystem<C> {
    pub fn trivial(dim: usize) -> Self {
        LocalSystem {
            holonomy: vec![C::one(); dim],
            unitary: true,
        }
    }

    /// Holonomy with every `|x_k| = 1`.
    pub fn unitary(holonomy: Vec<C>) -> Result<Self> {
        check_nonzero(&holonomy)?;
        if let Some(k) = holonomy
            .iter()
            .position(|x| (x.to_complex().norm() - 1.0).abs() > UNITARY_TOL)
        {
            return Err(Error::NotUnitary(k));
        }
        Ok(LocalSystem {
            holonomy,
            unitary: true,
        })
    }

    /// Any holonomy in `(C*)^n`.
    pub fn non_unitary(holonomy: Vec<C>) -> Result<Self> {
        check_nonzero(&holonomy)?;
        Ok(LocalSystem {
            holonomy,
            unitary: false,
        })
    }

    pub fn holonomy(&self) -> &[C] {
        &self.holonomy
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    pub fn dim(&self) -> usize {
        self.holonomy.len()
    }

    /// Holonomy around a boundary class `v`: the monomial `x^v`.
    pub fn monomial(&self, v: &[i64]) -> C {
        v.iter()
            .zip(&self.holonomy)
            .fold(C::one(), |acc, (&e, x)| acc * x.powi(e))
    }

    pub fn conj(&self) -> Self {
        LocalSystem {
            holonomy: self.holonomy.iter().map(C::conj).collect(),
            unitary: self.unitary,
        }
    }
}

impl LocalSystem<Complex64> {
    /// `x_k = e^{2πi a_k}` for angle fractions `a_k` of a full turn.
    pub fn from_turns(turns: &[Rational]) -> Self {
        Self::from_angles(
            &turns
                .iter()
                .map(|t| std::f64::consts::TAU * to_f64(t))
                .collect::<Vec<_>>(),
        )
    }

    /// `x_k = e^{i h_k}` for angles in radians.
    pub fn from_angles(angles: &[f64]) -> Self {
        LocalSystem {
            holonomy: angles
                .iter()
                .map(|&h| Complex64::from_polar(1.0, h))
                .collect(),
            unitary: true,
        }
    }
}

fn check_nonzero<C: Coefficient>(holonomy: &[C]) -> Result<()> {
    match holonomy.iter().position(|x| x.is_zero()) {
        Some(k) => Err(Error::ZeroHolonomy(k)),
        None => Ok(()),
    }
}

/// Period weights `d_j = exp(∫_{β_j} B)`, one per facet, all nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct BFieldWeights<C>(Vec<C>);

impl<C: Coefficient> BFieldWeights<C> {
    pub fn new(weights: Vec<C>) -> Result<Self> {
        match weights.iter().position(|d| d.is_zero()) {
            Some(j) => Err(Error::ZeroWeight(j)),
            None => Ok(BFieldWeights(weights)),
        }
    }

    /// `B = 0`.
    pub fn trivial(num_facets: usize) -> Self {
        BFieldWeights(vec![C::one(); num_facets])
    }

    pub fn values(&self) -> &[C] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `∫_{β_j} B = log d_j`, principal branch.
    pub fn periods(&self) -> Vec<Complex64> {
        self.0.iter().map(|d| d.to_complex().ln()).collect()
    }

    pub fn conj(&self) -> Self {
        BFieldWeights(self.0.iter().map(C::conj).collect())
    }
}

/// The components `m_{1,2}(C_i)`, `i = 1..n`, as Novikov sums.
pub fn m12<C: Coefficient>(
    discs: &DiscClassSet,
    local: &LocalSystem<C>,
    weights: &BFieldWeights<C>,
) -> Result<Vec<NovikovElement<C>>> {
    let n = discs.dim();
    if local.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: local.dim(),
        });
    }
    if weights.len() != discs.classes.len() {
        return Err(Error::DimensionMismatch {
            expected: discs.classes.len(),
            found: weights.len(),
        });
    }
    if let Some(j) = weights.0.iter().position(|d| d.is_zero()) {
        return Err(Error::ZeroWeight(j));
    }
    let sign = C::from_i64(if n.is_multiple_of(2) { 1 } else { -1 });
    // d_j x^{v_j} does not depend on the component.
    let contributions: Vec<C> = discs
        .classes
        .iter()
        .zip(&weights.0)
        .map(|(class, d)| sign.clone() * d.clone() * local.monomial(&class.boundary))
        .collect();
    Ok((0..n)
        .map(|i| {
            NovikovElement::from_terms(
                discs
                    .classes
                    .iter()
                    .zip(&contributions)
                    .filter(|(class, _)| class.boundary[i] != 0)
                    .map(|(class, c)| {
                        (
                            class.area.clone(),
                            C::from_i64(class.boundary[i]) * c.clone(),
                        )
                    }),
            )
        })
        .collect())
}

/// `m_{1,2}(pt) = Σ a_i [l_i]` read off from [`m12`].
#[derive(Clone, Debug, PartialEq)]
pub enum PointCoefficients<C> {
    /// All disc areas coincide: component `i` is `a_i T^(2π area)`.
    Scalar {
        area: Rational,
        coefficients: Vec<C>,
    },
    /// Several energy levels: the components themselves.
    Series(Vec<NovikovElement<C>>),
}

impl<C: Coefficient> PointCoefficients<C> {
    pub fn is_nonzero(&self, i: usize) -> bool {
        match self {
            PointCoefficients::Scalar { coefficients, .. } => !coefficients[i].negligible(),
            PointCoefficients::Series(components) => !components[i].is_negligible(),
        }
    }
}

pub fn m12_pt<C: Coefficient>(
    discs: &DiscClassSet,
    local: &LocalSystem<C>,
    weights: &BFieldWeights<C>,
) -> Result<PointCoefficients<C>> {
    let components = m12(discs, local, weights)?;
    let levels = energy_levels(discs);
    if levels.len() != 1 {
        return Ok(PointCoefficients::Series(components));
    }
    let area = levels.0[0].area.clone();
    let coefficients = components
        .iter()
        .map(|m| m.leading_coefficient().cloned().unwrap_or_else(C::zero))
        .collect();
    Ok(PointCoefficients::Scalar { area, coefficients })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FloerVerdict {
    /// `m_{1,2} = 0`: Floer cohomology is isomorphic to `H^*(T^n)`.
    NonVanishing,
    Vanishing,
}

/// Exact mode: every component is zero. Float mode: every coefficient has
/// modulus below [`crate::novikov::FLOAT_ZERO_TOL`].
pub fn floer_verdict<C: Coefficient>(m: &[NovikovElement<C>]) -> FloerVerdict {
    if m.iter().all(NovikovElement::is_negligible) {
        FloerVerdict::NonVanishing
    } else {
        FloerVerdict::Vanishing
    }
}
