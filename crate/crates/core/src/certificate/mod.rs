//! Non-displaceability certificates.
//!
//! At an interior fiber the disc classes split into energy levels. Classes
//! in different levels carry different powers of `T` and cannot cancel, so
//! `m_{1,2}` vanishes iff it vanishes level by level. A level `I` can be
//! cancelled by B-field weights iff `Σ_{j ∈ I} c_j v_j = 0` has a solution
//! with all `c_j ≠ 0`. When every level has one, setting `d_j = c_j` gives
//! `m_{1,2} = 0` and hence non-vanishing Floer cohomology, which makes the
//! fiber non-displaceable.
//!
//! A failed search is reported as [`CertificateVerdict::Unknown`], never as
//! displaceable.

pub mod kernel;

pub use kernel::{fully_supported_kernel_vector, kernel_basis};

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::floer::{disc_classes, energy_levels, EnergyLevel};
use crate::linalg::column_matrix;
use crate::polytope::{monotone_fiber, FiberPoint, Polytope};
use crate::rational::{
    int, real, serde_gaussian_vec, serde_rational, to_f64, GaussianRational, Rational,
};
use crate::{Error, Result, TOOL_VERSION};

pub const MAX_SCAN_DENOMINATOR: u32 = 64;

pub const REALIZABILITY_NOTE: &str = "B-field given by its periods exp(∫_{β_j} B) = d_j only; \
     support near the toric divisors and the integrality condition on the fiber are not checked";

const NOT_FANO_WARNING: &str =
    "polytope not flagged Fano: positivity of Maslov indices is assumed, not verified";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateVerdict {
    Certified,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelCertificate {
    #[serde(with = "serde_rational")]
    pub area: Rational,
    pub facets: Vec<usize>,
    /// `c_j` for `j` in `facets`, same order.
    #[serde(with = "serde_gaussian_vec")]
    pub coefficients: Vec<GaussianRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        ComplexValue { re: z.re, im: z.im }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub polytope: String,
    pub fiber: FiberPoint,
    /// Levels that admit a fully supported kernel vector.
    pub levels: Vec<LevelCertificate>,
    /// `d_j = c_j` for certified levels, zero on failing levels.
    #[serde(with = "serde_gaussian_vec")]
    pub weights: Vec<GaussianRational>,
    /// Principal logarithms `∫_{β_j} B = log d_j`; present when certified.
    pub periods: Option<Vec<ComplexValue>>,
    pub verdict: CertificateVerdict,
    pub failing_levels: Vec<EnergyLevel>,
    pub fano_asserted: bool,
    pub warnings: Vec<String>,
    pub realizability_note: String,
    pub tool_version: String,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == CertificateVerdict::Certified
    }

    /// Recomputes the energy levels of `p` at the certificate's fiber and
    /// checks every stored coefficient vector exactly. Returns the verdict
    /// the stored data supports.
    pub fn verify(&self, p: &Polytope) -> Result<CertificateVerdict> {
        let discs = disc_classes(p, &self.fiber)?;
        let levels = energy_levels(&discs);
        if self.weights.len() != p.num_facets() {
            return Err(Error::Inconsistent(format!(
                "certificate has {} weights for {} facets",
                self.weights.len(),
                p.num_facets()
            )));
        }
        let mut verdict = CertificateVerdict::Certified;
        for level in levels.levels() {
            let Some(cert) = self
                .levels
                .iter()
                .find(|c| c.area == level.area && c.facets == level.facets)
            else {
                verdict = CertificateVerdict::Unknown;
                continue;
            };
            let normals: Vec<&[i64]> = level
                .facets
                .iter()
                .map(|&j| &p.facets()[j].normal[..])
                .collect();
            if !verify_level(&normals, &cert.coefficients) {
                return Err(Error::Inconsistent(format!(
                    "coefficients for the level at area {} do not cancel",
                    level.area
                )));
            }
            for (&j, c) in level.facets.iter().zip(&cert.coefficients) {
                if self.weights[j] != *c {
                    return Err(Error::Inconsistent(format!(
                        "weight d_{j} differs from its level coefficient"
                    )));
                }
            }
        }
        Ok(verdict)
    }
}

/// `Σ c_j v_j = 0` exactly with every `c_j ≠ 0`.
pub fn verify_level(normals: &[&[i64]], coefficients: &[GaussianRational]) -> bool {
    if normals.len() != coefficients.len() || coefficients.iter().any(Zero::is_zero) {
        return false;
    }
    let dim = normals.first().map_or(0, |v| v.len());
    (0..dim).all(|i| {
        normals
            .iter()
            .zip(coefficients)
            .map(|(v, c)| c * real(int(v[i])))
            .sum::<GaussianRational>()
            .is_zero()
    })
}

/// Searches every energy level at `fiber` for a fully supported kernel vector.
pub fn certify_fiber(p: &Polytope, fiber: &FiberPoint) -> Result<Certificate> {
    let discs = disc_classes(p, fiber)?;
    let mut levels = Vec::new();
    let mut failing = Vec::new();
    let mut weights = vec![GaussianRational::zero(); p.num_facets()];
    for level in energy_levels(&discs).levels() {
        let normals: Vec<&[i64]> = level
            .facets
            .iter()
            .map(|&j| &p.facets()[j].normal[..])
            .collect();
        match fully_supported_kernel_vector(&column_matrix(&normals)) {
            Some(c) => {
                let coefficients: Vec<GaussianRational> = c.into_iter().map(real).collect();
                for (&j, cj) in level.facets.iter().zip(&coefficients) {
                    weights[j] = cj.clone();
                }
                levels.push(LevelCertificate {
                    area: level.area.clone(),
                    facets: level.facets.clone(),
                    coefficients,
                });
            }
            None => failing.push(level.clone()),
        }
    }
    let verdict = if failing.is_empty() {
        CertificateVerdict::Certified
    } else {
        CertificateVerdict::Unknown
    };
    let periods = failing.is_empty().then(|| {
        weights
            .iter()
            .map(|d| Complex64::new(to_f64(&d.re), to_f64(&d.im)).ln().into())
            .collect()
    });
    let mut warnings = Vec::new();
    if !p.fano_asserted() {
        warnings.push(NOT_FANO_WARNING.to_string());
    }
    Ok(Certificate {
        polytope: p.name().to_string(),
        fiber: fiber.clone(),
        levels,
        weights,
        periods,
        verdict,
        failing_levels: failing,
        fano_asserted: p.fano_asserted(),
        warnings,
        realizability_note: REALIZABILITY_NOTE.to_string(),
        tool_version: TOOL_VERSION.to_string(),
    })
}

/// Certificate at the monotone fiber, or `None` if there is no monotone fiber.
///
/// All classes share one level there, and for a complete fan the normals
/// always admit a positive relation, so a Fano-flagged polytope that fails
/// is reported as an error.
pub fn certify_monotone(p: &Polytope) -> Result<Option<Certificate>> {
    let Some((fiber, _)) = monotone_fiber(p) else {
        return Ok(None);
    };
    let cert = certify_fiber(p, &fiber)?;
    if !cert.is_certified() && p.fano_asserted() {
        return Err(Error::Inconsistent(format!(
            "monotone fiber {fiber} of Fano polytope {} failed to certify",
            p.name()
        )));
    }
    Ok(Some(cert))
}

/// Interior points with coordinates in `(1/denominator) Z`, lexicographic.
pub fn grid_points(p: &Polytope, denominator: u32) -> Vec<FiberPoint> {
    let den = int(i64::from(denominator));
    let ranges: Vec<Vec<Rational>> = (0..p.dim())
        .map(|k| {
            let lo = p
                .vertices()
                .iter()
                .map(|v| &v[k])
                .min()
                .expect("vertices exist");
            let hi = p
                .vertices()
                .iter()
                .map(|v| &v[k])
                .max()
                .expect("vertices exist");
            let (lo, hi) = (
                (lo * &den).ceil().to_integer(),
                (hi * &den).floor().to_integer(),
            );
            num_iter(lo, hi)
                .map(|k| Rational::new(k, den.to_integer()))
                .collect()
        })
        .collect();
    itertools::Itertools::multi_cartesian_product(ranges.into_iter().map(Vec::into_iter))
        .map(FiberPoint)
        .filter(|a| p.contains_interior(a))
        .collect()
}

fn num_iter(
    lo: num_bigint::BigInt,
    hi: num_bigint::BigInt,
) -> impl Iterator<Item = num_bigint::BigInt> {
    let mut k = lo;
    std::iter::from_fn(move || {
        (k <= hi).then(|| {
            let out = k.clone();
            k += 1;
            out
        })
    })
}

/// Certified fibers on the grid of denominator `denominator`, in grid order.
pub fn scan_fibers(p: &Polytope, denominator: u32) -> Result<Vec<Certificate>> {
    if denominator == 0 || denominator > MAX_SCAN_DENOMINATOR {
        return Err(Error::InvalidArgument(format!(
            "grid denominator must be in 1..={MAX_SCAN_DENOMINATOR}, got {denominator}"
        )));
    }
    let points = grid_points(p, denominator);
    let certs: Vec<Certificate> = points
        .par_iter()
        .map(|a| certify_fiber(p, a))
        .collect::<Result<_>>()?;
    Ok(certs
        .into_iter()
        .filter(Certificate::is_certified)
        .collect())
}

/// Whether some nonzero multiple of `c` has all coordinates positive.
pub fn is_same_sign(c: &[Rational]) -> bool {
    c.iter().all(Signed::is_positive) || c.iter().all(Signed::is_negative)
}
