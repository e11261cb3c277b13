//! Moment polytopes `P = {x : <x, v_j> >= λ_j}` with primitive integer
//! normals and exact rational offsets.
//!
//! Everything here is exact. A [`Polytope`] can only be built through
//! [`Polytope::new`] (or [`parse_polytope`]), which normalizes the normals
//! and rejects unbounded, lower-dimensional and redundant descriptions, so
//! every other operation may assume a full-dimensional bounded polytope
//! without redundant facets.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use itertools::Itertools;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{self, dot_int, Solution};
use crate::rational::{int, parse_rational_list, ExactRational, Rational};
use crate::{Error, Result};

/// Smoothness is not checked above this dimension.
pub const MAX_SMOOTHNESS_DIM: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: Rational,
}

impl Facet {
    pub fn new(normal: impl Into<Vec<i64>>, offset: Rational) -> Self {
        Facet {
            normal: normal.into(),
            offset,
        }
    }

    /// `<x, v> - λ`, which is nonnegative exactly on the facet's half-space.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        dot_int(&self.normal, x) - &self.offset
    }

    fn primitive(mut self) -> Self {
        let g = self.normal.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g > 1 {
            self.normal.iter_mut().for_each(|x| *x /= g);
            self.offset /= int(g);
        }
        self
    }
}

/// A point `A = (θ_1, ..., θ_n)` of the moment polytope, exact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiberPoint(pub Vec<Rational>);

impl FiberPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        FiberPoint(coords)
    }

    pub fn origin(dim: usize) -> Self {
        FiberPoint(vec![Rational::zero(); dim])
    }

    /// Parses `"r1,r2,..."` with exact rational entries.
    pub fn parse(text: &str) -> Result<Self> {
        parse_rational_list(text).map(FiberPoint)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for FiberPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(", "))
    }
}

impl Serialize for FiberPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::rational::serde_rational_vec::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for FiberPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        crate::rational::serde_rational_vec::deserialize(d).map(FiberPoint)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polytope {
    name: String,
    dim: usize,
    facets: Vec<Facet>,
    fano_asserted: bool,
    vertices: Vec<Vec<Rational>>,
}

impl Polytope {
    /// Normalizes every normal to primitive form (rescaling its offset) and
    /// checks that the facets cut out a bounded, full-dimensional polytope
    /// in which every facet is essential.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        facets: Vec<Facet>,
        fano_asserted: bool,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidPolytope("dimension must be positive".into()));
        }
        let mut normalized = Vec::with_capacity(facets.len());
        for (j, facet) in facets.into_iter().enumerate() {
            if facet.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: facet.normal.len(),
                });
            }
            if facet.normal.iter().all(|&x| x == 0) {
                return Err(Error::InvalidPolytope(format!(
                    "facet {j} has a zero normal"
                )));
            }
            normalized.push(facet.primitive());
        }
        if normalized.len() <= dim {
            return Err(Error::InvalidPolytope(format!(
                "need more than {dim} facets in dimension {dim}, found {}",
                normalized.len()
            )));
        }

        if !is_bounded(dim, &normalized) {
            return Err(Error::InvalidPolytope("polytope is unbounded".into()));
        }
        let vertices = enumerate_vertices(dim, &normalized);
        if vertices.is_empty() {
            return Err(Error::InvalidPolytope("polytope is empty".into()));
        }
        let centroid = centroid(&vertices);
        if !normalized.iter().all(|f| f.slack(&centroid).is_positive()) {
            return Err(Error::InvalidPolytope("polytope has empty interior".into()));
        }
        if let Some(j) =
            (0..normalized.len()).find(|&j| !is_essential(dim, &normalized, &vertices, j))
        {
            return Err(Error::InvalidPolytope(format!("facet {j} is inessential")));
        }

        Ok(Polytope {
            name: name.into(),
            dim,
            facets: normalized,
            fano_asserted,
            vertices,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn normals(&self) -> impl Iterator<Item = &[i64]> {
        self.facets.iter().map(|f| f.normal.as_slice())
    }

    /// Whether the user (or the builtin catalog) asserted the Fano/positivity
    /// condition. It is never verified.
    pub fn fano_asserted(&self) -> bool {
        self.fano_asserted
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// `<A, v_j> - λ_j` for every facet.
    pub fn slacks(&self, point: &[Rational]) -> Vec<Rational> {
        self.facets.iter().map(|f| f.slack(point)).collect()
    }

    pub fn contains_interior(&self, point: &FiberPoint) -> bool {
        point.dim() == self.dim && self.facets.iter().all(|f| f.slack(&point.0).is_positive())
    }

    pub fn to_document(&self) -> PolytopeDocument {
        PolytopeDocument {
            name: self.name.clone(),
            dim: self.dim,
            facets: self
                .facets
                .iter()
                .map(|f| FacetRecord {
                    normal: f.normal.clone(),
                    offset: ExactRational(f.offset.clone()),
                })
                .collect(),
            fano: self.fano_asserted,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("polytope documents serialize")
    }
}

/// On-disk form of a polytope.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    pub name: String,
    pub dim: usize,
    pub facets: Vec<FacetRecord>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub fano: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetRecord {
    pub normal: Vec<i64>,
    pub offset: ExactRational,
}

impl TryFrom<PolytopeDocument> for Polytope {
    type Error = Error;

    fn try_from(doc: PolytopeDocument) -> Result<Self> {
        let facets = doc
            .facets
            .into_iter()
            .map(|f| Facet::new(f.normal, f.offset.0))
            .collect();
        Polytope::new(doc.name, doc.dim, facets, doc.fano)
    }
}

/// Parses and validates a JSON polytope document.
pub fn parse_polytope(text: &str) -> Result<Polytope> {
    let doc: PolytopeDocument =
        serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
    doc.try_into()
}

pub fn load_polytope(path: impl AsRef<Path>) -> Result<Polytope> {
    parse_polytope(&std::fs::read_to_string(path)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub bounded: bool,
    pub full_dimensional: bool,
    pub facets_essential: bool,
    /// `None` when the check was skipped.
    pub smooth: Option<bool>,
    pub reflexive: bool,
    pub warnings: Vec<String>,
}

pub fn validate(p: &Polytope) -> ValidationReport {
    let mut warnings = Vec::new();
    let smooth = if p.dim > MAX_SMOOTHNESS_DIM {
        warnings.push(format!(
            "smoothness not checked above dimension {MAX_SMOOTHNESS_DIM}"
        ));
        None
    } else {
        Some(is_smooth(p))
    };
    if p.fano_asserted {
        warnings.push("Fano/positivity not verified: asserted by user".into());
    } else {
        warnings.push(
            "Fano/positivity not asserted: Floer computations assume it without checking".into(),
        );
    }
    ValidationReport {
        bounded: true,
        full_dimensional: true,
        facets_essential: true,
        smooth,
        reflexive: is_reflexive(p),
        warnings,
    }
}

/// All offsets `-1`, integral vertices and the origin in the interior.
///
/// This is a proxy for "the origin is the only interior lattice point";
/// interior lattice points are not enumerated.
pub fn is_reflexive(p: &Polytope) -> bool {
    let minus_one = int(-1);
    p.facets.iter().all(|f| f.offset == minus_one)
        && p.vertices.iter().flatten().all(|x| x.is_integer())
        && p.contains_interior(&FiberPoint::origin(p.dim))
}

/// At every vertex exactly `n` facets are active and their normals form a
/// basis of `Z^n`.
pub fn is_smooth(p: &Polytope) -> bool {
    p.vertices.iter().all(|v| {
        let active: Vec<&[i64]> = p
            .facets
            .iter()
            .filter(|f| f.slack(v).is_zero())
            .map(|f| f.normal.as_slice())
            .collect();
        active.len() == p.dim && linalg::determinant(&linalg::row_matrix(&active)).abs() == int(1)
    })
}

/// The fiber at which all disc areas `<A, v_j> - λ_j` coincide, together
/// with the common value, if the linear system for it is consistent.
pub fn monotone_fiber(p: &Polytope) -> Option<(FiberPoint, Rational)> {
    let n = p.dim;
    let rows: linalg::Matrix = p
        .facets
        .iter()
        .map(|f| {
            let mut row: Vec<Rational> = f.normal.iter().map(|&x| int(x)).collect();
            row.push(int(-1));
            row
        })
        .collect();
    let rhs: Vec<Rational> = p.facets.iter().map(|f| f.offset.clone()).collect();
    match linalg::solve(&rows, &rhs, n + 1) {
        Solution::Unique(mut x) => {
            let area = x.pop().expect("n + 1 unknowns");
            let fiber = FiberPoint(x);
            (area.is_positive() && p.contains_interior(&fiber)).then_some((fiber, area))
        }
        Solution::Inconsistent | Solution::Underdetermined => None,
    }
}

/// The recession cone `{d : <d, v_j> >= 0}` is trivial iff the normals have
/// full rank and no extreme ray exists; an extreme ray is cut out by `n - 1`
/// independent tight constraints.
fn is_bounded(dim: usize, facets: &[Facet]) -> bool {
    let all = linalg::row_matrix(&facets.iter().map(|f| &f.normal[..]).collect::<Vec<_>>());
    if linalg::rank(&all, dim) < dim {
        return false;
    }
    for subset in (0..facets.len()).combinations(dim - 1) {
        let rows = linalg::row_matrix(
            &subset
                .iter()
                .map(|&j| &facets[j].normal[..])
                .collect::<Vec<_>>(),
        );
        let kernel = linalg::null_space(&rows, dim);
        if kernel.len() != 1 {
            continue;
        }
        let ray = &kernel[0];
        let dots: Vec<Rational> = facets.iter().map(|f| dot_int(&f.normal, ray)).collect();
        if dots.iter().all(|d| !d.is_negative()) || dots.iter().all(|d| !d.is_positive()) {
            return false;
        }
    }
    true
}

fn enumerate_vertices(dim: usize, facets: &[Facet]) -> Vec<Vec<Rational>> {
    let mut found = BTreeSet::new();
    for subset in (0..facets.len()).combinations(dim) {
        let rows = linalg::row_matrix(
            &subset
                .iter()
                .map(|&j| &facets[j].normal[..])
                .collect::<Vec<_>>(),
        );
        let rhs: Vec<Rational> = subset.iter().map(|&j| facets[j].offset.clone()).collect();
        if let Solution::Unique(x) = linalg::solve(&rows, &rhs, dim) {
            if facets.iter().all(|f| !f.slack(&x).is_negative()) {
                found.insert(x);
            }
        }
    }
    found.into_iter().collect()
}

fn centroid(points: &[Vec<Rational>]) -> Vec<Rational> {
    let count = int(points.len() as i64);
    let dim = points[0].len();
    (0..dim)
        .map(|k| points.iter().map(|p| &p[k]).sum::<Rational>() / &count)
        .collect()
}

fn is_essential(dim: usize, facets: &[Facet], vertices: &[Vec<Rational>], j: usize) -> bool {
    let facet = &facets[j];
    if facets[..j]
        .iter()
        .chain(&facets[j + 1..])
        .any(|f| f == facet)
    {
        return false;
    }
    let on_face: Vec<&Vec<Rational>> = vertices
        .iter()
        .filter(|v| facet.slack(v).is_zero())
        .collect();
    let Some((first, rest)) = on_face.split_first() else {
        return false;
    };
    let diffs: linalg::Matrix = rest
        .iter()
        .map(|v| v.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(&diffs, dim) == dim - 1
}
