//! Catalog of example polytopes. Facet order is part of the contract: disc
//! classes, energy levels and certificates report facets by index.

use num_traits::{One, Signed};
use serde::Serialize;

use crate::polytope::{Facet, Polytope};
use crate::rational::{int, parse_rational, Rational};
use crate::{Error, Result};

fn facets(data: &[(&[i64], Rational)]) -> Vec<Facet> {
    data.iter()
        .map(|(normal, offset)| Facet::new(normal.to_vec(), offset.clone()))
        .collect()
}

fn build(name: String, dim: usize, data: &[(&[i64], Rational)]) -> Polytope {
    Polytope::new(name, dim, facets(data), true).expect("builtin polytopes are valid")
}

/// The interval `[-1, 1]`.
pub fn segment() -> Polytope {
    build("segment".into(), 1, &[(&[1], int(-1)), (&[-1], int(-1))])
}

/// The standard simplex `x_i >= 0`, `Σ x_i <= 1` of `CP^n`.
pub fn cp(n: usize) -> Result<Polytope> {
    if n == 0 {
        return Err(Error::InvalidArgument("cp(n) needs n >= 1".into()));
    }
    let mut fs: Vec<Facet> = (0..n)
        .map(|k| {
            let mut normal = vec![0; n];
            normal[k] = 1;
            Facet::new(normal, int(0))
        })
        .collect();
    fs.push(Facet::new(vec![-1; n], int(-1)));
    Polytope::new(format!("cp{n}"), n, fs, true)
}

/// `CP^2` blown up at one torus-fixed point, bounded by
/// `x = -1, y = -1, x + y = -1, x + y = 1`, facets ordered
/// `v1 = (-1,-1), v2 = (1,0), v3 = (1,1), v4 = (0,1)`.
pub fn hirzebruch1() -> Polytope {
    build(
        "hirzebruch1".into(),
        2,
        &[
            (&[-1, -1], int(-1)),
            (&[1, 0], int(-1)),
            (&[1, 1], int(-1)),
            (&[0, 1], int(-1)),
        ],
    )
}

/// `CP^2` blown up at its three fixed points by the same amount `ε`,
/// `0 < ε < 1/3`. Facets run counterclockwise from `v1 = (-1,-1)`.
pub fn blowup3(eps: Rational) -> Result<Polytope> {
    if !(eps.is_positive() && eps < Rational::new(1.into(), 3.into())) {
        return Err(Error::InvalidArgument(format!(
            "blowup3 needs 0 < ε < 1/3, got {eps}"
        )));
    }
    let far = -(Rational::one() - &eps);
    Ok(build(
        format!("blowup3({eps})"),
        2,
        &[
            (&[-1, -1], int(-1)),
            (&[0, -1], far.clone()),
            (&[1, 0], int(0)),
            (&[1, 1], eps.clone()),
            (&[0, 1], int(0)),
            (&[-1, 0], far),
        ],
    ))
}

fn check_cube_eps(eps: &Rational) -> Result<()> {
    if eps.is_positive() && *eps < Rational::one() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "cube blow-ups need 0 < ε < 1, got {eps}"
        )))
    }
}

/// Cube `[-1+ε, 1]^3` with the two diagonal corners cut by
/// `x + y + z = 1 - ε` and `x + y + z = -1`.
pub fn cube_blowup_a(eps: Rational) -> Result<Polytope> {
    check_cube_eps(&eps)?;
    let near = &eps - int(1);
    let far = -(Rational::one() - &eps);
    Ok(build(
        format!("cube_blowup_a({eps})"),
        3,
        &[
            (&[1, 0, 0], near.clone()),
            (&[0, 1, 0], near.clone()),
            (&[0, 0, 1], near),
            (&[-1, 0, 0], int(-1)),
            (&[0, -1, 0], int(-1)),
            (&[0, 0, -1], int(-1)),
            (&[-1, -1, -1], far),
            (&[1, 1, 1], int(-1)),
        ],
    ))
}

/// Cube `[-1, 1-ε]^3` with the corners cut by `x + y + z = 1 - ε` and
/// `x + y + z = -1`.
pub fn cube_blowup_b(eps: Rational) -> Result<Polytope> {
    check_cube_eps(&eps)?;
    let far = -(Rational::one() - &eps);
    Ok(build(
        format!("cube_blowup_b({eps})"),
        3,
        &[
            (&[1, 0, 0], int(-1)),
            (&[0, 1, 0], int(-1)),
            (&[0, 0, 1], int(-1)),
            (&[-1, 0, 0], far.clone()),
            (&[0, -1, 0], far.clone()),
            (&[0, 0, -1], far.clone()),
            (&[-1, -1, -1], far),
            (&[1, 1, 1], int(-1)),
        ],
    ))
}

/// The `ε = 0` member of both cube families: `[-1, 1]^3` cut by
/// `x + y + z = ±1`. Reflexive but not simple.
pub fn cube_reflexive() -> Polytope {
    build(
        "cube_reflexive".into(),
        3,
        &[
            (&[1, 0, 0], int(-1)),
            (&[0, 1, 0], int(-1)),
            (&[0, 0, 1], int(-1)),
            (&[-1, 0, 0], int(-1)),
            (&[0, -1, 0], int(-1)),
            (&[0, 0, -1], int(-1)),
            (&[-1, -1, -1], int(-1)),
            (&[1, 1, 1], int(-1)),
        ],
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub parameter: Option<&'static str>,
    pub description: &'static str,
}

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "segment",
            parameter: None,
            description: "interval [-1, 1] (CP^1, reflexive)",
        },
        CatalogEntry {
            name: "cpN",
            parameter: Some("N in the name, e.g. cp2; or --param N with name cp"),
            description: "standard simplex of CP^N",
        },
        CatalogEntry {
            name: "hirzebruch1",
            parameter: None,
            description: "CP^2 blown up at one point, reflexive",
        },
        CatalogEntry {
            name: "blowup3",
            parameter: Some("ε with 0 < ε < 1/3"),
            description: "CP^2 blown up at three fixed points",
        },
        CatalogEntry {
            name: "cube_blowup_a",
            parameter: Some("ε with 0 < ε < 1"),
            description: "cube [-1+ε,1]^3 with two diagonal corners cut",
        },
        CatalogEntry {
            name: "cube_blowup_b",
            parameter: Some("ε with 0 < ε < 1"),
            description: "cube [-1,1-ε]^3 with two diagonal corners cut",
        },
        CatalogEntry {
            name: "cube_reflexive",
            parameter: None,
            description: "ε = 0 member of the cube families, reflexive",
        },
    ]
}

/// Looks up a builtin by name with an optional `p/q` parameter.
pub fn lookup(name: &str, param: Option<&str>) -> Result<Polytope> {
    let param = param.map(parse_rational).transpose()?;
    let need = |what: &str| {
        param.clone().ok_or_else(|| {
            Error::InvalidArgument(format!("builtin '{name}' needs --param ({what})"))
        })
    };
    let reject_param = |p: Polytope| match &param {
        Some(_) => Err(Error::InvalidArgument(format!(
            "builtin '{name}' takes no parameter"
        ))),
        None => Ok(p),
    };
    match name {
        "segment" => reject_param(segment()),
        "hirzebruch1" => reject_param(hirzebruch1()),
        "cube_reflexive" => reject_param(cube_reflexive()),
        "blowup3" => blowup3(need("ε")?),
        "cube_blowup_a" => cube_blowup_a(need("ε")?),
        "cube_blowup_b" => cube_blowup_b(need("ε")?),
        "cp" => {
            let n = need("n")?;
            if !n.is_integer() || !n.is_positive() || n > int(16) {
                return Err(Error::InvalidArgument(format!(
                    "cp needs a small positive integer, got {n}"
                )));
            }
            cp(n.to_integer().try_into().unwrap_or(0))
        }
        _ => match name
            .strip_prefix("cp")
            .and_then(|d| d.parse::<usize>().ok())
        {
            Some(n) if (1..=16).contains(&n) && param.is_none() => cp(n),
            _ => Err(Error::InvalidArgument(format!("unknown builtin '{name}'"))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::validate;
    use crate::rational::rat;

    fn all() -> Vec<Polytope> {
        vec![
            segment(),
            cp(1).unwrap(),
            cp(2).unwrap(),
            cp(3).unwrap(),
            hirzebruch1(),
            blowup3(rat(1, 8)).unwrap(),
            cube_blowup_a(rat(1, 4)).unwrap(),
            cube_blowup_b(rat(1, 4)).unwrap(),
            cube_reflexive(),
        ]
    }

    #[test]
    fn every_builtin_validates() {
        for p in all() {
            let report = validate(&p);
            assert!(
                report.bounded && report.full_dimensional && report.facets_essential,
                "{}",
                p.name()
            );
        }
    }

    #[test]
    fn parameter_ranges() {
        assert!(blowup3(rat(1, 3)).is_err());
        assert!(blowup3(int(0)).is_err());
        assert!(cube_blowup_a(int(1)).is_err());
        assert!(cube_blowup_b(rat(-1, 2)).is_err());
        assert!(cp(0).is_err());
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(lookup("hirzebruch1", None).unwrap(), hirzebruch1());
        assert_eq!(lookup("cp2", None).unwrap(), cp(2).unwrap());
        assert_eq!(lookup("cp", Some("3")).unwrap(), cp(3).unwrap());
        assert_eq!(
            lookup("blowup3", Some("1/8")).unwrap(),
            blowup3(rat(1, 8)).unwrap()
        );
        assert!(lookup("blowup3", None).is_err());
        assert!(lookup("hirzebruch1", Some("1/2")).is_err());
        assert!(lookup("dodecahedron", None).is_err());
    }
}
