//! Exact rational and Gaussian-rational scalars, with the text forms used on
//! the command line and in JSON documents (`"p/q"`, `"a+bi"`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub type Rational = BigRational;

/// `a + b i` with `a, b` exact rationals.
pub type GaussianRational = Complex<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics on a zero denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gaussian(re: Rational, im: Rational) -> GaussianRational {
    Complex::new(re, im)
}

pub fn real(r: Rational) -> GaussianRational {
    Complex::new(r, Rational::zero())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"p/q"` or `"p"`; decimals are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Syntax(format!("'{text}' is not an exact rational p/q"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let is_int = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) {
        return Err(bad());
    }
    let num = BigInt::from_str(num.trim_start_matches('+')).map_err(|_| bad())?;
    let den = match den {
        Some(d) if is_int(d) && !d.starts_with(['-', '+']) => {
            BigInt::from_str(d).map_err(|_| bad())?
        }
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Syntax(format!("'{text}' has a zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// Parses a comma-separated list of rationals, e.g. `"1/8,3/4"`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` with rational `a`, `b`.
pub fn parse_gaussian(text: &str) -> Result<GaussianRational> {
    let text = text.trim();
    let Some(body) = text.strip_suffix('i') else {
        return Ok(real(parse_rational(text)?));
    };
    // Split at the last sign that is not the leading one.
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(idx, _)| idx)
        .last();
    let (re, im) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        other => parse_rational(other)?,
    };
    Ok(gaussian(parse_rational(re)?, im))
}

pub fn format_gaussian(z: &GaussianRational) -> String {
    if z.im.is_zero() {
        return z.re.to_string();
    }
    let im = if z.im.is_one() {
        String::new()
    } else if (-z.im.clone()).is_one() {
        "-".to_string()
    } else {
        z.im.to_string()
    };
    if z.re.is_zero() {
        format!("{im}i")
    } else if z.im.is_positive() {
        format!("{}+{im}i", z.re)
    } else {
        format!("{}{im}i", z.re)
    }
}

/// Serde adapter writing a [`Rational`] as the string `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(pub Rational);

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(d)? {
            Repr::Text(s) => parse_rational(&s)
                .map(ExactRational)
                .map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(ExactRational(int(n))),
        }
    }
}

/// `serde(with = ...)` helpers for bare [`Rational`] fields.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        ExactRational::deserialize(d).map(|r| r.0)
    }
}

/// `serde(with = ...)` helpers for `Vec<Rational>` fields.
pub mod serde_rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        Vec::<ExactRational>::deserialize(d).map(|v| v.into_iter().map(|r| r.0).collect())
    }
}

/// Gaussian rational as `{"re": "p/q", "im": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaussianRecord {
    pub re: ExactRational,
    pub im: ExactRational,
}

impl From<&GaussianRational> for GaussianRecord {
    fn from(z: &GaussianRational) -> Self {
        GaussianRecord {
            re: ExactRational(z.re.clone()),
            im: ExactRational(z.im.clone()),
        }
    }
}

impl From<GaussianRecord> for GaussianRational {
    fn from(r: GaussianRecord) -> Self {
        gaussian(r.re.0, r.im.0)
    }
}

/// `serde(with = ...)` helpers for `Vec<GaussianRational>` fields.
pub mod serde_gaussian_vec {
    use super::*;

    pub fn serialize<S: Serializer>(
        v: &[GaussianRational],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(GaussianRecord::from))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<GaussianRational>, D::Error> {
        Vec::<GaussianRecord>::deserialize(d).map(|v| v.into_iter().map(Into::into).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-2/4").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational(" +1/8 ").unwrap(), rat(1, 8));
    }

    #[test]
    fn rejects_decimals_and_zero_denominators() {
        assert!(parse_rational("0.1995").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1e3").is_err());
    }

    #[test]
    fn gaussian_literals() {
        assert_eq!(parse_gaussian("2").unwrap(), real(int(2)));
        assert_eq!(parse_gaussian("i").unwrap(), gaussian(int(0), int(1)));
        assert_eq!(parse_gaussian("-i").unwrap(), gaussian(int(0), int(-1)));
        assert_eq!(
            parse_gaussian("1/2-3/4i").unwrap(),
            gaussian(rat(1, 2), rat(-3, 4))
        );
        assert_eq!(parse_gaussian("-1+i").unwrap(), gaussian(int(-1), int(1)));
        for text in ["2", "i", "-i", "1/2-3/4i", "-1+i", "5/3i"] {
            let z = parse_gaussian(text).unwrap();
            assert_eq!(format_gaussian(&z), text);
        }
    }

    #[test]
    fn exact_rational_json_round_trip() {
        let r = ExactRational(rat(-7, 12));
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, "\"-7/12\"");
        let back: ExactRational = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        let from_int: ExactRational = serde_json::from_str("-1").unwrap();
        assert_eq!(from_int.0, int(-1));
    }
}
