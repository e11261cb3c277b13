//! Finite sums `Σ a_k T^(2π r_k)` over the Novikov ring with exact rational
//! exponents `r_k` (stored in units of `2π`).
//!
//! Coefficients come in two modes that never mix: exact Gaussian rationals
//! ([`GaussianRational`]) and floating complex numbers ([`Complex64`]) for
//! transcendental holonomy values. Both implement [`Coefficient`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{
    format_gaussian, gaussian, to_f64, ExactRational, GaussianRational, Rational,
};

/// Float coefficients below this magnitude count as zero in verdicts.
pub const FLOAT_ZERO_TOL: f64 = 1e-10;

pub trait Coefficient:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Serialized form of the real and imaginary parts.
    type Part: Serialize + DeserializeOwned;

    const EXACT: bool;

    fn from_i64(n: i64) -> Self;
    fn inv(&self) -> Self;
    fn conj(&self) -> Self;
    fn to_complex(&self) -> Complex64;
    fn parts(&self) -> (Self::Part, Self::Part);
    fn from_parts(re: Self::Part, im: Self::Part) -> Self;

    /// Exactly zero in exact mode; below [`FLOAT_ZERO_TOL`] in float mode.
    fn negligible(&self) -> bool;

    fn powi(&self, exp: i64) -> Self {
        let base = if exp < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc * base.clone();
        }
        acc
    }

    fn display(&self) -> String;
}

impl Coefficient for GaussianRational {
    type Part = ExactRational;
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        gaussian(crate::rational::int(n), Rational::zero())
    }

    fn inv(&self) -> Self {
        num_complex::Complex::inv(self)
    }

    fn conj(&self) -> Self {
        num_complex::Complex::conj(self)
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }

    fn parts(&self) -> (ExactRational, ExactRational) {
        (
            ExactRational(self.re.clone()),
            ExactRational(self.im.clone()),
        )
    }

    fn from_parts(re: ExactRational, im: ExactRational) -> Self {
        gaussian(re.0, im.0)
    }

    fn negligible(&self) -> bool {
        self.is_zero()
    }

    fn display(&self) -> String {
        format_gaussian(self)
    }
}

impl Coefficient for Complex64 {
    type Part = f64;
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn inv(&self) -> Self {
        Complex64::inv(self)
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn parts(&self) -> (f64, f64) {
        (self.re, self.im)
    }

    fn from_parts(re: f64, im: f64) -> Self {
        Complex64::new(re, im)
    }

    fn negligible(&self) -> bool {
        self.norm() < FLOAT_ZERO_TOL
    }

    fn powi(&self, exp: i64) -> Self {
        Complex64::powi(self, exp.to_i32().expect("exponent fits in i32"))
    }

    fn display(&self) -> String {
        format!("{:.12}{:+.12}i", self.re, self.im)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Term<C> {
    /// `r` in `T^(2π r)`.
    pub exponent: Rational,
    pub coefficient: C,
}

/// A finite Novikov sum, normalized: exponents strictly increasing and no
/// zero coefficients. The empty sum is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct NovikovElement<C> {
    terms: Vec<Term<C>>,
}

/// The T-adic valuation: smallest exponent, or `+∞` for zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(Rational),
    Infinity,
}

impl<C: Coefficient> NovikovElement<C> {
    pub fn zero() -> Self {
        NovikovElement { terms: Vec::new() }
    }

    /// `coefficient · T^(2π exponent)`.
    pub fn monomial(coefficient: C, exponent: Rational) -> Self {
        Self::from_terms([(exponent, coefficient)])
    }

    /// Builds a normalized element from unordered, possibly repeated terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, C)>) -> Self {
        let mut raw: Vec<(Rational, C)> = terms.into_iter().collect();
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<Term<C>> = Vec::with_capacity(raw.len());
        for (exponent, coefficient) in raw {
            match out.last_mut() {
                Some(last) if last.exponent == exponent => {
                    last.coefficient = last.coefficient.clone() + coefficient;
                }
                _ => out.push(Term {
                    exponent,
                    coefficient,
                }),
            }
        }
        out.retain(|t| !t.coefficient.is_zero());
        NovikovElement { terms: out }
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn valuation(&self) -> Valuation {
        self.terms.first().map_or(Valuation::Infinity, |t| {
            Valuation::Finite(t.exponent.clone())
        })
    }

    /// Coefficient of the lowest-order term.
    pub fn leading_coefficient(&self) -> Option<&C> {
        self.terms.first().map(|t| &t.coefficient)
    }

    /// Largest coefficient modulus, 0 for the zero element.
    pub fn max_magnitude(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coefficient.to_complex().norm())
            .fold(0.0, f64::max)
    }

    /// Every coefficient is [`Coefficient::negligible`].
    pub fn is_negligible(&self) -> bool {
        self.terms.iter().all(|t| t.coefficient.negligible())
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> NovikovElement<D> {
        NovikovElement::from_terms(
            self.terms
                .iter()
                .map(|t| (t.exponent.clone(), f(&t.coefficient))),
        )
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_coefficients(|a| a.clone() * c.clone())
    }

    pub fn conj(&self) -> Self {
        self.map_coefficients(C::conj)
    }

    /// Substitutes `T^(2π) = base`, giving `Σ a_k base^(r_k)`.
    pub fn convergent_eval(&self, base: f64) -> Complex64 {
        assert!(base > 0.0, "convergent evaluation needs a positive base");
        self.terms
            .iter()
            .map(|t| t.coefficient.to_complex() * base.powf(to_f64(&t.exponent)))
            .sum()
    }

    /// [`convergent_eval`](Self::convergent_eval) at `T^(2π) = e^{-1}`.
    pub fn convergent_eval_default(&self) -> Complex64 {
        self.convergent_eval((-1.0f64).exp())
    }
}

impl<C: Coefficient> Default for NovikovElement<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Add for &NovikovElement<C> {
    type Output = NovikovElement<C>;

    fn add(self, rhs: Self) -> NovikovElement<C> {
        // Merge of two sorted term lists.
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), rhs.terms.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match x.exponent.cmp(&y.exponent) {
                    Ordering::Less => a.next().cloned(),
                    Ordering::Greater => b.next().cloned(),
                    Ordering::Equal => {
                        let (x, y) = (a.next().unwrap(), b.next().unwrap());
                        Some(Term {
                            exponent: x.exponent.clone(),
                            coefficient: x.coefficient.clone() + y.coefficient.clone(),
                        })
                    }
                },
                (Some(_), None) => a.next().cloned(),
                (None, Some(_)) => b.next().cloned(),
                (None, None) => break,
            };
            if let Some(term) = next.filter(|t| !t.coefficient.is_zero()) {
                out.push(term);
            }
        }
        NovikovElement { terms: out }
    }
}

impl<C: Coefficient> Add for NovikovElement<C> {
    type Output = NovikovElement<C>;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Coefficient> Neg for &NovikovElement<C> {
    type Output = NovikovElement<C>;

    fn neg(self) -> NovikovElement<C> {
        NovikovElement {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponent: t.exponent.clone(),
                    coefficient: -t.coefficient.clone(),
                })
                .collect(),
        }
    }
}

impl<C: Coefficient> Neg for NovikovElement<C> {
    type Output = NovikovElement<C>;

    fn neg(self) -> Self {
        -&self
    }
}

impl<C: Coefficient> Sub for &NovikovElement<C> {
    type Output = NovikovElement<C>;

    fn sub(self, rhs: Self) -> NovikovElement<C> {
        self + &(-rhs)
    }
}

impl<C: Coefficient> Sub for NovikovElement<C> {
    type Output = NovikovElement<C>;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for &NovikovElement<C> {
    type Output = NovikovElement<C>;

    fn mul(self, rhs: Self) -> NovikovElement<C> {
        NovikovElement::from_terms(self.terms.iter().flat_map(|x| {
            rhs.terms.iter().map(move |y| {
                (
                    &x.exponent + &y.exponent,
                    x.coefficient.clone() * y.coefficient.clone(),
                )
            })
        }))
    }
}

impl<C: Coefficient> Mul for NovikovElement<C> {
    type Output = NovikovElement<C>;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Coefficient> fmt::Display for NovikovElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})·T^(2π·{})", t.coefficient.display(), t.exponent)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord<P> {
    exp: ExactRational,
    re: P,
    im: P,
}

impl<C: Coefficient> Serialize for NovikovElement<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|t| {
            let (re, im) = t.coefficient.parts();
            TermRecord {
                exp: ExactRational(t.exponent.clone()),
                re,
                im,
            }
        }))
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for NovikovElement<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord<C::Part>>::deserialize(d)?;
        Ok(Self::from_terms(
            records
                .into_iter()
                .map(|r| (r.exp.0, C::from_parts(r.re, r.im))),
        ))
    }
}
