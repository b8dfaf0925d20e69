//! Toll polynomials `P(x, y) = sum b_{r,t} x^r y^t` and recurrence instances.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::arith::rational::{format_rational, parse_rational, pow, Rational};
use crate::error::{Error, Result};

/// Sparse bivariate polynomial keyed by `(r, t)`; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TollPolynomial {
    coeffs: BTreeMap<(u32, u32), Rational>,
}

impl TollPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(r: u32, t: u32, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(r, t, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((r, t), c) in terms {
            p.add_term(r, t, c);
        }
        p
    }

    pub fn add_term(&mut self, r: u32, t: u32, c: Rational) {
        let e = self.coeffs.entry((r, t)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(r, t));
        }
    }

    pub fn coeff(&self, r: u32, t: u32) -> Rational {
        self.coeffs.get(&(r, t)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.coeffs.iter().map(|(&(r, t), c)| (r, t, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(&k, v)| (k, v * c)))
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, (&(r, t), c)| {
            acc + c * pow(x, r as u64) * pow(y, t as u64)
        })
    }
}

/// Parses `r,t:coeff;r,t:coeff;...`. Repeated monomials are summed; the
/// empty string is the zero polynomial.
impl FromStr for TollPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Self::zero();
        if s.trim().is_empty() {
            return Ok(p);
        }
        for token in s.split(';') {
            let bad = || Error::ParsePolynomial(token.to_string());
            let (exps, coeff) = token.split_once(':').ok_or_else(bad)?;
            let (r, t) = exps.split_once(',').ok_or_else(bad)?;
            let r: u32 = r.trim().parse().map_err(|_| bad())?;
            let t: u32 = t.trim().parse().map_err(|_| bad())?;
            let c = parse_rational(coeff.trim()).map_err(|_| bad())?;
            p.add_term(r, t, c);
        }
        Ok(p)
    }
}

impl fmt::Display for TollPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&(r, t), c)| format!("{r},{t}:{}", format_rational(c)))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

/// `x_n = a x_{ceil(n/2)} + a x_{floor(n/2)} + P(ceil(n/2), floor(n/2))`, `x_1` given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    pub a: Rational,
    pub poly: TollPolynomial,
    pub x1: Rational,
}

impl Recurrence {
    pub fn new(a: Rational, poly: TollPolynomial, x1: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        Ok(Self { a, poly, x1 })
    }
}
