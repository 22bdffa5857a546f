//! Homogeneous bivariate polynomials with exact rational coefficients.
//!
//! A [`HomoPoly`] of degree `D` stores `c_0 .. c_D` and stands for
//! `sum_i c_i x^(D-i) y^i`, the shape of every weight enumerator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomoPoly {
    coeffs: Vec<BigRational>,
}

impl HomoPoly {
    /// Builds a polynomial from `c_0 .. c_D`.
    ///
    /// # Panics
    /// If `coeffs` is empty (a degree needs at least one coefficient).
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a homogeneous polynomial needs degree + 1 coefficients");
        HomoPoly { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        HomoPoly {
            coeffs: vec![BigRational::zero(); degree + 1],
        }
    }

    /// Integer coefficients, `c_i` multiplying `x^(D-i) y^i`.
    pub fn from_integers<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        HomoPoly::new(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone().into()))
                .collect(),
        )
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^(D-i) y^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Value at `x = y = 1`, i.e. the coefficient sum.
    pub fn eval_at_ones(&self) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// True iff every coefficient is a nonnegative integer.
    pub fn is_nonneg_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn checked_add(&self, other: &HomoPoly) -> Result<HomoPoly> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Coefficient-wise `self - other`.
    pub fn checked_sub(&self, other: &HomoPoly) -> Result<HomoPoly> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &HomoPoly,
        op: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<HomoPoly> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(HomoPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| op(a, b))
                .collect(),
        })
    }

    /// `(1/scale) * p(x + (multiplier-1) y, x - y)`, expanded exactly.
    ///
    /// # Panics
    /// If `scale` is zero.
    pub fn substitute_transform(&self, multiplier: u64, scale: u64) -> HomoPoly {
        assert!(scale > 0, "transform scale must be positive");
        let d = self.degree();
        // Dehomogenise at x = 1: x + (t-1)y -> 1 + (t-1)y, x - y -> 1 - y.
        let lifted = BigInt::from(multiplier) - 1;
        let plus = powers(&[BigInt::one(), lifted], d);
        let minus = powers(&[BigInt::one(), -BigInt::one()], d);

        let mut acc = vec![BigRational::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = convolve(&plus[d - i], &minus[i]);
            for (slot, t) in acc.iter_mut().zip(term) {
                *slot += c * BigRational::from_integer(t);
            }
        }
        let scale = BigRational::from_integer(BigInt::from(scale));
        HomoPoly {
            coeffs: acc.into_iter().map(|c| c / &scale).collect(),
        }
    }
}

/// `base^0 .. base^max` for a univariate integer polynomial in `y`.
fn powers(base: &[BigInt], max: usize) -> Vec<Vec<BigInt>> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(vec![BigInt::one()]);
    for k in 1..=max {
        let next = convolve(&out[k - 1], base);
        out.push(next);
    }
    out
}

fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Text form `deg D; i:c ...`, nonzero coefficients only, `i` the power of `y`.
impl fmt::Display for HomoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "deg {};", self.degree())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write!(f, " {i}:")?;
            write_rational(f, c)?;
        }
        Ok(())
    }
}

fn parse_rational(token: &str) -> Option<BigRational> {
    match token.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => token.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

impl FromStr for HomoPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: String| Error::Parse { line: 1, msg };
        let (head, body) = s
            .trim()
            .split_once(';')
            .ok_or_else(|| err("expected `deg D;` header".into()))?;
        let degree: usize = head
            .trim()
            .strip_prefix("deg")
            .and_then(|d| d.trim().parse().ok())
            .ok_or_else(|| err(format!("bad degree header {head:?}")))?;
        let mut poly = HomoPoly::zero(degree);
        for term in body.split_whitespace() {
            let (idx, value) = term
                .split_once(':')
                .ok_or_else(|| err(format!("bad term {term:?}")))?;
            let idx: usize = idx
                .parse()
                .map_err(|_| err(format!("bad index in {term:?}")))?;
            if idx > degree {
                return Err(err(format!("index {idx} exceeds degree {degree}")));
            }
            let value = parse_rational(value).ok_or_else(|| err(format!("bad coefficient in {term:?}")))?;
            poly.coeffs[idx] += value;
        }
        Ok(poly)
    }
}
