//! Hamming, Lee and Euclidean weights and the weight enumerators built on them.

use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homopoly::HomoPoly;
use crate::zmod_codes::{LinearCode, Modulus, RingVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    Hamming,
    Lee,
    Euclidean,
}

impl WeightKind {
    /// Largest weight of one coordinate: `1`, `floor(l/2)` or `floor(l/2)^2`.
    pub fn scale(self, modulus: Modulus) -> u64 {
        match self {
            WeightKind::Hamming => 1,
            WeightKind::Lee => modulus.lee_max() as u64,
            WeightKind::Euclidean => modulus.euclidean_max(),
        }
    }

    /// Weight of a single residue `a` in `0..l`.
    pub fn symbol_weight(self, a: u32, modulus: Modulus) -> u64 {
        match self {
            WeightKind::Hamming => u64::from(a != 0),
            WeightKind::Lee => lee_weight(a, modulus) as u64,
            WeightKind::Euclidean => euclidean_weight(a, modulus),
        }
    }

    fn table(self, modulus: Modulus) -> Vec<u64> {
        (0..modulus.ell())
            .map(|a| self.symbol_weight(a, modulus))
            .collect()
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightKind::Hamming => "hamming",
            WeightKind::Lee => "lee",
            WeightKind::Euclidean => "euclidean",
        })
    }
}

impl FromStr for WeightKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hamming" => Ok(WeightKind::Hamming),
            "lee" => Ok(WeightKind::Lee),
            "euclidean" => Ok(WeightKind::Euclidean),
            other => Err(Error::OutOfRange(format!("unknown weight kind {other:?}"))),
        }
    }
}

/// `min(a, l - a)`.
pub fn lee_weight(a: u32, modulus: Modulus) -> u32 {
    let a = a % modulus.ell();
    a.min(modulus.ell() - a)
}

/// Square of the Lee weight.
pub fn euclidean_weight(a: u32, modulus: Modulus) -> u64 {
    let w = lee_weight(a, modulus) as u64;
    w * w
}

pub fn vector_weight(v: &RingVector, kind: WeightKind) -> u64 {
    v.entries()
        .iter()
        .map(|&a| kind.symbol_weight(a, v.modulus()))
        .sum()
}

/// Codeword counts per weight, `counts[i]` = number of codewords of weight `i`,
/// for `i` in `0 ..= scale * n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    kind: WeightKind,
    modulus: Modulus,
    length: usize,
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn of_code(code: &LinearCode, kind: WeightKind) -> Result<Self> {
        let space = code.space()?;
        let modulus = code.modulus();
        let degree = kind.scale(modulus) as usize * code.length();
        let table = kind.table(modulus);
        let words = code.packed_words()?;

        let counts = words
            .par_iter()
            .fold(
                || (vec![0u64; degree + 1], vec![0u32; code.length()]),
                |(mut counts, mut digits), &w| {
                    space.unpack_into(w, &mut digits);
                    let weight: usize = digits.iter().map(|&a| table[a as usize] as usize).sum();
                    counts[weight] += 1;
                    (counts, digits)
                },
            )
            .map(|(counts, _)| counts)
            .reduce(
                || vec![0u64; degree + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );

        Ok(WeightDistribution {
            kind,
            modulus,
            length: code.length(),
            counts,
        })
    }

    /// Reads a distribution back from an enumerator; every coefficient must be
    /// a nonnegative integer and the degree must be `scale * n`.
    pub fn from_poly(kind: WeightKind, modulus: Modulus, length: usize, poly: &HomoPoly) -> Result<Self> {
        let degree = kind.scale(modulus) as usize * length;
        if poly.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: poly.degree(),
                right: degree,
            });
        }
        let counts = poly
            .is_nonneg_integer()
            .then(|| {
                poly.coeffs()
                    .iter()
                    .map(|c| c.to_integer().to_u64())
                    .collect::<Option<Vec<_>>>()
            })
            .flatten()
            .ok_or_else(|| Error::OutOfRange("coefficients are not nonnegative integers".into()))?;
        Ok(WeightDistribution {
            kind,
            modulus,
            length,
            counts,
        })
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn to_poly(&self) -> HomoPoly {
        HomoPoly::from_integers(&self.counts)
    }
}

/// `sum_{c in C} x^(scale*n - wt(c)) y^wt(c)`.
pub fn weight_enumerator(code: &LinearCode, kind: WeightKind) -> Result<HomoPoly> {
    Ok(WeightDistribution::of_code(code, kind)?.to_poly())
}
