//! Krawtchouk polynomials and the coefficient form of the MacWilliams transform.
//!
//! `K_k(x) = sum_j (-1)^j (q-1)^(k-j) C(x, j) C(n-x, k-j)` evaluated exactly at
//! integer points. The coefficient transform `A'_k = (1/s) sum_j A_j K_k(j)`
//! is computed independently of [`HomoPoly::substitute_transform`], so the two
//! serve as cross-checks of one another.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::homopoly::HomoPoly;

/// Largest `n` accepted by [`orthogonality_check`].
pub const ORTHOGONALITY_MAX_N: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KrawtchoukParams {
    n: u32,
    q: u64,
}

impl KrawtchoukParams {
    /// `q >= 2`. The identities only need `q` to be an integer, so `q` is not
    /// required to be a prime power.
    pub fn new(n: u32, q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::OutOfRange(format!("alphabet size q = {q} must be at least 2")));
        }
        Ok(KrawtchoukParams { n, q })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// `K_k(x)` for integer `0 <= k, x <= n`.
pub fn krawtchouk(k: u32, x: u32, params: KrawtchoukParams) -> Result<BigInt> {
    let n = params.n;
    if k > n || x > n {
        return Err(Error::OutOfRange(format!("K_{k}({x}) needs k, x <= n = {n}")));
    }
    let q1 = BigInt::from(params.q - 1);
    let (k, x, n) = (k as i64, x as i64, n as i64);
    let mut sum = BigInt::zero();
    for j in 0..=k {
        let term = Pow::pow(&q1, (k - j) as u32) * binomial(x, j) * binomial(n - x, k - j);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// `matrix[k][j] = K_k(j)`.
pub fn krawtchouk_matrix(params: KrawtchoukParams) -> Vec<Vec<BigInt>> {
    (0..=params.n)
        .map(|k| {
            (0..=params.n)
                .map(|j| krawtchouk(k, j, params).expect("indices within 0..=n"))
                .collect()
        })
        .collect()
}

/// Checks `sum_l K_k(l) K_l(j) = q^n [k == j]` for every `0 <= k, j <= n`.
pub fn orthogonality_check(params: KrawtchoukParams) -> Result<bool> {
    if params.n > ORTHOGONALITY_MAX_N {
        return Err(Error::BudgetExceeded {
            needed: format!("n = {}", params.n),
            budget: ORTHOGONALITY_MAX_N as u64,
        });
    }
    let matrix = krawtchouk_matrix(params);
    let qn = Pow::pow(&BigInt::from(params.q), params.n);
    let size = params.n as usize + 1;
    for k in 0..size {
        for j in 0..size {
            let sum = (0..size).fold(BigInt::zero(), |acc, l| acc + &matrix[k][l] * &matrix[l][j]);
            let expected = if k == j { qn.clone() } else { BigInt::zero() };
            if sum != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `A'_k = (1/size) sum_j A_j K_k(j)` over rational input.
pub fn coefficient_transform_rational(
    dist: &[BigRational],
    params: KrawtchoukParams,
    size: u64,
) -> Result<Vec<BigRational>> {
    let expected = params.n as usize + 1;
    if dist.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: dist.len(),
        });
    }
    if size == 0 {
        return Err(Error::OutOfRange("transform size must be positive".into()));
    }
    let matrix = krawtchouk_matrix(params);
    let scale = BigRational::from_integer(BigInt::from(size));
    Ok(matrix
        .iter()
        .map(|row| {
            let sum = row
                .iter()
                .zip(dist)
                .fold(BigRational::zero(), |acc, (kv, a)| acc + a * BigRational::from_integer(kv.clone()));
            sum / &scale
        })
        .collect())
}

/// Integer-input form of [`coefficient_transform_rational`].
pub fn coefficient_transform(dist: &[BigInt], params: KrawtchoukParams, size: u64) -> Result<Vec<BigRational>> {
    let rational: Vec<BigRational> = dist.iter().cloned().map(BigRational::from_integer).collect();
    coefficient_transform_rational(&rational, params, size)
}

/// Whether the Krawtchouk route and the substitution route give the same
/// coefficients. Expected to be true for every valid input.
pub fn transforms_agree(dist: &[BigInt], params: KrawtchoukParams, size: u64) -> Result<bool> {
    let by_kernel = coefficient_transform(dist, params, size)?;
    let by_substitution = HomoPoly::from_integers(dist)
        .substitute_transform(params.q, size);
    Ok(by_kernel.as_slice() == by_substitution.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, q: u64) -> KrawtchoukParams {
        KrawtchoukParams::new(n, q).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn values() {
        let p = params(2, 2);
        for x in 0..=2 {
            assert_eq!(krawtchouk(0, x, p).unwrap(), BigInt::one());
        }
        assert_eq!(krawtchouk(1, 0, p).unwrap(), BigInt::from(2));
        assert_eq!(krawtchouk(1, 1, p).unwrap(), BigInt::from(0));
        assert_eq!(krawtchouk(1, 2, p).unwrap(), BigInt::from(-2));
        assert_eq!(krawtchouk(2, 0, params(2, 3)).unwrap(), BigInt::from(4));
        assert!(matches!(krawtchouk(3, 0, p), Err(Error::OutOfRange(_))));
        assert!(matches!(krawtchouk(0, 3, p), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn value_at_zero() {
        for q in 2..=5u64 {
            for n in 0..=10 {
                let p = params(n, q);
                for k in 0..=n {
                    let expected = Pow::pow(&BigInt::from(q - 1), k) * binomial(n as i64, k as i64);
                    assert_eq!(krawtchouk(k, 0, p).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn orthogonality() {
        assert_eq!(krawtchouk_matrix(params(1, 2)), vec![ints(&[1, 1]), ints(&[1, -1])]);
        assert!(orthogonality_check(params(1, 2)).unwrap());
        assert!(orthogonality_check(params(2, 3)).unwrap());
        assert!(orthogonality_check(params(8, 2)).unwrap());
        for q in 2..=5 {
            for n in 0..=10 {
                assert!(orthogonality_check(params(n, q)).unwrap(), "q={q} n={n}");
            }
        }
        assert!(matches!(orthogonality_check(params(65, 2)), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn transform_examples() {
        let zero_code = coefficient_transform(&ints(&[1, 0, 0, 0]), params(3, 3), 1).unwrap();
        assert_eq!(zero_code, rats(&[1, 6, 12, 8]));
        let a = coefficient_transform(&ints(&[1, 0, 1]), params(2, 2), 2).unwrap();
        assert_eq!(a, rats(&[1, 0, 1]));
        let a = coefficient_transform(&ints(&[1, 0, 0, 1]), params(3, 2), 2).unwrap();
        assert_eq!(a, rats(&[1, 0, 3, 0]));
        assert!(matches!(
            coefficient_transform(&ints(&[1, 0]), params(2, 2), 1),
            Err(Error::LengthMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn agreement_examples() {
        assert!(transforms_agree(&ints(&[1, 0, 1]), params(2, 2), 2).unwrap());
        assert!(transforms_agree(&ints(&[1, 0, 0, 1]), params(3, 2), 2).unwrap());
        assert!(transforms_agree(&ints(&[1, 0, 0, 0]), params(3, 3), 1).unwrap());
        for q in 2..=4 {
            for n in 0..=6 {
                let mut d = vec![BigInt::zero(); n as usize + 1];
                d[0] = BigInt::one();
                assert!(transforms_agree(&d, params(n, q), 1).unwrap());
            }
        }
    }

    #[test]
    fn rejects_small_alphabet() {
        assert!(KrawtchoukParams::new(3, 1).is_err());
    }
}
