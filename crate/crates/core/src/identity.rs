//! Deciding, verifying and refuting MacWilliams-type identities for the Lee
//! and Euclidean weights.
//!
//! The identity under test, for a code `C` over `Z_l`, weight kind `W` and an
//! integer multiplier `t`, is
//!
//! ```text
//! W_{C-dual}(x, y) = (1/|C|) W_C(x + (t-1) y, x - y)
//! ```
//!
//! where `W` has degree `l1 * n` (Lee, `l1 = floor(l/2)`) or `l2 * n`
//! (Euclidean, `l2 = l1^2`). A weight-preserving bijection onto `F_t^(l1 n)`
//! can only exist when `t^l1 = l` (resp. `t^l2 = l`), which leaves
//! `l in {2, 3, 4}` for Lee and `l in {2, 3}` for Euclidean.

use std::fmt;

use crate::arith::{exact_root, is_prime_power};
use crate::error::{Error, Result};
use crate::gray::{canonical_gray_map, make_field, GrayMap};
use crate::homopoly::HomoPoly;
use crate::weight_enum::{weight_enumerator, WeightKind};
use crate::zmod_codes::{all_linear_codes, LinearCode, Modulus};

/// A code, a weight kind (Lee or Euclidean) and the multiplier `t >= 2`.
#[derive(Debug, Clone)]
pub struct IdentityQuery {
    code: LinearCode,
    kind: WeightKind,
    multiplier: u64,
}

impl IdentityQuery {
    pub fn new(code: LinearCode, kind: WeightKind, multiplier: u64) -> Result<Self> {
        if kind == WeightKind::Hamming {
            return Err(Error::HammingNotAllowed);
        }
        if multiplier < 2 {
            return Err(Error::OutOfRange(format!("multiplier {multiplier} must be at least 2")));
        }
        Ok(IdentityQuery {
            code,
            kind,
            multiplier,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    StructurallyImpossible,
    NotWellFormed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    /// The claimed multiplier `l^(1/l1)` (or `l^(1/l2)`) is not an integer.
    MultiplierNotIntegral,
    /// `t^l1 != l` (or `t^l2 != l`): no weight-preserving bijection exists.
    NoBijectiveGrayMap,
    /// The transformed enumerator is not a nonnegative integer polynomial with
    /// leading coefficient 1, so no code can have it as its enumerator.
    TransformNotEnumerator,
    /// Both sides were computed and compared exactly.
    Verified,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub status: Status,
    pub reason: Reason,
    /// `transform - dual enumerator`; present exactly when `status` is `Fails`.
    pub discrepancy: Option<HomoPoly>,
}

impl IdentityVerdict {
    fn without_discrepancy(status: Status, reason: Reason) -> Self {
        IdentityVerdict {
            status,
            reason,
            discrepancy: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }
}

/// `verdict=<status> reason=<code> discrepancy=<poly-or-none>`
impl fmt::Display for IdentityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verdict={} reason={} discrepancy=", self.status, self.reason)?;
        match &self.discrepancy {
            Some(p) => write!(f, "{p}"),
            None => f.write_str("none"),
        }
    }
}

fn exponent(modulus: Modulus, kind: WeightKind) -> u64 {
    kind.scale(modulus)
}

/// The multiplier `t > 1` with `t^l1 = l` (Lee) or `t^l2 = l` (Euclidean), if
/// one exists. Such a `t` automatically divides `l`; it must also be a prime
/// power to index a field. For Hamming weight the exponent is 1 and the
/// answer is `l` itself whether or not it is a prime power, since the Hamming
/// identity over `Z_l` holds with `t = l` for every `l`.
pub fn existence_condition(modulus: Modulus, kind: WeightKind) -> Option<u64> {
    let ell = modulus.ell() as u64;
    if kind == WeightKind::Hamming {
        return Some(ell);
    }
    exact_root(ell, exponent(modulus, kind)).filter(|&t| t > 1 && is_prime_power(t))
}

/// `Some(StructurallyImpossible)` when `(l, kind, t)` fails the existence
/// condition, `None` when the identity is at least structurally possible.
pub fn structural_verdict(modulus: Modulus, kind: WeightKind, multiplier: u64) -> Option<IdentityVerdict> {
    (existence_condition(modulus, kind) != Some(multiplier)).then(|| {
        IdentityVerdict::without_discrepancy(Status::StructurallyImpossible, Reason::NoBijectiveGrayMap)
    })
}

/// Enumerator of the dual and the transformed enumerator of the code.
fn both_sides(code: &LinearCode, kind: WeightKind, multiplier: u64) -> Result<(HomoPoly, HomoPoly)> {
    let size = code.cardinality()?;
    let dual = weight_enumerator(&code.dual()?, kind)?;
    let transformed = weight_enumerator(code, kind)?.substitute_transform(multiplier, size);
    Ok((dual, transformed))
}

fn looks_like_enumerator(p: &HomoPoly) -> bool {
    p.is_nonneg_integer() && p.coeff(0) == num_rational::BigRational::from_integer(1.into())
}

/// Computes both sides of the identity and compares them exactly.
///
/// A failing verdict carries `transform - dual enumerator`. Its reason is
/// `TransformNotEnumerator` when the transform cannot be any code's weight
/// enumerator, `Verified` otherwise.
pub fn check_identity(query: &IdentityQuery) -> Result<IdentityVerdict> {
    let (dual, transformed) = both_sides(&query.code, query.kind, query.multiplier)?;
    if dual == transformed {
        return Ok(IdentityVerdict::without_discrepancy(Status::Holds, Reason::Verified));
    }
    let reason = if looks_like_enumerator(&transformed) {
        Reason::Verified
    } else {
        Reason::TransformNotEnumerator
    };
    Ok(IdentityVerdict {
        status: Status::Fails,
        reason,
        discrepancy: Some(transformed.checked_sub(&dual)?),
    })
}

/// The identity with the multiplier `l^(1/l1)` (Lee) or `l^(1/l2)`
/// (Euclidean). When that root is irrational the identity has no exact
/// meaning and the verdict is `NotWellFormed`.
pub fn check_shiromoto_form(code: &LinearCode, kind: WeightKind) -> Result<IdentityVerdict> {
    if kind == WeightKind::Hamming {
        return Err(Error::HammingNotAllowed);
    }
    let modulus = code.modulus();
    match exact_root(modulus.ell() as u64, exponent(modulus, kind)) {
        Some(t) if t >= 2 => check_identity(&IdentityQuery::new(code.clone(), kind, t)?),
        _ => Ok(IdentityVerdict::without_discrepancy(
            Status::NotWellFormed,
            Reason::MultiplierNotIntegral,
        )),
    }
}

/// Every `(l, t)` with `2 <= l <= max_ell` that satisfies the existence
/// condition.
pub fn scan_existence(kind: WeightKind, max_ell: u32) -> Vec<(u32, u64)> {
    (2..=max_ell)
        .filter_map(|ell| {
            let modulus = Modulus::new(ell).expect("ell >= 2");
            existence_condition(modulus, kind).map(|t| (ell, t))
        })
        .collect()
}

/// The first code (lengths `1..=max_length`, canonical order within a length)
/// for which the identity fails, with its discrepancy.
pub fn search_counterexample(
    modulus: Modulus,
    kind: WeightKind,
    multiplier: u64,
    max_length: usize,
) -> Result<Option<(LinearCode, HomoPoly)>> {
    for n in 1..=max_length {
        for code in all_linear_codes(modulus, n)? {
            let verdict = check_identity(&IdentityQuery::new(code.clone(), kind, multiplier)?)?;
            if let Some(discrepancy) = verdict.discrepancy {
                return Ok(Some((code, discrepancy)));
            }
        }
    }
    Ok(None)
}

/// Which of the transfer conditions hold for one code and multiplier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionReport {
    /// A weight-preserving bijection onto `F_t^(scale n)` exists.
    pub bijective_gray: bool,
    /// The transformed enumerator is a nonnegative integer polynomial with
    /// leading coefficient 1.
    pub transform_is_enumerator: bool,
    /// The transformed enumerator equals the dual's enumerator.
    pub dual_match: bool,
}

/// Lee-weight conditions using the canonical Gray map over `GF(t)`.
pub fn verify_lee_conditions(code: &LinearCode, multiplier: u64) -> Result<ConditionReport> {
    let map = make_field(multiplier)
        .ok()
        .map(|field| canonical_gray_map(code.modulus(), field));
    conditions(code, WeightKind::Lee, multiplier, map.as_ref())
}

/// Lee-weight conditions with a caller-supplied Gray map; its field order is
/// the multiplier.
pub fn verify_conditions_with_map(code: &LinearCode, map: &GrayMap) -> Result<ConditionReport> {
    if map.modulus() != code.modulus() {
        return Err(Error::ModulusMismatch {
            expected: code.modulus().ell(),
            found: map.modulus().ell(),
        });
    }
    conditions(code, WeightKind::Lee, map.field().order() as u64, Some(map))
}

/// Euclidean analogue. No explicit map is built; bijectivity is the
/// cardinality condition `t^l2 = l`.
pub fn verify_euclidean_conditions(code: &LinearCode, multiplier: u64) -> Result<ConditionReport> {
    conditions(code, WeightKind::Euclidean, multiplier, None)
}

fn conditions(
    code: &LinearCode,
    kind: WeightKind,
    multiplier: u64,
    map: Option<&GrayMap>,
) -> Result<ConditionReport> {
    let bijective_gray = match (kind, map) {
        (WeightKind::Lee, Some(map)) => map.is_weight_preserving() && map.is_bijective_extension(),
        (WeightKind::Lee, None) => false,
        _ => existence_condition(code.modulus(), kind) == Some(multiplier),
    };
    let (dual, transformed) = both_sides(code, kind, multiplier)?;
    Ok(ConditionReport {
        bijective_gray,
        transform_is_enumerator: looks_like_enumerator(&transformed),
        dual_match: dual == transformed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(ell: u32) -> Modulus {
        Modulus::new(ell).unwrap()
    }

    fn code(ell: u32, n: usize, rows: &[&[i64]]) -> LinearCode {
        LinearCode::from_rows(ell, n, rows).unwrap()
    }

    fn poly(text: &str) -> HomoPoly {
        text.parse().unwrap()
    }

    #[test]
    fn existence_examples() {
        assert_eq!(existence_condition(md(4), WeightKind::Lee), Some(2));
        assert_eq!(existence_condition(md(6), WeightKind::Lee), None);
        assert_eq!(existence_condition(md(4), WeightKind::Euclidean), None);
        assert_eq!(existence_condition(md(3), WeightKind::Euclidean), Some(3));
        assert_eq!(existence_condition(md(5), WeightKind::Lee), None);
        assert_eq!(existence_condition(md(6), WeightKind::Hamming), Some(6));
    }

    #[test]
    fn query_validation() {
        let c = code(4, 1, &[&[2]]);
        assert_eq!(
            IdentityQuery::new(c.clone(), WeightKind::Hamming, 2).unwrap_err(),
            Error::HammingNotAllowed
        );
        assert!(IdentityQuery::new(c, WeightKind::Lee, 1).is_err());
    }

    #[test]
    fn check_examples() {
        let q = IdentityQuery::new(code(4, 1, &[&[2]]), WeightKind::Lee, 2).unwrap();
        let v = check_identity(&q).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.discrepancy, None);

        let q = IdentityQuery::new(code(6, 1, &[&[3]]), WeightKind::Lee, 2).unwrap();
        let v = check_identity(&q).unwrap();
        assert_eq!(v.status, Status::Fails);
        assert_eq!(v.reason, Reason::Verified);
        assert_eq!(v.discrepancy, Some(poly("deg 3; 2:1")));

        let q = IdentityQuery::new(code(4, 1, &[&[2]]), WeightKind::Euclidean, 2).unwrap();
        let v = check_identity(&q).unwrap();
        assert_eq!(v.status, Status::Fails);
        assert_eq!(v.discrepancy, Some(poly("deg 4; 2:6")));
    }

    #[test]
    fn non_integer_transform_reason() {
        let q = IdentityQuery::new(code(6, 1, &[&[3]]), WeightKind::Lee, 3).unwrap();
        let v = check_identity(&q).unwrap();
        assert_eq!(v.status, Status::Fails);
        assert_eq!(v.reason, Reason::TransformNotEnumerator);
    }

    #[test]
    fn verdict_line() {
        let q = IdentityQuery::new(code(6, 1, &[&[3]]), WeightKind::Lee, 2).unwrap();
        assert_eq!(
            check_identity(&q).unwrap().to_string(),
            "verdict=Fails reason=Verified discrepancy=deg 3; 2:1"
        );
        let q = IdentityQuery::new(code(4, 1, &[&[2]]), WeightKind::Lee, 2).unwrap();
        assert_eq!(
            check_identity(&q).unwrap().to_string(),
            "verdict=Holds reason=Verified discrepancy=none"
        );
    }

    #[test]
    fn shiromoto_examples() {
        let v = check_shiromoto_form(&code(4, 1, &[&[2]]), WeightKind::Lee).unwrap();
        assert_eq!(v.status, Status::Holds);
        let v = check_shiromoto_form(&code(6, 1, &[&[3]]), WeightKind::Lee).unwrap();
        assert_eq!((v.status, v.reason), (Status::NotWellFormed, Reason::MultiplierNotIntegral));
        let v = check_shiromoto_form(&code(4, 1, &[&[2]]), WeightKind::Euclidean).unwrap();
        assert_eq!(v.status, Status::NotWellFormed);
        for kind in [WeightKind::Lee, WeightKind::Euclidean] {
            for c in all_linear_codes(md(2), 3).unwrap() {
                assert!(check_shiromoto_form(&c, kind).unwrap().holds());
            }
        }
        assert!(check_shiromoto_form(&code(2, 1, &[&[1]]), WeightKind::Hamming).is_err());
    }

    #[test]
    fn structural() {
        assert_eq!(structural_verdict(md(4), WeightKind::Lee, 2), None);
        let v = structural_verdict(md(6), WeightKind::Lee, 2).unwrap();
        assert_eq!((v.status, v.reason), (Status::StructurallyImpossible, Reason::NoBijectiveGrayMap));
        assert!(structural_verdict(md(4), WeightKind::Lee, 4).is_some());
    }

    #[test]
    fn scan_small() {
        assert_eq!(scan_existence(WeightKind::Lee, 2), vec![(2, 2)]);
        assert_eq!(scan_existence(WeightKind::Lee, 100), vec![(2, 2), (3, 3), (4, 2)]);
        assert_eq!(scan_existence(WeightKind::Euclidean, 100), vec![(2, 2), (3, 3)]);
    }

    #[test]
    fn search_examples() {
        // Zero code is first in canonical order and already fails over Z6.
        let (c, d) = search_counterexample(md(6), WeightKind::Lee, 2, 1).unwrap().unwrap();
        assert_eq!(c.cardinality().unwrap(), 1);
        assert_eq!(d, poly("deg 3; 1:1 2:1"));
        assert!(search_counterexample(md(4), WeightKind::Lee, 2, 3).unwrap().is_none());
        assert!(search_counterexample(md(2), WeightKind::Lee, 2, 3).unwrap().is_none());
    }

    #[test]
    fn condition_reports() {
        let r = verify_lee_conditions(&code(4, 1, &[&[2]]), 2).unwrap();
        assert_eq!((r.bijective_gray, r.transform_is_enumerator, r.dual_match), (true, true, true));
        let r = verify_lee_conditions(&code(6, 1, &[&[3]]), 2).unwrap();
        assert_eq!((r.bijective_gray, r.transform_is_enumerator, r.dual_match), (false, true, false));
        let r = verify_lee_conditions(&code(6, 1, &[&[3]]), 3).unwrap();
        assert_eq!((r.bijective_gray, r.transform_is_enumerator, r.dual_match), (false, false, false));
        let r = verify_euclidean_conditions(&code(3, 2, &[&[1, 2]]), 3).unwrap();
        assert_eq!((r.bijective_gray, r.transform_is_enumerator, r.dual_match), (true, true, true));
    }

    #[test]
    fn custom_map_conditions() {
        let field = make_field(2).unwrap();
        let swapped = GrayMap::from_rows(md(4), field, vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
        let r = verify_conditions_with_map(&code(4, 2, &[&[1, 1]]), &swapped).unwrap();
        assert!(r.bijective_gray && r.dual_match);
    }
}
