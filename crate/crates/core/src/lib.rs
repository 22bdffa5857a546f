//! Exact weight enumerators of linear codes over `Z_l` and MacWilliams-type
//! identities for the Lee and Euclidean weights.
//!
//! ```
//! use mwl::{check_identity, IdentityQuery, LinearCode, Status, WeightKind};
//!
//! // {0, 3} in Z_6: the Lee identity with multiplier 2 fails by x y^2.
//! let code = LinearCode::from_rows(6, 1, &[&[3]]).unwrap();
//! let verdict = check_identity(&IdentityQuery::new(code, WeightKind::Lee, 2).unwrap()).unwrap();
//! assert_eq!(verdict.status, Status::Fails);
//! assert_eq!(verdict.discrepancy.unwrap().to_string(), "deg 3; 2:1");
//! ```
//!
//! The guide in `book/` walks through each module; its Rust snippets are
//! compiled and run as doc-tests of this crate.

pub mod arith;
pub mod cli;
mod error;
pub mod gray;
pub mod homopoly;
pub mod identity;
pub mod krawtchouk;
pub mod weight_enum;
pub mod zmod_codes;

pub use error::{Error, Result};
pub use gray::{canonical_gray_map, make_field, FieldSpec, GrayMap};
pub use homopoly::HomoPoly;
pub use identity::{
    check_identity, check_shiromoto_form, existence_condition, scan_existence, search_counterexample,
    structural_verdict, verify_lee_conditions, ConditionReport, IdentityQuery, IdentityVerdict, Reason,
    Status,
};
pub use krawtchouk::{coefficient_transform, krawtchouk, orthogonality_check, transforms_agree, KrawtchoukParams};
pub use weight_enum::{
    euclidean_weight, lee_weight, vector_weight, weight_enumerator, WeightDistribution, WeightKind,
};
pub use zmod_codes::{all_linear_codes, LinearCode, Modulus, RingVector};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/codes.md")]
    mod codes {}
    #[doc = include_str!("../../../book/src/transform.md")]
    mod transform {}
    #[doc = include_str!("../../../book/src/krawtchouk.md")]
    mod krawtchouk {}
    #[doc = include_str!("../../../book/src/gray.md")]
    mod gray {}
    #[doc = include_str!("../../../book/src/identity.md")]
    mod identity {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
