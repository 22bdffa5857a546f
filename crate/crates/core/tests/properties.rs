use mwl::identity::verify_euclidean_conditions;
use mwl::krawtchouk::coefficient_transform_rational;
use mwl::{
    all_linear_codes, canonical_gray_map, check_identity, existence_condition, lee_weight, make_field,
    search_counterexample, transforms_agree, verify_lee_conditions, weight_enumerator, HomoPoly, IdentityQuery,
    KrawtchoukParams, LinearCode, Modulus, RingVector, Status, WeightKind,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn md(ell: u32) -> Modulus {
    Modulus::new(ell).unwrap()
}

fn poly(coeffs: Vec<i64>) -> HomoPoly {
    HomoPoly::from_integers(&coeffs)
}

/// `(l, n, rows)` for a random generator set.
fn code_strategy(max_ell: u32, max_n: usize) -> impl Strategy<Value = LinearCode> {
    (2..=max_ell, 1..=max_n)
        .prop_flat_map(|(ell, n)| {
            let row = prop::collection::vec(0..ell as i64, n);
            (Just(ell), Just(n), prop::collection::vec(row, 0..=n + 1))
        })
        .prop_map(|(ell, n, rows)| {
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            LinearCode::from_rows(ell, n, &refs).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transform_is_additive(
        (a, b) in (0usize..=8).prop_flat_map(|d| (
            prop::collection::vec(-50i64..50, d + 1),
            prop::collection::vec(-50i64..50, d + 1),
        )),
        t in 2u64..6,
        s in 1u64..20,
    ) {
        let (p, q) = (poly(a), poly(b));
        let lhs = p.checked_add(&q).unwrap().substitute_transform(t, s);
        let rhs = p.substitute_transform(t, s).checked_add(&q.substitute_transform(t, s)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn transform_is_an_involution(
        (coeffs, split) in (0usize..=8).prop_flat_map(|d| (prop::collection::vec(-100i64..100, d + 1), 0..=d)),
        q in 2u64..=4,
    ) {
        let p = poly(coeffs);
        let d = p.degree() as u32;
        let (s1, s2) = (q.pow(split as u32), q.pow(d - split as u32));
        prop_assert_eq!(p.substitute_transform(q, s1).substitute_transform(q, s2), p);
    }

    #[test]
    fn both_transform_routes_agree(
        dist in (0usize..=8).prop_flat_map(|n| prop::collection::vec(0u64..10_000, n + 1)),
        q in 2u64..=7,
        size in 1u64..1000,
    ) {
        let n = dist.len() as u32 - 1;
        let dist: Vec<BigInt> = dist.into_iter().map(BigInt::from).collect();
        prop_assert!(transforms_agree(&dist, KrawtchoukParams::new(n, q).unwrap(), size).unwrap());
    }

    #[test]
    fn coefficient_transform_twice_is_identity(
        (dist, split) in (0usize..=8).prop_flat_map(|n| (prop::collection::vec(0i64..1000, n + 1), 0..=n)),
        q in 2u64..=4,
    ) {
        let n = dist.len() as u32 - 1;
        let params = KrawtchoukParams::new(n, q).unwrap();
        let dist: Vec<BigRational> = dist.into_iter().map(|v| BigRational::from_integer(v.into())).collect();
        let once = coefficient_transform_rational(&dist, params, q.pow(split as u32)).unwrap();
        let twice = coefficient_transform_rational(&once, params, q.pow(n - split as u32)).unwrap();
        prop_assert_eq!(twice, dist);
    }

    #[test]
    fn codes_are_closed_and_dual_is_an_involution(code in code_strategy(12, 3)) {
        let words = code.codewords().unwrap();
        for a in &words {
            for b in &words {
                prop_assert!(code.contains(&a.add(b)).unwrap());
            }
        }
        let dual = code.dual().unwrap();
        for c in &words {
            for d in dual.codewords().unwrap() {
                prop_assert_eq!(c.dot(&d), 0);
            }
        }
        prop_assert!(dual.dual().unwrap().same_code(&code).unwrap());
    }

    #[test]
    fn gray_maps_preserve_weight(
        ell in 2u32..=16,
        m in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 16]),
        entries in prop::collection::vec(0u32..16, 1..6),
    ) {
        let modulus = md(ell);
        let v = RingVector::new(modulus, entries.into_iter().map(|a| a % ell).collect()).unwrap();
        let image = canonical_gray_map(modulus, make_field(m).unwrap()).apply(&v).unwrap();
        let lee: u32 = v.entries().iter().map(|&a| lee_weight(a, modulus)).sum();
        prop_assert_eq!(image.iter().filter(|&&e| e != 0).count() as u32, lee);
    }

    #[test]
    fn lee_is_hamming_for_small_rings(code in code_strategy(3, 4)) {
        prop_assert_eq!(
            weight_enumerator(&code, WeightKind::Lee).unwrap(),
            weight_enumerator(&code, WeightKind::Hamming).unwrap()
        );
    }
}

#[test]
fn identity_holds_wherever_a_multiplier_exists() {
    for (kind, rings) in [(WeightKind::Lee, vec![2, 3, 4]), (WeightKind::Euclidean, vec![2, 3])] {
        for ell in rings {
            let t = existence_condition(md(ell), kind).unwrap();
            for n in 1..=3 {
                for code in all_linear_codes(md(ell), n).unwrap() {
                    let v = check_identity(&IdentityQuery::new(code, kind, t).unwrap()).unwrap();
                    assert_eq!(v.status, Status::Holds, "{kind} l={ell} n={n}");
                }
            }
        }
    }
}

#[test]
fn counterexample_exists_whenever_condition_fails() {
    for kind in [WeightKind::Lee, WeightKind::Euclidean] {
        for ell in 2..=8 {
            for t in 2..=8u64 {
                if existence_condition(md(ell), kind) == Some(t) {
                    continue;
                }
                let hit = search_counterexample(md(ell), kind, t, 2).unwrap();
                assert!(hit.is_some(), "{kind} l={ell} t={t}");
            }
        }
    }
}

#[test]
fn holding_identity_means_dual_match() {
    for ell in 2..=8 {
        for n in 1..=2 {
            for code in all_linear_codes(md(ell), n).unwrap() {
                for t in [2u64, 3, 4] {
                    for kind in [WeightKind::Lee, WeightKind::Euclidean] {
                        let v = check_identity(&IdentityQuery::new(code.clone(), kind, t).unwrap()).unwrap();
                        let report = match kind {
                            WeightKind::Lee => verify_lee_conditions(&code, t),
                            _ => verify_euclidean_conditions(&code, t),
                        }
                        .unwrap();
                        assert_eq!(v.status == Status::Holds, report.dual_match);
                        if report.bijective_gray {
                            assert!(report.dual_match && report.transform_is_enumerator);
                        }
                    }
                }
            }
        }
    }
}
