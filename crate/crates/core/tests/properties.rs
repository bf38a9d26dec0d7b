use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use siteswap::closed_forms::{
    count, count_ceiling_multiple, count_ceiling_multiple_closed, CountQuery, Method,
};
use siteswap::exact_math::{binomial, bounded_compositions, compositions};
use siteswap::notation::{parse, render, NotationForm};
use siteswap::oracle::{enumerate_patterns, EnumerationSpec};
use siteswap::pattern::{
    construct, decompose, validate, JugglingPattern, Permutation, ThrowSequence,
};

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|p| Permutation::new(p).unwrap())
}

fn legal_decomposition() -> impl Strategy<Value = (Permutation, Vec<u64>)> {
    permutation(12).prop_flat_map(|perm| {
        let n = perm.len();
        (Just(perm), prop::collection::vec(0u64..50, n)).prop_map(|(perm, extra)| {
            let b_vec = extra
                .iter()
                .enumerate()
                .map(|(i, &e)| e + u64::from(perm.as_slice()[i] < i))
                .collect();
            (perm, b_vec)
        })
    })
}

proptest! {
    #[test]
    fn decompose_inverts_construct((perm, b_vec) in legal_decomposition()) {
        let pattern = construct(&perm, &b_vec).unwrap();
        prop_assert!(validate(pattern.sequence()).valid);
        prop_assert_eq!(pattern.balls(), b_vec.iter().sum::<u64>());
        let d = decompose(&pattern);
        prop_assert_eq!(&d.perm, &perm);
        prop_assert_eq!(&d.b_vec, &b_vec);
        prop_assert_eq!(construct(&d.perm, &d.b_vec).unwrap(), pattern);
    }

    #[test]
    fn construct_never_goes_negative(perm in permutation(10), raw in prop::collection::vec(0u64..3, 10)) {
        let b_vec = &raw[..perm.len()];
        let missing_lift = perm.descent_positions().any(|i| b_vec[i] == 0);
        prop_assert_eq!(construct(&perm, b_vec).is_err(), missing_lift);
    }

    #[test]
    fn list_form_round_trips(heights in prop::collection::vec(0u64..=100, 1..30)) {
        let seq = ThrowSequence::new(heights).unwrap();
        let text = render(&seq, NotationForm::List).unwrap();
        prop_assert_eq!(parse(&text).unwrap(), seq);
    }

    #[test]
    fn compact_form_round_trips(heights in prop::collection::vec(0u64..=35, 1..30)) {
        let seq = ThrowSequence::new(heights).unwrap();
        let text = render(&seq, NotationForm::Compact).unwrap();
        prop_assert_eq!(text.len(), seq.period());
        prop_assert_eq!(parse(&text).unwrap(), seq);
    }

    #[test]
    fn compact_parse_is_case_insensitive(text in "[0-9a-zA-Z]{1,20}") {
        let seq = parse(&text).unwrap();
        prop_assert_eq!(render(&seq, NotationForm::Compact).unwrap(), text.to_ascii_lowercase());
    }

    #[test]
    fn list_parse_canonicalises_spacing(
        values in prop::collection::vec(0u64..1000, 2..10),
        pads in prop::collection::vec((0usize..3, 0usize..3), 10),
    ) {
        let mut text = String::new();
        for (i, v) in values.iter().enumerate() {
            if i > 0 {
                let (l, r) = pads[i];
                text.push_str(&" ".repeat(l));
                text.push(',');
                text.push_str(&" ".repeat(r));
            }
            text.push_str(&v.to_string());
        }
        let canonical: Vec<String> = values.iter().map(u64::to_string).collect();
        let seq = parse(&text).unwrap();
        prop_assert_eq!(render(&seq, NotationForm::List).unwrap(), canonical.join(","));
    }

    #[test]
    fn validate_agrees_with_enumeration(heights in prop::collection::vec(0u64..=6, 1..=4)) {
        let n = heights.len();
        let listed: BTreeSet<Vec<u64>> = enumerate_patterns(&EnumerationSpec::all_balls(n, 6))
            .unwrap()
            .map(|p| p.heights().to_vec())
            .collect();
        let seq = ThrowSequence::new(heights.clone()).unwrap();
        prop_assert_eq!(validate(&seq).valid, listed.contains(&heights));
        prop_assert_eq!(JugglingPattern::try_from(seq).is_ok(), listed.contains(&heights));
    }

    #[test]
    fn wide_caps_reduce_to_plain_compositions(n in 1usize..8, b in 0i64..30, slack in 0i64..10) {
        prop_assert_eq!(bounded_compositions(n, b, b + slack), compositions(n, b));
    }

    #[test]
    fn binomial_symmetry(m in 0i64..200, k in 0u64..200) {
        prop_assume!(k as i64 <= m);
        prop_assert_eq!(binomial(m, k), binomial(m, m as u64 - k));
    }

    #[test]
    fn ceiling_multiple_forms_agree(n in 1usize..12, b in 0u64..40, a in 1u64..6) {
        prop_assert_eq!(count_ceiling_multiple(n, b, a), count_ceiling_multiple_closed(n, b, a));
    }
}

#[test]
fn counts_are_monotone_in_ceiling() {
    for n in 1..=5usize {
        for b in 0..=5u64 {
            let mut previous = BigInt::from(0);
            for c in 0..=(b * n as u64 + 2) {
                let q = CountQuery::fixed(n, b)
                    .with_ceiling(c)
                    .with_method(Method::Oracle);
                let got = count(&q).unwrap().count;
                assert!(got >= previous, "J({n},{b},{c}) decreased");
                previous = got;
            }
        }
    }
}

#[test]
fn method_both_cross_checks_every_closed_branch() {
    let mut seen = BTreeSet::new();
    for n in 1..=6usize {
        for c in 0..=(2 * n as u64 + 1) {
            let mut queries = vec![CountQuery::all_balls(n, c)];
            queries.extend((0..=4).map(|b| CountQuery::fixed(n, b).with_ceiling(c)));
            for q in queries {
                let r = count(&q.with_method(Method::Both)).unwrap();
                seen.insert(r.branch.tag());
                assert_eq!(r.cross_checked, r.branch.tag() != "pattern-oracle");
            }
        }
    }
    for tag in [
        "unbounded",
        "theorem1-sum",
        "eulerian",
        "factorial",
        "rook-derangement",
        "rook-menage",
        "rook-oracle",
        "pattern-oracle",
    ] {
        assert!(seen.contains(tag), "branch {tag} never exercised");
    }
}
