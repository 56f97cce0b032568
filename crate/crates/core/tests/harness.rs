use std::collections::HashSet;

use thompson_core::action::count_letters;
use thompson_core::element::{evaluate_word, GroupElement};
use thompson_core::harness::{
    all_words, enumerate_representatives, family_word, shortlex_filter, verify_family,
    AlphabetOrder, FamilyKind, ItemStatus, VerifyOptions,
};
use thompson_core::metric::{Ball, LengthOracle, Limits};

#[test]
fn prefixes_end_in_the_family_words() {
    for k in 2..=10 {
        let f = family_word(FamilyKind::F, k, 0).unwrap();
        let g = family_word(FamilyKind::G, k, 0).unwrap();
        let wk = family_word(FamilyKind::WPrefix, k, k).unwrap();
        let uk = family_word(FamilyKind::UPrefix, k, k - 1).unwrap();
        assert_eq!(
            evaluate_word(&wk).canonical_key(),
            evaluate_word(&f).canonical_key()
        );
        assert_eq!(
            evaluate_word(&uk).canonical_key(),
            evaluate_word(&g).canonical_key()
        );
        for i in 0..=k {
            let w = family_word(FamilyKind::WPrefix, k, i).unwrap();
            assert_eq!(w.letters(), &f.letters()[..3 * k + 1 + i]);
        }
    }
}

#[test]
fn letter_tallies() {
    for k in 2..=10 {
        let f = family_word(FamilyKind::F, k, 0).unwrap();
        let t = count_letters(&f, 0, f.len()).unwrap();
        assert_eq!((t.x0inv, t.x0, t.x1inv, t.x1), (2 * k - 1, 2 * k, 2, 0));
        let g = family_word(FamilyKind::G, k, 0).unwrap();
        let t = count_letters(&g, 0, g.len()).unwrap();
        assert_eq!((t.x0, t.x0inv, t.x1inv, t.x1), (2 * k, 2 * k - 1, 2, 0));
    }
}

#[test]
fn enumeration_is_closed_and_exact() {
    let mut oracle = LengthOracle::new(Limits::default());
    for w in ["aB", "abAB", "ABa"] {
        let g = evaluate_word(&w.parse().unwrap());
        let len = oracle.geodesic_length(&g).unwrap();
        let words = enumerate_representatives(&g, 2, &mut oracle).unwrap();
        let distinct: HashSet<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(distinct.len(), words.len());
        for v in &words {
            assert_eq!(evaluate_word(v).canonical_key(), g.canonical_key());
            assert!(v.len() >= len && v.len() <= len + 2);
        }
        // brute force over every word up to the same length
        let brute: HashSet<String> = all_words(len + 2, &AlphabetOrder::default())
            .into_iter()
            .filter(|v| evaluate_word(v).canonical_key() == g.canonical_key())
            .map(|v| v.to_string())
            .collect();
        assert_eq!(distinct, brute, "{w}");
    }
}

#[test]
fn shortlex_picks_one_geodesic_per_element() {
    let order = AlphabetOrder::default();
    let ball = Ball::build(5, &Limits::default()).unwrap();
    let kept = shortlex_filter(&all_words(5, &order), &order);
    assert_eq!(kept.len(), ball.len());
    for w in &kept {
        assert_eq!(ball.length_of(&evaluate_word(w)), Some(w.len()));
    }
    let other: AlphabetOrder = "BbAa".parse().unwrap();
    assert_eq!(
        shortlex_filter(&all_words(4, &other), &other).len(),
        ball.restricted(4).len()
    );
}

#[test]
fn identity_has_only_free_cancellations_at_small_slack() {
    let mut oracle = LengthOracle::new(Limits::default());
    let words = enumerate_representatives(&GroupElement::identity(), 2, &mut oracle).unwrap();
    let text: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    assert_eq!(text, ["", "aA", "bB", "Aa", "Bb"]);
}

#[test]
fn family_reports_pass_for_small_k() {
    for k in 2..=4 {
        let report = verify_family(k, &VerifyOptions::default()).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }
    let options = VerifyOptions {
        geodesic: false,
        ..VerifyOptions::default()
    };
    let report = verify_family(12, &options).unwrap();
    assert!(report.passed(), "{}", report.to_text());
    assert_eq!(report.item(4).unwrap().status, ItemStatus::Skipped);
    assert!(verify_family(1, &options).is_err());
}
