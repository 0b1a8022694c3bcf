mod support;

use std::collections::BTreeMap;

use conedisc::construct::{branched_cover_of, corner_distance, generate_patch, PatchShape};
use conedisc::enumerate::{enumerate_fillings, theorem_words, uniqueness_sweep, verify_uniqueness, EnumerateError};
use conedisc::iso::{distance_invariant, is_isomorphic, IsoMode};
use conedisc::mesh::{CombinatorialDisc, TypeClassification};
use conedisc::metric::{check_gauss_bonnet, irregular_valence_from_boundary};
use proptest::prelude::*;

use support::{all_rotations, brute_force_isomorphic, is_adapted, shelled_discs};

fn requested(word: &[usize]) -> Option<usize> {
    match irregular_valence_from_boundary(word) {
        Ok(6) | Err(_) => None,
        Ok(n) => Some(n as usize),
    }
}

fn check_sound(word: &[usize], n: Option<usize>, discs: &[CombinatorialDisc]) {
    for d in discs {
        assert_eq!(d.boundary_word(), word);
        assert_eq!(check_gauss_bonnet(d), 0);
        match (d.classify_type().unwrap(), n) {
            (TypeClassification::Regular, None) => {}
            (TypeClassification::Irregular { valence, .. }, Some(n)) => assert_eq!(valence, n),
            (t, n) => panic!("word {word:?}: asked for {n:?}, got {t:?}"),
        }
    }
    for (i, a) in discs.iter().enumerate() {
        for b in &discs[i + 1..] {
            assert!(is_isomorphic(a, b, IsoMode::RotateStart).is_none());
        }
    }
}

#[test]
fn documented_examples() {
    let w5 = enumerate_fillings(&[3; 5], Some(5), 10).unwrap();
    assert_eq!((w5.discs.len(), w5.complete), (1, true));
    assert!(brute_force_isomorphic(&w5.discs[0], &support::wheel(5), IsoMode::RotateStart));

    let tri = enumerate_fillings(&[2, 2, 2], None, 5).unwrap();
    assert_eq!((tri.discs.len(), tri.complete), (1, true));
    assert_eq!(tri.discs[0].num_faces(), 1);

    assert!(matches!(
        enumerate_fillings(&[3; 5], Some(7), 10),
        Err(EnumerateError::InfeasibleByGaussBonnet { forced: 5, .. })
    ));
    assert!(matches!(
        verify_uniqueness(&[2, 2, 2], Some(5), 10),
        Err(EnumerateError::InfeasibleByGaussBonnet { .. })
    ));

    let r = verify_uniqueness(&[3; 5], Some(5), 10).unwrap();
    assert_eq!((r.count, r.complete, r.falsified()), (1, true, false));
}

#[test]
fn wheels_are_the_unique_fillings_of_their_rims() {
    for n in 3..=12 {
        let valence = if n == 6 { None } else { Some(n) };
        let e = enumerate_fillings(&vec![3; n], valence, 20).unwrap();
        assert!(e.complete);
        assert_eq!(e.discs.len(), 1, "rim of W{n}");
        assert!(brute_force_isomorphic(&e.discs[0], &support::wheel(n), IsoMode::RotateStart));
    }
}

#[test]
fn doubled_patch_words_have_two_fillings() {
    // Two-sheet covers of the 2×4 parallelogram branched at distance 2 and
    // 3 from a corner share their boundary; the search finds both and
    // nothing else.
    let base = generate_patch(PatchShape::Parallelogram(2, 4)).unwrap();
    let pick = |d| {
        base.interior_vertices()
            .find(|&v| corner_distance(&base, v) == Some(d))
            .unwrap()
    };
    let a = branched_cover_of(&base, pick(2), 2).unwrap();
    let b = branched_cover_of(&base, pick(3), 2).unwrap();
    let word = a.disc.boundary_word();
    assert_eq!(word, b.disc.boundary_word());

    let r = verify_uniqueness(&word, Some(12), 40).unwrap();
    assert!(r.complete);
    assert_eq!(r.count, 2);
    assert!(!r.theorem_applies());
    assert!(!r.falsified());
    let mut found: Vec<usize> = r.discs.iter().map(|d| distance_invariant(d).unwrap()).collect();
    found.sort();
    assert_eq!(found, vec![2, 3]);
    for cover in [&a.disc, &b.disc] {
        let moved = r.discs.iter().filter(|d| is_isomorphic(d, cover, IsoMode::RotateStart).is_some());
        assert_eq!(moved.count(), 1);
    }
}

#[test]
fn short_sweep_is_sound() {
    let words = theorem_words(3, 7, &[2, 3, 4, 5]);
    for r in uniqueness_sweep(&words, 30) {
        assert!(!r.falsified(), "{:?}", r.word);
        check_sound(&r.word, r.n, &r.discs);
    }
}

#[test]
fn regular_words_are_sound() {
    for len in 3..=7 {
        for word in theorem_words(len, len, &[2, 3, 4, 5, 6]).into_iter().chain(regular_words(len)) {
            let n = requested(&word);
            if let Ok(e) = enumerate_fillings(&word, n, 14) {
                check_sound(&word, n, &e.discs);
            }
        }
    }
}

fn regular_words(len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut w = vec![2; len];
    loop {
        if irregular_valence_from_boundary(&w) == Ok(6) {
            out.push(w.clone());
        }
        let Some(k) = (0..len).rev().find(|&k| w[k] < 6) else { break };
        w[k] += 1;
        w[k + 1..].iter_mut().for_each(|x| *x = 2);
    }
    out
}

/// A scaled-down copy of the exhaustiveness acceptance check: fillings of
/// words up to length 5 with at most 6 faces.
#[test]
fn matches_shelling_oracle_on_tiny_instances() {
    let cap = 6;
    let mut oracle: BTreeMap<Vec<usize>, Vec<CombinatorialDisc>> = BTreeMap::new();
    for d in shelled_discs(cap).into_iter().filter(is_adapted) {
        if d.boundary_cycle().len() <= 5 {
            for w in all_rotations(&d.boundary_word()) {
                oracle.entry(w).or_default().push(d.clone());
            }
        }
    }
    for (word, expected) in &oracle {
        let e = enumerate_fillings(word, requested(word), cap).unwrap();
        assert!(e.complete);
        let mut classes: Vec<&CombinatorialDisc> = Vec::new();
        for d in expected {
            if !classes.iter().any(|c| brute_force_isomorphic(c, d, IsoMode::RotateStart)) {
                classes.push(d);
            }
        }
        assert_eq!(e.discs.len(), classes.len(), "word {word:?}");
        for c in classes {
            assert!(e.discs.iter().any(|d| brute_force_isomorphic(d, c, IsoMode::RotateStart)));
        }
    }
}

proptest! {
    #[test]
    fn random_words_are_sound(word in prop::collection::vec(2usize..7, 3..9)) {
        let n = requested(&word);
        if let Ok(e) = enumerate_fillings(&word, n, 24) {
            check_sound(&word, n, &e.discs);
            let again = enumerate_fillings(&word, n, 24).unwrap();
            prop_assert_eq!(e.codes, again.codes);
        }
    }
}
