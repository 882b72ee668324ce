//! End-to-end walkthrough over the public API: build a semigroup from a
//! language at runtime, then push it through the hull, the strings, and the
//! spectrum.

use std::collections::BTreeSet;

use ihull_core::constructors::{language_semigroup, ClosureMode, LanguageSpec};
use ihull_core::fixtures;
use ihull_core::hull::{generate_hull, hull_normal_form, nf_evaluate};
use ihull_core::semigroup::SOrOne;
use ihull_core::spectrum::{filters, is_ultra, semilattice_of, sigma_from_char, ultra_census};
use ihull_core::strings::{all_strings, classify_string};

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<ihull_core::Semigroup>();
    assert_send_sync::<ihull_core::Hull>();
    assert_send_sync::<ihull_core::Semilattice>();
    assert_send_sync::<ihull_core::PartialBijection>();
    assert_send_sync::<ihull_core::StringSet>();
    // concurrent reads of one semigroup
    let sg = std::sync::Arc::new(fixtures::fixture_a());
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let sg = sg.clone();
            std::thread::spawn(move || generate_hull(&sg, 100_000).unwrap().len())
        })
        .collect();
    let sizes: BTreeSet<usize> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert_eq!(sizes.len(), 1);
}

#[test]
fn fibonacci_like_language_walkthrough() {
    // words over {a, b} avoiding the factor bb, up to length 3
    let alphabet: Vec<String> = vec!["a".into(), "b".into()];
    let words: Vec<String> = ["a", "b", "aa", "ab", "ba", "aaa", "aab", "aba", "baa", "bab"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let spec = LanguageSpec::parse(&alphabet, &words).unwrap();
    let sg = language_semigroup(&spec, ClosureMode::Validate).unwrap().semigroup;
    assert_eq!(sg.len(), 11);
    let flags = sg.property_flags();
    assert!(flags.zero_left_cancellative && flags.zero_right_cancellative);
    assert!(flags.admits_lcms);

    let hull = generate_hull(&sg, 100_000).unwrap();
    for i in 0..hull.len() {
        let nf = hull_normal_form(&sg, &hull, i).unwrap();
        assert_eq!(&nf_evaluate(&sg, &nf).unwrap(), &hull.elements()[i]);
    }

    let strings = all_strings(&sg);
    // the maximal strings are the divisor sets of the longest words
    for sigma in &strings {
        let class = classify_string(&sg, sigma);
        let longest = sigma
            .elems()
            .iter()
            .map(|&s| sg.word_length(s).unwrap())
            .max()
            .unwrap();
        assert_eq!(class.maximal, longest == 3, "{sigma:?}");
        // no word extends within its own divisor set
        assert!(!class.open);
    }

    let lattice = semilattice_of(&sg, 100_000).unwrap();
    let census = ultra_census(&sg, 100_000).unwrap();
    assert!(census.open_ultras.is_empty());
    assert_eq!(
        census.nonopen_ultras.len(),
        filters(&lattice)
            .iter()
            .filter(|f| is_ultra(&lattice, f))
            .count()
    );
    // every ground part has an empty string attached
    for (_, ground, _) in &census.nonopen_ultras {
        assert!(sigma_from_char(&sg, &lattice, ground).is_empty());
    }
    // decompositions use honest semigroup elements or the external unit
    for (u, _, phi) in &census.nonopen_ultras {
        match u {
            SOrOne::One => {}
            SOrOne::Elem(r) => {
                let sigma = sigma_from_char(&sg, &lattice, phi);
                assert_eq!(sigma, sg.divisors(*r).unwrap());
            }
        }
    }
}
