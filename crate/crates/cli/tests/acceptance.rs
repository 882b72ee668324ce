//! Acceptance suite: every criterion below is pinned to an exact expected
//! value and prints one pass line when it holds. Exact matches throughout;
//! no tolerances apply because every quantity is discrete.

use std::collections::BTreeSet;

use ihull_cli::commands::Options;
use ihull_cli::input::{InputDocument, InputKind};
use ihull_cli::verify::run_verify;
use ihull_core::constructors::{FactorTag, FreeProduct, FreeProductElement};
use ihull_core::fixtures;
use ihull_core::hull;
use ihull_core::semigroup::{Alignment, ElementId, Semigroup};
use ihull_core::spectrum;
use ihull_core::strings::{self, StringSet};

fn set(sg: &Semigroup, names: &[&str]) -> BTreeSet<ElementId> {
    names.iter().map(|n| sg.id_of(n).expect("known name")).collect()
}

fn doc(kind: InputKind, sg: Semigroup) -> InputDocument {
    InputDocument { kind, semigroup: sg }
}

fn fixture_docs() -> Vec<(&'static str, InputDocument)> {
    vec![
        ("trivial", doc(InputKind::Table, fixtures::trivial_zero())),
        ("degenerate-pair", doc(InputKind::Table, fixtures::xx_zero())),
        ("nilpotent-cubed", doc(InputKind::Table, fixtures::fixture_a())),
        ("prime-not-irreducible", doc(InputKind::Table, fixtures::fixture_b())),
        ("no-lcm", doc(InputKind::Table, fixtures::no_lcm())),
        ("cat2", doc(InputKind::Table, fixtures::cat2())),
        ("group-z2", doc(InputKind::Monoid, fixtures::group_z2_zero())),
        ("language-2x2", doc(InputKind::Language, fixtures::language_a_b_aa_ba())),
        ("words-len2", doc(InputKind::Language, fixtures::words_len2_abc())),
        ("markov-golden", doc(InputKind::Markov, fixtures::markov_golden())),
    ]
}

#[test]
fn criterion_01_constructible_sets_and_strings_of_the_nilpotent_fixture() {
    let sg = fixtures::fixture_a();
    let sets = hull::constructible_sets(&sg, 100_000).unwrap();
    let expected = vec![
        set(&sg, &[]),
        set(&sg, &["1"]),
        set(&sg, &["a"]),
        set(&sg, &["aa"]),
        set(&sg, &["1", "a"]),
        set(&sg, &["a", "aa"]),
        set(&sg, &["1", "a", "aa"]),
    ];
    assert_eq!(sets, expected, "constructible sets");

    let all: Vec<BTreeSet<ElementId>> =
        strings::all_strings(&sg).iter().map(|s| s.elems().clone()).collect();
    let expected_strings = vec![
        set(&sg, &["1"]),
        set(&sg, &["1", "a"]),
        set(&sg, &["1", "a", "aa"]),
    ];
    assert_eq!(all, expected_strings, "strings");

    let a = sg.id_of("a").unwrap();
    let (f_star, e_star) = strings::star_domains(&sg, a);
    let as_sets = |v: &[StringSet]| -> Vec<BTreeSet<ElementId>> {
        v.iter().map(|s| s.elems().clone()).collect()
    };
    assert_eq!(
        as_sets(&f_star),
        vec![set(&sg, &["1"]), set(&sg, &["1", "a"])],
        "star domain of a"
    );
    assert_eq!(
        as_sets(&e_star),
        vec![set(&sg, &["1", "a"]), set(&sg, &["1", "a", "aa"])],
        "star range of a"
    );
    println!("criterion 1: PASS — tables reproduced exactly");
}

#[test]
fn criterion_02_nonmaximal_string_with_an_ultracharacter() {
    let sg = fixtures::fixture_a();
    let delta_a = StringSet::new(&sg, set(&sg, &["1", "a"])).unwrap();
    assert!(!strings::classify_string(&sg, &delta_a).maximal, "δ_a must not be maximal");

    let lattice = spectrum::semilattice_of(&sg, 100_000).unwrap();
    let phi = spectrum::phi_from_string(&sg, &lattice, &delta_a).unwrap();
    let filter = spectrum::filter_of(&lattice, &phi).unwrap();
    assert!(spectrum::is_ultra(&lattice, &filter), "its character must be ultra");

    let census = spectrum::ultra_census(&sg, 100_000).unwrap();
    assert!(
        census.quasi_maximal_strings.iter().any(|s| s == &delta_a),
        "census lists the string as quasi-maximal"
    );
    println!("criterion 2: PASS — a non-maximal string carries an ultracharacter");
}

#[test]
fn criterion_03_prime_but_not_irreducible() {
    let sg = fixtures::fixture_b();
    let class = sg.classify(sg.id_of("s").unwrap()).unwrap();
    assert!(class.prime && !class.irreducible);
    println!("criterion 3: PASS — prime without irreducibility");
}

#[test]
fn criterion_04_missing_least_common_multiple() {
    let sg = fixtures::no_lcm();
    let a = sg.id_of("a").unwrap();
    let b = sg.id_of("b").unwrap();
    let c = sg.id_of("c").unwrap();
    let cc = sg.id_of("cc").unwrap();
    assert_eq!(sg.lcm(a, b), None);
    let inter: BTreeSet<ElementId> =
        sg.right_ideal(a).intersection(sg.right_ideal(b)).copied().collect();
    assert_eq!(inter, BTreeSet::from([sg.zero(), cc]));
    assert_eq!(&inter, sg.right_ideal(c));
    assert_eq!(sg.alignment(a, b).unwrap(), Alignment::None);
    println!("criterion 4: PASS — the intersection is principal but unaligned");
}

#[test]
fn criterion_05_backward_action_can_leave_the_maximal_strings() {
    let sg = fixtures::language_a_b_aa_ba();
    let maximal: Vec<BTreeSet<ElementId>> =
        strings::maximal_strings(&sg).iter().map(|s| s.elems().clone()).collect();
    assert_eq!(maximal, vec![set(&sg, &["a", "aa"]), set(&sg, &["b", "ba"])]);

    let b = sg.id_of("b").unwrap();
    let sigma = StringSet::new(&sg, set(&sg, &["b", "ba"])).unwrap();
    let back = strings::star_backward(&sg, b, &sigma).unwrap();
    assert_eq!(*back.elems(), set(&sg, &["a"]));
    assert!(!strings::classify_string(&sg, &back).maximal);
    println!("criterion 5: PASS — backward invariance fails without categoricity");
}

#[test]
fn criterion_06_length_two_words_are_not_categorical_at_zero() {
    let sg = fixtures::words_len2_abc();
    assert!(!sg.property_flags().categorical_at_zero);

    let a = sg.id_of("a").unwrap();
    let f_a = sg.f_set(a);
    // F_a ∪ {0} is not a right ideal: some member times some element leaves it
    let escapes = f_a.iter().any(|&m| {
        sg.elements().any(|s| {
            let p = sg.product(m, s);
            p != sg.zero() && !f_a.contains(&p)
        })
    });
    assert!(escapes, "F_a ∪ {{0}} must fail to be a right ideal");
    println!("criterion 6: PASS — categoricity is needed for right-ideal constructibles");
}

#[test]
fn criterion_07_markov_truncation_counts() {
    let sg = fixtures::markov_golden();
    // golden count frozen from the enumeration oracle: 2 + 3 + 5 words + zero
    assert_eq!(sg.len(), 11);
    for s in sg.nonzero_elements() {
        assert!(!sg.name(s).contains("x2x2"), "forbidden factor appears in {}", sg.name(s));
    }
    println!("criterion 7: PASS — 11 elements and no forbidden factor");
}

#[test]
fn criterion_08_property_suites_over_the_fixture_corpus() {
    let options = Options { oracle: true, ..Options::default() };
    let mut failures: Vec<String> = Vec::new();
    let mut status = |fixture: &str, report: &ihull_cli::report::Report| {
        for row in &report.sections[0].rows {
            if row[1].as_text() == "FAIL" {
                failures.push(format!(
                    "{fixture}/{}: {}",
                    row[0].as_text(),
                    row[2].as_text()
                ));
            }
        }
    };
    let mut passed: BTreeSet<(String, String)> = BTreeSet::new();
    for (name, doc) in fixture_docs() {
        let (report, _) = run_verify(&doc, &options, None).unwrap();
        for row in &report.sections[0].rows {
            if row[1].as_text() == "PASS" {
                passed.insert((name.to_string(), row[0].as_text().to_string()));
            }
        }
        status(name, &report);
    }
    assert!(failures.is_empty(), "failing suites: {failures:?}");

    // the decisive suites must actually run (not skip) on their fixtures
    let must_pass = [
        ("nilpotent-cubed", "representation-law"),
        ("nilpotent-cubed", "covariance"),
        ("nilpotent-cubed", "hull-closure"),
        ("nilpotent-cubed", "nf-evaluation"),
        ("nilpotent-cubed", "constructible-fixed-point"),
        ("nilpotent-cubed", "zero-e-unitary-forward"),
        ("nilpotent-cubed", "string-characters"),
        ("nilpotent-cubed", "open-maximal-ultra"),
        ("nilpotent-cubed", "relatively-maximal-ultra"),
        ("nilpotent-cubed", "census-partition"),
        ("nilpotent-cubed", "pi-tight-atoms"),
        ("nilpotent-cubed", "nf-ambiguity"),
        ("language-2x2", "zero-e-unitary-forward"),
        ("language-2x2", "census-partition"),
        ("language-2x2", "tight-equals-ultra"),
        ("language-2x2", "pi-tight-atoms"),
        ("markov-golden", "census-partition"),
        ("group-z2", "hull-shape-categorical"),
        ("group-z2", "free-product"),
        ("cat2", "aligned-covers"),
        ("cat2", "hull-closure"),
        ("words-len2", "star-representation"),
        ("words-len2", "epsilon-homomorphism"),
        ("words-len2", "sigma-action"),
        ("words-len2", "tight-equals-ultra"),
    ];
    for (fixture, suite) in must_pass {
        assert!(
            passed.contains(&(fixture.to_string(), suite.to_string())),
            "{fixture}/{suite} did not run to a pass"
        );
    }

    // the two-generator composition fixture admits no lcms and is not
    // categorical at zero, so the translation-pair shape is out of reach for
    // it: the hull honestly contains a counterexample
    let cat2 = fixtures::cat2();
    let flags = cat2.property_flags();
    assert!(!flags.admits_lcms && !flags.categorical_at_zero);
    let s = cat2.id_of("s").unwrap();
    let t = cat2.id_of("t").unwrap();
    let witness = hull::regular_rep(&cat2, t)
        .unwrap()
        .invert()
        .compose(&hull::regular_rep(&cat2, s).unwrap());
    assert!(!witness.is_empty());
    let the_hull = hull::generate_hull(&cat2, 100_000).unwrap();
    assert!(the_hull.contains(&witness));
    let mut shaped = false;
    for p in cat2.nonzero_elements() {
        for q in cat2.nonzero_elements() {
            let candidate = hull::regular_rep(&cat2, p)
                .unwrap()
                .compose(&hull::regular_rep(&cat2, q).unwrap().invert());
            if candidate == witness {
                shaped = true;
            }
        }
    }
    assert!(!shaped, "the counterexample should not be a translation pair");

    // free products verified to syllable length 4 on a mixed pair of factors
    let m = fixtures::fixture_a();
    let n = fixtures::group_z2_zero();
    let fp = FreeProduct::new(&m, &n).unwrap();
    let elements = fp.elements_up_to(4, 10_000).unwrap();
    let mut seen = BTreeSet::new();
    for x in &elements {
        fp.check(x).unwrap();
        assert!(seen.insert(x.clone()), "normal forms must be pairwise distinct");
    }
    let short: Vec<&FreeProductElement> = elements
        .iter()
        .filter(|x| match x {
            FreeProductElement::Word(w) => w.len() <= 2,
            _ => true,
        })
        .collect();
    for x in &short {
        for u in &short {
            let xu = fp.multiply(x, u).unwrap();
            for v in &short {
                let xv = fp.multiply(x, v).unwrap();
                if xu == xv && xu != FreeProductElement::Zero {
                    assert_eq!(u, v, "left cancellation to syllable length 4");
                }
            }
        }
    }
    let g = FreeProductElement::Word(vec![(FactorTag::N, ElementId(2))]);
    assert!(elements.contains(&g));

    println!(
        "criterion 8: PASS — {} suite runs, zero failures; cat2 lcm/categoricity \
         hypotheses verified absent with a concrete non-translation hull element",
        passed.len()
    );
}

#[test]
fn criterion_09_oracle_equivalences() {
    for (name, doc) in fixture_docs() {
        let sg = &doc.semigroup;
        if !sg.property_flags().zero_left_cancellative {
            continue;
        }
        if sg.nonzero_elements().count() <= 12 {
            let mut computed = strings::all_strings(sg);
            computed.sort();
            let enumerated = ihull_core::oracle::strings_by_enumeration(sg).unwrap();
            assert_eq!(computed, enumerated, "{name}: strings");
        }
        let sets = hull::constructible_sets(sg, 100_000).unwrap();
        let closure = ihull_core::oracle::constructible_by_closure(sg);
        assert_eq!(sets, closure, "{name}: constructible sets");
    }
    println!("criterion 9: PASS — oracle equivalences hold on the corpus");
}
