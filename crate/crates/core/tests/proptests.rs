use std::collections::BTreeSet;

use proptest::prelude::*;

use ihull_core::constructors::{
    language_semigroup, ClosureMode, FactorTag, FreeProduct, FreeProductElement, LanguageSpec,
};
use ihull_core::fixtures;
use ihull_core::hull::PartialBijection;
use ihull_core::semigroup::ElementId;

fn arb_partial_bijection(points: usize) -> impl Strategy<Value = PartialBijection> {
    // a permutation restricted to a random subset is a generic partial
    // injection
    (
        proptest::sample::subsequence((0..points).collect::<Vec<_>>(), 0..=points),
        Just(()).prop_perturb(move |_, mut rng| {
            let mut perm: Vec<usize> = (0..points).collect();
            for i in (1..points).rev() {
                let j = (rng.next_u64() as usize) % (i + 1);
                perm.swap(i, j);
            }
            perm
        }),
    )
        .prop_map(|(domain, perm)| {
            PartialBijection::from_pairs(
                domain.into_iter().map(|x| (ElementId(x), ElementId(perm[x]))),
            )
            .expect("restricted permutations are injective")
        })
}

proptest! {
    #[test]
    fn partial_bijections_satisfy_inverse_laws(
        phi in arb_partial_bijection(8),
        psi in arb_partial_bijection(8),
    ) {
        let inv = phi.invert();
        prop_assert_eq!(phi.compose(&inv).compose(&phi), phi.clone());
        prop_assert_eq!(
            phi.compose(&psi).invert(),
            psi.invert().compose(&phi.invert())
        );
        prop_assert_eq!(
            phi.compose(&phi).is_identity_map() && phi.is_identity_map(),
            phi.is_identity_map()
        );
        let idem = phi.compose(&inv);
        prop_assert_eq!(idem.is_identity_map(), idem.is_idempotent_by_evaluation());
    }
}

fn arb_word_set() -> impl Strategy<Value = Vec<String>> {
    let letters = prop::collection::vec(prop::sample::select(vec!['a', 'b']), 1..4)
        .prop_map(|cs| cs.into_iter().collect::<String>());
    prop::collection::vec(letters, 1..6)
}

proptest! {
    #[test]
    fn closed_languages_make_cancellative_semigroups(words in arb_word_set()) {
        let alphabet = vec!["a".to_string(), "b".to_string()];
        let spec = LanguageSpec::parse(&alphabet, &words).unwrap();
        let built = language_semigroup(&spec, ClosureMode::Close).unwrap();
        let sg = built.semigroup;
        let flags = sg.property_flags();
        prop_assert!(flags.zero_left_cancellative);
        prop_assert!(flags.zero_right_cancellative);
        prop_assert!(flags.admits_lcms);
        // validating the closed word list must succeed
        let closed: Vec<String> = sg
            .nonzero_elements()
            .map(|s| sg.name(s).to_string())
            .collect();
        let spec2 = LanguageSpec::parse(&alphabet, &closed).unwrap();
        prop_assert!(language_semigroup(&spec2, ClosureMode::Validate).is_ok());
        // ranges respect least common multiples
        for s in sg.nonzero_elements() {
            for t in sg.nonzero_elements() {
                let r = sg.lcm(s, t).unwrap();
                let expected: BTreeSet<ElementId> =
                    sg.e_set(s).intersection(&sg.e_set(t)).copied().collect();
                prop_assert_eq!(sg.e_set(r), expected);
            }
        }
    }
}

fn arb_syllables() -> impl Strategy<Value = Vec<(FactorTag, ElementId)>> {
    // raw syllables over fixture A (as monoid M) and Z/2 with zero (as N);
    // indices may hit the zero or unit on purpose
    prop::collection::vec(
        (
            prop::bool::ANY.prop_map(|b| if b { FactorTag::M } else { FactorTag::N }),
            (0usize..4).prop_map(ElementId),
        ),
        0..6,
    )
}

proptest! {
    #[test]
    fn free_product_normalization_is_idempotent(syllables in arb_syllables()) {
        let m = fixtures::fixture_a();
        let n = fixtures::group_z2_zero();
        let fp = FreeProduct::new(&m, &n).unwrap();
        let filtered: Vec<(FactorTag, ElementId)> = syllables
            .into_iter()
            .filter(|&(tag, e)| e.0 < fp.factor(tag).len())
            .collect();
        let once = fp.normalize(&filtered).unwrap();
        prop_assert!(fp.check(&once).is_ok());
        if let FreeProductElement::Word(w) = &once {
            let again = fp.normalize(w).unwrap();
            prop_assert_eq!(&again, &once);
        }
    }

    #[test]
    fn free_product_multiplication_is_associative(
        a in arb_syllables(),
        b in arb_syllables(),
        c in arb_syllables(),
    ) {
        let m = fixtures::fixture_a();
        let n = fixtures::group_z2_zero();
        let fp = FreeProduct::new(&m, &n).unwrap();
        let clean = |raw: Vec<(FactorTag, ElementId)>| {
            let kept: Vec<_> = raw
                .into_iter()
                .filter(|&(tag, e)| e.0 < fp.factor(tag).len())
                .collect();
            fp.normalize(&kept).unwrap()
        };
        let (x, y, z) = (clean(a), clean(b), clean(c));
        let left = fp.multiply(&fp.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = fp.multiply(&x, &fp.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn free_product_cancels_on_the_left(
        a in arb_syllables(),
        b in arb_syllables(),
        c in arb_syllables(),
    ) {
        let m = fixtures::fixture_a();
        let n = fixtures::group_z2_zero();
        let fp = FreeProduct::new(&m, &n).unwrap();
        let clean = |raw: Vec<(FactorTag, ElementId)>| {
            let kept: Vec<_> = raw
                .into_iter()
                .filter(|&(tag, e)| e.0 < fp.factor(tag).len())
                .collect();
            fp.normalize(&kept).unwrap()
        };
        let (x, u, v) = (clean(a), clean(b), clean(c));
        let xu = fp.multiply(&x, &u).unwrap();
        let xv = fp.multiply(&x, &v).unwrap();
        if xu == xv && xu != FreeProductElement::Zero {
            prop_assert_eq!(u, v);
        }
    }
}

proptest! {
    #[test]
    fn mutated_tables_fail_validation_consistently(pos in 0usize..16, val in 0usize..4) {
        // corrupting one entry of a valid table either keeps associativity
        // and zero absorption or is rejected with a counterexample
        let sg = fixtures::fixture_a();
        let mut table: Vec<usize> = Vec::new();
        for a in sg.elements() {
            for b in sg.elements() {
                table.push(sg.product(a, b).0);
            }
        }
        table[pos] = val;
        let names: Vec<String> = sg.names().to_vec();
        let rebuilt = ihull_core::semigroup::Semigroup::from_table(names, 0, table.clone());
        let scan = ihull_core::oracle::associativity_violation(4, &table);
        let zero_ok = (0..4).all(|s| table[s] == 0 && table[s * 4] == 0);
        prop_assert_eq!(rebuilt.is_ok(), scan.is_none() && zero_ok);
    }
}
