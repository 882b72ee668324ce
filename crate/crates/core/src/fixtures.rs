//! Built-in example semigroups.
//!
//! These small tables exercise every corner of the library: unital and
//! non-unital, with and without least common multiples, categorical and
//! non-categorical at zero. They double as fixtures for the verification
//! suites and the tests.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::constructors::{
    language_semigroup, markov_semigroup, ClosureMode, LanguageSpec, TransitionMatrix,
};
use crate::semigroup::Semigroup;

fn names(tokens: &[&str]) -> Vec<String> {
    tokens.iter().map(|s| s.to_string()).collect()
}

/// `S = {0}`.
pub fn trivial_zero() -> Semigroup {
    Semigroup::from_table(names(&["0"]), 0, alloc::vec![0]).unwrap()
}

/// `S = {0, x}` with `x² = 0`; `x` is a degenerate element.
pub fn xx_zero() -> Semigroup {
    Semigroup::from_table(names(&["0", "x"]), 0, alloc::vec![0, 0, 0, 0]).unwrap()
}

/// The unital semigroup `{0, 1, a, aa}` with `a³ = 0`.
pub fn fixture_a() -> Semigroup {
    let n = names(&["0", "1", "a", "aa"]);
    #[rustfmt::skip]
    let table = alloc::vec![
        0, 0, 0, 0,
        0, 1, 2, 3,
        0, 2, 3, 0,
        0, 3, 0, 0,
    ];
    Semigroup::from_table(n, 0, table).unwrap()
}

/// `{0, e, s}` with `e` idempotent and `se = s`: `s` is prime but not
/// irreducible.
pub fn fixture_b() -> Semigroup {
    let n = names(&["0", "e", "s"]);
    #[rustfmt::skip]
    let table = alloc::vec![
        0, 0, 0,
        0, 1, 0,
        0, 2, 0,
    ];
    Semigroup::from_table(n, 0, table).unwrap()
}

/// `{a, b, c, ab, ba, cc, 0}` with `ac = bc = cc`. Here `aS ∩ bS = cS` but
/// `c` is not a common multiple of `a` and `b`, so the pair has no least
/// common multiple.
pub fn no_lcm() -> Semigroup {
    let n = names(&["0", "a", "b", "c", "ab", "ba", "cc"]);
    let mut table = alloc::vec![0usize; 49];
    let mut set = |i: usize, j: usize, v: usize| table[i * 7 + j] = v;
    set(1, 2, 4); // a·b = ab
    set(2, 1, 5); // b·a = ba
    set(1, 3, 6); // a·c = cc
    set(2, 3, 6); // b·c = cc
    set(3, 3, 6); // c·c = cc
    Semigroup::from_table(n, 0, table).unwrap()
}

/// A 12-element composition table with objects `A`, `B`, `C`: identities
/// `1A`, `1B`, `1C`, arrows `s, t : B → A` and `a1, a2, b1, b2 : C → B`, and
/// exactly two products `m1 = s·a1 = t·b1`, `m2 = s·a2 = t·b2` from `C` to
/// `A`. The intersection `sS ∩ tS` needs the two-element basis `{m1, m2}`.
pub fn cat2() -> Semigroup {
    let toks = ["0", "1A", "1B", "1C", "s", "t", "a1", "a2", "b1", "b2", "m1", "m2"];
    let n = toks.len();
    let idx = |tok: &str| toks.iter().position(|&t| t == tok).unwrap();
    let mut table = alloc::vec![0usize; n * n];
    let mut set = |x: &str, y: &str, v: &str| table[idx(x) * n + idx(y)] = idx(v);

    // identity actions by object
    let cod: &[(&str, &str)] = &[
        ("1A", "A"), ("1B", "B"), ("1C", "C"),
        ("s", "A"), ("t", "A"),
        ("a1", "B"), ("a2", "B"), ("b1", "B"), ("b2", "B"),
        ("m1", "A"), ("m2", "A"),
    ];
    let dom: &[(&str, &str)] = &[
        ("1A", "A"), ("1B", "B"), ("1C", "C"),
        ("s", "B"), ("t", "B"),
        ("a1", "C"), ("a2", "C"), ("b1", "C"), ("b2", "C"),
        ("m1", "C"), ("m2", "C"),
    ];
    for &(u, c) in cod {
        let e = match c {
            "A" => "1A",
            "B" => "1B",
            _ => "1C",
        };
        set(e, u, u);
    }
    for &(u, d) in dom {
        let e = match d {
            "A" => "1A",
            "B" => "1B",
            _ => "1C",
        };
        set(u, e, u);
    }
    set("s", "a1", "m1");
    set("s", "a2", "m2");
    set("t", "b1", "m1");
    set("t", "b2", "m2");
    Semigroup::from_table(names(&toks), 0, table).unwrap()
}

/// The two-element group with an adjoined zero, `{0, 1, g}` with `g² = 1`.
pub fn group_z2_zero() -> Semigroup {
    let n = names(&["0", "1", "g"]);
    #[rustfmt::skip]
    let table = alloc::vec![
        0, 0, 0,
        0, 1, 2,
        0, 2, 1,
    ];
    Semigroup::from_table(n, 0, table).unwrap()
}

/// The language `{a, b, aa, ba}` over `{a, b}`.
pub fn language_a_b_aa_ba() -> Semigroup {
    let spec = LanguageSpec::parse(&names(&["a", "b"]), &names(&["a", "b", "aa", "ba"])).unwrap();
    language_semigroup(&spec, ClosureMode::Validate).unwrap().semigroup
}

/// All words of length at most two over `{a, b, c}` (13 elements with zero).
pub fn words_len2_abc() -> Semigroup {
    let alphabet = names(&["a", "b", "c"]);
    let mut words = Vec::new();
    for x in &alphabet {
        words.push(x.clone());
        for y in &alphabet {
            words.push(alloc::format!("{x}{y}"));
        }
    }
    let spec = LanguageSpec::parse(&alphabet, &words).unwrap();
    language_semigroup(&spec, ClosureMode::Validate).unwrap().semigroup
}

/// The Markov truncation for the transition matrix `((1,1),(1,0))` over
/// `{x1, x2}` with words of length at most 3; the factor `x2 x2` is
/// forbidden.
pub fn markov_golden() -> Semigroup {
    let alphabet = names(&["x1", "x2"]);
    let matrix = TransitionMatrix::new(alloc::vec![alloc::vec![1, 1], alloc::vec![1, 0]]).unwrap();
    markov_semigroup(&alphabet, &matrix, 3).unwrap().semigroup
}

/// Every built-in semigroup, for corpus-wide law tests.
pub fn corpus() -> Vec<Semigroup> {
    alloc::vec![
        trivial_zero(),
        xx_zero(),
        fixture_a(),
        fixture_b(),
        no_lcm(),
        cat2(),
        group_z2_zero(),
        language_a_b_aa_ba(),
        words_len2_abc(),
        markov_golden(),
    ]
}

/// The fixtures that are 0-left cancellative and admit least common
/// multiples, on which the normal-form calculus applies.
pub fn lcm_corpus() -> Vec<Semigroup> {
    corpus()
        .into_iter()
        .filter(|sg| {
            let f = sg.property_flags();
            f.zero_left_cancellative && f.admits_lcms
        })
        .collect()
}
