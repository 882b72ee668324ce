//! Semigroup constructors: languages, Markov subshift truncations, monoids
//! with an adjoined zero, and symbolic zero-free products of monoids.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use thiserror::Error;

use crate::semigroup::{ElementId, Semigroup, SemigroupError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ConstructorError {
    #[error("word list is empty")]
    EmptyLanguage,
    #[error("word `{0}` cannot be segmented over the alphabet")]
    UnknownWord(String),
    #[error("empty word is not allowed")]
    EmptyWord,
    #[error("language is not factor-closed: factor `{factor}` of `{word}` is missing")]
    MissingFactor { word: String, factor: String },
    #[error("transition matrix entry at ({row},{col}) is {value}, expected 0 or 1")]
    BadMatrixEntry { row: usize, col: usize, value: u8 },
    #[error("transition matrix must be {expected}x{expected}, row {row} has {got} entries")]
    BadMatrixShape { expected: usize, row: usize, got: usize },
    #[error("maximum length must be at least 1")]
    BadMaxLen,
    #[error("monoid has no identity element")]
    NotUnital,
    #[error("monoid table already contains the reserved zero token `0`")]
    ReservedZeroToken,
    #[error("factor is not a monoid with zero (missing identity)")]
    FactorNotMonoid,
    #[error("syllable {0} is out of range for its factor")]
    SyllableOutOfRange(usize),
    #[error("syllable {0} is the factor's zero or identity")]
    TrivialSyllable(usize),
    #[error("adjacent syllables {0} and {1} come from the same factor")]
    NotAlternating(usize, usize),
    #[error("factors must be 0-left cancellative and admit lcms for lcm computation")]
    FactorLcmMissing,
    #[error("free-product lcm verification disagrees with the computed value")]
    LcmVerificationFailed,
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// A word over an indexed alphabet.
pub type Word = Vec<usize>;

/// A square 0/1 transition matrix indexed by the alphabet.
#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    rows: Vec<Vec<u8>>,
}

impl TransitionMatrix {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self, ConstructorError> {
        let k = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(ConstructorError::BadMatrixShape {
                    expected: k,
                    row: i,
                    got: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v > 1 {
                    return Err(ConstructorError::BadMatrixEntry { row: i, col: j, value: v });
                }
            }
        }
        Ok(TransitionMatrix { rows })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Whether the transition from symbol `from` to symbol `to` is allowed.
    pub fn allows(&self, from: usize, to: usize) -> bool {
        self.rows[from][to] == 1
    }
}

/// A finite set of nonempty words over a finite alphabet.
#[derive(Clone, Debug)]
pub struct LanguageSpec {
    pub alphabet: Vec<String>,
    pub words: BTreeSet<Word>,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ClosureMode {
    /// Require the word set to be factor-closed; report a missing factor.
    Validate,
    /// Replace the word set by its factor closure first.
    Close,
}

/// A language semigroup together with the word attached to each element.
#[derive(Clone, Debug)]
pub struct LanguageSemigroup {
    pub semigroup: Semigroup,
    /// Word for each nonzero element, indexed by element id.
    pub words: BTreeMap<ElementId, Word>,
    pub alphabet: Vec<String>,
}

impl LanguageSpec {
    /// Segments each word string into alphabet symbols (longest tokens first,
    /// with backtracking, so multi-character symbols such as `x1` work).
    pub fn parse(alphabet: &[String], words: &[String]) -> Result<Self, ConstructorError> {
        let mut set = BTreeSet::new();
        for w in words {
            if w.is_empty() {
                return Err(ConstructorError::EmptyWord);
            }
            let seg = segment(alphabet, w)
                .ok_or_else(|| ConstructorError::UnknownWord(w.clone()))?;
            set.insert(seg);
        }
        if set.is_empty() {
            return Err(ConstructorError::EmptyLanguage);
        }
        Ok(LanguageSpec { alphabet: alphabet.to_vec(), words: set })
    }

    fn render(&self, word: &Word) -> String {
        word.iter().map(|&i| self.alphabet[i].as_str()).collect()
    }
}

fn segment(alphabet: &[String], text: &str) -> Option<Word> {
    // longest symbol first at each position, backtracking on failure
    let mut order: Vec<usize> = (0..alphabet.len()).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(alphabet[i].len()));
    fn go(alphabet: &[String], order: &[usize], rest: &str, acc: &mut Word) -> bool {
        if rest.is_empty() {
            return true;
        }
        for &i in order {
            if let Some(tail) = rest.strip_prefix(alphabet[i].as_str()) {
                acc.push(i);
                if go(alphabet, order, tail, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    go(alphabet, &order, text, &mut acc).then_some(acc)
}

fn factors_of(word: &Word) -> impl Iterator<Item = Word> + '_ {
    (0..word.len()).flat_map(move |i| {
        (i + 1..=word.len()).map(move |j| word[i..j].to_vec())
    })
}

/// Builds `S = L ∪ {0}` with concatenation, truncated to zero outside `L`.
pub fn language_semigroup(
    spec: &LanguageSpec,
    mode: ClosureMode,
) -> Result<LanguageSemigroup, ConstructorError> {
    let mut language = spec.words.clone();
    match mode {
        ClosureMode::Close => {
            let closure: BTreeSet<Word> =
                language.iter().flat_map(|w| factors_of(w).collect::<Vec<_>>()).collect();
            language = closure;
        }
        ClosureMode::Validate => {
            for w in &language {
                for f in factors_of(w) {
                    if !language.contains(&f) {
                        return Err(ConstructorError::MissingFactor {
                            word: spec.render(w),
                            factor: spec.render(&f),
                        });
                    }
                }
            }
        }
    }
    let mut ordered: Vec<Word> = language.iter().cloned().collect();
    ordered.sort_by_key(|w| (w.len(), w.clone()));

    let mut names: Vec<String> = Vec::with_capacity(ordered.len() + 1);
    names.push("0".to_string());
    for w in &ordered {
        names.push(spec.render(w));
    }
    let index: BTreeMap<&Word, usize> =
        ordered.iter().enumerate().map(|(i, w)| (w, i + 1)).collect();
    let n = names.len();
    let mut table = alloc::vec![0usize; n * n];
    for (i, u) in ordered.iter().enumerate() {
        for (j, v) in ordered.iter().enumerate() {
            let mut w = u.clone();
            w.extend_from_slice(v);
            if let Some(&k) = index.get(&w) {
                table[(i + 1) * n + (j + 1)] = k;
            }
        }
    }
    let mut sg = Semigroup::from_table(names, 0, table)?;
    let mut lengths = alloc::vec![0usize; n];
    for (i, w) in ordered.iter().enumerate() {
        lengths[i + 1] = w.len();
    }
    sg.set_word_lengths(lengths);
    let words = ordered
        .into_iter()
        .enumerate()
        .map(|(i, w)| (ElementId(i + 1), w))
        .collect();
    Ok(LanguageSemigroup { semigroup: sg, words, alphabet: spec.alphabet.clone() })
}

/// Builds the language of all transition-respecting words of length at most
/// `max_len` and feeds it to [`language_semigroup`]. The result is
/// factor-closed by construction.
pub fn markov_semigroup(
    alphabet: &[String],
    matrix: &TransitionMatrix,
    max_len: usize,
) -> Result<LanguageSemigroup, ConstructorError> {
    if max_len == 0 {
        return Err(ConstructorError::BadMaxLen);
    }
    let k = alphabet.len();
    if matrix.len() != k {
        return Err(ConstructorError::BadMatrixShape { expected: k, row: matrix.len(), got: 0 });
    }
    let mut words: BTreeSet<Word> = BTreeSet::new();
    let mut frontier: Vec<Word> = (0..k).map(|i| alloc::vec![i]).collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            words.insert(w.clone());
            let last = *w.last().unwrap();
            for y in 0..k {
                if matrix.allows(last, y) {
                    let mut ext = w.clone();
                    ext.push(y);
                    next.push(ext);
                }
            }
        }
        frontier = next;
    }
    let rendered: Vec<String> = words
        .iter()
        .map(|w| w.iter().map(|&i| alphabet[i].as_str()).collect())
        .collect();
    let spec = LanguageSpec::parse(alphabet, &rendered)?;
    language_semigroup(&spec, ClosureMode::Validate)
}

/// Adjoins an absorbing zero (named `0`) to a monoid given by its table.
pub fn adjoin_zero(
    names: Vec<String>,
    rows: &[Vec<String>],
) -> Result<Semigroup, ConstructorError> {
    if names.iter().any(|n| n == "0") {
        return Err(ConstructorError::ReservedZeroToken);
    }
    let n = names.len();
    if rows.len() != n {
        return Err(SemigroupError::RowCount { got: rows.len(), expected: n }.into());
    }
    let mut table = alloc::vec![0usize; (n + 1) * (n + 1)];
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(SemigroupError::RowLength { row: i, got: row.len(), expected: n }.into());
        }
        for (j, token) in row.iter().enumerate() {
            let id = names.iter().position(|s| s == token).ok_or_else(|| {
                SemigroupError::UnknownToken { token: token.clone(), row: i, col: j }
            })?;
            table[(i + 1) * (n + 1) + (j + 1)] = id + 1;
        }
    }
    let mut all_names = Vec::with_capacity(n + 1);
    all_names.push("0".to_string());
    all_names.extend(names);
    let sg = Semigroup::from_table(all_names, 0, table)?;
    if sg.unit().is_none() {
        return Err(ConstructorError::NotUnital);
    }
    Ok(sg)
}

// --- symbolic zero-free products of monoids with zero ---

/// Which factor a syllable belongs to.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum FactorTag {
    M,
    N,
}

/// An element of the zero-free product `M ∗₀ N` in normal form: an
/// alternating sequence of non-identity, nonzero factor elements, or one of
/// the two distinguished elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum FreeProductElement {
    Zero,
    One,
    Word(Vec<(FactorTag, ElementId)>),
}

/// Result of a bounded least-common-multiple computation in `M ∗₀ N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FpLcm {
    Resolved(FreeProductElement),
    /// The enumeration budget did not suffice to verify the candidate.
    Unresolved,
}

pub struct FreeProduct<'a> {
    pub m: &'a Semigroup,
    pub n: &'a Semigroup,
}

impl<'a> FreeProduct<'a> {
    pub fn new(m: &'a Semigroup, n: &'a Semigroup) -> Result<Self, ConstructorError> {
        if m.unit().is_none() || n.unit().is_none() {
            return Err(ConstructorError::FactorNotMonoid);
        }
        Ok(FreeProduct { m, n })
    }

    pub fn factor(&self, tag: FactorTag) -> &Semigroup {
        match tag {
            FactorTag::M => self.m,
            FactorTag::N => self.n,
        }
    }

    /// Checks the normal-form invariants of `x`.
    pub fn check(&self, x: &FreeProductElement) -> Result<(), ConstructorError> {
        if let FreeProductElement::Word(syllables) = x {
            if syllables.is_empty() {
                return Err(ConstructorError::TrivialSyllable(0));
            }
            for (i, &(tag, e)) in syllables.iter().enumerate() {
                let f = self.factor(tag);
                if e.0 >= f.len() {
                    return Err(ConstructorError::SyllableOutOfRange(i));
                }
                if e == f.zero() || Some(e) == f.unit() {
                    return Err(ConstructorError::TrivialSyllable(i));
                }
                if i > 0 && syllables[i - 1].0 == tag {
                    return Err(ConstructorError::NotAlternating(i - 1, i));
                }
            }
        }
        Ok(())
    }

    /// Normalizes an arbitrary syllable sequence: merges equal-factor
    /// neighbours through the factor table, collapses to `Zero` on a zero
    /// syllable, and drops identity syllables.
    pub fn normalize(
        &self,
        syllables: &[(FactorTag, ElementId)],
    ) -> Result<FreeProductElement, ConstructorError> {
        let mut stack: Vec<(FactorTag, ElementId)> = Vec::new();
        for &(tag, e) in syllables {
            let f = self.factor(tag);
            if e.0 >= f.len() {
                return Err(ConstructorError::SyllableOutOfRange(stack.len()));
            }
            let mut cur = Some((tag, e));
            while let Some((t, x)) = cur {
                let f = self.factor(t);
                if x == f.zero() {
                    return Ok(FreeProductElement::Zero);
                }
                if Some(x) == f.unit() {
                    break;
                }
                match stack.last().copied() {
                    Some((pt, pe)) if pt == t => {
                        stack.pop();
                        cur = Some((t, f.product(pe, x)));
                    }
                    _ => {
                        stack.push((t, x));
                        cur = None;
                    }
                }
            }
        }
        Ok(if stack.is_empty() {
            FreeProductElement::One
        } else {
            FreeProductElement::Word(stack)
        })
    }

    /// Product of two normal forms; the result is again in normal form.
    pub fn multiply(
        &self,
        x: &FreeProductElement,
        y: &FreeProductElement,
    ) -> Result<FreeProductElement, ConstructorError> {
        self.check(x)?;
        self.check(y)?;
        match (x, y) {
            (FreeProductElement::Zero, _) | (_, FreeProductElement::Zero) => {
                Ok(FreeProductElement::Zero)
            }
            (FreeProductElement::One, y) => Ok(y.clone()),
            (x, FreeProductElement::One) => Ok(x.clone()),
            (FreeProductElement::Word(a), FreeProductElement::Word(b)) => {
                let mut all = a.clone();
                all.extend(b.iter().copied());
                self.normalize(&all)
            }
        }
    }

    /// Whether `x` divides `y` in `M ∗₀ N` (`∃u. xu = y`).
    pub fn divides(&self, x: &FreeProductElement, y: &FreeProductElement) -> bool {
        match (x, y) {
            (_, FreeProductElement::Zero) => true,
            (FreeProductElement::Zero, _) => false,
            (FreeProductElement::One, _) => true,
            (FreeProductElement::Word(xs), y) => {
                let ys: &[(FactorTag, ElementId)] = match y {
                    FreeProductElement::One => &[],
                    FreeProductElement::Word(w) => w,
                    FreeProductElement::Zero => unreachable!(),
                };
                self.word_divides(xs, ys)
            }
        }
    }

    fn word_divides(&self, xs: &[(FactorTag, ElementId)], ys: &[(FactorTag, ElementId)]) -> bool {
        if xs.is_empty() {
            return true;
        }
        let k = xs.len();
        // prefix case: all but the last syllable match exactly and the last
        // divides inside its factor
        if ys.len() >= k && xs[..k - 1] == ys[..k - 1] {
            let (tag, a) = xs[k - 1];
            let (ytag, b) = ys[k - 1];
            if tag == ytag && self.factor(tag).divides(a, b) {
                return true;
            }
        }
        // the last syllable may cancel against a right-invertible element
        let (tag, a) = xs[k - 1];
        if self.right_invertible(tag, a) {
            return self.word_divides(&xs[..k - 1], ys);
        }
        false
    }

    fn right_invertible(&self, tag: FactorTag, e: ElementId) -> bool {
        let f = self.factor(tag);
        match f.unit() {
            Some(u) => f.right_ideal(e).contains(&u),
            None => false,
        }
    }

    /// A complete set of representatives of the nonzero principal right
    /// ideals (`xM = yM` classes) of one factor: the identity plus the
    /// smallest-index representative of every other class.
    pub fn rclass_reps(factor: &Semigroup) -> Result<Vec<ElementId>, ConstructorError> {
        let unit = factor.unit().ok_or(ConstructorError::FactorNotMonoid)?;
        let mut reps: Vec<ElementId> = Vec::new();
        let mut seen: BTreeSet<&BTreeSet<ElementId>> = BTreeSet::new();
        // the identity represents its own class, regardless of index order
        reps.push(unit);
        seen.insert(factor.right_ideal(unit));
        for s in factor.elements() {
            if s == factor.zero() {
                continue;
            }
            if seen.insert(factor.right_ideal(s)) {
                reps.push(s);
            }
        }
        Ok(reps)
    }

    /// Replaces `x` by the canonical generator of its principal right ideal:
    /// right-invertible trailing syllables are dropped and the final syllable
    /// is replaced by its right-ideal class representative.
    fn canonical_generator(&self, x: &FreeProductElement) -> FreeProductElement {
        let mut syllables = match x {
            FreeProductElement::Zero => return FreeProductElement::Zero,
            FreeProductElement::One => return FreeProductElement::One,
            FreeProductElement::Word(w) => w.clone(),
        };
        loop {
            match syllables.last().copied() {
                None => return FreeProductElement::One,
                Some((tag, e)) => {
                    if self.right_invertible(tag, e) {
                        syllables.pop();
                        continue;
                    }
                    let f = self.factor(tag);
                    let rep = f
                        .elements()
                        .find(|&r| f.right_ideal(r) == f.right_ideal(e))
                        .expect("class representative");
                    *syllables.last_mut().unwrap() = (tag, rep);
                    return FreeProductElement::Word(syllables);
                }
            }
        }
    }

    /// Least common multiple of `x` and `y`, verified by enumerating common
    /// multiples of syllable length at most `syllable_bound`.
    pub fn lcm(
        &self,
        x: &FreeProductElement,
        y: &FreeProductElement,
        syllable_bound: usize,
    ) -> Result<FpLcm, ConstructorError> {
        for f in [self.m, self.n] {
            let flags = f.property_flags();
            if !(flags.zero_left_cancellative && flags.admits_lcms) {
                return Err(ConstructorError::FactorLcmMissing);
            }
        }
        self.check(x)?;
        self.check(y)?;
        let candidate = self.lcm_candidate(x, y)?;
        match self.verify_lcm(x, y, &candidate, syllable_bound) {
            Some(true) => Ok(FpLcm::Resolved(candidate)),
            Some(false) => Err(ConstructorError::LcmVerificationFailed),
            None => Ok(FpLcm::Unresolved),
        }
    }

    fn lcm_candidate(
        &self,
        x: &FreeProductElement,
        y: &FreeProductElement,
    ) -> Result<FreeProductElement, ConstructorError> {
        use FreeProductElement::*;
        if *x == Zero || *y == Zero {
            return Ok(Zero);
        }
        if self.divides(x, y) {
            return Ok(y.clone());
        }
        if self.divides(y, x) {
            return Ok(x.clone());
        }
        // ideals are now incomparable; nontrivial intersection requires equal
        // prefixes and class representatives in the same factor
        let cx = self.canonical_generator(x);
        let cy = self.canonical_generator(y);
        let (xs, ys) = match (&cx, &cy) {
            (Word(a), Word(b)) => (a, b),
            // a canonical One would mean one ideal is everything, which the
            // divisibility checks above would have caught
            _ => return Ok(Zero),
        };
        if xs.len() != ys.len() || xs[..xs.len() - 1] != ys[..ys.len() - 1] {
            return Ok(Zero);
        }
        let (xt, xe) = *xs.last().unwrap();
        let (yt, ye) = *ys.last().unwrap();
        if xt != yt {
            return Ok(Zero);
        }
        let f = self.factor(xt);
        let l = f.lcm(xe, ye).ok_or(ConstructorError::FactorLcmMissing)?;
        if l == f.zero() {
            return Ok(Zero);
        }
        let mut syllables = xs[..xs.len() - 1].to_vec();
        syllables.push((xt, l));
        self.normalize(&syllables)
    }

    /// Checks `x ∣ z ∧ y ∣ z ⟺ r ∣ z` over all `z` of bounded syllable
    /// length. Returns `None` when the enumeration would be too large.
    fn verify_lcm(
        &self,
        x: &FreeProductElement,
        y: &FreeProductElement,
        r: &FreeProductElement,
        syllable_bound: usize,
    ) -> Option<bool> {
        let elements = self.elements_up_to(syllable_bound, 200_000)?;
        for z in &elements {
            let common = self.divides(x, z) && self.divides(y, z);
            if common != self.divides(r, z) {
                return Some(false);
            }
        }
        Some(true)
    }

    /// All normal forms of syllable length at most `bound` (plus the
    /// identity), or `None` if there would be more than `cap` of them.
    pub fn elements_up_to(&self, bound: usize, cap: usize) -> Option<Vec<FreeProductElement>> {
        let mut out = alloc::vec![FreeProductElement::One];
        let nontrivial = |f: &Semigroup| -> Vec<ElementId> {
            f.elements()
                .filter(|&e| e != f.zero() && Some(e) != f.unit())
                .collect()
        };
        let ms = nontrivial(self.m);
        let ns = nontrivial(self.n);
        let mut frontier: Vec<Vec<(FactorTag, ElementId)>> = alloc::vec![Vec::new()];
        for _ in 0..bound {
            let mut next = Vec::new();
            for w in &frontier {
                let tags: &[FactorTag] = match w.last() {
                    None => &[FactorTag::M, FactorTag::N],
                    Some((FactorTag::M, _)) => &[FactorTag::N],
                    Some((FactorTag::N, _)) => &[FactorTag::M],
                };
                for &tag in tags {
                    let pool = if tag == FactorTag::M { &ms } else { &ns };
                    for &e in pool {
                        let mut ext = w.clone();
                        ext.push((tag, e));
                        out.push(FreeProductElement::Word(ext.clone()));
                        if out.len() > cap {
                            return None;
                        }
                        next.push(ext);
                    }
                }
            }
            frontier = next;
        }
        Some(out)
    }
}
