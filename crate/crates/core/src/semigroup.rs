//! Finite semigroups with zero, given by explicit multiplication tables.
//!
//! A [`Semigroup`] is validated on construction: associativity is checked on
//! all `n^3` triples, the designated zero must be absorbing, and names must be
//! unique. Divisibility and the principal right ideals `sS` are precomputed so
//! that every later question ("does `s` divide `t`?", "what is `sS ∩ tS`?") is
//! a table lookup.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use thiserror::Error;

/// Index of an element in a [`Semigroup`]'s name list.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(pub usize);

/// An element of the unitized semigroup `S ∪ {1}`, where `1` is an external
/// unit that never occurs inside multiplication tables.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SOrOne {
    /// The adjoined external unit.
    One,
    /// An honest element of `S`.
    Elem(ElementId),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("zero name `{0}` is not among the element names")]
    ZeroMissing(String),
    #[error("table row {row} has {got} entries, expected {expected}")]
    RowLength { row: usize, got: usize, expected: usize },
    #[error("expected {expected} table rows, got {got}")]
    RowCount { got: usize, expected: usize },
    #[error("unknown token `{token}` in table at row {row}, column {col}")]
    UnknownToken { token: String, row: usize, col: usize },
    #[error("associativity fails: ({x}·{y})·{z} ≠ {x}·({y}·{z})")]
    Associativity { x: String, y: String, z: String },
    #[error("zero is not absorbing at element `{0}`")]
    ZeroNotAbsorbing(String),
    #[error("operation is undefined for the zero element")]
    ZeroArgument,
    #[error("element index {0} out of range")]
    BadIndex(usize),
    #[error("`{0}` is not an ideal")]
    NotAnIdeal(String),
    #[error("no word provenance: semigroup was not built from a language")]
    NoWordProvenance,
    #[error("alignment search for ({s}, {t}) has {candidates} candidates, over the budget of {budget}")]
    AlignmentBudget { s: String, t: String, candidates: usize, budget: usize },
}

/// Structural predicates of a semigroup with zero, each computed by a literal
/// definition scan over the table.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub struct PropertyFlags {
    /// `st = sr ≠ 0` forces `t = r`.
    pub zero_left_cancellative: bool,
    /// `ts = rs ≠ 0` forces `t = r`.
    pub zero_right_cancellative: bool,
    /// `rs ≠ 0` and `st ≠ 0` imply `rst ≠ 0`.
    pub categorical_at_zero: bool,
    /// Left multiplication acts faithfully: distinct elements have distinct
    /// rows in the table.
    pub right_reductive: bool,
    /// Every nonzero `s` satisfies `s ∈ sS`.
    pub right_local_units: bool,
    /// A two-sided identity is present.
    pub unital: bool,
    /// Every pair of elements has a least common multiple.
    pub admits_lcms: bool,
}

/// Element-level classification flags.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct ElementClass {
    pub idempotent: bool,
    /// The only divisor of the element is the element itself.
    pub prime: bool,
    /// The element is not a product of two elements.
    pub irreducible: bool,
    /// Irreducible and killed by left multiplication: `s ∉ S²` and `Ss = {0}`.
    pub degenerate: bool,
    /// The unique idempotent `e` with `se = s`, when `s ∈ sS`.
    pub right_unit: Option<ElementId>,
}

/// Outcome of the right-ideal intersection analysis for a pair `(s, t)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Alignment {
    /// `sS ∩ tS = rS` with `r` a common multiple: a least common multiple.
    Principal(ElementId),
    /// `sS ∩ tS = BS` for a finite set `B` of common multiples generating
    /// pairwise disjoint ideals (`bS ∩ b'S = {0}`).
    Basis(Vec<ElementId>),
    /// As above but without the disjointness requirement.
    Generating(Vec<ElementId>),
    /// No finite family of common multiples generates the intersection.
    None,
}

/// A finite semigroup with a designated absorbing zero.
#[derive(Clone, Debug)]
pub struct Semigroup {
    names: Vec<String>,
    zero: ElementId,
    unit: Option<ElementId>,
    table: Vec<ElementId>,
    divides: Vec<bool>,
    right_ideals: Vec<BTreeSet<ElementId>>,
    word_lengths: Option<Vec<usize>>,
    flags: PropertyFlags,
}

impl Semigroup {
    /// Validates a multiplication table given symbolically.
    ///
    /// `rows[i][j]` is the name of `names[i] · names[j]`.
    pub fn validate(
        names: Vec<String>,
        zero_name: &str,
        rows: &[Vec<String>],
    ) -> Result<Self, SemigroupError> {
        let n = names.len();
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.clone()) {
                return Err(SemigroupError::DuplicateName(name.clone()));
            }
        }
        let zero = names
            .iter()
            .position(|s| s == zero_name)
            .ok_or_else(|| SemigroupError::ZeroMissing(zero_name.to_string()))?;
        if rows.len() != n {
            return Err(SemigroupError::RowCount { got: rows.len(), expected: n });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(SemigroupError::RowLength { row: i, got: row.len(), expected: n });
            }
            for (j, token) in row.iter().enumerate() {
                let id = names.iter().position(|s| s == token).ok_or_else(|| {
                    SemigroupError::UnknownToken { token: token.clone(), row: i, col: j }
                })?;
                table.push(id);
            }
        }
        Self::from_table(names, zero, table)
    }

    /// Builds and validates a semigroup from an index-level table.
    /// `table[i * n + j]` is the index of the product of elements `i` and `j`.
    pub fn from_table(
        names: Vec<String>,
        zero: usize,
        table: Vec<usize>,
    ) -> Result<Self, SemigroupError> {
        let n = names.len();
        if zero >= n {
            return Err(SemigroupError::BadIndex(zero));
        }
        if table.len() != n * n {
            return Err(SemigroupError::RowCount { got: table.len() / n.max(1), expected: n });
        }
        for &e in &table {
            if e >= n {
                return Err(SemigroupError::BadIndex(e));
            }
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.clone()) {
                return Err(SemigroupError::DuplicateName(name.clone()));
            }
        }
        let at = |i: usize, j: usize| table[i * n + j];
        if let Some(s) = (0..n).find(|&s| at(zero, s) != zero || at(s, zero) != zero) {
            return Err(SemigroupError::ZeroNotAbsorbing(names[s].clone()));
        }
        if let Some((x, y, z)) = crate::oracle::associativity_violation(n, &table) {
            return Err(SemigroupError::Associativity {
                x: names[x].clone(),
                y: names[y].clone(),
                z: names[z].clone(),
            });
        }

        let table: Vec<ElementId> = table.into_iter().map(ElementId).collect();
        let mut sg = Semigroup {
            names,
            zero: ElementId(zero),
            unit: None,
            table,
            divides: Vec::new(),
            right_ideals: Vec::new(),
            word_lengths: None,
            flags: PropertyFlags::default(),
        };
        sg.unit = (0..n)
            .map(ElementId)
            .find(|&e| sg.elements().all(|s| sg.product(e, s) == s && sg.product(s, e) == s));
        sg.right_ideals = (0..n)
            .map(|s| sg.elements().map(|x| sg.product(ElementId(s), x)).collect())
            .collect();
        let mut divides = alloc::vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                divides[i * n + j] =
                    i == j || sg.right_ideals[i].contains(&ElementId(j));
            }
        }
        sg.divides = divides;
        sg.flags = sg.scan_flags();
        Ok(sg)
    }

    pub(crate) fn set_word_lengths(&mut self, lengths: Vec<usize>) {
        debug_assert_eq!(lengths.len(), self.len());
        self.word_lengths = Some(lengths);
    }

    fn scan_flags(&self) -> PropertyFlags {
        let zero = self.zero;
        let mut zlc = true;
        let mut zrc = true;
        for s in self.elements() {
            for t in self.elements() {
                for r in self.elements() {
                    if t == r {
                        continue;
                    }
                    if self.product(s, t) == self.product(s, r) && self.product(s, t) != zero {
                        zlc = false;
                    }
                    if self.product(t, s) == self.product(r, s) && self.product(t, s) != zero {
                        zrc = false;
                    }
                }
            }
        }
        let mut cat0 = true;
        'outer: for r in self.elements() {
            for s in self.elements() {
                if self.product(r, s) == zero {
                    continue;
                }
                for t in self.elements() {
                    if self.product(s, t) != zero && self.product(self.product(r, s), t) == zero {
                        cat0 = false;
                        break 'outer;
                    }
                }
            }
        }
        let right_reductive = self.elements().all(|s| {
            self.elements()
                .all(|t| s == t || self.elements().any(|x| self.product(s, x) != self.product(t, x)))
        });
        let right_local_units = self
            .nonzero_elements()
            .all(|s| self.right_ideals[s.0].contains(&s));
        let admits_lcms = self
            .elements()
            .all(|s| self.elements().all(|t| !self.lcm_candidates(s, t).is_empty()));
        PropertyFlags {
            zero_left_cancellative: zlc,
            zero_right_cancellative: zrc,
            categorical_at_zero: cat0,
            right_reductive,
            right_local_units,
            unital: self.unit.is_some(),
            admits_lcms,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, id: ElementId) -> &str {
        &self.names[id.0]
    }

    pub fn id_of(&self, name: &str) -> Option<ElementId> {
        self.names.iter().position(|s| s == name).map(ElementId)
    }

    pub fn zero(&self) -> ElementId {
        self.zero
    }

    pub fn unit(&self) -> Option<ElementId> {
        self.unit
    }

    pub fn product(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a.0 * self.len() + b.0]
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.len()).map(ElementId)
    }

    /// All elements of `S' = S \ {0}`, in index order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        let zero = self.zero;
        self.elements().filter(move |&s| s != zero)
    }

    /// The principal right ideal `sS` (always contains the zero).
    pub fn right_ideal(&self, s: ElementId) -> &BTreeSet<ElementId> {
        &self.right_ideals[s.0]
    }

    /// `E_s = sS \ {0}`, the range of left multiplication by `s`.
    pub fn e_set(&self, s: ElementId) -> BTreeSet<ElementId> {
        let mut e = self.right_ideals[s.0].clone();
        e.remove(&self.zero);
        e
    }

    /// `F_s = {x ∈ S' : sx ≠ 0}`, the domain of left multiplication by `s`.
    pub fn f_set(&self, s: ElementId) -> BTreeSet<ElementId> {
        self.nonzero_elements()
            .filter(|&x| self.product(s, x) != self.zero)
            .collect()
    }

    /// Whether `s` divides `t`: `t = s` or `su = t` for some `u ∈ S`.
    pub fn divides(&self, s: ElementId, t: ElementId) -> bool {
        self.divides[s.0 * self.len() + t.0]
    }

    /// The divisor set `δ_s = {t : t ∣ s}` of a nonzero element.
    pub fn divisors(&self, s: ElementId) -> Result<BTreeSet<ElementId>, SemigroupError> {
        if s == self.zero {
            return Err(SemigroupError::ZeroArgument);
        }
        Ok(self.elements().filter(|&t| self.divides(t, s)).collect())
    }

    pub fn idempotents(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.elements().filter(move |&e| self.product(e, e) == e)
    }

    /// Flags computed at validation time by definition scans.
    pub fn property_flags(&self) -> PropertyFlags {
        self.flags
    }

    pub fn classify(&self, s: ElementId) -> Result<ElementClass, SemigroupError> {
        if s == self.zero {
            return Err(SemigroupError::ZeroArgument);
        }
        let idempotent = self.product(s, s) == s;
        let prime = self.divisors(s)?.len() == 1;
        let in_s2 = self
            .elements()
            .any(|x| self.elements().any(|y| self.product(x, y) == s));
        let killed = self.elements().all(|x| self.product(x, s) == self.zero);
        let right_unit = if self.right_ideals[s.0].contains(&s) {
            self.idempotents().find(|&e| self.product(s, e) == s)
        } else {
            None
        };
        Ok(ElementClass {
            idempotent,
            prime,
            irreducible: !in_s2,
            degenerate: !in_s2 && killed,
            right_unit,
        })
    }

    /// All elements `r` satisfying `sS ∩ tS = rS` with `s ∣ r` and `t ∣ r`,
    /// in index order. Any of them is a least common multiple; they all
    /// generate the same right ideal.
    pub fn lcm_candidates(&self, s: ElementId, t: ElementId) -> Vec<ElementId> {
        let inter: BTreeSet<ElementId> = self
            .right_ideals[s.0]
            .intersection(&self.right_ideals[t.0])
            .copied()
            .collect();
        self.elements()
            .filter(|&r| {
                self.right_ideals[r.0] == inter && self.divides(s, r) && self.divides(t, r)
            })
            .collect()
    }

    /// The least common multiple with the smallest element index, if any.
    pub fn lcm(&self, s: ElementId, t: ElementId) -> Option<ElementId> {
        self.lcm_candidates(s, t).into_iter().next()
    }

    pub fn admits_lcms(&self) -> bool {
        self.flags.admits_lcms
    }

    /// Analyses `sS ∩ tS` as a union of principal right ideals of common
    /// multiples. Preference order: a single generator, then a pairwise
    /// disjoint basis, then an arbitrary finite generating family.
    pub fn alignment(&self, s: ElementId, t: ElementId) -> Result<Alignment, SemigroupError> {
        if s == self.zero || t == self.zero {
            return Err(SemigroupError::ZeroArgument);
        }
        if let Some(r) = self.lcm(s, t) {
            return Ok(Alignment::Principal(r));
        }
        let target: BTreeSet<ElementId> = self
            .right_ideals[s.0]
            .intersection(&self.right_ideals[t.0])
            .copied()
            .collect();
        let candidates: Vec<ElementId> = self
            .nonzero_elements()
            .filter(|&b| {
                self.divides(s, b)
                    && self.divides(t, b)
                    && self.right_ideals[b.0].is_subset(&target)
            })
            .collect();
        // the search walks all candidate subsets; refuse rather than guess
        const BUDGET: usize = 16;
        if candidates.len() > BUDGET {
            return Err(SemigroupError::AlignmentBudget {
                s: self.name(s).to_string(),
                t: self.name(t).to_string(),
                candidates: candidates.len(),
                budget: BUDGET,
            });
        }
        let mut generating: Option<Vec<ElementId>> = None;
        for subset in subsets_by_size(&candidates) {
            let mut union: BTreeSet<ElementId> = BTreeSet::new();
            union.insert(self.zero);
            for &b in &subset {
                union.extend(self.right_ideals[b.0].iter().copied());
            }
            if union != target {
                continue;
            }
            let disjoint = subset.iter().enumerate().all(|(i, &b)| {
                subset[i + 1..].iter().all(|&b2| {
                    self.right_ideals[b.0]
                        .intersection(&self.right_ideals[b2.0])
                        .all(|&x| x == self.zero)
                })
            });
            if disjoint {
                return Ok(Alignment::Basis(subset));
            }
            if generating.is_none() {
                generating = Some(subset);
            }
        }
        Ok(match generating {
            Some(r) => Alignment::Generating(r),
            None => Alignment::None,
        })
    }

    /// Collapses an ideal `I ∋ 0` to the zero element. Names of surviving
    /// elements are preserved in their original order.
    pub fn rees_quotient(&self, ideal: &BTreeSet<ElementId>) -> Result<Semigroup, SemigroupError> {
        if !ideal.contains(&self.zero) {
            return Err(SemigroupError::NotAnIdeal("0 missing".to_string()));
        }
        for &i in ideal {
            if i.0 >= self.len() {
                return Err(SemigroupError::BadIndex(i.0));
            }
            for s in self.elements() {
                if !ideal.contains(&self.product(s, i)) || !ideal.contains(&self.product(i, s)) {
                    return Err(SemigroupError::NotAnIdeal(self.name(i).to_string()));
                }
            }
        }
        let keep: Vec<ElementId> = self
            .elements()
            .filter(|s| *s == self.zero || !ideal.contains(s))
            .collect();
        let names: Vec<String> = keep.iter().map(|&s| self.name(s).to_string()).collect();
        let index_of = |s: ElementId| keep.iter().position(|&k| k == s);
        let zero = index_of(self.zero).expect("zero survives");
        let mut table = Vec::with_capacity(keep.len() * keep.len());
        for &a in &keep {
            for &b in &keep {
                let p = self.product(a, b);
                table.push(if ideal.contains(&p) { zero } else { index_of(p).unwrap() });
            }
        }
        Semigroup::from_table(names, zero, table)
    }

    /// Word length provenance for semigroups built from a language.
    pub fn word_length(&self, s: ElementId) -> Result<usize, SemigroupError> {
        let lengths = self
            .word_lengths
            .as_ref()
            .ok_or(SemigroupError::NoWordProvenance)?;
        Ok(lengths[s.0])
    }

    pub fn has_word_provenance(&self) -> bool {
        self.word_lengths.is_some()
    }

    /// Whether every element of `x` has word length at most `bound`.
    pub fn is_bounded(
        &self,
        x: &BTreeSet<ElementId>,
        bound: usize,
    ) -> Result<bool, SemigroupError> {
        for &s in x {
            if self.word_length(s)? > bound {
                return Ok(false);
            }
        }
        Ok(true)
    }

    // --- arithmetic over the unitized semigroup S ∪ {1} ---

    /// Product in `S ∪ {1}`; the external unit is neutral.
    pub fn stilde_mul(&self, a: SOrOne, b: SOrOne) -> SOrOne {
        match (a, b) {
            (SOrOne::One, x) => x,
            (x, SOrOne::One) => x,
            (SOrOne::Elem(x), SOrOne::Elem(y)) => SOrOne::Elem(self.product(x, y)),
        }
    }

    /// Divisibility in `S ∪ {1}`: `1` divides everything, and only `1`
    /// divides `1`.
    pub fn stilde_divides(&self, a: SOrOne, b: SOrOne) -> bool {
        match (a, b) {
            (SOrOne::One, _) => true,
            (_, SOrOne::One) => false,
            (SOrOne::Elem(x), SOrOne::Elem(y)) => self.divides(x, y),
        }
    }

    /// Least common multiple in `S ∪ {1}`. When either side is the external
    /// unit the other side is returned (and `1 ∨ 1 = 1` only); otherwise the
    /// table-level lcm is used.
    pub fn stilde_lcm(&self, a: SOrOne, b: SOrOne) -> Option<SOrOne> {
        match (a, b) {
            (SOrOne::One, x) => Some(x),
            (x, SOrOne::One) => Some(x),
            (SOrOne::Elem(x), SOrOne::Elem(y)) => self.lcm(x, y).map(SOrOne::Elem),
        }
    }

    /// `F_u` for `u ∈ S ∪ {1}`; the unit acts as the identity on `S'`.
    pub fn f_set_stilde(&self, u: SOrOne) -> BTreeSet<ElementId> {
        match u {
            SOrOne::One => self.nonzero_elements().collect(),
            SOrOne::Elem(s) => self.f_set(s),
        }
    }
}

/// Subsets of `items`, smallest first, lexicographic within a size. The empty
/// subset is included.
pub(crate) fn subsets_by_size<T: Copy>(items: &[T]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = alloc::vec![Vec::new()];
    let mut frontier: Vec<(usize, Vec<T>)> = alloc::vec![(0, Vec::new())];
    for _ in 0..items.len() {
        let mut next = Vec::new();
        for (start, subset) in &frontier {
            for (i, &item) in items.iter().enumerate().skip(*start) {
                let mut s = subset.clone();
                s.push(item);
                out.push(s.clone());
                next.push((i + 1, s));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    out
}
