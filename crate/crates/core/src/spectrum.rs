//! The semilattice of constructible sets and its spectrum: filters,
//! ultrafilters, tight and relatively tight characters, the correspondence
//! between strings and characters, the dual representation, and the census
//! of ultracharacters.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use thiserror::Error;

use crate::hull::{constructible_sets, HullError};
use crate::semigroup::{ElementId, SOrOne, Semigroup};
use crate::strings::{self, StringSet, StringsError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("family of sets is not closed under intersection")]
    NotMeetClosed,
    #[error("assignment is not a character (zero, non-multiplicative, or vanishing)")]
    NotACharacter,
    #[error("subset is not a filter")]
    NotAFilter,
    #[error("subset is not an ideal of the semilattice")]
    NotAnIdeal,
    #[error("lower set of member {member} has {size} elements, over the cover budget {budget}")]
    CoverBudget { member: usize, size: usize, budget: usize },
    #[error("generated set algebra exceeded {0} members")]
    AlgebraBudget(usize),
    #[error("map is not a representation: it fails to preserve meets or the bottom")]
    NotARepresentation,
    #[error("character does not lie in the domain of the dual action")]
    DualDomain,
    #[error("semilattice is not the constructible family of this semigroup")]
    NotConstructiblyClosed,
    #[error("character is open; no ground decomposition exists")]
    OpenCharacter,
    #[error("string is degenerate and carries no character")]
    DegenerateString,
    #[error("least common multiples are required")]
    LcmRequired,
    #[error(transparent)]
    Hull(#[from] HullError),
    #[error(transparent)]
    Strings(#[from] StringsError),
}

/// A finite meet-semilattice of subsets of `S'`, with the empty set as zero.
#[derive(Clone, Debug)]
pub struct Semilattice {
    members: Vec<BTreeSet<ElementId>>,
    meet: Vec<usize>,
    zero: usize,
}

impl Semilattice {
    /// Builds a semilattice from a family of sets; the family must contain
    /// the empty set and be closed under intersection.
    pub fn from_sets(mut members: Vec<BTreeSet<ElementId>>) -> Result<Self, SpectrumError> {
        members.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
        members.dedup();
        let n = members.len();
        let zero = members
            .iter()
            .position(|s| s.is_empty())
            .ok_or(SpectrumError::NotMeetClosed)?;
        let mut meet = alloc::vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let inter: BTreeSet<ElementId> =
                    members[i].intersection(&members[j]).copied().collect();
                let k = members
                    .iter()
                    .position(|s| *s == inter)
                    .ok_or(SpectrumError::NotMeetClosed)?;
                meet[i * n + j] = k;
            }
        }
        Ok(Semilattice { members, meet, zero })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[BTreeSet<ElementId>] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &BTreeSet<ElementId> {
        &self.members[i]
    }

    pub fn index_of(&self, set: &BTreeSet<ElementId>) -> Option<usize> {
        self.members.iter().position(|s| s == set)
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    /// The semilattice order: `i ≤ j` iff `i ∧ j = i`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.meet(i, j) == i
    }

    pub fn nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| i != self.zero)
    }

    fn lower_set(&self, x: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| y != self.zero && self.leq(y, x))
            .collect()
    }
}

/// The semilattice of constructible sets of a 0-left cancellative semigroup.
pub fn semilattice_of(sg: &Semigroup, cap: usize) -> Result<Semilattice, SpectrumError> {
    Semilattice::from_sets(constructible_sets(sg, cap)?)
}

/// A filter: a nonempty, meet-closed, upward-closed set of nonzero members.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Filter {
    members: BTreeSet<usize>,
}

impl Filter {
    pub fn new(lattice: &Semilattice, members: BTreeSet<usize>) -> Result<Self, SpectrumError> {
        let f = Filter { members };
        if !f.is_valid(lattice) {
            return Err(SpectrumError::NotAFilter);
        }
        Ok(f)
    }

    /// The principal filter of a nonzero member.
    pub fn principal(lattice: &Semilattice, e: usize) -> Result<Self, SpectrumError> {
        if e == lattice.zero_index() {
            return Err(SpectrumError::NotAFilter);
        }
        Ok(Filter {
            members: (0..lattice.len()).filter(|&x| lattice.leq(e, x)).collect(),
        })
    }

    fn is_valid(&self, lattice: &Semilattice) -> bool {
        !self.members.is_empty()
            && !self.members.contains(&lattice.zero_index())
            && self
                .members
                .iter()
                .all(|&x| self.members.iter().all(|&y| self.members.contains(&lattice.meet(x, y))))
            && self
                .members
                .iter()
                .all(|&x| (0..lattice.len()).all(|z| !lattice.leq(x, z) || self.members.contains(&z)))
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }

    /// The meet of all members; a filter in a finite semilattice is the
    /// upward closure of this element.
    pub fn min_member(&self, lattice: &Semilattice) -> usize {
        self.members
            .iter()
            .copied()
            .reduce(|a, b| lattice.meet(a, b))
            .expect("filters are nonempty")
    }
}

/// A character: a nonzero multiplicative `{0,1}` assignment vanishing on the
/// empty set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Character {
    values: Vec<bool>,
}

impl Character {
    pub fn new(lattice: &Semilattice, values: Vec<bool>) -> Result<Self, SpectrumError> {
        if values.len() != lattice.len()
            || !values.iter().any(|&v| v)
            || values[lattice.zero_index()]
        {
            return Err(SpectrumError::NotACharacter);
        }
        for i in 0..lattice.len() {
            for j in 0..lattice.len() {
                if values[lattice.meet(i, j)] != (values[i] && values[j]) {
                    return Err(SpectrumError::NotACharacter);
                }
            }
        }
        Ok(Character { values })
    }

    pub fn value(&self, i: usize) -> bool {
        self.values[i]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// Pointwise order on characters.
    pub fn leq(&self, other: &Character) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&a, &b)| !a || b)
    }
}

/// The character of a filter: the indicator of membership.
pub fn char_of(lattice: &Semilattice, filter: &Filter) -> Character {
    Character {
        values: (0..lattice.len()).map(|i| filter.contains(i)).collect(),
    }
}

/// The filter of a character: its support.
pub fn filter_of(lattice: &Semilattice, phi: &Character) -> Result<Filter, SpectrumError> {
    Filter::new(
        lattice,
        (0..lattice.len()).filter(|&i| phi.value(i)).collect(),
    )
}

/// All filters. In a finite semilattice every filter is the upward closure
/// of its least member, so there is one per nonzero member.
pub fn filters(lattice: &Semilattice) -> Vec<Filter> {
    lattice
        .nonzero()
        .map(|e| Filter::principal(lattice, e).expect("nonzero member"))
        .collect()
}

/// Whether the filter is maximal, by the orthogonality criterion: every
/// member outside the filter is killed by some member inside.
pub fn is_ultra(lattice: &Semilattice, filter: &Filter) -> bool {
    lattice.nonzero().all(|e| {
        filter.contains(e)
            || filter
                .members()
                .iter()
                .any(|&f| lattice.meet(e, f) == lattice.zero_index())
    })
}

/// Whether the filter is maximal, literally: no other filter strictly
/// contains it.
pub fn is_ultra_by_maximality(lattice: &Semilattice, filter: &Filter) -> bool {
    filters(lattice)
        .iter()
        .all(|other| other.members() == filter.members() || !filter.members().is_subset(other.members()))
}

/// The maximal filters.
pub fn ultrafilters(lattice: &Semilattice) -> Vec<Filter> {
    filters(lattice)
        .into_iter()
        .filter(|f| is_ultra(lattice, f))
        .collect()
}

/// Tightness of a character: for every member `x` and every finite cover `Z`
/// of `x` (inside the lower set of `x`), the join of the values on `Z` equals
/// the value at `x`. All subsets of the lower set are tried; lower sets
/// larger than `max_cover` members are refused rather than sampled.
pub fn is_tight(
    lattice: &Semilattice,
    phi: &Character,
    max_cover: usize,
) -> Result<bool, SpectrumError> {
    for x in lattice.nonzero() {
        let below = lattice.lower_set(x);
        if below.len() > max_cover || below.len() > 25 {
            return Err(SpectrumError::CoverBudget {
                member: x,
                size: below.len(),
                budget: max_cover.min(25),
            });
        }
        // subsets of the lower set as bitmasks; a subset covers x when every
        // member below x meets it
        let k = below.len();
        let meets: Vec<u32> = below
            .iter()
            .map(|&y| {
                below
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| lattice.meet(w, y) != lattice.zero_index())
                    .fold(0u32, |m, (i, _)| m | (1 << i))
            })
            .collect();
        let positive: u32 = below
            .iter()
            .enumerate()
            .filter(|&(_, &w)| phi.value(w))
            .fold(0u32, |m, (i, _)| m | (1 << i));
        for mask in 0u32..(1u32 << k) {
            let covers = meets.iter().all(|&m| mask & m != 0);
            if covers && ((mask & positive != 0) != phi.value(x)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A representation of the semilattice by subsets of a finite ambient set:
/// meets go to intersections and the bottom goes to the empty set.
#[derive(Clone, Debug)]
pub struct SetRepresentation {
    ambient: usize,
    images: Vec<BTreeSet<usize>>,
}

impl SetRepresentation {
    pub fn new(
        lattice: &Semilattice,
        ambient: usize,
        images: Vec<BTreeSet<usize>>,
    ) -> Result<Self, SpectrumError> {
        if images.len() != lattice.len()
            || !images[lattice.zero_index()].is_empty()
            || images.iter().flatten().any(|&w| w >= ambient)
        {
            return Err(SpectrumError::NotARepresentation);
        }
        for i in 0..lattice.len() {
            for j in 0..lattice.len() {
                let meet: BTreeSet<usize> =
                    images[i].intersection(&images[j]).copied().collect();
                if images[lattice.meet(i, j)] != meet {
                    return Err(SpectrumError::NotARepresentation);
                }
            }
        }
        Ok(SetRepresentation { ambient, images })
    }

    /// The tautological representation of the semilattice on `S'`.
    pub fn identity(sg: &Semigroup, lattice: &Semilattice) -> Result<Self, SpectrumError> {
        let n = sg.len();
        let images = lattice
            .members()
            .iter()
            .map(|m| m.iter().map(|e| e.0).collect())
            .collect();
        SetRepresentation::new(lattice, n, images)
    }

    /// The representation on strings: each member goes to the set of strings
    /// asymptotically contained in it.
    pub fn on_strings(sg: &Semigroup, lattice: &Semilattice) -> Result<Self, SpectrumError> {
        let all = strings::all_strings(sg);
        let images = lattice
            .members()
            .iter()
            .map(|m| {
                (0..all.len())
                    .filter(|&i| {
                        strings::asymptotically_contained(sg, all[i].elems(), m)
                            .unwrap_or(false)
                    })
                    .collect()
            })
            .collect();
        SetRepresentation::new(lattice, all.len(), images)
    }

    pub fn image(&self, i: usize) -> &BTreeSet<usize> {
        &self.images[i]
    }

    pub fn ambient_len(&self) -> usize {
        self.ambient
    }
}

/// The atoms of the set algebra generated by the images of the
/// representation, each inducing the character `x ↦ [atom ⊆ π(x)]`.
/// Characters are deduplicated; atoms are ordered by their least ambient
/// point.
pub fn pi_tight_characters(
    lattice: &Semilattice,
    pi: &SetRepresentation,
) -> Result<Vec<Character>, SpectrumError> {
    const ALGEBRA_CAP: usize = 8192;
    let mut algebra: BTreeSet<BTreeSet<usize>> = pi.images.iter().cloned().collect();
    algebra.insert(BTreeSet::new());
    loop {
        let snapshot: Vec<BTreeSet<usize>> = algebra.iter().cloned().collect();
        let before = algebra.len();
        for a in &snapshot {
            for b in &snapshot {
                let inter: BTreeSet<usize> = a.intersection(b).copied().collect();
                let diff: BTreeSet<usize> = a.difference(b).copied().collect();
                algebra.insert(inter);
                algebra.insert(diff);
                if algebra.len() > ALGEBRA_CAP {
                    return Err(SpectrumError::AlgebraBudget(ALGEBRA_CAP));
                }
            }
        }
        if algebra.len() == before {
            break;
        }
    }
    let mut atoms: Vec<&BTreeSet<usize>> = algebra
        .iter()
        .filter(|a| {
            !a.is_empty()
                && algebra
                    .iter()
                    .all(|b| b.is_empty() || !b.is_subset(a) || b == *a)
        })
        .collect();
    atoms.sort_by_key(|a| a.iter().next().copied());
    let mut out: Vec<Character> = Vec::new();
    for atom in atoms {
        let values: Vec<bool> = (0..lattice.len())
            .map(|i| atom.is_subset(pi.image(i)))
            .collect();
        if !values.iter().any(|&v| v) {
            continue;
        }
        let phi = Character { values };
        if !out.contains(&phi) {
            out.push(phi);
        }
    }
    Ok(out)
}

/// Relative tightness of one character, by brute force: for every member `x`
/// and every family of at most `join_bound` distinct members below `x` whose
/// images jointly absorb `π(x)`, the character values must follow suit.
pub fn is_pi_tight(
    lattice: &Semilattice,
    pi: &SetRepresentation,
    phi: &Character,
    join_bound: usize,
) -> Result<bool, SpectrumError> {
    for x in 0..lattice.len() {
        let below: Vec<usize> = (0..lattice.len())
            .filter(|&y| lattice.leq(y, x) && y != x)
            .collect();
        if below.len() > 20 {
            return Err(SpectrumError::CoverBudget { member: x, size: below.len(), budget: 20 });
        }
        let k = below.len();
        // which subsets absorb a given ambient point of π(x)
        let absorbs: Vec<u32> = pi
            .image(x)
            .iter()
            .map(|w| {
                below
                    .iter()
                    .enumerate()
                    .filter(|&(_, &y)| pi.image(y).contains(w))
                    .fold(0u32, |m, (i, _)| m | (1 << i))
            })
            .collect();
        let positive: u32 = below
            .iter()
            .enumerate()
            .filter(|&(_, &y)| phi.value(y))
            .fold(0u32, |m, (i, _)| m | (1 << i));
        for mask in 1u32..(1u32 << k) {
            if (mask.count_ones() as usize) > join_bound {
                continue;
            }
            let absorbed = absorbs.iter().all(|&m| mask & m != 0);
            if absorbed && phi.value(x) && mask & positive == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The character of a non-degenerate string: membership of the string in
/// `ε(X)`.
pub fn phi_from_string(
    sg: &Semigroup,
    lattice: &Semilattice,
    sigma: &StringSet,
) -> Result<Character, SpectrumError> {
    if strings::classify_string(sg, sigma).degenerate {
        return Err(SpectrumError::DegenerateString);
    }
    let values: Vec<bool> = lattice
        .members()
        .iter()
        .map(|m| strings::asymptotically_contained(sg, sigma.elems(), m).unwrap_or(false))
        .collect();
    Character::new(lattice, values)
}

/// The element set `σ_φ = {s ∈ S : φ(E_s) = 1}` attached to a character.
/// May be empty; when nonempty it is a string closed under least common
/// multiples.
pub fn sigma_from_char(
    sg: &Semigroup,
    lattice: &Semilattice,
    phi: &Character,
) -> BTreeSet<ElementId> {
    sg.nonzero_elements()
        .filter(|&s| {
            lattice
                .index_of(&sg.e_set(s))
                .map(|i| phi.value(i))
                .unwrap_or(false)
        })
        .collect()
}

/// Character classification flags.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct CharClass {
    /// `σ_φ` is empty.
    pub ground: bool,
    /// `σ_φ` is a nonempty open string.
    pub open: bool,
    /// The character survives on the ideal of members dominated by some
    /// `E_s`; equivalently `σ_φ` is nonempty.
    pub in_e1: bool,
}

/// Whether `x` is dominated by some principal range: `x ⊆ E_s` for some `s`.
pub fn e1_membership(sg: &Semigroup, x: &BTreeSet<ElementId>) -> bool {
    sg.elements().any(|s| x.is_subset(&sg.e_set(s)))
}

/// The ideal of the semilattice consisting of members dominated by a
/// principal range.
pub fn e1_ideal(sg: &Semigroup, lattice: &Semilattice) -> BTreeSet<usize> {
    (0..lattice.len())
        .filter(|&i| e1_membership(sg, lattice.member(i)))
        .collect()
}

pub fn classify_character(
    sg: &Semigroup,
    lattice: &Semilattice,
    phi: &Character,
) -> CharClass {
    let sigma = sigma_from_char(sg, lattice, phi);
    let ground = sigma.is_empty();
    let open = !ground
        && strings::is_string(sg, &sigma)
        && strings::is_open(sg, &StringSet::from_set(sigma.clone()));
    CharClass { ground, open, in_e1: !ground }
}

/// `θ̂_s(φ)`: the dual action, `X ↦ φ(θ_s⁻¹(E_s ∩ X))`. Defined when
/// `φ(F_s) = 1`.
pub fn dual_theta(
    sg: &Semigroup,
    lattice: &Semilattice,
    s: ElementId,
    phi: &Character,
) -> Result<Character, SpectrumError> {
    let f_s = lattice.index_of(&sg.f_set(s)).ok_or(SpectrumError::DualDomain)?;
    if !phi.value(f_s) {
        return Err(SpectrumError::DualDomain);
    }
    let values: Vec<bool> = lattice
        .members()
        .iter()
        .map(|x| {
            let pulled: BTreeSet<ElementId> = sg
                .nonzero_elements()
                .filter(|&y| x.contains(&sg.product(s, y)))
                .collect();
            lattice
                .index_of(&pulled)
                .map(|i| phi.value(i))
                .ok_or(SpectrumError::NotConstructiblyClosed)
        })
        .collect::<Result<_, _>>()?;
    Character::new(lattice, values)
}

/// `θ̂_s⁻¹(φ)`: `X ↦ φ(θ_s(F_s ∩ X))`. Defined when `φ(E_s) = 1`.
pub fn dual_theta_inv(
    sg: &Semigroup,
    lattice: &Semilattice,
    s: ElementId,
    phi: &Character,
) -> Result<Character, SpectrumError> {
    let e_s = lattice.index_of(&sg.e_set(s)).ok_or(SpectrumError::DualDomain)?;
    if !phi.value(e_s) {
        return Err(SpectrumError::DualDomain);
    }
    let values: Vec<bool> = lattice
        .members()
        .iter()
        .map(|x| {
            let pushed: BTreeSet<ElementId> = x
                .iter()
                .map(|&y| sg.product(s, y))
                .filter(|&p| p != sg.zero())
                .collect();
            lattice
                .index_of(&pushed)
                .map(|i| phi.value(i))
                .ok_or(SpectrumError::NotConstructiblyClosed)
        })
        .collect::<Result<_, _>>()?;
    Character::new(lattice, values)
}

/// Extension of the dual action to `S ∪ {1}`; the unit acts as the identity.
pub fn dual_theta_stilde(
    sg: &Semigroup,
    lattice: &Semilattice,
    u: SOrOne,
    phi: &Character,
) -> Result<Character, SpectrumError> {
    match u {
        SOrOne::One => Ok(phi.clone()),
        SOrOne::Elem(s) => dual_theta(sg, lattice, s, phi),
    }
}

/// For a non-open character, the unique pair `(u, φ₀)` with `φ₀` ground and
/// `φ = θ̂_u(φ₀)`; `u` is the external unit exactly when `φ` itself is
/// ground.
pub fn nonopen_decomposition(
    sg: &Semigroup,
    lattice: &Semilattice,
    phi: &Character,
) -> Result<(SOrOne, Character), SpectrumError> {
    let class = classify_character(sg, lattice, phi);
    if class.open {
        return Err(SpectrumError::OpenCharacter);
    }
    if class.ground {
        return Ok((SOrOne::One, phi.clone()));
    }
    let sigma = sigma_from_char(sg, lattice, phi);
    // a nonempty non-open σ_φ is the divisor set of a unique r ∉ rS
    let r = sg
        .nonzero_elements()
        .find(|&r| {
            !sg.right_ideal(r).contains(&r) && sg.divisors(r).ok().as_ref() == Some(&sigma)
        })
        .ok_or(SpectrumError::OpenCharacter)?;
    let ground = dual_theta_inv(sg, lattice, r, phi)?;
    Ok((SOrOne::Elem(r), ground))
}

/// The census of ultracharacters.
#[derive(Clone, Debug)]
pub struct Census {
    /// Open ultracharacters, each with its (open, quasi-maximal) string.
    pub open_ultras: Vec<(StringSet, Character)>,
    /// Non-open ultracharacters as `(u, ground, character)` with
    /// `character = θ̂_u(ground)`.
    pub nonopen_ultras: Vec<(SOrOne, Character, Character)>,
    /// Strings whose character is an ultracharacter.
    pub quasi_maximal_strings: Vec<StringSet>,
}

/// Partitions the ultracharacters of the constructible-set semilattice into
/// open ones (characters of open quasi-maximal strings) and the dual orbit
/// of ground ultracharacters.
pub fn ultra_census(sg: &Semigroup, cap: usize) -> Result<Census, SpectrumError> {
    if !sg.admits_lcms() {
        return Err(SpectrumError::LcmRequired);
    }
    let lattice = semilattice_of(sg, cap)?;
    let mut open_ultras = Vec::new();
    let mut nonopen_ultras = Vec::new();
    for ultra in ultrafilters(&lattice) {
        let phi = char_of(&lattice, &ultra);
        let class = classify_character(sg, &lattice, &phi);
        if class.open {
            let sigma = StringSet::from_set(sigma_from_char(sg, &lattice, &phi));
            open_ultras.push((sigma, phi));
        } else {
            let (u, ground) = nonopen_decomposition(sg, &lattice, &phi)?;
            nonopen_ultras.push((u, ground, phi));
        }
    }
    let mut quasi_maximal_strings = Vec::new();
    for sigma in strings::all_strings(sg) {
        if strings::classify_string(sg, &sigma).degenerate {
            continue;
        }
        let phi = phi_from_string(sg, &lattice, &sigma)?;
        let filter = filter_of(&lattice, &phi)?;
        if is_ultra(&lattice, &filter) {
            quasi_maximal_strings.push(sigma);
        }
    }
    Ok(Census { open_ultras, nonopen_ultras, quasi_maximal_strings })
}

/// The restriction correspondence for an ideal `J` of the semilattice:
/// filters of `J` and filters of the whole semilattice meeting `J` are
/// matched by upward closure and intersection.
#[derive(Clone, Debug)]
pub struct IdealRestriction {
    /// Pairs `(filter of J, filter of E)` related by the correspondence.
    pub pairs: Vec<(BTreeSet<usize>, Filter)>,
}

pub fn ideal_restriction(
    lattice: &Semilattice,
    ideal: &BTreeSet<usize>,
) -> Result<IdealRestriction, SpectrumError> {
    for &j in ideal {
        if j >= lattice.len() {
            return Err(SpectrumError::NotAnIdeal);
        }
        for x in 0..lattice.len() {
            if !ideal.contains(&lattice.meet(j, x)) {
                return Err(SpectrumError::NotAnIdeal);
            }
        }
    }
    if !ideal.contains(&lattice.zero_index()) {
        return Err(SpectrumError::NotAnIdeal);
    }
    // filters of J: upward-closed (within J) meet-closed nonzero subsets;
    // in the finite case, one per nonzero member of J
    let mut pairs = Vec::new();
    for &m in ideal {
        if m == lattice.zero_index() {
            continue;
        }
        let j_filter: BTreeSet<usize> = ideal
            .iter()
            .copied()
            .filter(|&x| lattice.leq(m, x))
            .collect();
        let e_filter = Filter::new(
            lattice,
            (0..lattice.len()).filter(|&x| lattice.leq(m, x)).collect(),
        )?;
        pairs.push((j_filter, e_filter));
    }
    pairs.sort();
    pairs.dedup();
    Ok(IdealRestriction { pairs })
}
