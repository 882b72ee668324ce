//! Partial bijections of `S' = S \ {0}`, the regular representation, the
//! inverse hull it generates, constructible sets, and the least-common-
//! multiple normal-form calculus for hull elements.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use thiserror::Error;

use crate::semigroup::{ElementId, SOrOne, Semigroup};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum HullError {
    #[error("semigroup is not 0-left cancellative; left multiplication is not injective")]
    NotLeftCancellative,
    #[error("the mapping is not injective")]
    NotInjective,
    #[error("hull generation exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("normal forms need least common multiples, which this semigroup lacks")]
    LcmRequired,
    #[error("normal form violates an invariant: {0}")]
    InvalidNormalForm(&'static str),
    #[error("element is not a member of the hull")]
    NotInHull,
    #[error("cover is not inside the lower set of the target idempotent")]
    CoverNotBelow,
    #[error("no pairwise disjoint basis is available for this pair")]
    BasisUnavailable,
    #[error("basis member has no factorization over the pair")]
    NoFactorization,
}

/// An injective partial self-map of `S'`, stored as its graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PartialBijection {
    map: BTreeMap<ElementId, ElementId>,
}

impl PartialBijection {
    pub fn empty() -> Self {
        PartialBijection::default()
    }

    pub fn identity_on(domain: &BTreeSet<ElementId>) -> Self {
        PartialBijection { map: domain.iter().map(|&x| (x, x)).collect() }
    }

    pub fn from_pairs<I: IntoIterator<Item = (ElementId, ElementId)>>(
        pairs: I,
    ) -> Result<Self, HullError> {
        let mut map = BTreeMap::new();
        let mut range = BTreeSet::new();
        for (k, v) in pairs {
            if map.insert(k, v).is_some() || !range.insert(v) {
                return Err(HullError::NotInjective);
            }
        }
        Ok(PartialBijection { map })
    }

    pub fn apply(&self, x: ElementId) -> Option<ElementId> {
        self.map.get(&x).copied()
    }

    pub fn domain(&self) -> BTreeSet<ElementId> {
        self.map.keys().copied().collect()
    }

    pub fn range(&self) -> BTreeSet<ElementId> {
        self.map.values().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (ElementId, ElementId)> + '_ {
        self.map.iter().map(|(&k, &v)| (k, v))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PartialBijection) -> PartialBijection {
        let map = other
            .map
            .iter()
            .filter_map(|(&x, &y)| self.apply(y).map(|z| (x, z)))
            .collect();
        PartialBijection { map }
    }

    pub fn invert(&self) -> PartialBijection {
        PartialBijection { map: self.map.iter().map(|(&k, &v)| (v, k)).collect() }
    }

    /// Idempotency read off the structure: the map is the identity on its
    /// domain.
    pub fn is_identity_map(&self) -> bool {
        self.map.iter().all(|(k, v)| k == v)
    }

    /// Idempotency by evaluation: `φ∘φ = φ`.
    pub fn is_idempotent_by_evaluation(&self) -> bool {
        self.compose(self) == *self
    }

    pub fn fixed_point(&self) -> Option<ElementId> {
        self.map.iter().find(|(k, v)| k == v).map(|(&k, _)| k)
    }

    /// Natural partial order of the symmetric inverse monoid: `self ≥ other`
    /// iff `self` extends `other`.
    pub fn extends(&self, other: &PartialBijection) -> bool {
        other.map.iter().all(|(&k, &v)| self.apply(k) == Some(v))
    }
}

/// The regular representation `θ_s : F_s → E_s`, `x ↦ sx`.
pub fn regular_rep(sg: &Semigroup, s: ElementId) -> Result<PartialBijection, HullError> {
    if !sg.property_flags().zero_left_cancellative {
        return Err(HullError::NotLeftCancellative);
    }
    Ok(theta_unchecked(sg, s))
}

fn theta_unchecked(sg: &Semigroup, s: ElementId) -> PartialBijection {
    let map = sg
        .nonzero_elements()
        .filter_map(|x| {
            let y = sg.product(s, x);
            (y != sg.zero()).then_some((x, y))
        })
        .collect();
    PartialBijection { map }
}

/// `θ_u` for `u ∈ S ∪ {1}`; the external unit acts as the identity on `S'`.
pub fn theta_stilde(sg: &Semigroup, u: SOrOne) -> Result<PartialBijection, HullError> {
    match u {
        SOrOne::One => Ok(PartialBijection::identity_on(&sg.nonzero_elements().collect())),
        SOrOne::Elem(s) => regular_rep(sg, s),
    }
}

/// One generator of the hull: `θ_s` or its inverse.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Gen {
    Theta(ElementId),
    ThetaInv(ElementId),
}

/// The inverse hull: the closure of `{θ_s, θ_s⁻¹}` under composition,
/// generated breadth first. Each element carries the first word in the
/// generators that produced it.
#[derive(Clone, Debug)]
pub struct Hull {
    elements: Vec<PartialBijection>,
    witnesses: Vec<Vec<Gen>>,
    index: BTreeMap<PartialBijection, usize>,
}

impl Hull {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PartialBijection] {
        &self.elements
    }

    pub fn witness(&self, i: usize) -> &[Gen] {
        &self.witnesses[i]
    }

    pub fn index_of(&self, phi: &PartialBijection) -> Option<usize> {
        self.index.get(phi).copied()
    }

    pub fn contains(&self, phi: &PartialBijection) -> bool {
        self.index.contains_key(phi)
    }

    /// Domains of the idempotent elements, sorted by size then contents:
    /// the constructible subsets of `S'`.
    pub fn constructible_sets(&self) -> Vec<BTreeSet<ElementId>> {
        let mut sets: BTreeSet<BTreeSet<ElementId>> = self
            .elements
            .iter()
            .filter(|phi| phi.is_identity_map())
            .map(|phi| phi.domain())
            .collect();
        // the empty map is always present, hence the empty set
        sets.insert(BTreeSet::new());
        let mut out: Vec<BTreeSet<ElementId>> = sets.into_iter().collect();
        out.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
        out
    }
}

/// Generates the inverse hull of a 0-left cancellative semigroup by
/// breadth-first closure, failing once more than `cap` elements appear.
pub fn generate_hull(sg: &Semigroup, cap: usize) -> Result<Hull, HullError> {
    if !sg.property_flags().zero_left_cancellative {
        return Err(HullError::NotLeftCancellative);
    }
    let mut gens: Vec<(Gen, PartialBijection)> = Vec::new();
    for s in sg.elements() {
        gens.push((Gen::Theta(s), theta_unchecked(sg, s)));
    }
    for s in sg.elements() {
        gens.push((Gen::ThetaInv(s), theta_unchecked(sg, s).invert()));
    }

    let mut elements: Vec<PartialBijection> = Vec::new();
    let mut witnesses: Vec<Vec<Gen>> = Vec::new();
    let mut index: BTreeMap<PartialBijection, usize> = BTreeMap::new();
    let insert = |phi: PartialBijection,
                      word: Vec<Gen>,
                      elements: &mut Vec<PartialBijection>,
                      witnesses: &mut Vec<Vec<Gen>>,
                      index: &mut BTreeMap<PartialBijection, usize>|
     -> Result<bool, HullError> {
        if index.contains_key(&phi) {
            return Ok(false);
        }
        if elements.len() >= cap {
            return Err(HullError::CapExceeded(cap));
        }
        index.insert(phi.clone(), elements.len());
        elements.push(phi);
        witnesses.push(word);
        Ok(true)
    };

    for (g, phi) in &gens {
        insert(phi.clone(), alloc::vec![*g], &mut elements, &mut witnesses, &mut index)?;
    }
    let mut cursor = 0;
    while cursor < elements.len() {
        let current = elements[cursor].clone();
        let word = witnesses[cursor].clone();
        for (g, phi) in &gens {
            let next = current.compose(phi);
            let mut next_word = word.clone();
            next_word.push(*g);
            insert(next, next_word, &mut elements, &mut witnesses, &mut index)?;
        }
        cursor += 1;
    }
    Ok(Hull { elements, witnesses, index })
}

/// Constructible subsets of `S'`, computed as the idempotent domains of the
/// hull.
pub fn constructible_sets(
    sg: &Semigroup,
    cap: usize,
) -> Result<Vec<BTreeSet<ElementId>>, HullError> {
    Ok(generate_hull(sg, cap)?.constructible_sets())
}

/// Every hull element dominating a nonzero idempotent (equivalently, fixing
/// a point) must itself be idempotent.
pub fn is_zero_e_unitary(hull: &Hull) -> bool {
    hull.elements
        .iter()
        .all(|phi| phi.fixed_point().is_none() || phi.is_identity_map())
}

/// Whether `z` is a cover of `e` inside the given semilattice of sets: every
/// nonempty member contained in `e` must meet some member of `z`.
pub fn is_cover(
    members: &[BTreeSet<ElementId>],
    z: &[BTreeSet<ElementId>],
    e: &BTreeSet<ElementId>,
) -> Result<bool, HullError> {
    if z.iter().any(|x| !x.is_subset(e)) {
        return Err(HullError::CoverNotBelow);
    }
    Ok(members
        .iter()
        .filter(|x| !x.is_empty() && x.is_subset(e))
        .all(|x| z.iter().any(|y| x.intersection(y).next().is_some())))
}

/// For a pair with a pairwise disjoint basis `{w_i}`, `w_i = s·x_i = t·y_i`,
/// returns the idempotents `θ_{y_i} θ_{y_i}⁻¹ θ_t⁻¹ θ_t`. Together they cover
/// `θ_t⁻¹ θ_s θ_s⁻¹ θ_t`.
pub fn aligned_cover(
    sg: &Semigroup,
    s: ElementId,
    t: ElementId,
) -> Result<Vec<PartialBijection>, HullError> {
    let basis = match sg.alignment(s, t).map_err(|_| HullError::BasisUnavailable)? {
        crate::semigroup::Alignment::Principal(r) => {
            if r == sg.zero() {
                Vec::new()
            } else {
                alloc::vec![r]
            }
        }
        crate::semigroup::Alignment::Basis(b) => b,
        _ => return Err(HullError::BasisUnavailable),
    };
    let theta_t = regular_rep(sg, t)?;
    let f_t = theta_t.invert().compose(&theta_t);
    let mut out = Vec::new();
    for w in basis {
        let y = sg
            .elements()
            .find(|&y| sg.product(t, y) == w)
            .ok_or(HullError::NoFactorization)?;
        let theta_y = regular_rep(sg, y)?;
        let e_y = theta_y.compose(&theta_y.invert());
        out.push(f_t.compose(&e_y));
    }
    Ok(out)
}

// --- the normal-form calculus ---

/// A triple `(u, Λ, v)` over `S ∪ {1}` denoting `θ_u ∘ f_Λ ∘ θ_v⁻¹`, where
/// `f_Λ` is the identity on `⋂_{w∈Λ} F_w`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct NormalForm {
    pub u: SOrOne,
    pub lambda: BTreeSet<SOrOne>,
    pub v: SOrOne,
}

impl NormalForm {
    pub fn new(u: SOrOne, lambda: BTreeSet<SOrOne>, v: SOrOne) -> Result<Self, HullError> {
        let nf = NormalForm { u, lambda, v };
        nf.check()?;
        Ok(nf)
    }

    fn check(&self) -> Result<(), HullError> {
        if !self.lambda.iter().any(|w| matches!(w, SOrOne::Elem(_))) {
            return Err(HullError::InvalidNormalForm("Λ must meet S"));
        }
        if !self.lambda.contains(&self.u) || !self.lambda.contains(&self.v) {
            return Err(HullError::InvalidNormalForm("u and v must lie in Λ"));
        }
        Ok(())
    }

    /// The normal form of a generator `θ_s`.
    pub fn generator(s: ElementId) -> NormalForm {
        NormalForm {
            u: SOrOne::Elem(s),
            lambda: BTreeSet::from([SOrOne::One, SOrOne::Elem(s)]),
            v: SOrOne::One,
        }
    }

    /// The normal form of `θ_s⁻¹`.
    pub fn generator_inverse(s: ElementId) -> NormalForm {
        NormalForm {
            u: SOrOne::One,
            lambda: BTreeSet::from([SOrOne::One, SOrOne::Elem(s)]),
            v: SOrOne::Elem(s),
        }
    }

    pub fn inverse(&self) -> NormalForm {
        NormalForm { u: self.v, lambda: self.lambda.clone(), v: self.u }
    }
}

fn require_lcms(sg: &Semigroup) -> Result<(), HullError> {
    if !sg.property_flags().zero_left_cancellative {
        return Err(HullError::NotLeftCancellative);
    }
    if !sg.admits_lcms() {
        return Err(HullError::LcmRequired);
    }
    Ok(())
}

/// `F_Λ = ⋂_{w∈Λ} F_w` as a subset of `S'`.
pub fn f_lambda(sg: &Semigroup, lambda: &BTreeSet<SOrOne>) -> BTreeSet<ElementId> {
    let mut acc: BTreeSet<ElementId> = sg.nonzero_elements().collect();
    for &w in lambda {
        let f = sg.f_set_stilde(w);
        acc = acc.intersection(&f).copied().collect();
    }
    acc
}

/// Evaluates `θ_u ∘ f_Λ ∘ θ_v⁻¹` to a concrete partial bijection.
pub fn nf_evaluate(sg: &Semigroup, nf: &NormalForm) -> Result<PartialBijection, HullError> {
    require_lcms(sg)?;
    nf.check()?;
    let theta_u = theta_stilde(sg, nf.u)?;
    let theta_v = theta_stilde(sg, nf.v)?;
    let f = PartialBijection::identity_on(&f_lambda(sg, &nf.lambda));
    Ok(theta_u.compose(&f).compose(&theta_v.invert()))
}

/// Smallest `x` with `v·x = w` in `S ∪ {1}` (`x = 1` when `w = v`).
fn solve_division(sg: &Semigroup, v: SOrOne, w: SOrOne) -> Result<SOrOne, HullError> {
    if v == w {
        return Ok(SOrOne::One);
    }
    match (v, w) {
        (SOrOne::One, w) => Ok(w),
        (_, SOrOne::One) => Err(HullError::InvalidNormalForm("nothing divides the unit")),
        (SOrOne::Elem(v), SOrOne::Elem(w)) => sg
            .elements()
            .find(|&x| sg.product(v, x) == w)
            .map(SOrOne::Elem)
            .ok_or(HullError::InvalidNormalForm("division has no witness")),
    }
}

/// Product of two normal forms. With `w` a least common multiple of `v₁` and
/// `u₂` in `S ∪ {1}` and `w = v₁x = u₂y`, the result is
/// `(u₁x, Λ₁x ∪ {w} ∪ Λ₂y, v₂y)`.
pub fn nf_product(
    sg: &Semigroup,
    nf1: &NormalForm,
    nf2: &NormalForm,
) -> Result<NormalForm, HullError> {
    require_lcms(sg)?;
    nf1.check()?;
    nf2.check()?;
    let w = sg.stilde_lcm(nf1.v, nf2.u).ok_or(HullError::LcmRequired)?;
    let x = solve_division(sg, nf1.v, w)?;
    let y = solve_division(sg, nf2.u, w)?;
    let mut lambda: BTreeSet<SOrOne> =
        nf1.lambda.iter().map(|&l| sg.stilde_mul(l, x)).collect();
    lambda.insert(w);
    lambda.extend(nf2.lambda.iter().map(|&l| sg.stilde_mul(l, y)));
    NormalForm::new(sg.stilde_mul(nf1.u, x), lambda, sg.stilde_mul(nf2.v, y))
}

/// A normal form for a hull element, obtained by folding [`nf_product`] over
/// its generator witness. For right-reductive semigroups with right local
/// units the components are pushed into `S` so that `Λ ⊆ S`.
pub fn hull_normal_form(
    sg: &Semigroup,
    hull: &Hull,
    element: usize,
) -> Result<NormalForm, HullError> {
    require_lcms(sg)?;
    if element >= hull.len() {
        return Err(HullError::NotInHull);
    }
    let word = hull.witness(element);
    let mut nf: Option<NormalForm> = None;
    for g in word {
        let next = match *g {
            Gen::Theta(s) => NormalForm::generator(s),
            Gen::ThetaInv(s) => NormalForm::generator_inverse(s),
        };
        nf = Some(match nf {
            None => next,
            Some(acc) => nf_product(sg, &acc, &next)?,
        });
    }
    let nf = nf.ok_or(HullError::NotInHull)?;
    let flags = sg.property_flags();
    if !flags.right_local_units {
        return Ok(nf);
    }
    // push u and v into S through a right unit of some member of Λ ∩ S
    let witness = nf
        .lambda
        .iter()
        .find_map(|&w| match w {
            SOrOne::Elem(s) if s != sg.zero() => {
                sg.classify(s).ok().and_then(|c| c.right_unit)
            }
            _ => None,
        });
    let Some(plus) = witness else { return Ok(nf) };
    let u = sg.stilde_mul(nf.u, SOrOne::Elem(plus));
    let v = sg.stilde_mul(nf.v, SOrOne::Elem(plus));
    let mut lambda: BTreeSet<SOrOne> = nf
        .lambda
        .iter()
        .copied()
        .filter(|w| matches!(w, SOrOne::Elem(_)))
        .collect();
    lambda.insert(u);
    lambda.insert(v);
    let refined = NormalForm::new(u, lambda, v)?;
    // the rewrite must not change the element; fall back otherwise
    if nf_evaluate(sg, &refined)? == nf_evaluate(sg, &nf)? {
        Ok(refined)
    } else {
        Ok(nf)
    }
}
