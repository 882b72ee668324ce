//! Brute-force cross-checks.
//!
//! Everything in this module recomputes a result of the main code path from
//! first principles, by exhaustive enumeration, without sharing any of the
//! clever machinery. The checks back the `--oracle` switch of the command
//! line tool and the test suites.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use thiserror::Error;

use crate::semigroup::{subsets_by_size, ElementId, Semigroup};
use crate::spectrum::{Character, Semilattice};
use crate::strings::StringSet;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration budget exceeded: {0}")]
    Budget(&'static str),
}

/// First triple `(x, y, z)` with `(xy)z ≠ x(yz)`, if any, scanning in index
/// order. Operates on a raw table so it can vet tables before a `Semigroup`
/// exists.
pub fn associativity_violation(n: usize, table: &[usize]) -> Option<(usize, usize, usize)> {
    let at = |i: usize, j: usize| table[i * n + j];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if at(at(x, y), z) != at(x, at(y, z)) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// All strings by subset enumeration. Only for small semigroups.
pub fn strings_by_enumeration(sg: &Semigroup) -> Result<Vec<StringSet>, OracleError> {
    let universe: Vec<ElementId> = sg.nonzero_elements().collect();
    if universe.len() > 12 {
        return Err(OracleError::Budget("string enumeration limited to |S'| <= 12"));
    }
    let mut found = Vec::new();
    for subset in subsets_by_size(&universe) {
        let set: BTreeSet<ElementId> = subset.into_iter().collect();
        if crate::strings::is_string(sg, &set) {
            found.push(StringSet::from_set(set));
        }
    }
    found.sort();
    Ok(found)
}

/// The least family of subsets of `S'` containing every `E_s` and closed
/// under the maps `X ↦ sX \ {0}` and `X ↦ {y : sy ∈ X}`.
pub fn constructible_by_closure(sg: &Semigroup) -> Vec<BTreeSet<ElementId>> {
    let mut family: BTreeSet<BTreeSet<ElementId>> =
        sg.elements().map(|s| sg.e_set(s)).collect();
    loop {
        let mut fresh: Vec<BTreeSet<ElementId>> = Vec::new();
        for x in &family {
            for s in sg.elements() {
                let forward: BTreeSet<ElementId> = x
                    .iter()
                    .map(|&y| sg.product(s, y))
                    .filter(|&p| p != sg.zero())
                    .collect();
                let backward: BTreeSet<ElementId> = sg
                    .nonzero_elements()
                    .filter(|&y| x.contains(&sg.product(s, y)))
                    .collect();
                for set in [forward, backward] {
                    if !family.contains(&set) {
                        fresh.push(set);
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        family.extend(fresh);
    }
    let mut out: Vec<BTreeSet<ElementId>> = family.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
    out
}

/// All filters by subset enumeration.
pub fn filters_by_enumeration(lattice: &Semilattice) -> Result<Vec<Vec<usize>>, OracleError> {
    let n = lattice.len();
    if n > 16 {
        return Err(OracleError::Budget("filter enumeration limited to |E| <= 16"));
    }
    let members: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for subset in subsets_by_size(&members) {
        if subset.is_empty() || subset.contains(&lattice.zero_index()) {
            continue;
        }
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        let meet_closed = subset
            .iter()
            .all(|&x| subset.iter().all(|&y| set.contains(&lattice.meet(x, y))));
        let upward = subset
            .iter()
            .all(|&x| (0..n).all(|z| !lattice.leq(x, z) || set.contains(&z)));
        if meet_closed && upward {
            out.push(subset);
        }
    }
    Ok(out)
}

/// Tightness in its unreduced form: for all finite `X`, `Y` with `|X|,|Y| ≤ 2`
/// and every finite cover `Z` of `E^{X,Y}`, the join of `φ` over `Z` equals
/// the meet over `X` joined with the negated values over `Y`.
pub fn tight_by_general_form(
    lattice: &Semilattice,
    phi: &Character,
) -> Result<bool, OracleError> {
    let n = lattice.len();
    if n > 8 {
        return Err(OracleError::Budget("general tightness check limited to |E| <= 8"));
    }
    let members: Vec<usize> = (0..n).collect();
    let small: Vec<Vec<usize>> = subsets_by_size(&members)
        .into_iter()
        .filter(|s| s.len() <= 2)
        .collect();
    for xs in &small {
        for ys in &small {
            let exy: Vec<usize> = (0..n)
                .filter(|&z| {
                    xs.iter().all(|&x| lattice.leq(z, x))
                        && ys.iter().all(|&y| lattice.meet(z, y) == lattice.zero_index())
                })
                .collect();
            let target =
                xs.iter().all(|&x| phi.value(x)) && ys.iter().all(|&y| !phi.value(y));
            for zs in subsets_by_size(&exy) {
                let covers = exy.iter().all(|&x| {
                    x == lattice.zero_index()
                        || zs.iter().any(|&z| lattice.meet(z, x) != lattice.zero_index())
                });
                if !covers {
                    continue;
                }
                let join = zs.iter().any(|&z| phi.value(z));
                if join != target {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
