//! Which cycles and paths admit an `F`-free orientation.
//!
//! Long enough cycles can only contain members of `F` that are oriented
//! paths, so from length `max(4, m_F + 1)` on the question moves to the
//! language of words avoiding the path members: a `k`-cycle has an `F`-free
//! (acyclic) orientation iff that language has a (non-constant) `k`-periodic
//! word. Shorter cycles are decided by search.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::automaton::FactorAutomaton;
use crate::error::{Error, Result};
use crate::forbidden::{ForbiddenSet, SearchMode};
use crate::graph::{Graph, OrientedGraph};
use crate::search::admits_orientation;
use crate::words::{forbidden_factor_set, FactorSet, Letter, Word};

/// First cycle length handled by the language route.
pub fn language_threshold(f: &ForbiddenSet) -> usize {
    f.bridge_bound().max(4)
}

/// A single-vertex member occurs in every nonempty graph.
fn has_point(f: &ForbiddenSet) -> bool {
    f.members().iter().any(|m| m.n() == 1)
}

fn check_connected(f: &ForbiddenSet) -> Result<()> {
    match f.members().iter().position(|m| !m.is_weakly_connected()) {
        Some(i) => Err(Error::DisconnectedMember(i)),
        None => Ok(()),
    }
}

fn check_range(k_min: usize, k_max: usize) -> Result<()> {
    if k_min < 3 {
        return Err(Error::CycleTooShort(k_min));
    }
    if k_min > k_max {
        return Err(Error::InvalidArgument(format!("empty range {k_min}..{k_max}")));
    }
    Ok(())
}

fn mode(acyclic: bool) -> SearchMode {
    if acyclic {
        SearchMode::induced().acyclic()
    } else {
        SearchMode::induced()
    }
}

/// The oriented `k`-cycle read off a word: vertex `i` to `i + 1` (mod `k`)
/// when letter `i` is `>`.
pub fn word_to_cycle(w: &Word) -> Result<OrientedGraph> {
    let k = w.len();
    if k < 3 {
        return Err(Error::CycleTooShort(k));
    }
    let arcs = w.letters().iter().enumerate().map(|(i, l)| match l {
        Letter::Fwd => (i, (i + 1) % k),
        Letter::Bwd => ((i + 1) % k, i),
    });
    OrientedGraph::new(k, arcs)
}

/// `{k in [k_min, k_max] : C_k has an F-free (acyclic) orientation}`, by the
/// language route where it applies and by search below it.
pub fn cycle_spectrum(f: &ForbiddenSet, k_min: usize, k_max: usize, acyclic: bool) -> Result<BTreeSet<usize>> {
    check_connected(f)?;
    check_range(k_min, k_max)?;
    let split = language_threshold(f).clamp(k_min, k_max + 1);
    let mut out = BTreeSet::new();
    if split > k_min {
        out.extend(cycle_spectrum_brute(f, k_min, split - 1, acyclic)?);
    }
    if split <= k_max {
        out.extend(cycle_spectrum_language(f, split, k_max, acyclic)?);
    }
    Ok(out)
}

/// The spectrum decided by orientation search on every length.
pub fn cycle_spectrum_brute(f: &ForbiddenSet, k_min: usize, k_max: usize, acyclic: bool) -> Result<BTreeSet<usize>> {
    check_range(k_min, k_max)?;
    let mut out = BTreeSet::new();
    for k in k_min..=k_max {
        if admits_orientation(&Graph::cycle(k)?, f, mode(acyclic))?.admits {
            out.insert(k);
        }
    }
    Ok(out)
}

/// The spectrum read from the period set of the path-member language. Only
/// meaningful from [`language_threshold`] on.
pub fn cycle_spectrum_language(f: &ForbiddenSet, k_min: usize, k_max: usize, acyclic: bool) -> Result<BTreeSet<usize>> {
    check_connected(f)?;
    check_range(k_min, k_max)?;
    if has_point(f) {
        return Ok(BTreeSet::new());
    }
    let aut = FactorAutomaton::new(&forbidden_factor_set(f.members()));
    Ok(crate::automaton::periods_of(&aut, k_max, acyclic)
        .into_iter()
        .filter(|&k| k >= k_min)
        .collect())
}

/// A `k`-cycle orientation from the language route, if one exists.
pub fn cycle_witness_language(f: &ForbiddenSet, k: usize, acyclic: bool) -> Result<Option<OrientedGraph>> {
    check_connected(f)?;
    if has_point(f) {
        return Ok(None);
    }
    let aut = FactorAutomaton::new(&forbidden_factor_set(f.members()));
    aut.periodic_word(k, acyclic).map(|w| word_to_cycle(&w)).transpose()
}

/// Whether the path on `k` edges has an `F`-free orientation, by search.
pub fn path_admits_brute(f: &ForbiddenSet, k: usize) -> Result<bool> {
    Ok(admits_orientation(&Graph::path(k), f, SearchMode::induced())?.admits)
}

/// Whether the path-member language has a word of length `k`.
pub fn path_admits_language(f: &ForbiddenSet, k: usize) -> bool {
    if has_point(f) {
        return false;
    }
    has_word_of_length(&forbidden_factor_set(f.members()), k)
}

fn has_word_of_length(a: &FactorSet, k: usize) -> bool {
    let aut = FactorAutomaton::new(a);
    let mut alive = vec![false; aut.state_count()];
    alive[aut.root()] = true;
    for _ in 0..k {
        let mut next = vec![false; aut.state_count()];
        for s in (0..alive.len()).filter(|&s| alive[s]) {
            for (_, t) in aut.successors(s) {
                next[t] = true;
            }
        }
        alive = next;
    }
    alive.contains(&true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultipleEntry {
    pub length: usize,
    pub admits: bool,
    /// Arcs of an orientation of the cycle, when one exists.
    pub witness_arcs: Option<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplesReport {
    pub k: usize,
    pub acyclic: bool,
    pub k_in_spectrum: bool,
    pub multiples: Vec<MultipleEntry>,
    /// First multiple of `k` without an orientation while `k` has one.
    pub violation: Option<usize>,
}

/// Checks that if `C_k` has an `F`-free (acyclic) orientation then so does
/// `C_{lk}` for every `2 <= l <= multiplier_max`. Requires `k >= max(4, m_F)`.
pub fn multiples_property_check(
    f: &ForbiddenSet,
    k: usize,
    multiplier_max: usize,
    acyclic: bool,
) -> Result<MultiplesReport> {
    let least = f.max_order().max(4);
    if k < least {
        return Err(Error::InvalidArgument(format!("k = {k} is below max(4, m_F) = {least}")));
    }
    let k_in_spectrum = cycle_spectrum(f, k, k, acyclic)?.contains(&k);
    let mut multiples = Vec::new();
    let mut violation = None;
    if k_in_spectrum {
        for l in 2..=multiplier_max {
            let length = l * k;
            let witness = if length >= language_threshold(f) {
                cycle_witness_language(f, length, acyclic)?
            } else {
                let v = admits_orientation(&Graph::cycle(length)?, f, mode(acyclic))?;
                v.witness.map(|w| w.to_oriented())
            };
            if witness.is_none() && violation.is_none() {
                violation = Some(length);
            }
            multiples.push(MultipleEntry {
                length,
                admits: witness.is_some(),
                witness_arcs: witness.map(|w| w.arcs().to_vec()),
            });
        }
    }
    Ok(MultiplesReport {
        k,
        acyclic,
        k_in_spectrum,
        multiples,
        violation,
    })
}
