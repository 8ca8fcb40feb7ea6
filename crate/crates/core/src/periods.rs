//! The eventual shape of period sets.
//!
//! Closed walks through the deep states of a [`FactorAutomaton`] are exactly
//! the periodic words, so the period set is the union over strongly connected
//! components `c` of the closed-walk lengths `W_c`. Each `W_c` is closed under
//! addition, lies in `r_c Z` where `r_c` is the gcd of the cycle lengths of
//! `c`, and contains every multiple of `r_c` from `r_c ((n_c - 1)^2 + 1) + n_c`
//! on (Wielandt's bound on the period-reduced component, plus a detour back to
//! the start). Above the largest such bound, `k` is a period iff some `r_c`
//! divides it, which the enumeration then confirms.
//!
//! For the non-constant variant only components with a cycle using both
//! letters count: any such cycle can be spliced into a constant closed walk of
//! the same component, so the mixed walks have the same eventual structure.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::automaton::{gcd, periods_of, FactorAutomaton};
use crate::words::FactorSet;

/// Enumeration always reaches at least this length.
pub const MIN_VERIFICATION_BOUND: usize = 300;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodStructure {
    /// gcd of the period set; 0 when it is empty.
    pub gcd_r: usize,
    /// Every multiple of `gcd_r` from here on is a period. `None` when the
    /// period set is empty or not cofinite in `gcd_r Z`.
    pub threshold_t0: Option<usize>,
    /// Multiples of `gcd_r` that are not periods: those below the threshold,
    /// or every missing one up to `verified_to` when there is no threshold.
    pub exceptions: Vec<usize>,
    pub transitive: bool,
    pub nonconstant_variant: bool,
    /// Largest length at which the period set was enumerated.
    pub verified_to: usize,
    /// Length above which membership depends only on divisibility by the
    /// component periods.
    pub tail_bound: usize,
    pub periods: BTreeSet<usize>,
}

impl PeriodStructure {
    /// The period set up to `k_max` as the structure describes it. `None`
    /// when the set is nonempty but has no threshold.
    pub fn predicted(&self, k_max: usize) -> Option<BTreeSet<usize>> {
        if self.gcd_r == 0 {
            // no cycles in the automaton, so no periods at any length
            return Some(BTreeSet::new());
        }
        self.threshold_t0?;
        let r = self.gcd_r;
        Some(
            (1..=k_max / r)
                .map(|i| i * r)
                .filter(|k| !self.exceptions.contains(k))
                .collect(),
        )
    }

    /// Membership for any length, using the proven tail.
    pub fn contains(&self, k: usize) -> bool {
        if k <= self.verified_to {
            return self.periods.contains(&k);
        }
        match self.threshold_t0 {
            Some(_) => k.is_multiple_of(self.gcd_r),
            None => false,
        }
    }
}

fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        a.max(b)
    } else {
        a / gcd(a, b) * b
    }
}

pub fn period_structure(a: &FactorSet, nonconstant_only: bool) -> PeriodStructure {
    let aut = FactorAutomaton::new(a);
    let comps: Vec<_> = aut
        .cyclic_components()
        .into_iter()
        .filter(|c| !nonconstant_only || c.has_nonconstant_cycle)
        .collect();
    let tail_bound = comps
        .iter()
        .map(|c| c.period * ((c.size - 1).pow(2) + 1) + c.size)
        .max()
        .unwrap_or(0);
    let l = comps.iter().fold(1, |acc, c| lcm(acc, c.period));
    let verified_to = MIN_VERIFICATION_BOUND.max(tail_bound + 3 * l);
    let periods = periods_of(&aut, verified_to, nonconstant_only);
    let r = periods.iter().fold(0, |acc, &k| gcd(acc, k));

    let (threshold_t0, exceptions) = if r == 0 {
        (None, Vec::new())
    } else {
        let missing: Vec<usize> = (1..=verified_to / r)
            .map(|i| i * r)
            .filter(|k| !periods.contains(k))
            .collect();
        let tail_full = (tail_bound + 1..=tail_bound + l)
            .filter(|k| k % r == 0)
            .all(|k| periods.contains(&k));
        if tail_full {
            let t0 = missing.last().map_or(r, |&k| k + r);
            (Some(t0), missing)
        } else {
            (None, missing)
        }
    };
    PeriodStructure {
        gcd_r: r,
        threshold_t0,
        exceptions,
        transitive: aut.is_transitive(),
        nonconstant_variant: nonconstant_only,
        verified_to,
        tail_bound,
        periods,
    }
}

/// What is known about a set of positive integers beyond a finite sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeclaredTail {
    /// The sample is the whole set.
    Finite,
    /// Contains every multiple of the given number from some point on.
    CofiniteMultiples(usize),
    /// Misses infinitely many multiples of every candidate gcd.
    Coinfinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CofiniteVerdict {
    pub gcd_r: usize,
    pub cofinite: bool,
}

/// gcd of the sample together with whether the whole set is cofinite in
/// `r Z+`. A finite set counts as cofinite only when it is empty.
pub fn gcd_and_cofinite(sample: &BTreeSet<usize>, tail: DeclaredTail) -> CofiniteVerdict {
    let sample_gcd = sample.iter().fold(0, |acc, &k| gcd(acc, k));
    match tail {
        DeclaredTail::Finite => CofiniteVerdict {
            gcd_r: sample_gcd,
            cofinite: sample.is_empty(),
        },
        DeclaredTail::CofiniteMultiples(m) => {
            let r = gcd(sample_gcd, m);
            CofiniteVerdict {
                gcd_r: r,
                // members of the sample off the tail's lattice shrink r below m
                cofinite: r == m,
            }
        }
        DeclaredTail::Coinfinite => CofiniteVerdict {
            gcd_r: sample_gcd,
            cofinite: false,
        },
    }
}

/// A small subset of `set` with the same gcd, chosen greedily in ascending
/// order.
pub fn gcd_basis(set: &BTreeSet<usize>) -> Vec<usize> {
    let mut basis = Vec::new();
    let mut g = 0;
    for &k in set {
        let next = gcd(g, k);
        if next != g {
            basis.push(k);
            g = next;
        }
    }
    basis
}

/// Least `t` such that every multiple of `gcd(basis)` from `t` on is a sum
/// using each basis element at least once. `None` for an empty basis.
pub fn combination_threshold(basis: &[usize]) -> Option<usize> {
    let r = basis.iter().fold(0, |acc, &b| gcd(acc, b));
    if r == 0 {
        return None;
    }
    let reduced: Vec<usize> = basis.iter().map(|b| b / r).collect();
    let lo = *reduced.iter().min().expect("nonempty basis");
    let hi = *reduced.iter().max().expect("nonempty basis");
    // the Frobenius number of coprime generators is below (lo - 1)(hi - 1)
    let limit = lo * hi + hi;
    let mut reachable = vec![false; limit + 1];
    reachable[0] = true;
    for x in 1..=limit {
        reachable[x] = reduced.iter().any(|&b| b <= x && reachable[x - b]);
    }
    let frob_plus_one = (0..=limit).rev().find(|&x| !reachable[x]).map_or(0, |x| x + 1);
    let base: usize = basis.iter().sum();
    Some(base + r * frob_plus_one)
}
