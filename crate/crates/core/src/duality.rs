//! Bounded verification of homomorphism dualities.
//!
//! A pair of finite sets `(F, M)` is checked on every digraph `D` of a small
//! universe: no member of `F` maps to `D` exactly when `D` maps to some member
//! of `M`. The universe holds one canonical representative per isomorphism
//! class, ordered by vertex count and then canonical form, so the first
//! counterexample is well defined.

use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::canon::{enumerate_digraphs_bounded, DEFAULT_UNIVERSE_BOUND};
use crate::error::Result;
use crate::graph::Digraph;
use crate::hom::{hom_exists, HomWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualityOptions {
    /// Largest order of the digraphs checked.
    pub n_max: usize,
    /// Hard cap on `n_max`.
    pub universe_bound: usize,
    /// Worker threads for the universe scan.
    pub jobs: usize,
}

impl Default for DualityOptions {
    fn default() -> Self {
        DualityOptions {
            n_max: 4,
            universe_bound: DEFAULT_UNIVERSE_BOUND,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// No member of `F` maps to `D`, and `D` maps to no member of `M`.
    FreeWithoutTarget,
    /// A member of `F` maps to `D`, and `D` maps to a member of `M`.
    ContainsWithTarget {
        forbidden: usize,
        from_forbidden: HomWitness,
        template: usize,
        to_template: HomWitness,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub digraph: Digraph,
    pub violation: Violation,
}

impl Counterexample {
    /// Re-checks the certificates: the two maps for a containment violation,
    /// a fresh exhaustive search for the absence claims.
    pub fn reverify(&self, f: &[Digraph], m: &[Digraph]) -> Result<bool> {
        let d = &self.digraph;
        Ok(match &self.violation {
            Violation::FreeWithoutTarget => {
                for h in f {
                    if hom_exists(h, d)?.is_some() {
                        return Ok(false);
                    }
                }
                for b in m {
                    if hom_exists(d, b)?.is_some() {
                        return Ok(false);
                    }
                }
                true
            }
            Violation::ContainsWithTarget {
                forbidden,
                from_forbidden,
                template,
                to_template,
            } => {
                f.get(*forbidden).is_some_and(|h| from_forbidden.verify(h, d))
                    && m.get(*template).is_some_and(|b| to_template.verify(d, b))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    /// Every digraph up to this order satisfies the duality.
    pub holds_up_to: usize,
    /// Number of digraphs examined.
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

fn check(d: &Digraph, f: &[Digraph], m: &[Digraph]) -> Result<Option<Violation>> {
    let mut into = None;
    for (i, h) in f.iter().enumerate() {
        if let Some(w) = hom_exists(h, d)? {
            into = Some((i, w));
            break;
        }
    }
    let mut onto = None;
    for (j, b) in m.iter().enumerate() {
        if let Some(w) = hom_exists(d, b)? {
            onto = Some((j, w));
            break;
        }
    }
    Ok(match (into, onto) {
        (None, None) => Some(Violation::FreeWithoutTarget),
        (Some((forbidden, from_forbidden)), Some((template, to_template))) => {
            Some(Violation::ContainsWithTarget {
                forbidden,
                from_forbidden,
                template,
                to_template,
            })
        }
        _ => None,
    })
}

/// All canonical digraphs on `1..=n_max` vertices.
pub fn digraph_universe(n_max: usize, bound: usize) -> Result<Vec<Digraph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_digraphs_bounded(n, false, bound)?);
    }
    Ok(out)
}

pub fn verify_duality_pair(a: &Digraph, b: &Digraph, n_max: usize) -> Result<DualityReport> {
    verify_generalized_duality_with(
        std::slice::from_ref(a),
        std::slice::from_ref(b),
        DualityOptions {
            n_max,
            ..DualityOptions::default()
        },
    )
}

pub fn verify_generalized_duality(f: &[Digraph], m: &[Digraph], n_max: usize) -> Result<DualityReport> {
    verify_generalized_duality_with(
        f,
        m,
        DualityOptions {
            n_max,
            ..DualityOptions::default()
        },
    )
}

pub fn verify_generalized_duality_with(f: &[Digraph], m: &[Digraph], opts: DualityOptions) -> Result<DualityReport> {
    let universe = digraph_universe(opts.n_max, opts.universe_bound)?;
    let mut report = verify_on_universe(f, m, &universe, opts.jobs)?;
    if report.counterexample.is_none() {
        report.holds_up_to = opts.n_max;
    }
    Ok(report)
}

/// Scans a prepared universe in order, in parallel when `jobs > 1`; the
/// reported counterexample is always the first in universe order.
pub fn verify_on_universe(f: &[Digraph], m: &[Digraph], universe: &[Digraph], jobs: usize) -> Result<DualityReport> {
    let jobs = jobs.max(1);
    let first = AtomicUsize::new(usize::MAX);
    let chunk = universe.len().div_ceil(jobs).max(1);
    let found: Vec<Result<Option<(usize, Violation)>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = universe
            .chunks(chunk)
            .enumerate()
            .map(|(c, part)| {
                let first = &first;
                scope.spawn(move || -> Result<Option<(usize, Violation)>> {
                    for (i, d) in part.iter().enumerate() {
                        let idx = c * chunk + i;
                        if idx > first.load(Ordering::Relaxed) {
                            return Ok(None);
                        }
                        if let Some(v) = check(d, f, m)? {
                            first.fetch_min(idx, Ordering::Relaxed);
                            return Ok(Some((idx, v)));
                        }
                    }
                    Ok(None)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker thread panicked"))
            .collect()
    });
    let mut best: Option<(usize, Violation)> = None;
    for r in found {
        if let Some((idx, v)) = r? {
            if best.as_ref().is_none_or(|(b, _)| idx < *b) {
                best = Some((idx, v));
            }
        }
    }
    Ok(match best {
        None => DualityReport {
            holds_up_to: universe.iter().map(Digraph::n).max().unwrap_or(0),
            checked: universe.len(),
            counterexample: None,
        },
        Some((idx, violation)) => {
            let digraph = universe[idx].clone();
            DualityReport {
                holds_up_to: digraph.n() - 1,
                checked: idx + 1,
                counterexample: Some(Counterexample { digraph, violation }),
            }
        }
    })
}

/// A duality pair known to hold, with the order up to which the test suite
/// verifies it.
#[derive(Clone, Debug)]
pub struct KnownPair {
    pub name: String,
    pub a: Digraph,
    pub b: Digraph,
    pub verified_to: usize,
}

/// `(directed path on k + 1 vertices, transitive tournament on k vertices)`
/// for `k = 1, 2, 3`: a digraph has no directed walk on `k + 1` vertices iff
/// it maps to `TT_k`.
pub fn known_pairs() -> Vec<KnownPair> {
    (1..=3)
        .map(|k| KnownPair {
            name: format!("P{}/TT{}", k + 1, k),
            a: Digraph::directed_path(k + 1),
            b: Digraph::transitive_tournament(k),
            verified_to: 4,
        })
        .collect()
}
