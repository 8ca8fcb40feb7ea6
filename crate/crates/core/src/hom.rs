//! Digraph homomorphisms, cores and related order-theoretic helpers.

use serde::Serialize;

use crate::embed::is_isomorphic;
use crate::error::{Error, Result};
use crate::graph::{bits, Digraph};

/// Default number of search nodes before a homomorphism search gives up.
pub const DEFAULT_HOM_BUDGET: u64 = 10_000_000;

/// Largest order accepted by [`core_of`].
pub const MAX_CORE_VERTICES: usize = 16;

/// A vertex map `mapping[u]` from source to target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomWitness {
    pub mapping: Vec<usize>,
}

impl HomWitness {
    /// Whether the map sends every arc of `from` to an arc of `to`.
    pub fn verify(&self, from: &Digraph, to: &Digraph) -> bool {
        self.mapping.len() == from.n()
            && self.mapping.iter().all(|&x| x < to.n())
            && from
                .arcs()
                .iter()
                .all(|&(u, v)| to.has_arc(self.mapping[u], self.mapping[v]))
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &HomWitness) -> HomWitness {
        HomWitness {
            mapping: self.mapping.iter().map(|&x| next.mapping[x]).collect(),
        }
    }
}

struct Search<'a> {
    from: &'a Digraph,
    to: &'a Digraph,
    order: Vec<usize>,
    work: u64,
    budget: u64,
}

impl Search<'_> {
    /// Arc consistency: every value keeps a supporting value along each arc.
    fn propagate(&self, dom: &mut [u64]) -> bool {
        let mut changed = true;
        while changed {
            changed = false;
            for &(u, v) in self.from.arcs() {
                let du: u64 = bits(dom[u])
                    .filter(|&x| self.to.out_mask(x) & dom[v] != 0)
                    .fold(0, |m, x| m | 1 << x);
                let dv: u64 = bits(dom[v])
                    .filter(|&y| self.to.in_mask(y) & dom[u] != 0)
                    .fold(0, |m, y| m | 1 << y);
                if du == 0 || dv == 0 {
                    return false;
                }
                if du != dom[u] || dv != dom[v] {
                    dom[u] = du;
                    dom[v] = dv;
                    changed = true;
                }
            }
        }
        true
    }

    fn solve(&mut self, dom: &mut Vec<u64>, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let u = self.order[depth];
        for x in bits(dom[u]) {
            self.work += 1;
            if self.work > self.budget {
                return Err(Error::WorkBudgetExceeded {
                    budget: self.budget,
                });
            }
            let mut next = dom.clone();
            next[u] = 1 << x;
            if self.propagate(&mut next) && self.solve(&mut next, depth + 1)? {
                *dom = next;
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Finds a homomorphism `d1 -> d2`, or certifies there is none.
pub fn hom_exists(d1: &Digraph, d2: &Digraph) -> Result<Option<HomWitness>> {
    hom_exists_with_budget(d1, d2, DEFAULT_HOM_BUDGET)
}

pub fn hom_exists_with_budget(d1: &Digraph, d2: &Digraph, budget: u64) -> Result<Option<HomWitness>> {
    if d1.n() == 0 {
        return Ok(Some(HomWitness { mapping: vec![] }));
    }
    if d2.n() == 0 {
        return Ok(None);
    }
    let all = if d2.n() == 64 { u64::MAX } else { (1u64 << d2.n()) - 1 };
    let mut dom = vec![all; d1.n()];
    let mut order: Vec<usize> = (0..d1.n()).collect();
    order.sort_by_key(|&u| std::cmp::Reverse(d1.degree(u)));
    let mut search = Search {
        from: d1,
        to: d2,
        order,
        work: 0,
        budget,
    };
    if !search.propagate(&mut dom) || !search.solve(&mut dom, 0)? {
        return Ok(None);
    }
    let mapping = dom.iter().map(|m| m.trailing_zeros() as usize).collect();
    Ok(Some(HomWitness { mapping }))
}

/// Homomorphisms in both directions.
pub fn is_hom_equivalent(d1: &Digraph, d2: &Digraph) -> Result<bool> {
    Ok(hom_exists(d1, d2)?.is_some() && hom_exists(d2, d1)?.is_some())
}

/// The core of `d`: a smallest induced subdigraph `d[S]` with `d -> d[S]`.
///
/// Vertices are dropped greedily while `d` still maps into what remains.
/// Afterwards every induced subdigraph of the same order that `d` maps to is
/// checked to be isomorphic to the result.
pub fn core_of(d: &Digraph) -> Result<Digraph> {
    if d.n() > MAX_CORE_VERTICES {
        return Err(Error::TooManyVertices {
            n: d.n(),
            max: MAX_CORE_VERTICES,
        });
    }
    let mut keep: Vec<usize> = (0..d.n()).collect();
    let mut i = 0;
    while i < keep.len() {
        let mut fewer = keep.clone();
        fewer.remove(i);
        if hom_exists(d, &d.induced(&fewer))?.is_some() {
            keep = fewer;
        } else {
            i += 1;
        }
    }
    let core = d.induced(&keep);
    for subset in subsets(d.n(), keep.len()) {
        let candidate = d.induced(&subset);
        if hom_exists(d, &candidate)?.is_some() {
            assert!(
                is_isomorphic(&candidate, &core),
                "two non-isomorphic minimum retracts"
            );
        }
    }
    Ok(core)
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n)
        .filter(move |m| m.count_ones() as usize == k)
        .map(|m| bits(m).collect())
}

pub fn is_oriented_forest(d: &Digraph) -> bool {
    d.is_oriented() && d.underlying().is_forest()
}

pub fn is_oriented_tree(d: &Digraph) -> bool {
    d.n() > 0 && is_oriented_forest(d) && d.is_weakly_connected()
}

/// Members `D` of `f` such that `D' -> D` implies `D -> D'` for all `D'` in `f`.
pub fn minimal_elements(f: &[Digraph]) -> Result<Vec<Digraph>> {
    let mut out = Vec::new();
    for d in f {
        let mut minimal = true;
        for other in f {
            if hom_exists(other, d)?.is_some() && hom_exists(d, other)?.is_none() {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(d.clone());
        }
    }
    Ok(out)
}
