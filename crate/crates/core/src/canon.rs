//! Canonical forms for small digraphs and enumeration of isomorphism classes.
//!
//! Canonical labelling is exhaustive: vertices are first ordered by a degree
//! signature, then every permutation inside a signature class is tried and the
//! lexicographically least adjacency code wins. This is fine for the vertex
//! counts used here; [`canonical_form`] is the single entry point should a
//! smarter labelling ever be needed.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_VERTICES: usize = 11;

/// Default largest order for digraph universes.
pub const DEFAULT_UNIVERSE_BOUND: usize = 5;

/// Default largest order for undirected graph universes.
pub const DEFAULT_GRAPH_UNIVERSE_BOUND: usize = 7;

/// Isomorphism invariant that is complete: equal forms iff isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u128,
}

fn signature(d: &Digraph, u: usize) -> (usize, usize, usize) {
    let sym = (d.out_mask(u) & d.in_mask(u)).count_ones() as usize;
    (d.out_degree(u), d.in_degree(u), sym)
}

struct Labeler<'a> {
    d: &'a Digraph,
    /// vertices grouped by signature, groups in ascending signature order
    slots: Vec<usize>,
    class_of_slot: Vec<usize>,
    classes: Vec<Vec<usize>>,
    best: Option<(u128, Vec<usize>)>,
}

impl Labeler<'_> {
    /// Bits contributed when the vertex at position `p` is placed after the
    /// vertices in `placed[..p]`.
    fn bits_at(&self, placed: &[usize], p: usize) -> (u128, u32) {
        let u = placed[p];
        let mut acc = 0u128;
        for &q in &placed[..p] {
            acc = acc << 2 | (self.d.has_arc(u, q) as u128) << 1 | self.d.has_arc(q, u) as u128;
        }
        (acc, 2 * p as u32)
    }

    fn search(&mut self, placed: &mut Vec<usize>, used: u64, prefix: u128, len: u32, total: u32) {
        let p = placed.len();
        if p == self.slots.len() {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, placed.clone()));
            }
            return;
        }
        let class = self.class_of_slot[p];
        for i in 0..self.classes[class].len() {
            let u = self.classes[class][i];
            if used >> u & 1 == 1 {
                continue;
            }
            placed.push(u);
            let (chunk, width) = self.bits_at(placed, p);
            let next = prefix << width | chunk;
            let next_len = len + width;
            let keep = match &self.best {
                None => true,
                Some((b, _)) => next <= *b >> (total - next_len),
            };
            if keep {
                self.search(placed, used | 1 << u, next, next_len, total);
            }
            placed.pop();
        }
    }
}

fn label(d: &Digraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = d.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_CANON_VERTICES,
        });
    }
    let mut by_sig: BTreeMap<(usize, usize, usize), Vec<usize>> = BTreeMap::new();
    for u in 0..n {
        by_sig.entry(signature(d, u)).or_default().push(u);
    }
    let classes: Vec<Vec<usize>> = by_sig.into_values().collect();
    let mut slots = Vec::with_capacity(n);
    let mut class_of_slot = Vec::with_capacity(n);
    for (c, members) in classes.iter().enumerate() {
        for &u in members {
            slots.push(u);
            class_of_slot.push(c);
        }
    }
    let total = (n * n.saturating_sub(1)) as u32;
    let mut labeler = Labeler {
        d,
        slots,
        class_of_slot,
        classes,
        best: None,
    };
    labeler.search(&mut Vec::with_capacity(n), 0, 0, 0, total);
    let (code, order) = labeler.best.expect("at least one labelling exists");
    Ok((CanonicalForm { n, code }, order))
}

/// Canonical form of `d` (requires `d.n() <= MAX_CANON_VERTICES`).
pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    label(d).map(|(form, _)| form)
}

/// The canonical relabelling of `d`, together with its form.
pub fn canonical_digraph(d: &Digraph) -> Result<(Digraph, CanonicalForm)> {
    let (form, order) = label(d)?;
    let mut perm = vec![0; d.n()];
    for (pos, &u) in order.iter().enumerate() {
        perm[u] = pos;
    }
    Ok((d.relabel(&perm), form))
}

pub fn graph_canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form(&Digraph::symmetric(g))
}

/// One canonical representative per isomorphism class of digraphs on exactly
/// `n` vertices, sorted by canonical form. Uses [`DEFAULT_UNIVERSE_BOUND`].
pub fn enumerate_digraphs(n: usize, oriented_only: bool) -> Result<Vec<Digraph>> {
    enumerate_digraphs_bounded(n, oriented_only, DEFAULT_UNIVERSE_BOUND)
}

pub fn enumerate_digraphs_bounded(
    n: usize,
    oriented_only: bool,
    bound: usize,
) -> Result<Vec<Digraph>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            requested: n,
            bound,
        });
    }
    let patterns: &[(bool, bool)] = if oriented_only {
        &[(false, false), (true, false), (false, true)]
    } else {
        &[(false, false), (true, false), (false, true), (true, true)]
    };
    Ok(grow(n, patterns, canonical_digraph))
}

/// All digraphs on `n` vertices, all digraphs on `n - 1` vertices extended by
/// one new vertex in every possible way, deduplicated by canonical form.
fn grow(
    n: usize,
    patterns: &[(bool, bool)],
    canon: impl Fn(&Digraph) -> Result<(Digraph, CanonicalForm)> + Copy,
) -> Vec<Digraph> {
    if n == 0 {
        return vec![Digraph::empty(0)];
    }
    let smaller = grow(n - 1, patterns, canon);
    let new = n - 1;
    let mut classes: BTreeMap<CanonicalForm, Digraph> = BTreeMap::new();
    let choices = patterns.len();
    let combos = choices.pow(new as u32);
    for base in &smaller {
        for mut code in 0..combos {
            let mut arcs = base.arcs().to_vec();
            for v in 0..new {
                let (to, from) = patterns[code % choices];
                code /= choices;
                if to {
                    arcs.push((new, v));
                }
                if from {
                    arcs.push((v, new));
                }
            }
            let d = Digraph::new(n, arcs).expect("extension of a valid digraph");
            let (rep, form) = canon(&d).expect("universe orders are within the canonical limit");
            classes.entry(form).or_insert(rep);
        }
    }
    classes.into_values().collect()
}

/// One canonical representative per isomorphism class of simple graphs on
/// exactly `n` vertices. Uses [`DEFAULT_GRAPH_UNIVERSE_BOUND`].
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_bounded(n, DEFAULT_GRAPH_UNIVERSE_BOUND)
}

pub fn enumerate_graphs_bounded(n: usize, bound: usize) -> Result<Vec<Graph>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            requested: n,
            bound,
        });
    }
    let sym = grow(n, &[(false, false), (true, true)], canonical_digraph);
    Ok(sym.iter().map(Digraph::underlying).collect())
}

/// Number of distinct labelled digraphs isomorphic to `d`, i.e. `n!/|Aut(d)|`,
/// counted directly over all permutations.
pub fn labelling_count(d: &Digraph) -> usize {
    let n = d.n();
    let mut seen = std::collections::HashSet::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut arcs: Vec<(usize, usize)> = d.arcs().iter().map(|&(u, v)| (p[u], p[v])).collect();
        arcs.sort_unstable();
        seen.insert(arcs);
    });
    seen.len()
}

pub(crate) fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}
