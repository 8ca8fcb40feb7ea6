//! Backtracking search for orientations avoiding a forbidden set.
//!
//! Edges are oriented one at a time, always picking the undecided edge with
//! the most already-oriented edges at its endpoints. Forbidden patterns are
//! pre-matched against the underlying graph: a pattern can only appear on a
//! vertex set `S` whose induced subgraph is isomorphic to the pattern's
//! underlying graph, so each such `S` is tracked with a counter of undecided
//! edges and tested exactly once, when its last edge gets a direction.

use std::collections::BTreeSet;

use serde_json::json;

use crate::embed::is_isomorphic;
use crate::error::{Error, Result};
use crate::forbidden::{homomorphic_image_closure, is_free, Containment, ForbiddenSet, SearchMode};
use crate::graph::{bits, Digraph, Graph, Orientation};

/// Default number of search nodes before giving up.
pub const DEFAULT_WORK_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationVerdict {
    pub admits: bool,
    /// Present exactly when `admits`; re-verified before being returned.
    pub witness: Option<Orientation>,
    /// Search nodes explored.
    pub work: u64,
}

impl OrientationVerdict {
    pub fn to_json(&self, mode: SearchMode) -> serde_json::Value {
        let arcs: Option<Vec<(usize, usize)>> = self.witness.as_ref().map(|w| w.arcs().collect());
        json!({
            "admits": self.admits,
            "witness_arcs": arcs,
            "work": self.work,
            "mode": mode.to_string(),
        })
    }
}

/// All vertex sets of `g` inducing a copy of `pattern`, as bitmasks.
pub(crate) fn induced_copies(pattern: &Graph, g: &Graph) -> BTreeSet<u64> {
    fn extend(p: &Graph, g: &Graph, image: &mut Vec<usize>, used: u64, out: &mut BTreeSet<u64>) {
        let i = image.len();
        if i == p.n() {
            out.insert(used);
            return;
        }
        for x in 0..g.n() {
            if used >> x & 1 == 1 {
                continue;
            }
            let consistent = (0..i).all(|j| p.has_edge(i, j) == g.has_edge(x, image[j]));
            if consistent {
                image.push(x);
                extend(p, g, image, used | 1 << x, out);
                image.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    if pattern.n() <= g.n() {
        extend(pattern, g, &mut Vec::new(), 0, &mut out);
    }
    out
}

struct Candidate {
    pattern: usize,
    vertices: Vec<usize>,
    undecided: usize,
}

struct Pattern {
    digraph: Digraph,
    group: usize,
}

struct Search<'a> {
    g: &'a Graph,
    acyclic: bool,
    patterns: Vec<Pattern>,
    /// number of patterns per group
    group_size: Vec<usize>,
    /// number of realized patterns per group
    group_realized: Vec<usize>,
    realized: Vec<usize>,
    candidates: Vec<Candidate>,
    by_edge: Vec<Vec<usize>>,
    dir: Vec<Option<bool>>,
    out: Vec<u64>,
    decided_at: Vec<usize>,
    work: u64,
    budget: u64,
}

impl Search<'_> {
    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = 1u64 << from;
        let mut frontier = 1u64 << from;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.out[u];
            }
            if next >> to & 1 == 1 {
                return true;
            }
            frontier = next & !seen;
            seen |= next;
        }
        false
    }

    fn pick_edge(&self) -> Option<usize> {
        let edges = self.g.edges();
        (0..edges.len())
            .filter(|&e| self.dir[e].is_none())
            .max_by_key(|&e| {
                let (u, v) = edges[e];
                (self.decided_at[u] + self.decided_at[v], std::cmp::Reverse(e))
            })
    }

    fn matches(&self, c: &Candidate) -> bool {
        let sub = Digraph::from_out_masks(
            c.vertices
                .iter()
                .map(|&u| {
                    c.vertices
                        .iter()
                        .enumerate()
                        .filter(|&(_, &v)| self.out[u] >> v & 1 == 1)
                        .fold(0u64, |m, (j, _)| m | 1 << j)
                })
                .collect(),
        );
        is_isomorphic(&sub, &self.patterns[c.pattern].digraph)
    }

    fn realize(&mut self, p: usize) -> bool {
        self.realized[p] += 1;
        if self.realized[p] == 1 {
            let g = self.patterns[p].group;
            self.group_realized[g] += 1;
            return self.group_realized[g] == self.group_size[g];
        }
        false
    }

    fn unrealize(&mut self, p: usize) {
        self.realized[p] -= 1;
        if self.realized[p] == 0 {
            self.group_realized[self.patterns[p].group] -= 1;
        }
    }

    /// Orients edge `e`; returns the realized patterns to undo, and whether a
    /// whole forbidden member is now present.
    fn assign(&mut self, e: usize, forward: bool) -> (Vec<usize>, bool) {
        let (u, v) = self.g.edges()[e];
        let (a, b) = if forward { (u, v) } else { (v, u) };
        self.dir[e] = Some(forward);
        self.out[a] |= 1 << b;
        self.decided_at[u] += 1;
        self.decided_at[v] += 1;
        let mut done = Vec::new();
        let mut conflict = false;
        for i in 0..self.by_edge[e].len() {
            let c = self.by_edge[e][i];
            self.candidates[c].undecided -= 1;
            if self.candidates[c].undecided == 0 && self.matches(&self.candidates[c]) {
                let p = self.candidates[c].pattern;
                done.push(p);
                conflict |= self.realize(p);
            }
        }
        (done, conflict)
    }

    fn unassign(&mut self, e: usize, done: Vec<usize>) {
        let (u, v) = self.g.edges()[e];
        let forward = self.dir[e].take().expect("edge was assigned");
        let (a, b) = if forward { (u, v) } else { (v, u) };
        self.out[a] &= !(1 << b);
        self.decided_at[u] -= 1;
        self.decided_at[v] -= 1;
        for &c in &self.by_edge[e] {
            self.candidates[c].undecided += 1;
        }
        for p in done {
            self.unrealize(p);
        }
    }

    fn solve(&mut self) -> Result<bool> {
        let Some(e) = self.pick_edge() else {
            return Ok(true);
        };
        let (u, v) = self.g.edges()[e];
        for forward in [true, false] {
            self.work += 1;
            if self.work > self.budget {
                return Err(Error::WorkBudgetExceeded {
                    budget: self.budget,
                });
            }
            let (a, b) = if forward { (u, v) } else { (v, u) };
            if self.acyclic && self.reaches(b, a) {
                continue;
            }
            let (done, conflict) = self.assign(e, forward);
            if !conflict && self.solve()? {
                return Ok(true);
            }
            self.unassign(e, done);
        }
        Ok(false)
    }
}

pub fn admits_orientation(g: &Graph, f: &ForbiddenSet, mode: SearchMode) -> Result<OrientationVerdict> {
    admits_orientation_with_budget(g, f, mode, DEFAULT_WORK_BUDGET)
}

/// Searches for an orientation of `g` avoiding `f` under `mode`.
///
/// Homomorphism mode searches against the homomorphic image closure of `f`
/// with induced containment. Exhausting `budget` search nodes is an error,
/// never a negative answer.
pub fn admits_orientation_with_budget(
    g: &Graph,
    f: &ForbiddenSet,
    mode: SearchMode,
    budget: u64,
) -> Result<OrientationVerdict> {
    // (pattern, group) pairs; a member is present once every pattern of its
    // group is realized somewhere
    let mut patterns = Vec::new();
    let mut group_size = Vec::new();
    match mode.containment {
        Containment::Induced => {
            for m in f.members() {
                patterns.push(Pattern { digraph: m.as_digraph().clone(), group: group_size.len() });
                group_size.push(1);
            }
        }
        Containment::Hom => {
            for m in homomorphic_image_closure(f).members() {
                patterns.push(Pattern { digraph: m.as_digraph().clone(), group: group_size.len() });
                group_size.push(1);
            }
        }
        Containment::Overlap => {
            for m in f.members() {
                let comps = m.weak_components();
                for comp in &comps {
                    patterns.push(Pattern { digraph: m.induced(comp).into(), group: group_size.len() });
                }
                group_size.push(comps.len());
            }
        }
    }

    let edges = g.edges();
    let mut candidates = Vec::new();
    let mut by_edge = vec![Vec::new(); edges.len()];
    for (p, pat) in patterns.iter().enumerate() {
        for mask in induced_copies(&pat.digraph.underlying(), g) {
            let vertices: Vec<usize> = bits(mask).collect();
            let id = candidates.len();
            let mut count = 0;
            for (e, &(u, v)) in edges.iter().enumerate() {
                if mask >> u & 1 == 1 && mask >> v & 1 == 1 {
                    by_edge[e].push(id);
                    count += 1;
                }
            }
            candidates.push(Candidate { pattern: p, vertices, undecided: count });
        }
    }

    let mut search = Search {
        g,
        acyclic: mode.acyclic,
        group_realized: vec![0; group_size.len()],
        group_size,
        realized: vec![0; patterns.len()],
        patterns,
        candidates,
        by_edge,
        dir: vec![None; edges.len()],
        out: vec![0; g.n()],
        decided_at: vec![0; g.n()],
        work: 0,
        budget,
    };

    // patterns without edges are present before anything is oriented
    let mut conflict = false;
    for c in 0..search.candidates.len() {
        if search.candidates[c].undecided == 0 && search.matches(&search.candidates[c]) {
            conflict |= search.realize(search.candidates[c].pattern);
        }
    }
    if conflict || !search.solve()? {
        return Ok(OrientationVerdict {
            admits: false,
            witness: None,
            work: search.work,
        });
    }
    let forward = search.dir.iter().map(|d| d.expect("all edges oriented")).collect();
    let witness = Orientation::new(g.clone(), forward)?;
    assert!(
        is_free(&witness.to_oriented(), f, mode)?,
        "search produced a witness that fails independent verification"
    );
    Ok(OrientationVerdict {
        admits: true,
        witness: Some(witness),
        work: search.work,
    })
}
