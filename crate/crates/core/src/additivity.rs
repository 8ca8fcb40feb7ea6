//! Disconnected forbidden members and disjoint unions.

use serde::Serialize;

use crate::canon::enumerate_graphs_bounded;
use crate::error::Result;
use crate::forbidden::{ForbiddenSet, SearchMode};
use crate::graph::{Graph, OrientedGraph};
use crate::search::admits_orientation;

fn mode(acyclic: bool) -> SearchMode {
    if acyclic {
        SearchMode::induced().acyclic()
    } else {
        SearchMode::induced()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectedReduction {
    /// The first all-connected candidate that agreed with `F` on every graph
    /// checked, if any.
    pub candidate: Option<ForbiddenSet>,
    pub candidates_tried: usize,
    pub verified_to: usize,
}

/// Looks for an all-connected set expressing the same class as `f` on all
/// graphs with at most `n_verify` vertices.
///
/// Candidates replace each disconnected member by one of its components.
/// This is a bounded check: agreement up to `n_verify` does not prove the two
/// sets express the same class.
pub fn reduce_to_connected(f: &ForbiddenSet, acyclic: bool, n_verify: usize) -> Result<ConnectedReduction> {
    let universe: Vec<Graph> = (1..=n_verify)
        .map(|n| enumerate_graphs_bounded(n, n_verify.max(1)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut reference = Vec::with_capacity(universe.len());
    for g in &universe {
        reference.push(admits_orientation(g, f, mode(acyclic))?.admits);
    }

    // per member: the options it may be replaced by
    let options: Vec<Vec<OrientedGraph>> = f
        .members()
        .iter()
        .map(|m| {
            let comps = m.weak_components();
            if comps.len() == 1 {
                vec![m.clone()]
            } else {
                comps.iter().map(|c| m.induced(c)).collect()
            }
        })
        .collect();
    let total: usize = options.iter().map(Vec::len).product();
    for idx in 0..total {
        let mut code = idx;
        let mut chosen = Vec::with_capacity(options.len());
        for opts in &options {
            chosen.push(opts[code % opts.len()].clone());
            code /= opts.len();
        }
        let candidate = ForbiddenSet::new(chosen)?;
        let mut agrees = true;
        for (g, &expected) in universe.iter().zip(&reference) {
            if admits_orientation(g, &candidate, mode(acyclic))?.admits != expected {
                agrees = false;
                break;
            }
        }
        if agrees {
            return Ok(ConnectedReduction {
                candidate: Some(candidate),
                candidates_tried: idx + 1,
                verified_to: n_verify,
            });
        }
    }
    Ok(ConnectedReduction {
        candidate: None,
        candidates_tried: total,
        verified_to: n_verify,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowUpReport {
    pub base: Graph,
    pub admits_free: bool,
    pub admits_overlap_free: bool,
    /// Members that can overlap inside the base graph.
    pub relevant_members: usize,
    /// Largest number of components among the relevant members.
    pub max_components: usize,
    pub copies: usize,
    pub union_vertices: usize,
    /// Whether the disjoint union of `copies` base graphs has an `F`-free
    /// orientation. `None` when the construction does not apply.
    pub union_admits_free: Option<bool>,
}

/// The pigeonhole construction for a graph that has an `F`-free orientation
/// but no `F`-overlap-free one: `l * k` disjoint copies, where `k` counts
/// the members whose components all fit in `g` and `l` is the largest number
/// of components among them. Every orientation of the union then contains
/// some member outright.
pub fn overlap_blow_up(g: &Graph, f: &ForbiddenSet, acyclic: bool) -> Result<BlowUpReport> {
    let free = admits_orientation(g, f, mode(acyclic))?.admits;
    let overlap_mode = if acyclic {
        SearchMode::overlap().acyclic()
    } else {
        SearchMode::overlap()
    };
    let overlap_free = admits_orientation(g, f, overlap_mode)?.admits;
    let relevant: Vec<&OrientedGraph> = f
        .members()
        .iter()
        .filter(|m| m.weak_components().iter().all(|c| c.len() <= g.n()))
        .collect();
    let k = relevant.len();
    let l = relevant.iter().map(|m| m.weak_components().len()).max().unwrap_or(0);
    let copies = k * l;
    let applies = free && !overlap_free && copies > 0;
    let union_admits_free = if applies {
        let union = g.repeat(copies)?;
        Some(admits_orientation(&union, f, mode(acyclic))?.admits)
    } else {
        None
    };
    Ok(BlowUpReport {
        base: g.clone(),
        admits_free: free,
        admits_overlap_free: overlap_free,
        relevant_members: k,
        max_components: l,
        copies,
        union_vertices: copies * g.n(),
        union_admits_free,
    })
}
