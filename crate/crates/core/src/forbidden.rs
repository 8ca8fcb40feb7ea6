//! Finite sets of forbidden oriented graphs and containment semantics.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::canon::canonical_digraph;
use crate::embed::{contains_induced, is_isomorphic};
use crate::error::{Error, Result};
use crate::graph::{Digraph, OrientedGraph};

/// Pairwise non-isomorphic oriented graphs, each with at least one vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ForbiddenSet {
    members: Vec<OrientedGraph>,
}

impl ForbiddenSet {
    /// Keeps the first member of each isomorphism class.
    pub fn new(members: impl IntoIterator<Item = OrientedGraph>) -> Result<Self> {
        let mut kept: Vec<OrientedGraph> = Vec::new();
        for (i, m) in members.into_iter().enumerate() {
            if m.n() == 0 {
                return Err(Error::EmptyMember(i));
            }
            if !kept.iter().any(|k| is_isomorphic(k, &m)) {
                kept.push(m);
            }
        }
        Ok(ForbiddenSet { members: kept })
    }

    pub fn from_digraphs(members: impl IntoIterator<Item = Digraph>) -> Result<Self> {
        let oriented = members
            .into_iter()
            .map(OrientedGraph::try_from)
            .collect::<Result<Vec<_>>>()?;
        Self::new(oriented)
    }

    pub fn members(&self) -> &[OrientedGraph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Largest member order, 0 for the empty set.
    pub fn max_order(&self) -> usize {
        self.members.iter().map(|m| m.n()).max().unwrap_or(0)
    }

    pub fn all_connected(&self) -> bool {
        self.members.iter().all(|m| m.is_weakly_connected())
    }

    /// `max_order + 1`: from this cycle length on, the only members that can
    /// occur in an oriented cycle are oriented paths.
    pub fn bridge_bound(&self) -> usize {
        self.max_order() + 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Containment {
    /// Members must not occur as induced subdigraphs.
    Induced,
    /// Members must not map homomorphically.
    Hom,
    /// No member may have all of its components embedded, possibly
    /// overlapping each other.
    Overlap,
}

impl FromStr for Containment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "induced" => Ok(Containment::Induced),
            "hom" => Ok(Containment::Hom),
            "overlap" => Ok(Containment::Overlap),
            other => Err(Error::InvalidArgument(format!("unknown containment mode {other:?}"))),
        }
    }
}

impl fmt::Display for Containment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Containment::Induced => "induced",
            Containment::Hom => "hom",
            Containment::Overlap => "overlap",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SearchMode {
    pub containment: Containment,
    pub acyclic: bool,
}

impl SearchMode {
    pub fn induced() -> Self {
        SearchMode {
            containment: Containment::Induced,
            acyclic: false,
        }
    }

    pub fn hom() -> Self {
        SearchMode {
            containment: Containment::Hom,
            acyclic: false,
        }
    }

    pub fn overlap() -> Self {
        SearchMode {
            containment: Containment::Overlap,
            acyclic: false,
        }
    }

    pub fn acyclic(self) -> Self {
        SearchMode {
            acyclic: true,
            ..self
        }
    }
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.containment)?;
        if self.acyclic {
            f.write_str("+acyclic")?;
        }
        Ok(())
    }
}

/// Every oriented graph `K` onto which some member maps vertex-surjectively.
///
/// For each member, vertices are partitioned into independent classes, the
/// quotient is formed, and every way of adding arcs between non-adjacent
/// classes is included. Quotients or supersets with a symmetric pair are
/// dropped, since no orientation contains them.
pub fn homomorphic_image_closure(f: &ForbiddenSet) -> ForbiddenSet {
    let mut images: BTreeMap<_, OrientedGraph> = BTreeMap::new();
    let mut large = Vec::new();
    for member in f.members() {
        let n = member.n();
        let mut class = vec![0usize; n];
        partitions(&mut class, 0, 0, &mut |class, classes| {
            let independent = member
                .arcs()
                .iter()
                .all(|&(u, v)| class[u] != class[v]);
            if !independent {
                return;
            }
            let mut arcs: Vec<(usize, usize)> =
                member.arcs().iter().map(|&(u, v)| (class[u], class[v])).collect();
            arcs.sort_unstable();
            arcs.dedup();
            if arcs.iter().any(|&(a, b)| arcs.binary_search(&(b, a)).is_ok()) {
                return;
            }
            let free: Vec<(usize, usize)> = (0..classes)
                .flat_map(|a| (a + 1..classes).map(move |b| (a, b)))
                .filter(|&(a, b)| !arcs.contains(&(a, b)) && !arcs.contains(&(b, a)))
                .collect();
            for mut code in 0..3usize.pow(free.len() as u32) {
                let mut all = arcs.clone();
                for &(a, b) in &free {
                    match code % 3 {
                        1 => all.push((a, b)),
                        2 => all.push((b, a)),
                        _ => {}
                    }
                    code /= 3;
                }
                let d = Digraph::new(classes, all).expect("quotient arcs are valid");
                match canonical_digraph(&d) {
                    Ok((rep, form)) => {
                        images.entry(form).or_insert_with(|| {
                            OrientedGraph::try_from(rep).expect("no symmetric pairs")
                        });
                    }
                    // too large for canonical forms; deduplicated below
                    Err(_) => large.push(OrientedGraph::try_from(d).expect("no symmetric pairs")),
                }
            }
        });
    }
    ForbiddenSet::new(images.into_values().chain(large)).expect("images have vertices")
}

/// Set partitions of `0..n` as restricted growth strings.
fn partitions(class: &mut [usize], i: usize, used: usize, visit: &mut impl FnMut(&[usize], usize)) {
    if i == class.len() {
        visit(class, used);
        return;
    }
    for c in 0..=used {
        class[i] = c;
        partitions(class, i + 1, used.max(c + 1), visit);
    }
}

/// Whether every weak component of `h` embeds as an induced subdigraph of
/// `d`, each independently of the others.
pub fn overlap_contains(h: &Digraph, d: &Digraph) -> bool {
    h.weak_components()
        .iter()
        .all(|comp| contains_induced(&h.induced(comp), d).is_some())
}

/// Independent check that `d` contains no member of `f` under `mode`.
pub fn is_free(d: &OrientedGraph, f: &ForbiddenSet, mode: SearchMode) -> Result<bool> {
    if mode.acyclic && !d.is_acyclic() {
        return Ok(false);
    }
    for h in f.members() {
        let found = match mode.containment {
            Containment::Induced => contains_induced(h, d).is_some(),
            Containment::Overlap => overlap_contains(h, d),
            Containment::Hom => crate::hom::hom_exists(h, d)?.is_some(),
        };
        if found {
            return Ok(false);
        }
    }
    Ok(true)
}
