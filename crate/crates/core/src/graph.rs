//! Immutable graph values on dense vertex sets `0..n`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so every value is
//! limited to [`MAX_VERTICES`] vertices. That is far beyond anything the
//! exhaustive searches in this crate can handle anyway.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::Loop(u));
    }
    Ok(())
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair normalized to `u < v`.
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            check_pair(n, u, v)?;
            if adj[u] >> v & 1 == 1 {
                return Err(Error::Duplicate(u, v));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph within the vertex limit")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph within the vertex limit")
    }

    /// Path with `k` edges (and `k + 1` vertices).
    pub fn path(k: usize) -> Self {
        Graph::new(k + 1, (0..k).map(|i| (i, i + 1))).expect("path within the vertex limit")
    }

    /// Cycle with `k` edges; `k >= 3`.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::CycleTooShort(k));
        }
        Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    /// Two cycles of lengths `r` and `s` glued at one vertex (vertex 0).
    pub fn coupling(r: usize, s: usize) -> Result<Self> {
        if r < 3 {
            return Err(Error::CycleTooShort(r));
        }
        if s < 3 {
            return Err(Error::CycleTooShort(s));
        }
        let n = r + s - 1;
        let mut edges: Vec<(usize, usize)> = (0..r).map(|i| (i, (i + 1) % r)).collect();
        // second cycle: 0, r, r+1, ..., r+s-2, back to 0
        let second: Vec<usize> = std::iter::once(0).chain(r..n).collect();
        for i in 0..s {
            edges.push((second[i], second[(i + 1) % s]));
        }
        Graph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbor_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[u])
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    /// Position of the edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges)
    }

    /// Disjoint union of `copies` copies of `self`.
    pub fn repeat(&self, copies: usize) -> Result<Graph> {
        let mut out = Graph::empty(0);
        for _ in 0..copies {
            out = out.disjoint_union(self)?;
        }
        Ok(out)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        components_by(self.n, |u| self.adj[u])
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges)
    }
}

fn components_by(n: usize, neighbors: impl Fn(usize) -> u64) -> Vec<Vec<usize>> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in 0..n {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= neighbors(u);
            }
            frontier = next & !comp;
            comp |= next;
        }
        seen |= comp;
        out.push(bits(comp).collect());
    }
    out
}

/// Loopless digraph without parallel arcs. Symmetric pairs (digons) are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut out = vec![0u64; n];
        let mut inn = vec![0u64; n];
        let mut list = Vec::new();
        for (u, v) in arcs {
            check_pair(n, u, v)?;
            if out[u] >> v & 1 == 1 {
                return Err(Error::Duplicate(u, v));
            }
            out[u] |= 1 << v;
            inn[v] |= 1 << u;
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(Digraph {
            n,
            arcs: list,
            out,
            inn,
        })
    }

    pub fn empty(n: usize) -> Self {
        Digraph::new(n, []).expect("arcless digraph within the vertex limit")
    }

    /// Builds a digraph from out-neighbourhood masks.
    pub(crate) fn from_out_masks(out: Vec<u64>) -> Self {
        let n = out.len();
        let arcs = (0..n).flat_map(|u| bits(out[u]).map(move |v| (u, v)));
        Digraph::new(n, arcs).expect("masks describe a loopless digraph")
    }

    /// Directed path on `n` vertices (`n - 1` arcs), written P⃗n.
    pub fn directed_path(n: usize) -> Self {
        Digraph::new(n, (1..n).map(|i| (i - 1, i))).expect("directed path")
    }

    /// Directed cycle on `n >= 3` vertices.
    pub fn directed_cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooShort(n));
        }
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Transitive tournament TTn: `i -> j` whenever `i < j`.
    pub fn transitive_tournament(n: usize) -> Self {
        let arcs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Digraph::new(n, arcs).expect("transitive tournament")
    }

    /// The symmetric pair `0 <-> 1`.
    pub fn digon() -> Self {
        Digraph::new(2, [(0, 1), (1, 0)]).expect("digon")
    }

    /// Complete symmetric digraph on `n` vertices.
    pub fn complete_symmetric(n: usize) -> Self {
        let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
        Digraph::new(n, arcs).expect("complete symmetric digraph")
    }

    /// Symmetric digraph with both arcs for every edge of `g`.
    pub fn symmetric(g: &Graph) -> Self {
        Digraph::new(
            g.n(),
            g.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]),
        )
        .expect("symmetric closure of a graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] >> v & 1 == 1
    }

    pub fn out_mask(&self, u: usize) -> u64 {
        self.out[u]
    }

    pub fn in_mask(&self, u: usize) -> u64 {
        self.inn[u]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].count_ones() as usize
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.inn[u].count_ones() as usize
    }

    /// Number of distinct neighbours, ignoring direction.
    pub fn degree(&self, u: usize) -> usize {
        (self.out[u] | self.inn[u]).count_ones() as usize
    }

    pub fn neighbor_mask(&self, u: usize) -> u64 {
        self.out[u] | self.inn[u]
    }

    pub fn underlying(&self) -> Graph {
        let edges = self
            .arcs
            .iter()
            .filter(|&&(u, v)| u < v || !self.has_arc(v, u))
            .copied();
        Graph::new(self.n, edges).expect("underlying graph of a valid digraph")
    }

    /// No symmetric arc pairs.
    pub fn is_oriented(&self) -> bool {
        (0..self.n).all(|u| self.out[u] & self.inn[u] == 0)
    }

    /// True iff there is no directed cycle (a digon counts as one).
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.n).map(|u| self.in_degree(u)).collect();
        let mut stack: Vec<usize> = (0..self.n).filter(|&u| indeg[u] == 0).collect();
        let mut removed = 0;
        while let Some(u) = stack.pop() {
            removed += 1;
            for v in bits(self.out[u]) {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
        removed == self.n
    }

    /// Subdigraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut arcs = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j && self.has_arc(u, v) {
                    arcs.push((i, j));
                }
            }
        }
        Digraph::new(vertices.len(), arcs).expect("induced subdigraph of a valid digraph")
    }

    /// Image under the vertex permutation `perm` (vertex `u` becomes `perm[u]`).
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        Digraph::new(self.n, self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling by a permutation")
    }

    pub fn disjoint_union(&self, other: &Digraph) -> Result<Digraph> {
        let shift = self.n;
        let arcs = self
            .arcs
            .iter()
            .copied()
            .chain(other.arcs.iter().map(|&(u, v)| (u + shift, v + shift)));
        Digraph::new(self.n + other.n, arcs)
    }

    /// Vertex sets of the weakly connected components, in order of least vertex.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        components_by(self.n, |u| self.out[u] | self.inn[u])
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.weak_components().len() <= 1
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({}; {:?})", self.n, self.arcs)
    }
}

/// A digraph with no symmetric arc pairs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph(Digraph);

impl OrientedGraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        OrientedGraph::try_from(Digraph::new(n, arcs)?)
    }

    pub fn as_digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }

    /// B1: a vertex with two non-adjacent out-neighbours.
    pub fn b1() -> Self {
        OrientedGraph::new(3, [(0, 1), (0, 2)]).expect("B1")
    }

    pub fn single_arc() -> Self {
        OrientedGraph::new(2, [(0, 1)]).expect("single arc")
    }

    pub fn directed_path(n: usize) -> Self {
        OrientedGraph(Digraph::directed_path(n))
    }

    pub fn directed_cycle(n: usize) -> Result<Self> {
        Ok(OrientedGraph(Digraph::directed_cycle(n)?))
    }

    pub fn transitive_tournament(n: usize) -> Self {
        OrientedGraph(Digraph::transitive_tournament(n))
    }

    pub fn disjoint_union(&self, other: &OrientedGraph) -> Result<OrientedGraph> {
        Ok(OrientedGraph(self.0.disjoint_union(&other.0)?))
    }

    pub fn induced(&self, vertices: &[usize]) -> OrientedGraph {
        OrientedGraph(self.0.induced(vertices))
    }
}

impl TryFrom<Digraph> for OrientedGraph {
    type Error = Error;

    fn try_from(d: Digraph) -> Result<Self> {
        if let Some(&(u, v)) = d.arcs().iter().find(|&&(u, v)| d.has_arc(v, u)) {
            return Err(Error::SymmetricPair(u, v));
        }
        Ok(OrientedGraph(d))
    }
}

impl From<OrientedGraph> for Digraph {
    fn from(g: OrientedGraph) -> Digraph {
        g.0
    }
}

impl Deref for OrientedGraph {
    type Target = Digraph;

    fn deref(&self) -> &Digraph {
        &self.0
    }
}

impl AsRef<Digraph> for OrientedGraph {
    fn as_ref(&self) -> &Digraph {
        &self.0
    }
}

impl fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Oriented({}; {:?})", self.0.n, self.0.arcs)
    }
}

/// A direction for every edge of a base graph.
///
/// `forward[i]` refers to `base.edges()[i] = (u, v)` with `u < v`; `true`
/// orients it `u -> v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: Graph,
    forward: Vec<bool>,
}

impl Orientation {
    pub fn new(base: Graph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != base.edge_count() {
            return Err(Error::InvalidArgument(format!(
                "{} directions for {} edges",
                forward.len(),
                base.edge_count()
            )));
        }
        Ok(Orientation { base, forward })
    }

    /// Recovers the orientation of `base` realized by `d`.
    pub fn from_oriented(base: Graph, d: &OrientedGraph) -> Result<Self> {
        if d.underlying() != base {
            return Err(Error::InvalidArgument(
                "oriented graph is not an orientation of the base graph".into(),
            ));
        }
        let forward = base.edges().iter().map(|&(u, v)| d.has_arc(u, v)).collect();
        Ok(Orientation { base, forward })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn directions(&self) -> &[bool] {
        &self.forward
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.base
            .edges()
            .iter()
            .zip(&self.forward)
            .map(|(&(u, v), &f)| if f { (u, v) } else { (v, u) })
    }

    pub fn to_oriented(&self) -> OrientedGraph {
        OrientedGraph::new(self.base.n(), self.arcs()).expect("orientation of a simple graph")
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Digraph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("arcs", &self.arcs)?;
        st.end()
    }
}

impl Serialize for OrientedGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}
