use crate::graph::{Graph, Orientation, OrientedGraph};

/// Lazily enumerates the orientations of a graph.
///
/// Orientations come in lexicographic order of their direction vectors over
/// [`Graph::edges`], with "forward" (`u -> v` for `u < v`) before "backward".
/// The first item is therefore the all-forward orientation, which is acyclic.
pub struct Orientations {
    base: Graph,
    next: u64,
    end: u64,
    acyclic_only: bool,
}

pub fn orientations_of(g: &Graph, acyclic_only: bool) -> Orientations {
    let m = g.edge_count();
    assert!(m < 64, "too many edges to enumerate orientations");
    Orientations {
        base: g.clone(),
        next: 0,
        end: 1u64 << m,
        acyclic_only,
    }
}

impl Orientations {
    fn orientation(&self, code: u64) -> Orientation {
        let m = self.base.edge_count();
        let forward = (0..m).map(|i| code >> (m - 1 - i) & 1 == 0).collect();
        Orientation::new(self.base.clone(), forward).expect("one direction per edge")
    }
}

impl Iterator for Orientations {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<OrientedGraph> {
        while self.next < self.end {
            let code = self.next;
            self.next += 1;
            let d = self.orientation(code).to_oriented();
            if !self.acyclic_only || d.is_acyclic() {
                return Some(d);
            }
        }
        None
    }
}
