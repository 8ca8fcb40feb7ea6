//! Two classical characterizations checked on every small graph:
//! k-colourable iff some orientation has no homomorphic image of the
//! directed path on k + 1 vertices, and chordal iff some acyclic orientation
//! has no induced vertex with two non-adjacent out-neighbours.

use orient_expr::canon::enumerate_graphs;
use orient_expr::oracles::{oracle_chordal, oracle_k_colourable};
use orient_expr::{admits_orientation, ForbiddenSet, OrientedGraph, SearchMode};

fn main() -> orient_expr::Result<()> {
    let b1 = ForbiddenSet::new([OrientedGraph::b1()])?;
    for n in 1..=6 {
        let graphs = enumerate_graphs(n)?;
        let mut chordal = 0;
        let mut colourable = [0; 2];
        for g in &graphs {
            let c = admits_orientation(g, &b1, SearchMode::induced().acyclic())?.admits;
            assert_eq!(c, oracle_chordal(g));
            chordal += c as usize;
            for (i, k) in [2, 3].into_iter().enumerate() {
                let p = ForbiddenSet::new([OrientedGraph::directed_path(k + 1)])?;
                let admits = admits_orientation(g, &p, SearchMode::hom())?.admits;
                assert_eq!(admits, oracle_k_colourable(g, k));
                colourable[i] += admits as usize;
            }
        }
        println!(
            "{n} vertices: {} graphs, {chordal} chordal, {} bipartite, {} 3-colourable",
            graphs.len(),
            colourable[0],
            colourable[1]
        );
    }
    Ok(())
}
