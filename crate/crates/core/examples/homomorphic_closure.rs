//! Homomorphism semantics via induced search against every homomorphic
//! image of the forbidden members.

use orient_expr::canon::enumerate_graphs;
use orient_expr::forbidden::homomorphic_image_closure;
use orient_expr::{admits_orientation, ForbiddenSet, OrientedGraph, SearchMode};

fn main() -> orient_expr::Result<()> {
    for k in 3..=4 {
        let f = ForbiddenSet::new([OrientedGraph::directed_path(k)])?;
        let closure = homomorphic_image_closure(&f);
        println!("directed path on {k} vertices: {} oriented homomorphic images", closure.len());
        for m in closure.members() {
            println!("  {:?}", m.arcs());
        }
        let mut agree = 0;
        for g in (1..=5).flat_map(|n| enumerate_graphs(n).unwrap()) {
            let hom = admits_orientation(&g, &f, SearchMode::hom())?.admits;
            let induced = admits_orientation(&g, &closure, SearchMode::induced())?.admits;
            assert_eq!(hom, induced);
            agree += 1;
        }
        println!("  agrees with homomorphism search on {agree} graphs");
    }
    Ok(())
}
