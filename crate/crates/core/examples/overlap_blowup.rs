//! Disconnected forbidden members: overlap semantics and the disjoint-union
//! construction that forces a member to appear outright.

use orient_expr::additivity::{overlap_blow_up, reduce_to_connected};
use orient_expr::{ForbiddenSet, Graph, OrientedGraph};

fn main() -> orient_expr::Result<()> {
    let arc = OrientedGraph::single_arc();
    let two_arcs = ForbiddenSet::new([arc.disjoint_union(&arc)?])?;
    let report = overlap_blow_up(&Graph::path(2), &two_arcs, false)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));

    let r = reduce_to_connected(&two_arcs, false, 5)?;
    println!("two disjoint arcs reduce to a connected set: {}", r.candidate.is_some());

    let c3 = OrientedGraph::directed_cycle(3)?;
    let r = reduce_to_connected(&ForbiddenSet::new([c3.disjoint_union(&c3)?])?, false, 5)?;
    let reduced = r.candidate.expect("agrees up to 5 vertices");
    println!("two directed triangles behave like one up to 5 vertices: {:?}", reduced.members());
    Ok(())
}
