//! Bipartite graphs as the graphs with an orientation avoiding the
//! transitive triangle, the directed triangle and the directed 3-path.
//!
//! Long cycles only ever meet the path member, so the cycle question reduces
//! to periodic words avoiding `>>` and `<<`.

use orient_expr::automaton::enumerate_periods;
use orient_expr::spectrum::{cycle_spectrum, cycle_spectrum_brute, cycle_witness_language, language_threshold};
use orient_expr::words::forbidden_factor_set;
use orient_expr::{ForbiddenSet, OrientedGraph};

fn main() -> orient_expr::Result<()> {
    let f = ForbiddenSet::new([
        OrientedGraph::transitive_tournament(3),
        OrientedGraph::directed_cycle(3)?,
        OrientedGraph::directed_path(3),
    ])?;
    let a = forbidden_factor_set(f.members());
    println!("path members as factors: {a}");
    println!("periods up to 20: {:?}", enumerate_periods(&a, 20, false));
    println!("language route from length {}", language_threshold(&f));

    let spectrum = cycle_spectrum(&f, 3, 16, false)?;
    println!("cycles with an F-free orientation in [3, 16]: {spectrum:?}");
    assert_eq!(spectrum, cycle_spectrum_brute(&f, 3, 16, false)?);

    let c10 = cycle_witness_language(&f, 10, false)?.expect("10 is even");
    println!("an orientation of C10: {:?}", c10.arcs());
    Ok(())
}
