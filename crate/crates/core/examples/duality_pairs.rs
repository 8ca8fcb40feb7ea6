//! Bounded checks of homomorphism dualities, with certificates.

use orient_expr::duality::{known_pairs, verify_duality_pair, verify_generalized_duality_with, DualityOptions};
use orient_expr::hom::{core_of, is_oriented_tree};
use orient_expr::Digraph;

fn main() -> orient_expr::Result<()> {
    for pair in known_pairs() {
        let r = verify_duality_pair(&pair.a, &pair.b, 4)?;
        println!(
            "{}: holds on {} digraphs up to order {}, core is a tree: {}",
            pair.name,
            r.checked,
            r.holds_up_to,
            is_oriented_tree(&core_of(&pair.a)?)
        );
    }

    let c3 = Digraph::directed_cycle(3)?;
    let tt2 = Digraph::transitive_tournament(2);
    let r = verify_duality_pair(&c3, &tt2, 4)?;
    let c = r.counterexample.expect("a directed triangle is not a tree");
    println!("(C3, TT2) fails on {:?}: {:?}", c.digraph, c.violation);
    assert!(c.reverify(&[c3], &[tt2])?);

    let opts = DualityOptions { n_max: 4, jobs: 4, ..DualityOptions::default() };
    let tt3 = Digraph::transitive_tournament(3);
    let r = verify_generalized_duality_with(&[tt3], &[Digraph::directed_cycle(3)?], opts)?;
    println!("({{TT3}}, {{C3}}): first counterexample after {} digraphs", r.checked);
    Ok(())
}
