//! Period sets of factor-avoiding languages: gcd, threshold and exceptions.

use orient_expr::automaton::{enumerate_periods, is_transitive, FactorAutomaton};
use orient_expr::periods::{combination_threshold, gcd_basis, period_structure};
use orient_expr::{FactorSet, Word};

fn set(words: &[&str]) -> FactorSet {
    FactorSet::new(words.iter().map(|w| w.parse::<Word>().unwrap())).unwrap()
}

fn main() {
    for words in [&[">>", "<<"][..], &[">>>", "<<"], &["><>", ">>>>", "<<<"], &[">><"], &[">", "<<<"]] {
        let a = set(words);
        let aut = FactorAutomaton::new(&a);
        println!("A = {a}: {} states, transitive {}", aut.state_count(), is_transitive(&a));
        for nonconstant in [false, true] {
            let ps = period_structure(&a, nonconstant);
            println!(
                "  nonconstant={nonconstant}: r = {}, t0 = {:?}, exceptions = {:?}, verified to {}",
                ps.gcd_r, ps.threshold_t0, ps.exceptions, ps.verified_to
            );
            if let Some(predicted) = ps.predicted(ps.verified_to) {
                assert_eq!(predicted, enumerate_periods(&a, ps.verified_to, nonconstant));
            }
        }
        let periods = enumerate_periods(&a, 40, false);
        let basis = gcd_basis(&periods);
        println!("  generating lengths {basis:?}, all combinations from {:?}", combination_threshold(&basis));
    }
}
