//! Necessary conditions for classes defined by forbidden hole lengths.

use orient_expr::holes::{analyze, is_prime, parse_hole_spec, HoleClassSpec, HoleTail};

fn main() -> orient_expr::Result<()> {
    let classes = [
        ("no prime holes", HoleClassSpec::custom(60, HoleTail::Other, is_prime)?),
        ("no even holes", HoleClassSpec::custom(60, HoleTail::Other, |k| k % 2 == 0)?),
        ("no holes at all", HoleClassSpec::cofinite([])),
        ("no odd holes from 5 on", parse_hole_spec("variant=odd_tail M=5")?),
        ("no 5- or 6-holes", HoleClassSpec::finite([5, 6])),
    ];
    for (name, spec) in classes {
        let report = analyze(&spec, 50)?;
        println!("{name}: {:?}", report.overall);
        for v in &report.verdicts {
            println!("  {:<14} {:?}  {}", v.condition.tag(), v.status, v.reason);
        }
    }
    Ok(())
}
