//! Critical and bounded-critical points of the ω+1 fixture.

use radfact::factorization::{bounded_crit_locus, crit_locus, detect_bounded_critical, detect_critical, CritVerdict};
use radfact::ideal_core::SearchBudget;
use radfact::model::Model;

fn main() -> radfact::Result<()> {
    let model = Model::load(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/OS1.json"))?;
    let g = model.group()?;
    let space = g.space();
    let budget = SearchBudget::new(5, 3)?;
    for label in ["1", "7", "inf"] {
        let x = space.parse_point(label)?;
        let v = detect_critical(g, &x, budget)?;
        let b = detect_bounded_critical(g, &x, budget)?;
        match &v {
            CritVerdict::NonCritical(t) => println!("{label}: NonCritical, certificate {t}"),
            other => println!("{label}: {}", other.name()),
        }
        println!("{label}: bounded {}", b.name());
    }
    let locus = crit_locus(g, budget)?;
    println!("crit = {} (search complete: {})", locus.critical, locus.complete);
    println!("bcrit = {}", bounded_crit_locus(g, budget)?.critical);
    Ok(())
}
