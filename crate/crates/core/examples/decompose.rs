//! Splitting a group element into components along the critical sequence.

use radfact::factorization::{crit_sequence, decompose_inv};
use radfact::ideal_core::SearchBudget;
use radfact::model::Model;

fn main() -> radfact::Result<()> {
    let model = Model::load(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/OS2.json"))?;
    let g = model.group()?;
    let budget = SearchBudget::new(5, 3)?;
    let seq = crit_sequence(g, budget)?;
    // 3f plus a bump at the isolated point 2.5
    let f = g.generator("f").unwrap().scale(3).add(&model.function(
        r#"{"exceptions": [[2, {"exceptions": [[5, 4]], "tail": 0, "at_limit": 0}]], "tail": {"exceptions": [], "tail": 0, "at_limit": 0}, "at_limit": 0}"#,
    )?)?;
    let d = decompose_inv(g, &f, budget, &seq)?;
    println!("membership certificate: {}", d.membership);
    for (beta, c) in d.components.iter().enumerate() {
        println!("c_{beta} = {c}");
    }
    for (beta, coeffs) in d.coefficients.iter().enumerate() {
        let shown: Vec<String> = coeffs.iter().map(|(t, k)| format!("{k}·{t}")).collect();
        if !shown.is_empty() {
            println!("sections at layer {beta}: {}", shown.join(" + "));
        }
    }
    Ok(())
}
