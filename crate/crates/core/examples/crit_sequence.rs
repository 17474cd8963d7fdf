//! The descending critical sequence, SP-rank and SP-heights.

use radfact::factorization::{crit_sequence, sp_height};
use radfact::ideal_core::SearchBudget;
use radfact::model::Model;

fn main() -> radfact::Result<()> {
    let budget = SearchBudget::new(5, 3)?;
    for name in ["OS1.json", "OS2.json", "BS1.json"] {
        let model = Model::load(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR")))?;
        let g = model.group()?;
        let s = crit_sequence(g, budget)?;
        println!("{name}: {} (sp_rank {:?}, {:?})", s.chain_labels().join(" ⊋ "), s.sp_rank, s.status);
    }
    let os2 = Model::load(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/OS2.json"))?;
    let g = os2.group()?;
    for label in ["3.4", "3.inf", "inf"] {
        println!("height of {label}: {:?}", sp_height(g, &g.space().parse_point(label)?, budget)?);
    }
    Ok(())
}
