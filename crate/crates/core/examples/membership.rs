//! Bounded membership search in presented groups, with term certificates.

use radfact::ideal_core::{Base, IdealFunction, MembershipVerdict, PresentedGroup, SearchBudget};
use radfact::model::Model;
use radfact::spectra::{BallSpace, Space};

fn report(g: &PresentedGroup, name: &str, f: &IdealFunction, budget: SearchBudget) -> radfact::Result<()> {
    match g.membership(f, budget)? {
        MembershipVerdict::Member(t) => {
            println!("{name}: member via {t} (verified: {})", g.verify_certificate(f, &t)?)
        }
        v => println!("{name}: {v:?} at budget {budget}"),
    }
    Ok(())
}

fn main() -> radfact::Result<()> {
    let model = Model::load(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/OS1.json"))?;
    let g = model.group()?;
    let budget = SearchBudget::new(5, 3)?;
    report(g, "f", &model.function("f")?, budget)?;
    report(g, "2f - χ_3", &model.function(r#"{"exceptions": [[3, 5]], "tail": {"slope": 2, "offset": 0}, "at_limit": 2}"#)?, budget)?;
    report(g, "χ[5, inf]", &model.function(r#"{"exceptions": [[1,0],[2,0],[3,0],[4,0]], "tail": 1, "at_limit": 1}"#)?, budget)?;
    println!("model check: {:?}", g.validate());

    let bs = Space::Ball(BallSpace::new(2, 2)?);
    let full = PresentedGroup::new(bs, Base::CcFull, vec![])?;
    report(&full, "(2,1,0,3)", &IdealFunction::from_values(bs, vec![2, 1, 0, 3])?, SearchBudget::default())?;
    Ok(())
}
