//! Radical factorization of a continuous ideal function, by level sets and
//! by repeatedly dividing out the radical.

use radfact::factorization::{factor_radical, factor_recursive, radical_of};
use radfact::ideal_core::IdealFunction;
use radfact::spectra::{BallSpace, ClopenSet, Space};

fn main() -> radfact::Result<()> {
    let space = Space::Ball(BallSpace::new(2, 2)?);
    let f = IdealFunction::from_values(space, vec![2, 1, 0, 3])?;
    println!("f = {f}, radical {}", radical_of(&f)?);

    let fac = factor_radical(&f)?;
    for (t, set) in fac.sets.iter().enumerate() {
        let atoms = ClopenSet::from_set(set).map(|c| c.label(&space)).unwrap_or_default();
        println!("X_{} = {} = {atoms}", t + 1, set);
    }
    println!("descending: {}", fac.is_descending());
    println!("sum of factors = {}", fac.sum(IdealFunction::zero(space)));
    println!("recursive algorithm agrees: {}", factor_recursive(&f)?.sets == fac.sets);

    // f(n) = n with f(∞) = 1 is not continuous, so it has no radical factorization
    let os1 = Space::Ordinal(radfact::spectra::OrdinalSpace::omega_plus_one());
    let g = IdealFunction::from_json(os1, &serde_json::json!({"exceptions": [], "tail": {"slope": 1, "offset": 0}, "at_limit": 1}))?;
    println!("ω+1 generator: {:?}", factor_radical(&g).err());
    Ok(())
}
