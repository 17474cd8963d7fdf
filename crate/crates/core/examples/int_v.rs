//! The layered shape of Int(V) and radical factorization of unitary ideals
//! at finite p-adic precision.

use radfact::factorization::{crit_locus, factor_radical};
use radfact::finite_domain::int_v_model;
use radfact::ideal_core::{Base, IdealFunction, PresentedGroup, SearchBudget};
use radfact::spectra::Space;

fn main() -> radfact::Result<()> {
    let m = int_v_model(2, 3)?;
    for l in &m.layers {
        println!("{} = {}", l.name, l.description);
    }
    println!("unitary rank {} (plus {})", m.unitary_rank, m.polynomial_part);

    let space = Space::Ball(m.unitary);
    let g = PresentedGroup::new(space, Base::CcFull, vec![])?;
    println!("critical set: {}", crit_locus(&g, SearchBudget::default())?.critical);
    // valuations of x - a over the residues a mod 8, capped at the precision
    let values = (0..8u64).map(|a| if a == 0 { 3 } else { a.trailing_zeros() as i64 }).collect();
    let f = IdealFunction::from_values(space, values)?;
    let fac = factor_radical(&f)?;
    for (t, s) in fac.sets.iter().enumerate() {
        println!("X_{} = {s}", t + 1);
    }
    Ok(())
}
