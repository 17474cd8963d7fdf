//! Closures on a finite tree spectrum and on the scattered maximal spaces.
//!
//! ```text
//! cargo run --example spectra_closures
//! ```

use radfact::spectra::{ClopenAtom, ClopenSet, FiniteTreeSpectrum, NodeSet, OrdinalSpace, PointSet, PrimeId, Space};

fn show(t: &FiniteTreeSpectrum, s: &NodeSet) -> String {
    let names: Vec<String> = t.names(s).iter().map(ToString::to_string).collect();
    format!("{{{}}}", names.join(", "))
}

fn main() -> radfact::Result<()> {
    let t = FiniteTreeSpectrum::new(
        &["r", "Q1", "Q2", "M1", "M2", "M3", "M4"],
        &[("Q1", "r"), ("Q2", "r"), ("M4", "r"), ("M1", "Q1"), ("M2", "Q1"), ("M3", "Q2")],
    )?;
    let q1 = t.indices([&PrimeId::new("Q1")])?;
    let m1 = t.indices([&PrimeId::new("M1")])?;
    println!("up-closure of Q1:      {}", show(&t, &t.up_closure(&q1)?));
    println!("inverse closure of M1: {}", show(&t, &t.inverse_closure(&m1)?));
    for x in t.up_closed_sets().iter().take(4) {
        let r = t.splitting_report(x)?;
        println!("splitting {}: {} (conditions agree: {})", show(&t, x), r.is_splitting, r.agree);
    }

    let os1 = Space::Ordinal(OrdinalSpace::omega_plus_one());
    let tail = ClopenSet::new(vec![ClopenAtom::Tail { prefix: vec![], from: 5 }]).to_set(os1)?;
    for label in ["3", "7", "inf"] {
        println!("{label} in [5, inf]: {}", tail.contains(&os1.parse_point(label)?)?);
    }
    let isolated = PointSet::limit_points(os1).complement();
    println!("closure of the isolated points: {}", isolated.closure());

    let os2 = OrdinalSpace::omega_squared_plus_one();
    println!("derived space of ω²+1 has rank {}", os2.cb_derivative()?.rank());
    Ok(())
}
