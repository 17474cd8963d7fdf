//! Invertible ideals over a finite tree spectrum as lex-ordered coordinates.

use std::sync::Arc;

use radfact::finite_domain::{minimal_jump, v_ops, EIdeal};
use radfact::spectra::{FiniteTreeSpectrum, NodeSet, PrimeId};

fn show(t: &FiniteTreeSpectrum, s: &NodeSet) -> String {
    let names: Vec<String> = t.names(s).iter().map(ToString::to_string).collect();
    format!("{{{}}}", names.join(", "))
}


fn main() -> radfact::Result<()> {
    let t = Arc::new(FiniteTreeSpectrum::new(
        &["r", "Q1", "Q2", "M1", "M2", "M3", "M4"],
        &[("Q1", "r"), ("Q2", "r"), ("M4", "r"), ("M1", "Q1"), ("M2", "Q1"), ("M3", "Q2")],
    )?);
    let i = EIdeal::new(&t, &[("Q1", 1), ("M1", 2)])?;
    for m in ["M1", "M3", "M4"] {
        println!("I = {i} localized at {m}: {:?}", i.localize(&PrimeId::new(m))?);
    }
    println!("supp I = {}, integral {}", show(&t, &i.support()), i.is_integral());

    let (q1, m1) = (EIdeal::new(&t, &[("Q1", 1)])?, EIdeal::new(&t, &[("M1", 1)])?);
    println!("{q1} ⊆ {m1}: {}", m1.contains(&q1)?);
    println!("{q1} + {m1} = {}", q1.sum(&m1)?);
    println!("{q1} ∩ {m1} = {}", q1.intersect(&m1)?);
    println!("{q1} · {m1} = {}", q1.product(&m1)?);

    let k = EIdeal::new(&t, &[("M1", -2), ("M4", 3)])?;
    let (j, l) = k.jl_decompose();
    println!("{k} = {j} · ({l})^-1");

    let v = v_ops(&m1.power(2));
    println!("(D : {}) = {}, v-closure {}", m1.power(2), v.colon, v.v_closure);
    println!("jump from {q1} at M1: {}", minimal_jump(&q1, &PrimeId::new("M1"))?);
    Ok(())
}
