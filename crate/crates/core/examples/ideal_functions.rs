//! Ideal functions: evaluation, lattice arithmetic, supports and regularity.

use radfact::descriptor::{Germ, Seq};
use radfact::ideal_core::{Conv, IdealFunction};
use radfact::spectra::{BallSpace, OrdinalSpace, Space};

fn main() -> radfact::Result<()> {
    let os1 = Space::Ordinal(OrdinalSpace::omega_plus_one());
    // f(n) = n, f(∞) = 1
    let f = IdealFunction::from_conv(Conv::new(Seq::new(vec![], Germ::affine(1, 0)), 1));
    println!("f = {f}");
    for label in ["4", "inf"] {
        println!("f({label}) = {}", f.eval(&os1.parse_point(label)?)?);
    }
    println!("lsc {}, continuous {}, bounded {}", f.is_lsc(), f.is_continuous(), f.is_bounded());
    println!("supp f = {}", f.support());

    let chi3 = IdealFunction::from_json(os1, &serde_json::json!({"exceptions": [[3, 1]], "tail": 0, "at_limit": 0}))?;
    println!("f ∧ χ_3 = {}", f.meet(&chi3)?);
    println!("f - f is zero: {}", f.sub(&f)?.is_zero());

    let bs1 = Space::Ball(BallSpace::new(2, 2)?);
    let g = IdealFunction::from_values(bs1, vec![2, 1, 0, 3])?;
    let h = IdealFunction::from_values(bs1, vec![0, 1, 1, 1])?;
    println!("(2,1,0,3) + (0,1,1,1) = {}", g.add(&h)?);
    println!("radical: {}, sup norm {:?}", g.is_radical(), g.sup_norm());
    Ok(())
}
