//! Divisorial operations and the minimal-jump construction.

use crate::error::{Error, Result};
use crate::finite_domain::EIdeal;
use crate::spectra::PrimeId;

#[derive(Clone, Debug)]
pub struct VReport {
    /// `(D : I)`.
    pub colon: EIdeal,
    /// `(D : (D : I))`.
    pub v_closure: EIdeal,
    pub v_invertible: bool,
    /// The support lies in the maximal primes.
    pub support_in_max: bool,
    /// An ideal `J ⊆ I` with the same support, for integral `I`.
    pub witness: Option<EIdeal>,
    /// On a finite spectrum the divisorial and invertible groups coincide.
    pub div_equals_inv: bool,
}

pub fn v_ops(i: &EIdeal) -> VReport {
    let colon = i.inverse();
    let v_closure = colon.inverse();
    let v_invertible = v_closure.product(&colon).is_ok_and(|p| p.is_unit());
    let spec = i.spectrum();
    let support_in_max = i.support().iter().all(|&p| spec.is_maximal(p));
    let witness = i.is_integral().then(|| i.clone()).filter(|j| i.contains(j).unwrap_or(false));
    VReport { colon, v_closure, v_invertible, support_in_max, witness, div_equals_inv: true }
}

/// An integral `J` with `I ⊆ J ⊆ M` whose minimal primes avoid those of `I`.
pub fn minimal_jump(i: &EIdeal, m: &PrimeId) -> Result<EIdeal> {
    let spec = i.spectrum();
    let mi = spec.index_of(m)?;
    if !spec.is_maximal(mi) {
        return Err(Error::NotMaximal(m.to_string()));
    }
    if !i.is_integral() {
        return Err(Error::Negative);
    }
    let supp = i.support();
    if !supp.contains(&mi) {
        return Err(Error::NotInSupport(m.to_string()));
    }
    let min_i = spec.minimal_in(&supp);
    if min_i.contains(&mi) {
        return Err(Error::MIsMinimal(m.to_string()));
    }
    let j = EIdeal::new(spec, &[(m.clone(), 1)])?;
    let min_j = spec.minimal_in(&j.support());
    let ok = j.contains(i)? && j.is_integral() && j.support().contains(&mi) && min_i.is_disjoint(&min_j);
    if ok {
        Ok(j)
    } else {
        Err(Error::Model(format!("no jump found for {i} at {m}")))
    }
}
