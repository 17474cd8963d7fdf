//! Radicals and radical factorizations of ideal functions.

use crate::error::{Error, Result};
use crate::ideal_core::IdealFunction;
use crate::spectra::{ClopenSet, PointSet};

/// A descending chain `X_1 ⊇ X_2 ⊇ … ⊇ X_s` of clopen sets whose indicators
/// sum to the factored function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalFactorization {
    pub factors: Vec<ClopenSet>,
    pub sets: Vec<PointSet>,
}

impl RadicalFactorization {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// `Σ χ_{X_t}`.
    pub fn sum(&self, zero: IdealFunction) -> IdealFunction {
        self.sets.iter().fold(zero, |acc, s| acc.add(s.indicator()).expect("same space"))
    }

    pub fn is_descending(&self) -> bool {
        self.sets.windows(2).all(|w| w[1].is_subset(&w[0]).unwrap_or(false))
    }
}

fn check_integral(f: &IdealFunction) -> Result<()> {
    if !f.is_nonnegative() {
        return Err(Error::Negative);
    }
    if !f.is_lsc() {
        return Err(Error::NotLowerSemicontinuous);
    }
    Ok(())
}

/// `χ` of the support of `f`, when that support is clopen.
pub fn radical_of(f: &IdealFunction) -> Result<IdealFunction> {
    check_integral(f)?;
    let s = f.support();
    if s.is_clopen() {
        Ok(s.indicator().clone())
    } else {
        Err(Error::RadicalNotFinitelyGenerated(format!("support {s} is not open")))
    }
}

fn push_level(out: &mut RadicalFactorization, set: PointSet) -> Result<()> {
    let atoms = ClopenSet::from_set(&set).ok_or(Error::NotContinuous)?;
    out.factors.push(atoms);
    out.sets.push(set);
    Ok(())
}

/// Level sets `X_t = f^{-1}([t, ∞))` for `t = 1..=max f`.
pub fn factor_radical(f: &IdealFunction) -> Result<RadicalFactorization> {
    check_integral(f)?;
    if !f.is_continuous() {
        return Err(Error::NotContinuous);
    }
    let s = f.sup().finite().ok_or(Error::NotContinuous)?;
    let mut out = RadicalFactorization { factors: vec![], sets: vec![] };
    for t in 1..=s {
        push_level(&mut out, PointSet::from_indicator(f.indicator(t, move |v| v >= t))?)?;
    }
    Ok(out)
}

/// Repeatedly divides by the radical: `f ← f − χ_{supp f}`.
pub fn factor_recursive(f: &IdealFunction) -> Result<RadicalFactorization> {
    check_integral(f)?;
    if !f.is_continuous() {
        return Err(Error::NotContinuous);
    }
    let mut out = RadicalFactorization { factors: vec![], sets: vec![] };
    let mut cur = f.clone();
    while !cur.is_zero() {
        let r = radical_of(&cur)?;
        cur = cur.sub(&r)?;
        push_level(&mut out, PointSet::from_indicator(r)?)?;
    }
    Ok(out)
}
