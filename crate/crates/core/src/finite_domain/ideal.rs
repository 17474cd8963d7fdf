//! Invertible ideals of a Prüfer domain with finite treed spectrum.
//!
//! An ideal is one integer per nonzero prime. Its localization at a maximal
//! `M` is the vector of coordinates along the chain from the root to `M`,
//! compared lexicographically with the prime nearest the root first.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::spectra::{FiniteTreeSpectrum, NodeSet, PrimeId};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EIdeal {
    spec: Arc<FiniteTreeSpectrum>,
    /// Indexed by node; the root entry is always 0.
    coords: Vec<i64>,
}

impl EIdeal {
    /// The ring itself.
    pub fn unit(spec: &Arc<FiniteTreeSpectrum>) -> Self {
        EIdeal { spec: spec.clone(), coords: vec![0; spec.len()] }
    }

    pub fn new<P: Into<PrimeId> + Clone>(spec: &Arc<FiniteTreeSpectrum>, coords: &[(P, i64)]) -> Result<Self> {
        let mut out = Self::unit(spec);
        for (p, v) in coords {
            let i = spec.index_of(&p.clone().into())?;
            if i == spec.root() {
                return Err(Error::UnknownPrime(format!("{} (the zero prime carries no coordinate)", spec.label(i))));
            }
            out.coords[i] = *v;
        }
        Ok(out)
    }

    /// From a dense vector indexed by node.
    pub fn from_dense(spec: &Arc<FiniteTreeSpectrum>, coords: Vec<i64>) -> Self {
        assert_eq!(coords.len(), spec.len());
        assert_eq!(coords[spec.root()], 0, "root carries no coordinate");
        EIdeal { spec: spec.clone(), coords }
    }

    /// `{prime: coefficient}`.
    pub fn from_json(spec: &Arc<FiniteTreeSpectrum>, v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Model("an ideal is a {prime: coefficient} object".into()))?;
        let mut pairs = Vec::new();
        for (k, c) in obj {
            let c = c.as_i64().ok_or_else(|| Error::Model(format!("coefficient of {k} must be an integer")))?;
            pairs.push((PrimeId::new(k.clone()), c));
        }
        Self::new(spec, &pairs)
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.coord_map().into_iter().map(|(k, v)| (k.0, Value::from(v))).collect())
    }

    pub fn spectrum(&self) -> &Arc<FiniteTreeSpectrum> {
        &self.spec
    }

    pub fn dense(&self) -> &[i64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i]
    }

    /// Nonzero coordinates by prime.
    pub fn coord_map(&self) -> BTreeMap<PrimeId, i64> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(i, v)| (self.spec.label(i).clone(), *v))
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.coords.iter().all(|v| *v == 0)
    }

    fn same(&self, o: &EIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.spec, &o.spec) || self.spec == o.spec {
            Ok(())
        } else {
            Err(Error::SpectrumMismatch)
        }
    }

    pub fn localize_at(&self, m: usize) -> Vec<i64> {
        self.spec.chain_to(m).into_iter().map(|p| self.coords[p]).collect()
    }

    pub fn localize(&self, m: &PrimeId) -> Result<Vec<i64>> {
        let i = self.spec.index_of(m)?;
        if !self.spec.is_maximal(i) {
            return Err(Error::NotMaximal(m.to_string()));
        }
        Ok(self.localize_at(i))
    }

    /// Up-closure of the primes with a nonzero coordinate.
    pub fn support(&self) -> NodeSet {
        let nz: NodeSet = (0..self.coords.len()).filter(|&i| self.coords[i] != 0).collect();
        self.spec.up_closure(&nz).expect("indices come from the spectrum")
    }

    pub fn is_integral(&self) -> bool {
        let zero_cmp = |v: &[i64]| v.iter().find(|x| **x != 0).map_or(Ordering::Equal, |x| x.cmp(&0));
        self.spec.maximal().iter().all(|&m| zero_cmp(&self.localize_at(m)) != Ordering::Less)
    }

    /// `J ⊆ self`: every maximal localization of `J` is lexicographically at
    /// least that of `self`.
    pub fn contains(&self, j: &EIdeal) -> Result<bool> {
        self.same(j)?;
        Ok(self.spec.maximal().iter().all(|&m| j.localize_at(m) >= self.localize_at(m)))
    }

    pub fn product(&self, o: &EIdeal) -> Result<EIdeal> {
        self.same(o)?;
        let coords = self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect();
        Ok(EIdeal { spec: self.spec.clone(), coords })
    }

    pub fn inverse(&self) -> EIdeal {
        EIdeal { spec: self.spec.clone(), coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn power(&self, k: i64) -> EIdeal {
        EIdeal { spec: self.spec.clone(), coords: self.coords.iter().map(|a| a * k).collect() }
    }

    /// Per-chain choice between the two localizations, re-encoded as
    /// coordinates. Chains sharing a prefix must agree on it.
    fn per_chain(&self, o: &EIdeal, pick: Ordering) -> Result<EIdeal> {
        self.same(o)?;
        let mut coords: Vec<Option<i64>> = vec![None; self.coords.len()];
        coords[self.spec.root()] = Some(0);
        for m in self.spec.maximal() {
            let (a, b) = (self.localize_at(m), o.localize_at(m));
            let v = if a.cmp(&b) == pick { a } else { b };
            for (p, x) in self.spec.chain_to(m).into_iter().zip(v) {
                match coords[p] {
                    Some(y) => assert_eq!(y, x, "chains disagree at {}", self.spec.label(p)),
                    None => coords[p] = Some(x),
                }
            }
        }
        let coords = coords.into_iter().map(|c| c.expect("every prime lies on a maximal chain")).collect();
        Ok(EIdeal { spec: self.spec.clone(), coords })
    }

    /// `I + J`: the per-chain lexicographic minimum.
    pub fn sum(&self, o: &EIdeal) -> Result<EIdeal> {
        self.per_chain(o, Ordering::Less)
    }

    /// `I ∩ J`: the per-chain lexicographic maximum.
    pub fn intersect(&self, o: &EIdeal) -> Result<EIdeal> {
        self.per_chain(o, Ordering::Greater)
    }

    /// `I = J L^{-1}` with `J = I ∩ D` and `L = (I + D)^{-1}`, both integral.
    pub fn jl_decompose(&self) -> (EIdeal, EIdeal) {
        let d = Self::unit(&self.spec);
        let j = self.intersect(&d).expect("same spectrum");
        let l = self.sum(&d).expect("same spectrum").inverse();
        (j, l)
    }
}

impl fmt::Display for EIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coord_map().iter().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Every ideal with coordinates in `lo..=hi`, in a fixed order.
pub fn enumerate_ideals(spec: &Arc<FiniteTreeSpectrum>, lo: i64, hi: i64) -> Vec<EIdeal> {
    let nz: Vec<usize> = spec.nonzero().into_iter().collect();
    let mut out = Vec::new();
    let mut cur = vec![lo; nz.len()];
    loop {
        let mut coords = vec![0; spec.len()];
        for (p, v) in nz.iter().zip(&cur) {
            coords[*p] = *v;
        }
        out.push(EIdeal { spec: spec.clone(), coords });
        let mut k = 0;
        loop {
            if k == cur.len() {
                return out;
            }
            if cur[k] < hi {
                cur[k] += 1;
                break;
            }
            cur[k] = lo;
            k += 1;
        }
    }
}
