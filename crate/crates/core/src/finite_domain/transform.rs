//! Nagata transforms and the quotient by `Inv_X`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite_domain::{enumerate_ideals, EIdeal};
use crate::spectra::{FiniteTreeSpectrum, NodeSet, PrimeId};

#[derive(Clone, Debug)]
pub struct NagataTransform {
    pub spectrum: FiniteTreeSpectrum,
    /// Surviving prime to its image.
    pub correspondence: BTreeMap<PrimeId, PrimeId>,
    /// Old node index of each new node.
    pub kept: Vec<usize>,
}

/// Deletes the splitting set `x` from the spectrum. The zero prime always
/// survives, so deleting every node leaves a field.
pub fn nagata_transform(spec: &FiniteTreeSpectrum, x: &NodeSet) -> Result<NagataTransform> {
    let report = spec.splitting_report(x)?;
    if !report.is_splitting {
        let names: Vec<String> = spec.names(x).iter().map(ToString::to_string).collect();
        return Err(Error::NotSplitting(format!("{{{}}}", names.join(", "))));
    }
    let kept: Vec<usize> = (0..spec.len()).filter(|i| !x.contains(i) || *i == spec.root()).collect();
    let pos: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(k, i)| (*i, k)).collect();
    let labels = kept.iter().map(|&i| spec.label(i).clone()).collect();
    let parent = kept.iter().map(|&i| spec.parent(i).map(|p| pos[&p])).collect();
    let spectrum = FiniteTreeSpectrum::from_parent_vec(labels, parent)?;
    let correspondence = kept.iter().map(|&i| (spec.label(i).clone(), spec.label(i).clone())).collect();
    Ok(NagataTransform { spectrum, correspondence, kept })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub rank_inv_x: usize,
    pub rank_quotient: usize,
    pub nonzero_primes: usize,
    pub closed: bool,
    pub convex: bool,
    pub kernel_is_inv_x: bool,
    pub surjective: bool,
    pub ranks_add_up: bool,
    pub passed: bool,
}

/// Checks on ideals with coordinates in `[-1, 1]` that `Inv_X` is a convex
/// subgroup and that extension to the transform is onto with kernel
/// `Inv_X`, then checks rank additivity.
pub fn quotient_check(spec: &FiniteTreeSpectrum, x: &NodeSet) -> Result<QuotientReport> {
    let t = nagata_transform(spec, x)?;
    let spec = Arc::new(spec.clone());
    let all = enumerate_ideals(&spec, -1, 1);
    // `x` is up-closed, so a support lies in `x` iff every nonzero coordinate does
    let mask: Vec<bool> = (0..spec.len()).map(|p| x.contains(&p)).collect();
    let coords_in_x = |c: &[i64]| c.iter().zip(&mask).all(|(v, m)| *v == 0 || *m);
    let in_x = |i: &EIdeal| coords_in_x(i.dense());
    let inv_x: Vec<&EIdeal> = all.iter().filter(|i| in_x(i)).collect();
    let set_x: HashSet<&EIdeal> = inv_x.iter().copied().collect();

    // closure under products and inverses, within the enumeration window
    let mut closed = inv_x.iter().all(|i| in_x(&i.inverse()));
    let mut sum = vec![0; spec.len()];
    'pairs: for a in &inv_x {
        for b in &inv_x {
            for (s, (u, v)) in sum.iter_mut().zip(a.dense().iter().zip(b.dense())) {
                *s = u + v;
            }
            if !coords_in_x(&sum) {
                closed = false;
                break 'pairs;
            }
        }
    }

    // convexity: L ⊆ J ⊆ D with L in Inv_X forces J in Inv_X
    let maximal: Vec<usize> = spec.maximal().into_iter().collect();
    let integral: Vec<(&EIdeal, Vec<Vec<i64>>)> = all
        .iter()
        .filter(|i| i.is_integral())
        .map(|i| (i, maximal.iter().map(|&m| i.localize_at(m)).collect()))
        .collect();
    let mut convex = true;
    'conv: for (_, ll) in integral.iter().filter(|(l, _)| set_x.contains(*l)) {
        for (j, jl) in &integral {
            // `L ⊆ J`: J's localizations are lexicographically at most L's
            if jl.iter().zip(ll).all(|(a, b)| a <= b) && !set_x.contains(*j) {
                convex = false;
                break 'conv;
            }
        }
    }

    // extension to the transform restricts coordinates to surviving primes
    let survivors: Vec<usize> = t.kept.iter().copied().filter(|&i| i != spec.root()).collect();
    let extend = |i: &EIdeal| survivors.iter().map(|&p| i.coord(p)).collect::<Vec<i64>>();
    let kernel_is_inv_x = all.iter().all(|i| extend(i).iter().all(|v| *v == 0) == in_x(i));
    let image: BTreeSet<Vec<i64>> = all.iter().map(extend).collect();
    let surjective = image.len() == 3usize.pow(survivors.len() as u32);

    let rank_inv_x = log3(inv_x.len()).ok_or_else(|| Error::Model("Inv_X window is not a cube".into()))?;
    let rank_quotient = survivors.len();
    let nonzero_primes = spec.nonzero().len();
    let ranks_add_up = rank_inv_x + rank_quotient == nonzero_primes;
    let passed = closed && convex && kernel_is_inv_x && surjective && ranks_add_up;
    Ok(QuotientReport {
        rank_inv_x,
        rank_quotient,
        nonzero_primes,
        closed,
        convex,
        kernel_is_inv_x,
        surjective,
        ranks_add_up,
        passed,
    })
}

fn log3(mut n: usize) -> Option<usize> {
    let mut k = 0;
    while n > 1 {
        if !n.is_multiple_of(3) {
            return None;
        }
        n /= 3;
        k += 1;
    }
    (n == 1).then_some(k)
}
