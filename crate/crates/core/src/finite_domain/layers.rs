//! Compactly layered sequences, the CSD decomposition and the `Int(V)` shape.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite_domain::nagata_transform;
use crate::spectra::{is_prime, BallSpace, FiniteTreeSpectrum, NodeSet};

/// `Y_0 ⊇ Y_1 ⊇ … ⊇ Y_γ = ∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerSequence {
    pub layers: Vec<NodeSet>,
}

impl LayerSequence {
    /// Each layer is down-closed and drops only maximal points of the
    /// previous one; the last layer is empty.
    pub fn validate(&self, spec: &FiniteTreeSpectrum) -> bool {
        let all: NodeSet = (0..spec.len()).collect();
        let starts = self.layers.first() == Some(&all);
        let ends = self.layers.last().is_some_and(NodeSet::is_empty);
        let steps = self.layers.windows(2).all(|w| {
            let (y, next) = (&w[0], &w[1]);
            let max_y: NodeSet = spec.maximal_in(y);
            next.is_subset(y)
                && spec.down_closure(next).is_ok_and(|d| d == *next)
                && y.difference(next).all(|p| max_y.contains(p))
        });
        starts && ends && steps
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(NodeSet::len).collect()
    }
}

/// `Y_i = {P : height(P) ≤ dim − i}`.
pub fn layer_sequence(spec: &FiniteTreeSpectrum) -> LayerSequence {
    let d = spec.dim();
    let mut layers: Vec<NodeSet> =
        (0..=d).map(|i| (0..spec.len()).filter(|&p| spec.height(p) + i <= d).collect()).collect();
    layers.push(NodeSet::new());
    let seq = LayerSequence { layers };
    debug_assert!(seq.validate(spec));
    seq
}

#[derive(Clone, Debug)]
pub struct CsdLayer {
    /// `X_α = Y_α ∖ Y_{α+1}`.
    pub x: NodeSet,
    /// Spectrum of the transform that deletes everything outside `Y_α`.
    pub spectrum: FiniteTreeSpectrum,
    /// Rank of `Inv_{X_α}` over that transform.
    pub rank: usize,
}

#[derive(Clone, Debug)]
pub struct CsdDecomposition {
    pub layers: Vec<CsdLayer>,
    pub total_rank: usize,
}

impl CsdDecomposition {
    pub fn ranks(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.rank).collect()
    }
}

/// Walks the layer sequence, deleting one layer at a time.
pub fn csd_decompose(spec: &FiniteTreeSpectrum) -> CsdDecomposition {
    let seq = layer_sequence(spec);
    let mut layers = Vec::new();
    let mut cur = spec.clone();
    // old index of each node of `cur`
    let mut origin: Vec<usize> = (0..spec.len()).collect();
    for w in seq.layers.windows(2) {
        let x_old: NodeSet = w[0].difference(&w[1]).copied().collect();
        let x: NodeSet = (0..cur.len()).filter(|i| x_old.contains(&origin[*i])).collect();
        let rank = x
            .iter()
            .filter(|&&p| p != cur.root() && cur.up_closure(&NodeSet::from([p])).is_ok_and(|u| u.is_subset(&x)))
            .count();
        layers.push(CsdLayer { x: x_old, spectrum: cur.clone(), rank });
        let t = nagata_transform(&cur, &x).expect("layers peel off maximal points");
        origin = t.kept.iter().map(|&i| origin[i]).collect();
        cur = t.spectrum;
    }
    let total_rank = layers.iter().map(|l| l.rank).sum();
    debug_assert_eq!(total_rank, spec.nonzero().len());
    CsdDecomposition { layers, total_rank }
}

#[derive(Clone, Debug, Serialize)]
pub struct IntVLayer {
    pub name: &'static str,
    pub description: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntVModel {
    pub p: u64,
    pub depth: u32,
    pub layers: Vec<IntVLayer>,
    pub unitary_rank: u64,
    /// The non-unitary summand, kept symbolic.
    pub polynomial_part: &'static str,
    #[serde(skip)]
    pub unitary: BallSpace,
}

/// The four-layer shape of `Spec(Int(V))` with the unitary maximal ideals
/// modelled by residues mod `p^depth`.
pub fn int_v_model(p: u64, depth: u32) -> Result<IntVModel> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let unitary = BallSpace::new(p, depth)?;
    let layers = vec![
        IntVLayer { name: "Y_0", description: "Spec(Int(V))" },
        IntVLayer { name: "Y_1", description: "{P : P ∩ V = (0)}" },
        IntVLayer { name: "Y_2", description: "{(0)}" },
        IntVLayer { name: "Y_3", description: "∅" },
    ];
    Ok(IntVModel {
        p,
        depth,
        layers,
        unitary_rank: unitary.leaf_count(),
        polynomial_part: "Inv(K[X])",
        unitary,
    })
}
