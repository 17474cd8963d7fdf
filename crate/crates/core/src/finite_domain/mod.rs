//! Prüfer domains with finite treed spectrum, modelled on their ideal
//! coordinates.

mod ideal;
mod layers;
mod ops;
mod transform;

pub use ideal::{enumerate_ideals, EIdeal};
pub use layers::{csd_decompose, int_v_model, layer_sequence, CsdDecomposition, CsdLayer, IntVLayer, IntVModel, LayerSequence};
pub use ops::{minimal_jump, v_ops, VReport};
pub use transform::{nagata_transform, quotient_check, NagataTransform, QuotientReport};
