//! Radical factorization, critical points and the critical sequence.

mod critical;
mod radical;
mod sequence;

pub use critical::{
    bounded_crit_locus, crit_locus, detect_bounded_critical, detect_critical, CritLocus, CritVerdict,
};
pub use radical::{factor_radical, factor_recursive, radical_of, RadicalFactorization};
pub use sequence::{
    crit_sequence, decompose_inv, density_check, sp_height, CritSequenceResult, Decomposition, DensityReport, Level,
    SequenceStatus, Step,
};
