//! Prime spectra: finite trees for the finite-character case and maximal
//! spaces for the radical-factorization case.

mod sets;
mod space;
mod tree;

pub use sets::{ClopenAtom, ClopenSet, PointSet};
pub use space::{is_prime, BallSpace, OrdinalSpace, Point, Space};
pub use tree::{FiniteTreeSpectrum, NodeSet, PrimeId, SplittingReport};
