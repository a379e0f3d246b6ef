//! Littlewood-Richardson coefficients computed by the classical rule and by
//! Yamanouchi domino tableaux, the domino duplication map, lattice-point
//! descriptions of the two Horn polytopes attached to a partition `sigma`
//! of even length, and a numerical lab for the spectra of `S + J^-1 S J`.

pub mod domino;
pub mod duplication;
pub mod error;
pub mod figures;
pub mod horn;
pub mod lr;
pub mod partition;
pub mod render;
pub mod spectral;

pub use domino::{cl_coefficient, DominoTableau, ReadingWord};
pub use error::{Error, Result};
pub use lr::{lr_coefficient, lr_nonzero};
pub use partition::{IncreasingSequence, Partition};
