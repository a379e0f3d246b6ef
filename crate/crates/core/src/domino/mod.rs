//! Domino tableaux, reading words, and the Littlewood-Richardson coefficient
//! counted by Yamanouchi domino tableaux of shape `tau(lambda, mu)`.

mod enumerate;
mod reading;
mod tableau;

pub use enumerate::{
    count_yamanouchi_tableaux, enumerate_domino_tableaux, enumerate_yamanouchi_tableaux,
    is_domino_decomposable,
};
pub(crate) use enumerate::layer_tiling;
pub use reading::{is_yamanouchi, reading_word, ReadingWord};
pub use tableau::{Cell, Domino, DominoTableau, Half, Orientation};

use crate::error::Result;
use crate::partition::{tau_partitions, Partition};

/// Pads `lambda` and `mu` to a common length (the longer declared length).
pub(crate) fn common_length(lambda: &Partition, mu: &Partition) -> Result<(Partition, Partition)> {
    let r = lambda.len().max(mu.len());
    Ok((lambda.padded(r)?, mu.padded(r)?))
}

/// Number of Yamanouchi domino tableaux of shape `tau(lambda, mu)` and
/// weight `nu`. When the declared lengths differ the shorter partition is
/// padded with zeros; the count does not depend on padding.
pub fn cl_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let (l, m) = common_length(lambda, mu)?;
    let shape = tau_partitions(&l, &m)?;
    Ok(count_yamanouchi_tableaux(&shape, nu))
}
