//! Lattice points of the Horn polytopes attached to `sigma`.
//!
//! For `sigma` of length `2p`, with halves `(sigma_-, sigma_+)`:
//!
//! * `P1` = `{ nu with p parts : c^nu_{sigma_- sigma_+} != 0 }`
//! * `P2` = `{ nu with p parts : c^{nu^(2)}_{sigma sigma} != 0 }`
//! * `P`  = `{ gamma with 2p parts : c^gamma_{sigma sigma} != 0 }`
//!
//! All memberships are decided with the classical rule.

mod hull;
mod verify;

pub use hull::LatticeHull;
pub use verify::{
    run_suite, splits, verify_fflp_inequality, verify_implication_at, verify_lpp_inequality,
    verify_nonvanishing_implication, verify_p1_equals_p2, verify_projection, verify_prop2, Record,
    Report, Suite, SweepConfig,
};

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::lr_nonzero;
use crate::partition::{partitions_of, Partition};

/// A finite set of partitions sharing declared length and weight.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePointSet {
    pub dimension: usize,
    pub points: BTreeSet<Partition>,
}

impl LatticePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, nu: &Partition) -> bool {
        nu.padded(self.dimension)
            .map(|p| self.points.contains(&p))
            .unwrap_or(false)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.dimension == other.dimension && self.points.is_subset(&other.points)
    }

    pub fn hull(&self) -> Result<LatticeHull> {
        let pts: Vec<Vec<i64>> = self
            .points
            .iter()
            .map(|p| p.parts().iter().map(|&x| i64::from(x)).collect())
            .collect();
        LatticeHull::new(&pts)
    }
}

/// `gamma` is the spectrum of `A + B` for symmetric `A`, `B` with spectra
/// `alpha`, `beta`: the weights add up and `c^gamma_{alpha beta} != 0`.
pub fn horn_membership(alpha: &Partition, beta: &Partition, gamma: &Partition) -> bool {
    gamma.weight() == alpha.weight() + beta.weight() && lr_nonzero(alpha, beta, gamma)
}

fn half_length(sigma: &Partition) -> Result<usize> {
    if !sigma.len().is_multiple_of(2) {
        return Err(Error::OddLength(sigma.clone()));
    }
    Ok(sigma.len() / 2)
}

/// Candidates `nu` with `len` parts (zeros kept), weight `n`, `nu_1 <= max_part`.
pub(crate) fn candidates(n: u64, len: usize, max_part: u32) -> Vec<Partition> {
    partitions_of(n, len, max_part)
        .into_iter()
        .map(|p| p.padded(len).expect("at most len parts"))
        .collect()
}

fn collect(dimension: usize, pts: impl Iterator<Item = Partition>) -> LatticePointSet {
    LatticePointSet {
        dimension,
        points: pts.collect(),
    }
}

/// Lattice points of `P1`. Candidates satisfy `nu_1 <= sigma_1 + sigma_2`.
pub fn p1_points(sigma: &Partition) -> Result<LatticePointSet> {
    let p = half_length(sigma)?;
    let (minus, plus) = sigma.sigma_split()?;
    let bound = sigma.part(0) + sigma.part(1);
    let pts = candidates(sigma.weight(), p, bound)
        .into_iter()
        .filter(|nu| lr_nonzero(&minus, &plus, nu));
    Ok(collect(p, pts))
}

/// Lattice points of `P2`. Candidates satisfy `nu_1 <= 2 sigma_1`, which is
/// wider than the bound used for `P1`.
pub fn p2_points(sigma: &Partition) -> Result<LatticePointSet> {
    let p = half_length(sigma)?;
    let bound = 2 * sigma.part(0);
    let pts = candidates(sigma.weight(), p, bound)
        .into_iter()
        .filter(|nu| lr_nonzero(sigma, sigma, &nu.doubled()));
    Ok(collect(p, pts))
}

/// Lattice points of the `2p`-dimensional Horn polytope `P`.
pub fn p_points(sigma: &Partition) -> Result<LatticePointSet> {
    let p = half_length(sigma)?;
    let bound = 2 * sigma.part(0);
    let pts = candidates(2 * sigma.weight(), 2 * p, bound)
        .into_iter()
        .filter(|gamma| lr_nonzero(sigma, sigma, gamma));
    Ok(collect(2 * p, pts))
}

/// Orthogonal projection onto the doubled vectors: averages consecutive pairs.
pub fn projection_onto_delta(gamma: &Partition) -> Result<Vec<Ratio<i64>>> {
    if !gamma.len().is_multiple_of(2) {
        return Err(Error::OddLength(gamma.clone()));
    }
    Ok(gamma
        .parts()
        .chunks(2)
        .map(|pair| Ratio::new(i64::from(pair[0]) + i64::from(pair[1]), 2))
        .collect())
}
