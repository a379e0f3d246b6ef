//! The duplication map from domino tableaux of shape `tau(sigma_+, sigma_-)`
//! to domino tableaux of shape `tau(sigma, sigma)`.
//!
//! Every row is duplicated, so a domino labelled `k` is stretched to twice
//! its height and cut into two dominoes of its original orientation, the
//! upper one labelled `2k - 1` and the lower one `2k`. A horizontal domino in
//! row `i` becomes two horizontal dominoes in rows `2i - 1` and `2i`; a
//! vertical domino in rows `i, i + 1` becomes two vertical dominoes covering
//! rows `2i - 1` to `2i + 2`.

use crate::domino::{layer_tiling, Domino, DominoTableau, Orientation};
use crate::error::{Error, Result};
use crate::partition::{tau_partitions, Partition};

/// Applies the duplication map to any domino tableau.
pub fn duplicate(t: &DominoTableau) -> Result<DominoTableau> {
    let mut out = Vec::with_capacity(2 * t.dominoes().len());
    for d in t.dominoes() {
        let top = 2 * d.row - 1;
        let (odd, even) = (2 * d.label - 1, 2 * d.label);
        match d.orientation {
            Orientation::Horizontal => {
                out.push(Domino::horizontal(top, d.col, odd));
                out.push(Domino::horizontal(top + 1, d.col, even));
            }
            Orientation::Vertical => {
                out.push(Domino::vertical(top, d.col, odd));
                out.push(Domino::vertical(top + 2, d.col, even));
            }
        }
    }
    DominoTableau::new(t.shape().doubled(), out)
}

/// [`duplicate`] restricted to tableaux of shape `tau(sigma_+, sigma_-)`.
pub fn duplicate_for_sigma(sigma: &Partition, t: &DominoTableau) -> Result<DominoTableau> {
    let (minus, plus) = sigma.sigma_split()?;
    let expected = tau_partitions(&plus, &minus)?;
    if t.shape() != &expected {
        return Err(Error::ShapeMismatch {
            shape: t.shape().clone(),
            sigma: sigma.clone(),
        });
    }
    duplicate(t)
}

/// The preimage of `u` under [`duplicate`], or `None` when `u` is not in the
/// image.
///
/// A preimage is determined by its chain of shapes: the cells of row `i`
/// labelled `k` are the cells of rows `2i - 1, 2i` of `u` labelled `2k - 1`
/// or `2k`, and each layer of a domino tableau has a single tiling.
pub fn undo_duplicate(u: &DominoTableau) -> Option<DominoTableau> {
    let shape = u.shape().parts();
    if !shape.len().is_multiple_of(2) || shape.chunks(2).any(|pair| pair[0] != pair[1]) {
        return None;
    }
    let half: Vec<u32> = shape.iter().copied().step_by(2).collect();
    let mut labels: Vec<Vec<u32>> = half.iter().map(|&w| vec![0; w as usize]).collect();
    for d in u.dominoes() {
        if d.orientation == Orientation::Vertical && d.row % 2 == 0 {
            return None;
        }
        let k = d.label.div_ceil(2);
        for (r, c) in d.cells() {
            let slot = &mut labels[(r - 1) / 2][c - 1];
            if *slot != 0 && *slot != k {
                return None;
            }
            *slot = k;
        }
    }
    if labels.iter().any(|row| row.windows(2).any(|w| w[0] > w[1])) {
        return None;
    }

    let max = u.max_label().div_ceil(2);
    let mut dominoes = Vec::new();
    let mut alpha = vec![0u32; half.len()];
    for k in 1..=max {
        let beta: Vec<u32> = labels
            .iter()
            .map(|row| row.iter().filter(|&&l| l <= k).count() as u32)
            .collect();
        dominoes.extend(layer_tiling(&alpha, &beta, k)?);
        alpha = beta;
    }
    let t = DominoTableau::new(Partition::new(half).ok()?, dominoes).ok()?;
    (duplicate(&t).ok()? == *u).then_some(t)
}
