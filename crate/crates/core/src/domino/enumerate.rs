//! Layer-by-layer enumeration of semistandard domino tableaux.
//!
//! Labels are placed in increasing order. The dominoes labelled `k` occupy a
//! skew shape `beta / alpha` in which every column holds at most two cells,
//! and a column holding two cells is a single vertical domino. Under that
//! condition the tiling of the layer is forced, so a tableau is the same thing
//! as a chain of shapes `empty = beta_0 < beta_1 < ... < beta_m = shape`.
//!
//! The Yamanouchi condition splits into one condition per pair of adjacent
//! labels `(k, k + 1)`, and each of those only looks at the two layers
//! involved. The Yamanouchi searches check it as soon as layer `k + 1` is
//! placed.

use std::cmp::Reverse;
use std::collections::HashMap;

use super::tableau::{Domino, DominoTableau, Orientation};
use crate::partition::Partition;

/// One layer: the shape after placing it and its dominoes (0-based anchors),
/// sorted in reading order.
#[derive(Clone, Debug)]
struct Layer {
    shape: Vec<u32>,
    dominoes: Vec<(usize, usize, Orientation)>,
}

fn reading_key(d: &(usize, usize, Orientation)) -> (Reverse<usize>, usize) {
    (Reverse(d.1), d.0)
}

/// All ways to add `n` dominoes with a common label on top of `alpha`,
/// staying inside `target`.
fn next_layers(alpha: &[u32], target: &[u32], n: u32) -> Vec<Layer> {
    let rows = target.len();
    let need = 2 * n;
    let mut out = Vec::new();
    let mut beta = Vec::with_capacity(rows);
    choose_rows(alpha, target, need, 0, &mut beta, &mut out);
    out
}

fn choose_rows(
    alpha: &[u32],
    target: &[u32],
    remaining: u32,
    row: usize,
    beta: &mut Vec<u32>,
    out: &mut Vec<Layer>,
) {
    let rows = target.len();
    if row == rows {
        if remaining == 0 && (rows == 0 || middle_even(alpha, beta, rows - 1)) {
            out.push(build_layer(alpha, beta));
        }
        return;
    }
    if remaining == 0 {
        // the rest of the rows stay as they are
        let start = beta.len();
        beta.extend_from_slice(&alpha[row..]);
        let ok = (row.max(1) - 1..rows).all(|i| middle_even(alpha, beta, i))
            && (row..rows).all(|i| i < 2 || beta[i] <= alpha[i - 2]);
        if ok {
            out.push(build_layer(alpha, beta));
        }
        beta.truncate(start);
        return;
    }
    let mut hi = target[row];
    if row > 0 {
        hi = hi.min(beta[row - 1]);
    }
    if row >= 2 {
        // no column may receive three cells
        hi = hi.min(alpha[row - 2]);
    }
    let lo = alpha[row];
    if hi < lo {
        return;
    }
    let hi = hi.min(lo + remaining);
    for b in lo..=hi {
        beta.push(b);
        if row == 0 || middle_even(alpha, beta, row - 1) {
            choose_rows(alpha, target, remaining - (b - lo), row + 1, beta, out);
        }
        beta.pop();
    }
}

/// Row `i` of `beta / alpha` minus its vertical dominoes must split into
/// horizontal dominoes. Requires `beta[i + 1]` to be known when it exists.
fn middle_even(alpha: &[u32], beta: &[u32], i: usize) -> bool {
    let below = beta.get(i + 1).copied().unwrap_or(0);
    let lo = alpha[i].max(below);
    let hi = if i == 0 { beta[i] } else { beta[i].min(alpha[i - 1]) };
    hi <= lo || (hi - lo) % 2 == 0
}

fn build_layer(alpha: &[u32], beta: &[u32]) -> Layer {
    let mut dominoes = Vec::new();
    for i in 0..beta.len() {
        let below = beta.get(i + 1).copied().unwrap_or(0);
        for c in alpha[i]..below.max(alpha[i]) {
            dominoes.push((i, c as usize, Orientation::Vertical));
        }
        let lo = alpha[i].max(below);
        let hi = if i == 0 { beta[i] } else { beta[i].min(alpha[i - 1]) };
        let mut c = lo;
        while c < hi {
            dominoes.push((i, c as usize, Orientation::Horizontal));
            c += 2;
        }
    }
    dominoes.sort_unstable_by_key(reading_key);
    Layer {
        shape: beta.to_vec(),
        dominoes,
    }
}

/// The tiling of the layer `beta / alpha` as 1-based dominoes labelled
/// `label`, or `None` when `beta / alpha` is not a valid layer (`beta` not
/// containing `alpha`, a column with three cells, or a row segment of odd
/// length between vertical dominoes).
pub(crate) fn layer_tiling(alpha: &[u32], beta: &[u32], label: u32) -> Option<Vec<Domino>> {
    if alpha.len() != beta.len() || alpha.iter().zip(beta).any(|(a, b)| a > b) {
        return None;
    }
    if beta.windows(2).any(|w| w[0] < w[1]) || (2..beta.len()).any(|i| beta[i] > alpha[i - 2]) {
        return None;
    }
    if !(0..beta.len()).all(|i| middle_even(alpha, beta, i)) {
        return None;
    }
    let layer = build_layer(alpha, beta);
    Some(
        layer
            .dominoes
            .into_iter()
            .map(|(r, c, orientation)| Domino {
                row: r + 1,
                col: c + 1,
                orientation,
                label,
            })
            .collect(),
    )
}

/// Yamanouchi condition between consecutive layers: in reading order, every
/// prefix holds at least as many dominoes of `lower` as of `upper`. Both
/// slices must already be in reading order.
fn pair_ok(lower: &[(usize, usize, Orientation)], upper: &[(usize, usize, Orientation)]) -> bool {
    let mut seen_lower = 0usize;
    let mut li = 0usize;
    for (ui, d) in upper.iter().enumerate() {
        let key = reading_key(d);
        while li < lower.len() && reading_key(&lower[li]) < key {
            li += 1;
            seen_lower += 1;
        }
        if seen_lower < ui + 1 {
            return false;
        }
    }
    true
}

struct Problem {
    target: Vec<u32>,
    weight: Vec<u32>,
}

impl Problem {
    fn new(shape: &Partition, weight: &Partition) -> Option<Self> {
        if shape.weight() != 2 * weight.weight() {
            return None;
        }
        Some(Self {
            target: shape.parts().to_vec(),
            weight: weight.parts().to_vec(),
        })
    }

    fn tableau(&self, shape: &Partition, layers: &[Layer]) -> DominoTableau {
        let dominoes = layers
            .iter()
            .enumerate()
            .flat_map(|(k, layer)| {
                layer.dominoes.iter().map(move |&(r, c, orientation)| Domino {
                    row: r + 1,
                    col: c + 1,
                    orientation,
                    label: k as u32 + 1,
                })
            })
            .collect();
        DominoTableau::from_parts_unchecked(shape.clone(), dominoes)
    }

    fn collect(&self, shape: &Partition, yamanouchi: bool) -> Vec<DominoTableau> {
        let mut out = Vec::new();
        let mut stack: Vec<Layer> = Vec::new();
        let empty = vec![0u32; self.target.len()];
        self.collect_rec(shape, yamanouchi, &empty, &mut stack, &mut out);
        out.sort();
        out
    }

    fn collect_rec(
        &self,
        shape: &Partition,
        yamanouchi: bool,
        current: &[u32],
        stack: &mut Vec<Layer>,
        out: &mut Vec<DominoTableau>,
    ) {
        let k = stack.len();
        if k == self.weight.len() {
            if current == self.target.as_slice() {
                out.push(self.tableau(shape, stack));
            }
            return;
        }
        for layer in next_layers(current, &self.target, self.weight[k]) {
            if yamanouchi && k > 0 && !pair_ok(&stack[k - 1].dominoes, &layer.dominoes) {
                continue;
            }
            let next = layer.shape.clone();
            stack.push(layer);
            self.collect_rec(shape, yamanouchi, &next, stack, out);
            stack.pop();
        }
    }

    fn count_yamanouchi(&self) -> u64 {
        let mut memo = HashMap::new();
        let empty = Layer {
            shape: vec![0u32; self.target.len()],
            dominoes: Vec::new(),
        };
        self.count_rec(0, &empty, &mut memo)
    }

    /// Number of completions once `k` layers are placed, the last being `last`.
    fn count_rec(&self, k: usize, last: &Layer, memo: &mut HashMap<(usize, Vec<u32>, Vec<u32>), u64>) -> u64 {
        if k == self.weight.len() {
            return u64::from(last.shape == self.target);
        }
        let mut total = 0u64;
        for layer in next_layers(&last.shape, &self.target, self.weight[k]) {
            if k > 0 && !pair_ok(&last.dominoes, &layer.dominoes) {
                continue;
            }
            let key = (k + 1, last.shape.clone(), layer.shape.clone());
            let sub = match memo.get(&key) {
                Some(&v) => v,
                None => {
                    let v = self.count_rec(k + 1, &layer, memo);
                    memo.insert(key, v);
                    v
                }
            };
            total = total.checked_add(sub).expect("tableau count overflows u64");
        }
        total
    }
}

/// Every semistandard domino tableau of the given shape whose label `i`
/// occurs `weight[i - 1]` times, in canonical order. Empty when
/// `|shape| != 2 |weight|`.
pub fn enumerate_domino_tableaux(shape: &Partition, weight: &Partition) -> Vec<DominoTableau> {
    match Problem::new(shape, weight) {
        Some(p) => p.collect(shape, false),
        None => Vec::new(),
    }
}

/// The Yamanouchi members of [`enumerate_domino_tableaux`], found with the
/// Yamanouchi condition pruning the search.
pub fn enumerate_yamanouchi_tableaux(shape: &Partition, weight: &Partition) -> Vec<DominoTableau> {
    match Problem::new(shape, weight) {
        Some(p) => p.collect(shape, true),
        None => Vec::new(),
    }
}

/// `enumerate_yamanouchi_tableaux(..).len()` without materializing the list.
pub fn count_yamanouchi_tableaux(shape: &Partition, weight: &Partition) -> u64 {
    match Problem::new(shape, weight) {
        Some(p) => p.count_yamanouchi(),
        None => 0,
    }
}

/// Whether the Young diagram of `shape` can be tiled by dominoes: its 2-core
/// is empty, i.e. on a 2-runner abacus with an even number of beads both
/// runners carry the same number of beads.
pub fn is_domino_decomposable(shape: &Partition) -> bool {
    let mut parts = shape.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let r = parts.len();
    let odd = (1..=r)
        .filter(|&k| (u64::from(parts[r - k]) + k as u64) % 2 == 1)
        .count();
    2 * odd == r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domino::reading::{is_yamanouchi, reading_word};
    use crate::partition::partitions_in_box;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Oracle: all domino tilings by scanning cells row-major.
    fn tilings(shape: &Partition) -> Vec<Vec<(usize, usize, Orientation)>> {
        fn rec(
            shape: &[u32],
            covered: &mut Vec<Vec<bool>>,
            cur: &mut Vec<(usize, usize, Orientation)>,
            out: &mut Vec<Vec<(usize, usize, Orientation)>>,
        ) {
            let first = (0..shape.len())
                .flat_map(|r| (0..shape[r] as usize).map(move |c| (r, c)))
                .find(|&(r, c)| !covered[r][c]);
            let Some((r, c)) = first else {
                out.push(cur.clone());
                return;
            };
            if c + 1 < shape[r] as usize && !covered[r][c + 1] {
                covered[r][c] = true;
                covered[r][c + 1] = true;
                cur.push((r, c, Orientation::Horizontal));
                rec(shape, covered, cur, out);
                cur.pop();
                covered[r][c] = false;
                covered[r][c + 1] = false;
            }
            if r + 1 < shape.len() && c < shape[r + 1] as usize && !covered[r + 1][c] {
                covered[r][c] = true;
                covered[r + 1][c] = true;
                cur.push((r, c, Orientation::Vertical));
                rec(shape, covered, cur, out);
                cur.pop();
                covered[r][c] = false;
                covered[r + 1][c] = false;
            }
        }
        let parts = shape.parts();
        let mut covered: Vec<Vec<bool>> = parts.iter().map(|&w| vec![false; w as usize]).collect();
        let mut out = Vec::new();
        rec(parts, &mut covered, &mut Vec::new(), &mut out);
        out
    }

    /// Oracle: every tiling times every labelling, filtered by validation.
    fn brute_force(shape: &Partition, weight: &Partition) -> Vec<DominoTableau> {
        let mut out = Vec::new();
        if shape.weight() != 2 * weight.weight() {
            return out;
        }
        let labels: Vec<u32> = weight
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &n)| std::iter::repeat_n(i as u32 + 1, n as usize))
            .collect();
        for tiling in tilings(shape) {
            let mut perm = labels.clone();
            // iterate over distinct permutations of the label multiset
            loop {
                let ds = tiling
                    .iter()
                    .zip(&perm)
                    .map(|(&(r, c, o), &label)| Domino {
                        row: r + 1,
                        col: c + 1,
                        orientation: o,
                        label,
                    })
                    .collect();
                if let Ok(t) = DominoTableau::new(shape.clone(), ds) {
                    out.push(t);
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn next_permutation(v: &mut [u32]) -> bool {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return false;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    #[test]
    fn decomposable_examples() {
        assert!(is_domino_decomposable(&p(&[10, 6, 4, 0])));
        assert!(!is_domino_decomposable(&p(&[1])));
        assert!(is_domino_decomposable(&p(&[2, 1, 1])));
        assert!(is_domino_decomposable(&p(&[])));
    }

    #[test]
    fn decomposable_matches_tiling_oracle() {
        for len in 0..=4 {
            for shape in partitions_in_box(len, 5) {
                assert_eq!(
                    is_domino_decomposable(&shape),
                    !tilings(&shape).is_empty(),
                    "{shape}"
                );
            }
        }
    }

    #[test]
    fn smallest_shapes() {
        let one = enumerate_domino_tableaux(&p(&[2]), &p(&[1]));
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].dominoes(), &[Domino::horizontal(1, 1, 1)]);
        let one = enumerate_domino_tableaux(&p(&[1, 1]), &p(&[1]));
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].dominoes(), &[Domino::vertical(1, 1, 1)]);
        assert!(enumerate_domino_tableaux(&p(&[2]), &p(&[2])).is_empty());
        assert_eq!(enumerate_domino_tableaux(&p(&[]), &p(&[])).len(), 1);
    }

    #[test]
    fn matches_brute_force() {
        for len in 1..=4 {
            for shape in partitions_in_box(len, 4) {
                if shape.weight() % 2 != 0 || shape.weight() > 10 {
                    continue;
                }
                let half = shape.weight() / 2;
                for weight in crate::partition::partitions_of(half, 5, 5) {
                    let fast = enumerate_domino_tableaux(&shape, &weight);
                    let slow = brute_force(&shape, &weight);
                    assert_eq!(fast, slow, "shape {shape} weight {weight}");
                    let yam: Vec<_> = slow
                        .iter()
                        .filter(|t| is_yamanouchi(reading_word(t).labels()))
                        .cloned()
                        .collect();
                    assert_eq!(enumerate_yamanouchi_tableaux(&shape, &weight), yam);
                    assert_eq!(count_yamanouchi_tableaux(&shape, &weight), yam.len() as u64);
                }
            }
        }
    }

    #[test]
    fn conservation() {
        let shape = p(&[6, 4, 2, 2]);
        let weight = p(&[3, 2, 2, 0]);
        for t in enumerate_domino_tableaux(&shape, &weight) {
            assert_eq!(t.dominoes().len(), 7);
            assert_eq!(t.weight(), vec![3, 2, 2]);
            assert!(DominoTableau::new(t.shape().clone(), t.dominoes().to_vec()).is_ok());
        }
    }

    #[test]
    fn output_is_sorted_and_distinct() {
        let list = enumerate_domino_tableaux(&p(&[4, 4, 2, 2]), &p(&[2, 2, 2]));
        assert!(!list.is_empty());
        assert!(list.windows(2).all(|w| w[0] < w[1]));
    }
}
