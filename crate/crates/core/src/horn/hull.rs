//! Convex hulls of finite sets of integer points, with exact facet
//! inequalities.
//!
//! The points are first placed in their affine hull: the difference vectors
//! are row-reduced over the rationals, and projecting onto the pivot
//! coordinates identifies the affine hull with `Q^k`. In those coordinates
//! the hull is full-dimensional and each facet passes through `k` affinely
//! independent input points, so facets are found by trying every `k`-subset.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

type Q = Ratio<i128>;

#[derive(Clone, Debug)]
pub struct LatticeHull {
    ambient: usize,
    base: Vec<i64>,
    /// Row-reduced basis of the direction space; `basis[j][pivots[j]] == 1`.
    basis: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    /// `normal . y <= offset` in pivot coordinates `y`.
    facets: Vec<(Vec<i128>, i128)>,
}

/// Subsets larger than this make the brute-force facet search too slow.
const MAX_SUBSETS: u128 = 50_000_000;

impl LatticeHull {
    pub fn new(points: &[Vec<i64>]) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::Hull("no points".into()));
        };
        let ambient = first.len();
        if let Some(bad) = points.iter().find(|p| p.len() != ambient) {
            return Err(Error::Dimension {
                expected: ambient,
                actual: bad.len(),
            });
        }
        let points: Vec<Vec<i64>> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let base = points[0].clone();
        let diffs: Vec<Vec<Q>> = points[1..]
            .iter()
            .map(|p| {
                p.iter()
                    .zip(&base)
                    .map(|(&a, &b)| Q::from_integer(i128::from(a - b)))
                    .collect()
            })
            .collect();
        let (basis, pivots) = row_reduce(diffs, ambient);
        let k = pivots.len();
        let projected: Vec<Vec<i128>> = points
            .iter()
            .map(|p| pivots.iter().map(|&c| i128::from(p[c])).collect())
            .collect();
        let facets = match k {
            0 => Vec::new(),
            1 => {
                let lo = projected.iter().map(|y| y[0]).min().unwrap();
                let hi = projected.iter().map(|y| y[0]).max().unwrap();
                vec![(vec![-1], -lo), (vec![1], hi)]
            }
            _ => {
                let n = projected.len() as u128;
                let subsets = binomial(n, k as u128);
                if subsets > MAX_SUBSETS {
                    return Err(Error::Hull(format!(
                        "{} points in dimension {k}: too many subsets",
                        projected.len()
                    )));
                }
                facets_by_subsets(&projected, k)
            }
        };
        Ok(Self {
            ambient,
            base,
            basis,
            pivots,
            facets,
        })
    }

    /// Dimension of the affine hull.
    pub fn dimension(&self) -> usize {
        self.pivots.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Exact membership of a rational point.
    pub fn contains_exact(&self, q: &[Ratio<i64>]) -> bool {
        if q.len() != self.ambient {
            return false;
        }
        let q: Vec<Q> = q
            .iter()
            .map(|r| Q::new(i128::from(*r.numer()), i128::from(*r.denom())))
            .collect();
        let t: Vec<Q> = self
            .pivots
            .iter()
            .map(|&c| q[c] - Q::from_integer(i128::from(self.base[c])))
            .collect();
        for i in 0..self.ambient {
            let mut x = Q::from_integer(i128::from(self.base[i]));
            for (tj, row) in t.iter().zip(&self.basis) {
                x += *tj * row[i];
            }
            if x != q[i] {
                return false;
            }
        }
        let y: Vec<Q> = self.pivots.iter().map(|&c| q[c]).collect();
        self.facets.iter().all(|(normal, offset)| {
            let lhs = normal
                .iter()
                .zip(&y)
                .fold(Q::from_integer(0), |acc, (&a, &b)| acc + b * a);
            lhs <= Q::from_integer(*offset)
        })
    }

    /// Approximate membership of a float point: the residual off the affine
    /// hull and the violation of each facet inequality (normalized by the
    /// facet normal, in pivot coordinates) must not exceed `tol`.
    pub fn contains_approx(&self, q: &[f64], tol: f64) -> bool {
        if q.len() != self.ambient {
            return false;
        }
        let t: Vec<f64> = self.pivots.iter().map(|&c| q[c] - self.base[c] as f64).collect();
        for i in 0..self.ambient {
            let mut x = self.base[i] as f64;
            for (tj, row) in t.iter().zip(&self.basis) {
                x += tj * ratio_to_f64(row[i]);
            }
            if (x - q[i]).abs() > tol {
                return false;
            }
        }
        self.facets.iter().all(|(normal, offset)| {
            let norm = normal.iter().map(|&a| (a as f64).powi(2)).sum::<f64>().sqrt();
            let lhs: f64 = normal
                .iter()
                .zip(&self.pivots)
                .map(|(&a, &c)| a as f64 * q[c])
                .sum();
            (lhs - *offset as f64) / norm <= tol
        })
    }
}

fn ratio_to_f64(r: Q) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Reduced row echelon form of `rows`; returns the nonzero rows and their
/// pivot columns.
fn row_reduce(mut rows: Vec<Vec<Q>>, cols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let zero = Q::from_integer(0);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][col] != zero) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            *x *= inv;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != zero {
                let f = rows[r][col];
                let pivot_row = rows[rank].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                    *x -= f * *p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Determinant of a square integer matrix by fraction-free elimination.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Vector orthogonal to the `k - 1` rows of `vs` in `Z^k` (generalized cross
/// product via signed minors).
fn normal_of(vs: &[Vec<i128>], k: usize) -> Vec<i128> {
    (0..k)
        .map(|j| {
            let minor: Vec<Vec<i128>> = vs
                .iter()
                .map(|v| v.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let d = det(minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

fn facets_by_subsets(points: &[Vec<i128>], k: usize) -> Vec<(Vec<i128>, i128)> {
    let dot = |a: &[i128], b: &[i128]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i128>();
    let mut found = BTreeSet::new();
    for subset in (0..points.len()).combinations(k) {
        let p0 = &points[subset[0]];
        let diffs: Vec<Vec<i128>> = subset[1..]
            .iter()
            .map(|&i| points[i].iter().zip(p0).map(|(a, b)| a - b).collect())
            .collect();
        let mut normal = normal_of(&diffs, k);
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        let g = normal.iter().fold(0i128, |g, &x| g.gcd(&x));
        for x in normal.iter_mut() {
            *x /= g;
        }
        let offset = dot(&normal, p0);
        let (mut above, mut below) = (false, false);
        for p in points {
            let v = dot(&normal, p);
            above |= v > offset;
            below |= v < offset;
            if above && below {
                break;
            }
        }
        match (above, below) {
            (false, _) => {
                found.insert((normal, offset));
            }
            (true, false) => {
                found.insert((normal.iter().map(|x| -x).collect(), -offset));
            }
            (true, true) => {}
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn determinant() {
        assert_eq!(det(vec![vec![2, 0], vec![0, 3]]), 6);
        assert_eq!(det(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
        assert_eq!(det(vec![vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn segment_on_a_line() {
        // points with x + y = 10, x in [5, 8]
        let pts: Vec<Vec<i64>> = (5..=8).map(|x| vec![x, 10 - x]).collect();
        let h = LatticeHull::new(&pts).unwrap();
        assert_eq!(h.dimension(), 1);
        assert!(h.contains_exact(&[r(13, 2), r(7, 2)]));
        assert!(h.contains_exact(&[r(5, 1), r(5, 1)]));
        assert!(!h.contains_exact(&[r(9, 2), r(11, 2)]));
        assert!(!h.contains_exact(&[r(6, 1), r(5, 1)]));
        assert!(h.contains_approx(&[8.0 + 1e-9, 2.0 - 1e-9], 1e-7));
        assert!(!h.contains_approx(&[8.1, 1.9], 1e-7));
    }

    #[test]
    fn triangle_in_a_plane_of_r3() {
        let pts = vec![vec![4, 0, 0], vec![0, 4, 0], vec![0, 0, 4], vec![2, 1, 1]];
        let h = LatticeHull::new(&pts).unwrap();
        assert_eq!(h.dimension(), 2);
        assert_eq!(h.num_facets(), 3);
        assert!(h.contains_exact(&[r(4, 3), r(4, 3), r(4, 3)]));
        assert!(!h.contains_exact(&[r(5, 1), r(-1, 1), r(0, 1)]));
        assert!(!h.contains_exact(&[r(1, 1), r(1, 1), r(1, 1)]));
    }

    #[test]
    fn cube() {
        let pts: Vec<Vec<i64>> = (0..8).map(|m| vec![m & 1, (m >> 1) & 1, (m >> 2) & 1]).collect();
        let h = LatticeHull::new(&pts).unwrap();
        assert_eq!(h.dimension(), 3);
        assert_eq!(h.num_facets(), 6);
        assert!(h.contains_exact(&[r(1, 2), r(1, 3), r(1, 1)]));
        assert!(!h.contains_exact(&[r(1, 2), r(4, 3), r(1, 1)]));
    }

    #[test]
    fn single_point() {
        let h = LatticeHull::new(&[vec![3, 3]]).unwrap();
        assert_eq!(h.dimension(), 0);
        assert!(h.contains_exact(&[r(3, 1), r(3, 1)]));
        assert!(!h.contains_exact(&[r(3, 1), r(2, 1)]));
        assert!(LatticeHull::new(&[]).is_err());
    }
}
