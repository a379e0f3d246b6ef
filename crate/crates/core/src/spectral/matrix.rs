//! Small dense real matrices and a cyclic Jacobi eigensolver.

use std::ops::{Add, Index, IndexMut, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1.0; n])
    }

    pub fn diagonal(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension {
                expected: n,
                actual: bad.len(),
            });
        }
        Ok(Self {
            n,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).map(<[f64]>::to_vec).collect()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// Largest entrywise absolute difference; infinite on a size mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Frobenius norm of the off-diagonal part.
    pub fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    sum += self[(i, j)] * self[(i, j)];
                }
            }
        }
        sum.sqrt()
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> f64 {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = 1.0;
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&i, &j| a[i * n + k].abs().total_cmp(&a[j * n + k].abs()))
                .unwrap();
            if a[pivot * n + k] == 0.0 {
                return 0.0;
            }
            if pivot != k {
                for j in 0..n {
                    a.swap(k * n + j, pivot * n + j);
                }
                det = -det;
            }
            let d = a[k * n + k];
            det *= d;
            for i in k + 1..n {
                let f = a[i * n + k] / d;
                for j in k..n {
                    a[i * n + j] -= f * a[k * n + j];
                }
            }
        }
        det
    }

    /// `(self + self^T) / 2`.
    pub fn symmetrized(&self) -> Self {
        let t = self.transpose();
        let mut s = self.clone();
        for (x, y) in s.data.iter_mut().zip(&t.data) {
            *x = 0.5 * (*x + y);
        }
        s
    }

    /// Eigenvalues of a symmetric matrix in descending order, by cyclic
    /// Jacobi rotations. Sweeps stop once the off-diagonal Frobenius norm is
    /// below `tol`; at most `max_sweeps` sweeps are run.
    pub fn symmetric_eigenvalues(&self, tol: f64, max_sweeps: usize) -> Result<Vec<f64>> {
        let n = self.n;
        let mut a = self.symmetrized();
        let mut sweeps = 0;
        loop {
            let off = a.off_diagonal_norm();
            if off < tol {
                break;
            }
            if sweeps == max_sweeps {
                return Err(Error::NoConvergence {
                    sweeps,
                    off_norm: off,
                });
            }
            for p in 0..n {
                for q in p + 1..n {
                    a.rotate(p, q);
                }
            }
            sweeps += 1;
        }
        let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
        ev.sort_by(|x, y| y.total_cmp(x));
        Ok(ev)
    }

    /// One Jacobi rotation `A <- P^T A P` in the `(p, q)` plane zeroing the
    /// entry `(p, q)`.
    fn rotate(&mut self, p: usize, q: usize) {
        let apq = self[(p, q)];
        if apq == 0.0 {
            return;
        }
        let theta = (self[(q, q)] - self[(p, p)]) / (2.0 * apq);
        let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
        let c = 1.0 / t.hypot(1.0);
        let s = t * c;
        let n = self.n;
        for k in 0..n {
            let (kp, kq) = (self[(k, p)], self[(k, q)]);
            self[(k, p)] = c * kp - s * kq;
            self[(k, q)] = s * kp + c * kq;
        }
        for k in 0..n {
            let (pk, qk) = (self[(p, k)], self[(q, k)]);
            self[(p, k)] = c * pk - s * qk;
            self[(q, k)] = s * pk + c * qk;
        }
        self[(p, q)] = 0.0;
        self[(q, p)] = 0.0;
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        Matrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}
