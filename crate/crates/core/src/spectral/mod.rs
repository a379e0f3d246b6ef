//! Spectra of `S + J^-1 S J` for `S = diag(sigma)` and complex structures
//! `J`, and Monte Carlo sampling of the set of such spectra.
//!
//! Random matrices come from ChaCha8 streams: [`random_rotation`] uses
//! `ChaCha8Rng::seed_from_u64(seed)` on stream 0, and sample `i` of
//! [`monte_carlo_q`] uses the same seed on stream `i`. Gaussian entries are
//! drawn column by column with `rand_distr::StandardNormal`.

mod matrix;

pub use matrix::Matrix;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::horn::{p1_points, p_points};
use crate::partition::Partition;

/// Cap on Jacobi sweeps.
pub const MAX_SWEEPS: usize = 100;
/// Off-diagonal stopping threshold for the eigensolver, relative to scale.
pub const EIGEN_TOL: f64 = 1e-13;
/// Tolerance for orthogonality and `J^2 = -Id`.
pub const STRUCTURE_TOL: f64 = 1e-12;
pub const PAIRING_TOL: f64 = 1e-8;
pub const TRACE_TOL: f64 = 1e-9;
pub const BLOCK_TOL: f64 = 1e-9;
pub const HULL_TOL: f64 = 1e-7;

/// `max(1, max |sigma_i|)`; all tolerances are relative to it.
pub fn scale_of(sigma: &[f64]) -> f64 {
    sigma.iter().fold(1.0, |m, x| m.max(x.abs()))
}

/// Eigenvalues of a symmetric matrix, descending, to within `EIGEN_TOL * scale`.
pub fn symmetric_eigenvalues(m: &Matrix, scale: f64) -> Result<Vec<f64>> {
    m.symmetric_eigenvalues(EIGEN_TOL * scale, MAX_SWEEPS)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrthogonalMatrix(Matrix);

impl OrthogonalMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        let defect = (&m.transpose() * &m).max_abs_diff(&Matrix::identity(m.dim()));
        if defect.is_nan() || defect >= STRUCTURE_TOL {
            return Err(Error::NotOrthogonal { defect });
        }
        Ok(Self(m))
    }

    pub fn identity(n: usize) -> Self {
        Self(Matrix::identity(n))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

/// An orthogonal `J` with `J^2 = -Id`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexStructure(Matrix);

impl ComplexStructure {
    pub fn new(m: Matrix) -> Result<Self> {
        let n = m.dim();
        let id = Matrix::identity(n);
        let square = (&m * &m).max_abs_diff(&id.scaled(-1.0));
        let orth = (&m.transpose() * &m).max_abs_diff(&id);
        let defect = square.max(orth);
        if !n.is_multiple_of(2) || defect.is_nan() || defect >= STRUCTURE_TOL {
            return Err(Error::NotComplexStructure { defect });
        }
        Ok(Self(m))
    }

    /// `R^-1 J R` for a rotation `R`.
    pub fn conjugated(&self, r: &OrthogonalMatrix) -> Result<Self> {
        let r = r.matrix();
        Self::new(&(&r.transpose() * &self.0) * r)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

/// `J0 = [[0, -Id], [Id, 0]]` of size `2p`.
pub fn standard_j0(p: usize) -> ComplexStructure {
    let mut m = Matrix::zeros(2 * p);
    for i in 0..p {
        m[(i, p + i)] = -1.0;
        m[(p + i, i)] = 1.0;
    }
    ComplexStructure(m)
}

/// The complex structure `[[0, -rho^-1], [rho, 0]]` written in the basis
/// `(e1, e3, ..., e2, e4, ...)`, returned in the standard basis. It sends the
/// odd basis vectors onto the span of the even ones.
pub fn block_structure(rho: &OrthogonalMatrix) -> ComplexStructure {
    let p = rho.dim();
    let r = rho.matrix();
    // position a of the permuted basis is the standard index orig(a)
    let orig = |a: usize| if a < p { 2 * a } else { 2 * (a - p) + 1 };
    let mut m = Matrix::zeros(2 * p);
    for a in 0..p {
        for b in 0..p {
            m[(orig(a), orig(p + b))] = -r[(b, a)];
            m[(orig(p + a), orig(b))] = r[(a, b)];
        }
    }
    ComplexStructure(m)
}

/// A Haar-distributed rotation of size `n`, deterministic in `seed`.
pub fn random_rotation(n: usize, seed: u64) -> OrthogonalMatrix {
    rotation_from(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Modified Gram-Schmidt (two passes) on a Gaussian matrix. Positive
/// diagonal of the triangular factor makes the orthogonal factor unique;
/// a negative determinant is fixed by negating the first column.
fn rotation_from(n: usize, rng: &mut ChaCha8Rng) -> OrthogonalMatrix {
    let mut cols: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.sample(StandardNormal)).collect())
        .collect();
    for j in 0..n {
        for _ in 0..2 {
            for i in 0..j {
                let r: f64 = cols[i].iter().zip(&cols[j]).map(|(a, b)| a * b).sum();
                let qi = cols[i].clone();
                for (x, q) in cols[j].iter_mut().zip(&qi) {
                    *x -= r * q;
                }
            }
        }
        let norm = cols[j].iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in cols[j].iter_mut() {
            *x /= norm;
        }
    }
    let mut m = Matrix::zeros(n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    if n > 0 && m.determinant() < 0.0 {
        for i in 0..n {
            m[(i, 0)] = -m[(i, 0)];
        }
    }
    OrthogonalMatrix(m)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSample {
    /// Eigenvalues, descending.
    pub raw: Vec<f64>,
    /// Averages of consecutive pairs of `raw`.
    pub collapsed: Vec<f64>,
    /// `max |raw[2i] - raw[2i+1]|`.
    pub pairing_defect: f64,
}

impl SpectrumSample {
    pub fn from_eigenvalues(raw: Vec<f64>) -> Self {
        let collapsed = raw.chunks(2).map(|c| c.iter().sum::<f64>() / c.len() as f64).collect();
        let pairing_defect = raw
            .chunks_exact(2)
            .map(|c| (c[0] - c[1]).abs())
            .fold(0.0, f64::max);
        Self {
            raw,
            collapsed,
            pairing_defect,
        }
    }
}

fn check_sigma(sigma: &[f64], dim: usize) -> Result<()> {
    if sigma.len() != dim {
        return Err(Error::Dimension {
            expected: dim,
            actual: sigma.len(),
        });
    }
    if sigma.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidSpectrum(format!("non-finite entry in {sigma:?}")));
    }
    if let Some(i) = sigma.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::InvalidSpectrum(format!(
            "{sigma:?} is not weakly decreasing at index {}",
            i + 1
        )));
    }
    Ok(())
}

/// Spectrum of `S + M^T S M`, `S = diag(sigma)`, for orthogonal `M`.
fn conjugate_sum(sigma: &[f64], m: &Matrix) -> Result<SpectrumSample> {
    let s = Matrix::diagonal(sigma);
    let sum = &s + &(&(&m.transpose() * &s) * m);
    let ev = symmetric_eigenvalues(&sum, scale_of(sigma))?;
    Ok(SpectrumSample::from_eigenvalues(ev))
}

/// Spectrum of `S + J^-1 S J` with `S = diag(sigma)`.
pub fn sum_spectrum(sigma: &[f64], j: &ComplexStructure) -> Result<SpectrumSample> {
    check_sigma(sigma, j.dim())?;
    conjugate_sum(sigma, j.matrix())
}

/// Spectrum of `S + R^-1 S R` for an arbitrary rotation `R`.
pub fn rotation_spectrum(sigma: &[f64], r: &OrthogonalMatrix) -> Result<SpectrumSample> {
    check_sigma(sigma, r.dim())?;
    conjugate_sum(sigma, r.matrix())
}

/// Odd-indexed and even-indexed entries (1-based) of `sigma`.
fn halves(sigma: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let minus = sigma.iter().copied().step_by(2).collect();
    let plus = sigma.iter().copied().skip(1).step_by(2).collect();
    (minus, plus)
}

/// Doubled spectrum of `diag(sigma_-) + rho^-1 diag(sigma_+) rho`.
fn doubled_small_spectrum(sigma: &[f64], rho: &OrthogonalMatrix) -> Result<Vec<f64>> {
    let (minus, plus) = halves(sigma);
    let r = rho.matrix();
    let small = &Matrix::diagonal(&minus) + &(&(&r.transpose() * &Matrix::diagonal(&plus)) * r);
    let ev = symmetric_eigenvalues(&small, scale_of(sigma))?;
    Ok(ev.iter().flat_map(|&x| [x, x]).collect())
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockIdentityReport {
    pub scale: f64,
    /// Largest entrywise difference between the two sides of the identity.
    pub discrepancy: f64,
    /// Spectrum of `S + J^-1 S J` for the block complex structure.
    pub spectrum: SpectrumSample,
    /// Doubled spectrum of the `p`-dimensional sum.
    pub doubled_small: Vec<f64>,
    pub spectrum_discrepancy: f64,
}

impl BlockIdentityReport {
    pub fn holds(&self) -> bool {
        self.discrepancy < STRUCTURE_TOL * self.scale && self.spectrum_discrepancy < BLOCK_TOL
    }
}

/// Checks, in the basis `(e1, e3, ..., e2, e4, ...)` with `K = [[0, -rho^-1],
/// [rho, 0]]`, that `diag(sigma_-, sigma_+) + K^-1 diag(sigma_-, sigma_+) K`
/// equals `diag(sigma_- + rho^-1 sigma_+ rho, rho sigma_- rho^-1 + sigma_+)`,
/// and that the full spectrum is the doubled spectrum of the upper block.
pub fn block_identity_check(sigma: &[f64], rho: &OrthogonalMatrix) -> Result<BlockIdentityReport> {
    let p = rho.dim();
    check_sigma(sigma, 2 * p)?;
    let (minus, plus) = halves(sigma);
    let r = rho.matrix();
    let rt = r.transpose();
    let mut k = Matrix::zeros(2 * p);
    let mut s = Matrix::zeros(2 * p);
    for a in 0..p {
        s[(a, a)] = minus[a];
        s[(p + a, p + a)] = plus[a];
        for b in 0..p {
            k[(a, p + b)] = -rt[(a, b)];
            k[(p + a, b)] = r[(a, b)];
        }
    }
    let lhs = &s + &(&(&k.transpose() * &s) * &k);
    let upper = &Matrix::diagonal(&minus) + &(&(&rt * &Matrix::diagonal(&plus)) * r);
    let lower = &(&(r * &Matrix::diagonal(&minus)) * &rt) + &Matrix::diagonal(&plus);
    let mut rhs = Matrix::zeros(2 * p);
    for a in 0..p {
        for b in 0..p {
            rhs[(a, b)] = upper[(a, b)];
            rhs[(p + a, p + b)] = lower[(a, b)];
        }
    }
    let spectrum = sum_spectrum(sigma, &block_structure(rho))?;
    let doubled_small = doubled_small_spectrum(sigma, rho)?;
    Ok(BlockIdentityReport {
        scale: scale_of(sigma),
        discrepancy: lhs.max_abs_diff(&rhs),
        spectrum_discrepancy: max_abs_diff(&spectrum.raw, &doubled_small),
        spectrum,
        doubled_small,
    })
}

/// How complex structures (or rotations) are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplingMode {
    /// `J = R^-1 J0 R` with `R` Haar in `SO(2p)`.
    Random,
    /// The block structure with `rho` Haar in `SO(p)`.
    Block,
    /// `S + R^-1 S R` with `R` Haar in `SO(2p)`, not a complex structure.
    Rotation,
}

impl SamplingMode {
    pub fn name(self) -> &'static str {
        match self {
            Self::Random => "random",
            Self::Block => "block",
            Self::Rotation => "rotation",
        }
    }
}

impl fmt::Display for SamplingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SamplingMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "random" => Ok(Self::Random),
            "block" => Ok(Self::Block),
            "rotation" => Ok(Self::Rotation),
            _ => Err(format!("unknown mode {s:?} (expected random, block or rotation)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloSample {
    pub index: u64,
    pub seed: u64,
    pub spectrum: SpectrumSample,
    /// Block mode only: distance to the doubled `p`-dimensional spectrum.
    pub block_defect: Option<f64>,
}

fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws `samples` spectra in parallel; the result is in index order and
/// depends only on `(sigma, samples, seed, mode)`.
pub fn monte_carlo_q(
    sigma: &[f64],
    samples: usize,
    seed: u64,
    mode: SamplingMode,
) -> Result<Vec<MonteCarloSample>> {
    if !sigma.len().is_multiple_of(2) {
        return Err(Error::InvalidSpectrum(format!("{sigma:?} has odd length")));
    }
    check_sigma(sigma, sigma.len())?;
    let p = sigma.len() / 2;
    (0..samples as u64)
        .into_par_iter()
        .map(|index| {
            let mut rng = sample_rng(seed, index);
            let (spectrum, block_defect) = match mode {
                SamplingMode::Random => {
                    let r = rotation_from(2 * p, &mut rng);
                    let j = standard_j0(p).conjugated(&r)?;
                    (sum_spectrum(sigma, &j)?, None)
                }
                SamplingMode::Block => {
                    let rho = rotation_from(p, &mut rng);
                    let spectrum = sum_spectrum(sigma, &block_structure(&rho))?;
                    let doubled = doubled_small_spectrum(sigma, &rho)?;
                    let defect = max_abs_diff(&spectrum.raw, &doubled);
                    (spectrum, Some(defect))
                }
                SamplingMode::Rotation => {
                    let r = rotation_from(2 * p, &mut rng);
                    (rotation_spectrum(sigma, &r)?, None)
                }
            };
            Ok(MonteCarloSample {
                index,
                seed,
                spectrum,
                block_defect,
            })
        })
        .collect()
}

/// `sigma` as a partition when every entry is a nonnegative integer.
pub fn integral_partition(sigma: &[f64]) -> Option<Partition> {
    let parts = sigma
        .iter()
        .map(|&x| (x >= 0.0 && x.fract() == 0.0 && x <= f64::from(u32::MAX)).then_some(x as u32))
        .collect::<Option<Vec<u32>>>()?;
    Partition::new(parts).ok()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectraSummary {
    pub mode: SamplingMode,
    pub samples: usize,
    pub scale: f64,
    pub min_collapsed: Vec<f64>,
    pub max_collapsed: Vec<f64>,
    pub max_pairing_defect: f64,
    /// Largest `|sum(collapsed) - |sigma||`.
    pub max_trace_defect: f64,
    pub max_block_defect: Option<f64>,
    /// Whether samples were tested against a lattice-point hull: `P1` for
    /// complex structures, the `2p`-dimensional Horn polytope for rotations.
    /// Only integral `sigma` are tested.
    pub hull_checked: bool,
    pub inside_hull: usize,
}

impl SpectraSummary {
    pub fn pass_rate(&self) -> f64 {
        if self.samples == 0 {
            1.0
        } else {
            self.inside_hull as f64 / self.samples as f64
        }
    }

    /// Pairing (complex structures only), trace, block match and hull
    /// membership all within tolerance.
    pub fn holds(&self) -> bool {
        let paired = self.mode == SamplingMode::Rotation
            || self.max_pairing_defect < PAIRING_TOL * self.scale;
        let block = self.max_block_defect.is_none_or(|d| d < BLOCK_TOL);
        let hull = !self.hull_checked || self.inside_hull == self.samples;
        paired && self.max_trace_defect < TRACE_TOL * self.scale && block && hull
    }

    pub fn to_text(&self) -> String {
        let fmt = |v: &[f64]| v.iter().map(|x| format!("{x:.9}")).collect::<Vec<_>>().join(",");
        let mut out = format!(
            "mode {}\nsamples {}\nmin collapsed [{}]\nmax collapsed [{}]\nmax pairing defect {:e}\nmax trace defect {:e}\n",
            self.mode,
            self.samples,
            fmt(&self.min_collapsed),
            fmt(&self.max_collapsed),
            self.max_pairing_defect,
            self.max_trace_defect,
        );
        if let Some(d) = self.max_block_defect {
            out += &format!("max block defect {d:e}\n");
        }
        if self.hull_checked {
            out += &format!(
                "inside hull {}/{} ({:.2}%)\n",
                self.inside_hull,
                self.samples,
                100.0 * self.pass_rate()
            );
        } else {
            out += "hull not checked (non-integral sigma)\n";
        }
        out += if self.holds() { "PASS\n" } else { "FAIL\n" };
        out
    }
}

pub fn summarize(
    sigma: &[f64],
    mode: SamplingMode,
    samples: &[MonteCarloSample],
) -> Result<SpectraSummary> {
    let p = sigma.len() / 2;
    let total: f64 = sigma.iter().sum();
    let mut min_collapsed = vec![f64::INFINITY; p];
    let mut max_collapsed = vec![f64::NEG_INFINITY; p];
    let (mut pairing, mut trace) = (0.0f64, 0.0f64);
    let mut block: Option<f64> = None;
    for s in samples {
        let c = &s.spectrum.collapsed;
        for i in 0..p {
            min_collapsed[i] = min_collapsed[i].min(c[i]);
            max_collapsed[i] = max_collapsed[i].max(c[i]);
        }
        pairing = pairing.max(s.spectrum.pairing_defect);
        trace = trace.max((c.iter().sum::<f64>() - total).abs());
        if let Some(d) = s.block_defect {
            block = Some(block.unwrap_or(0.0).max(d));
        }
    }
    if samples.is_empty() {
        min_collapsed.clear();
        max_collapsed.clear();
    }
    let hull = match integral_partition(sigma) {
        Some(part) if mode == SamplingMode::Rotation => Some((p_points(&part)?.hull()?, true)),
        Some(part) => Some((p1_points(&part)?.hull()?, false)),
        None => None,
    };
    let inside_hull = match &hull {
        Some((h, full)) => samples
            .iter()
            .filter(|s| {
                let point = if *full { &s.spectrum.raw } else { &s.spectrum.collapsed };
                h.contains_approx(point, HULL_TOL)
            })
            .count(),
        None => 0,
    };
    Ok(SpectraSummary {
        mode,
        samples: samples.len(),
        scale: scale_of(sigma),
        min_collapsed,
        max_collapsed,
        max_pairing_defect: pairing,
        max_trace_defect: trace,
        max_block_defect: block,
        hull_checked: hull.is_some(),
        inside_hull,
    })
}

/// One line per sample: index, seed, raw spectrum, collapsed spectrum and
/// pairing defect, tab-separated, with a header line.
pub fn samples_to_text(samples: &[MonteCarloSample]) -> String {
    let join = |v: &[f64]| v.iter().map(|x| format!("{x:.12}")).collect::<Vec<_>>().join(",");
    let mut out = String::from("# index\tseed\traw\tcollapsed\tpairing_defect\n");
    for s in samples {
        out += &format!(
            "{}\t{}\t{}\t{}\t{:e}\n",
            s.index,
            s.seed,
            join(&s.spectrum.raw),
            join(&s.spectrum.collapsed),
            s.spectrum.pairing_defect
        );
    }
    out
}

pub fn samples_to_json(samples: &[MonteCarloSample]) -> String {
    serde_json::to_string_pretty(samples).expect("samples serialize")
}
