//! Verification sweeps over `sigma` and `nu`, producing line-oriented and
//! JSON reports.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{p1_points, p2_points, p_points, projection_onto_delta};
use crate::domino::{common_length, enumerate_yamanouchi_tableaux, is_yamanouchi, reading_word};
use crate::duplication::{duplicate_for_sigma, undo_duplicate};
use crate::error::{Error, Result};
use crate::lr::lr_coefficient;
use crate::partition::{partitions_in_box, partitions_of, tau_partitions, Partition};

/// One checked case. Which fields are filled depends on the suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu: Option<Partition>,
    pub nu: Partition,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    pub holds: bool,
}

impl Record {
    fn new(nu: Partition) -> Self {
        Self {
            sigma: None,
            lambda: None,
            mu: None,
            nu,
            lhs: None,
            rhs: None,
            detail: None,
            holds: true,
        }
    }

    pub fn line(&self) -> String {
        let mut s = String::new();
        for (name, v) in [("sigma", &self.sigma), ("lambda", &self.lambda), ("mu", &self.mu)] {
            if let Some(v) = v {
                let _ = write!(s, "{name}={v} ");
            }
        }
        let _ = write!(s, "nu={}", self.nu);
        if let Some(l) = self.lhs {
            let _ = write!(s, " lhs={l}");
        }
        if let Some(r) = self.rhs {
            let _ = write!(s, " rhs={r}");
        }
        if let Some(d) = &self.detail {
            let _ = write!(s, " ({d})");
        }
        s.push_str(if self.holds { " ok" } else { " FAIL" });
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// `c^nu_{sigma_- sigma_+} <= c^{nu^(2)}_{sigma sigma}` through the
    /// duplication map.
    Prop2,
    /// Lattice-set equality of `P1` and `P2`.
    P1p2,
    /// `c^{nu^(2)}_{sigma sigma} != 0` implies `c^nu_{sigma_- sigma_+} != 0`.
    Implication,
    /// `c^nu_{lambda mu} <= c^{tau(nu,nu)}_{tau(lambda,mu) tau(lambda,mu)}`.
    Fflp,
    /// `c^nu_{lambda mu} <= c^nu_{sigma_- sigma_+}` for splits of `sigma`.
    Lpp,
    /// Projections of `P` onto doubled vectors lie in the hull of `P1`.
    Projection,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Prop2,
        Suite::P1p2,
        Suite::Implication,
        Suite::Fflp,
        Suite::Lpp,
        Suite::Projection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop2 => "prop2",
            Suite::P1p2 => "p1p2",
            Suite::Implication => "implication",
            Suite::Fflp => "fflp",
            Suite::Lpp => "lpp",
            Suite::Projection => "projection",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Sweep bounds. `p` is the half length of `sigma` (for `fflp`, the common
/// length of `lambda` and `mu`); `max_part` bounds the largest part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub p: usize,
    pub max_part: u32,
    /// Extra `sigma` values checked on top of the box sweep.
    #[serde(default)]
    pub extra: Vec<Partition>,
    /// When false only `extra` is checked.
    #[serde(default = "default_true")]
    pub include_box: bool,
}

fn default_true() -> bool {
    true
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            p: 2,
            max_part: 6,
            extra: Vec::new(),
            include_box: true,
        }
    }
}

impl SweepConfig {
    /// All `sigma` of length `2p` with parts at most `max_part` (unless
    /// `include_box` is false), then the extras, sorted and deduplicated.
    pub fn sigmas(&self) -> Vec<Partition> {
        let mut all = if self.include_box {
            partitions_in_box(2 * self.p, self.max_part)
        } else {
            Vec::new()
        };
        all.extend(self.extra.iter().cloned());
        all.sort();
        all.dedup();
        all
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: Suite,
    /// Number of cases examined, including those not listed in `records`.
    pub checked: u64,
    /// Cases where every compared quantity is zero are not listed.
    pub records: Vec<Record>,
    /// False when the sweep stopped at its deadline.
    pub complete: bool,
}

impl Report {
    fn new(suite: Suite) -> Self {
        Self {
            suite,
            checked: 0,
            records: Vec::new(),
            complete: true,
        }
    }

    fn push(&mut self, r: Record) {
        self.checked += 1;
        let trivial = r.holds && r.lhs.unwrap_or(0) == 0 && r.rhs.unwrap_or(0) == 0 && r.detail.is_none();
        if !trivial {
            self.records.push(r);
        }
    }

    fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.records.extend(other.records);
        self.complete &= other.complete;
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.holds)
    }

    pub fn passed(&self) -> bool {
        self.counterexamples().next().is_none()
    }

    pub fn summary(&self) -> String {
        format!(
            "suite={} checked={} listed={} counterexamples={} complete={}",
            self.suite,
            self.checked,
            self.records.len(),
            self.counterexamples().count(),
            self.complete
        )
    }

    /// Summary line followed by one line per listed record.
    pub fn to_text(&self) -> String {
        let mut s = self.summary();
        s.push('\n');
        for r in &self.records {
            s.push_str(&r.line());
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Proposition-2 check for one `(sigma, nu)`: every Yamanouchi tableau of
/// shape `tau(sigma_+, sigma_-)` and weight `nu` is duplicated, the images are
/// checked to be Yamanouchi of the right shape and weight, to undo back to
/// their source and to be distinct; their number is compared with the
/// classical `c^{nu^(2)}_{sigma sigma}`.
pub fn verify_prop2(sigma: &Partition, nu: &Partition) -> Result<Record> {
    let (minus, plus) = sigma.sigma_split()?;
    let shape = tau_partitions(&plus, &minus)?;
    let big_shape = tau_partitions(sigma, sigma)?;
    let nu2 = nu.doubled();
    let sources = enumerate_yamanouchi_tableaux(&shape, nu);
    let mut problems = Vec::new();
    let classical_lhs = lr_coefficient(&minus, &plus, nu);
    if classical_lhs != sources.len() as u64 {
        problems.push(format!(
            "{} tableaux but classical coefficient {classical_lhs}",
            sources.len()
        ));
    }
    let mut images = Vec::with_capacity(sources.len());
    for t in &sources {
        let u = match duplicate_for_sigma(sigma, t) {
            Ok(u) => u,
            Err(e) => {
                problems.push(format!("duplicate failed: {e}"));
                continue;
            }
        };
        if u.shape() != &big_shape {
            problems.push(format!("image shape {}", u.shape()));
        }
        if u.weight() != nu2.trimmed().parts() {
            problems.push(format!("image weight {:?}", u.weight()));
        }
        if !is_yamanouchi(reading_word(&u).labels()) {
            problems.push(format!("image word {} not Yamanouchi", reading_word(&u)));
        }
        if undo_duplicate(&u).as_ref() != Some(t) {
            problems.push("undo does not return the source".into());
        }
        images.push(u);
    }
    images.sort();
    images.dedup();
    if images.len() != sources.len() {
        problems.push("duplication is not injective".into());
    }
    let rhs = lr_coefficient(sigma, sigma, &nu2);
    let lhs = sources.len() as u64;
    if lhs > rhs {
        problems.push("inequality fails".into());
    }
    Ok(Record {
        sigma: Some(sigma.clone()),
        lhs: Some(lhs),
        rhs: Some(rhs),
        holds: problems.is_empty(),
        detail: (!problems.is_empty()).then(|| problems.join("; ")),
        ..Record::new(nu.clone())
    })
}

/// Set equality of `P1` and `P2`. One record per point of the union.
pub fn verify_p1_equals_p2(sigma: &Partition) -> Result<Report> {
    let p1 = p1_points(sigma)?;
    let p2 = p2_points(sigma)?;
    let mut report = Report::new(Suite::P1p2);
    for nu in p1.points.union(&p2.points) {
        let (a, b) = (p1.points.contains(nu), p2.points.contains(nu));
        report.push(Record {
            sigma: Some(sigma.clone()),
            lhs: Some(u64::from(a)),
            rhs: Some(u64::from(b)),
            holds: a == b,
            ..Record::new(nu.clone())
        });
    }
    Ok(report)
}

/// Candidates for `nu` in the implication sweep: weight `|sigma|`, at most
/// `2p` parts, `nu_1 <= 2 sigma_1`.
fn implication_domain(sigma: &Partition) -> Vec<Partition> {
    partitions_of(sigma.weight(), sigma.len(), 2 * sigma.part(0))
}

/// `c^{nu^(2)}_{sigma sigma} != 0 => c^nu_{sigma_- sigma_+} != 0` for one
/// `nu`; `lhs` is `c^{nu^(2)}_{sigma sigma}`, `rhs` is `c^nu_{sigma_- sigma_+}`.
pub fn verify_implication_at(sigma: &Partition, nu: &Partition) -> Result<Record> {
    let (minus, plus) = sigma.sigma_split()?;
    let big = lr_coefficient(sigma, sigma, &nu.doubled());
    let small = lr_coefficient(&minus, &plus, nu);
    Ok(Record {
        sigma: Some(sigma.clone()),
        lhs: Some(big),
        rhs: Some(small),
        holds: big == 0 || small != 0,
        ..Record::new(nu.clone())
    })
}

pub fn verify_nonvanishing_implication(sigma: &Partition) -> Result<Report> {
    let mut report = Report::new(Suite::Implication);
    for nu in implication_domain(sigma) {
        report.push(verify_implication_at(sigma, &nu)?);
    }
    Ok(report)
}

/// `c^nu_{lambda mu} <= c^{tau(nu,nu)}_{tau(lambda,mu) tau(lambda,mu)}`.
/// `lambda` and `mu` are padded to a common length.
pub fn verify_fflp_inequality(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Record> {
    let sum = lambda.weight() + mu.weight();
    if nu.weight() != sum {
        return Err(Error::WeightMismatch {
            nu: nu.weight(),
            sum,
        });
    }
    let (l, m) = common_length(lambda, mu)?;
    let shape = tau_partitions(&l, &m)?;
    let big_nu = tau_partitions(nu, nu)?;
    let lhs = lr_coefficient(lambda, mu, nu);
    let rhs = lr_coefficient(&shape, &shape, &big_nu);
    Ok(Record {
        lambda: Some(lambda.clone()),
        mu: Some(mu.clone()),
        lhs: Some(lhs),
        rhs: Some(rhs),
        holds: lhs <= rhs,
        ..Record::new(nu.clone())
    })
}

/// The splits of `sigma` into two length-`p` partitions, up to swapping the
/// halves: the first half always takes part 1.
pub fn splits(sigma: &Partition) -> Result<Vec<(Partition, Partition)>> {
    use itertools::Itertools;
    let n = sigma.len();
    if !n.is_multiple_of(2) {
        return Err(Error::OddLength(sigma.clone()));
    }
    if n == 0 {
        return Ok(vec![(Partition::empty(), Partition::empty())]);
    }
    let p = n / 2;
    let parts = sigma.parts();
    Ok((1..n)
        .combinations(p - 1)
        .map(|rest| {
            let chosen: Vec<usize> = std::iter::once(0).chain(rest).collect();
            let a = chosen.iter().map(|&i| parts[i]).collect();
            let b = (0..n).filter(|i| !chosen.contains(i)).map(|i| parts[i]).collect();
            (Partition::new(a).unwrap(), Partition::new(b).unwrap())
        })
        .collect())
}

/// `c^nu_{lambda mu} <= c^nu_{sigma_- sigma_+}` for a split `(lambda, mu)`.
pub fn verify_lpp_inequality(
    sigma: &Partition,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<Record> {
    let (minus, plus) = sigma.sigma_split()?;
    let p = minus.len();
    let invalid = |message: String| Error::InvalidSplit {
        sigma: sigma.clone(),
        message,
    };
    if lambda.len() != p || mu.len() != p {
        return Err(invalid(format!("both halves must have {p} parts")));
    }
    let mut union: Vec<u32> = lambda.parts().iter().chain(mu.parts()).copied().collect();
    union.sort_unstable_by(|a, b| b.cmp(a));
    if union != sigma.parts() {
        return Err(invalid(format!("{lambda} and {mu} do not recombine to sigma")));
    }
    let lhs = lr_coefficient(lambda, mu, nu);
    let rhs = lr_coefficient(&minus, &plus, nu);
    Ok(Record {
        sigma: Some(sigma.clone()),
        lambda: Some(lambda.clone()),
        mu: Some(mu.clone()),
        lhs: Some(lhs),
        rhs: Some(rhs),
        holds: lhs <= rhs,
        ..Record::new(nu.clone())
    })
}

/// Every point of `P` projects into the convex hull of `P1`, checked with
/// exact rationals.
pub fn verify_projection(sigma: &Partition) -> Result<Report> {
    let hull = p1_points(sigma)?.hull()?;
    let mut report = Report::new(Suite::Projection);
    for gamma in p_points(sigma)?.points {
        let proj = projection_onto_delta(&gamma)?;
        let inside = hull.contains_exact(&proj);
        let shown: Vec<String> = proj.iter().map(|r| r.to_string()).collect();
        report.push(Record {
            sigma: Some(sigma.clone()),
            detail: Some(format!("projection ({})", shown.join(","))),
            holds: inside,
            ..Record::new(gamma)
        });
    }
    Ok(report)
}

fn sigma_report(suite: Suite, sigma: &Partition) -> Result<Report> {
    match suite {
        Suite::Prop2 => {
            let mut report = Report::new(suite);
            for nu in partitions_of(sigma.weight(), usize::MAX, u32::MAX) {
                report.push(verify_prop2(sigma, &nu)?);
            }
            Ok(report)
        }
        Suite::P1p2 => verify_p1_equals_p2(sigma),
        Suite::Implication => verify_nonvanishing_implication(sigma),
        Suite::Lpp => {
            let mut report = Report::new(suite);
            for (lambda, mu) in splits(sigma)? {
                for nu in partitions_of(sigma.weight(), usize::MAX, u32::MAX) {
                    report.push(verify_lpp_inequality(sigma, &lambda, &mu, &nu)?);
                }
            }
            Ok(report)
        }
        Suite::Projection => verify_projection(sigma),
        Suite::Fflp => unreachable!("fflp sweeps over pairs"),
    }
}

fn fflp_pair_report(lambda: &Partition, mu: &Partition) -> Result<Report> {
    let mut report = Report::new(Suite::Fflp);
    for nu in partitions_of(lambda.weight() + mu.weight(), usize::MAX, u32::MAX) {
        report.push(verify_fflp_inequality(lambda, mu, &nu)?);
    }
    Ok(report)
}

/// Runs a suite over the configured box. Work is spread over the rayon pool;
/// records come out in input order regardless of scheduling. Inputs not
/// started before `deadline` are skipped and the report is marked incomplete.
pub fn run_suite(suite: Suite, cfg: &SweepConfig, deadline: Option<Instant>) -> Result<Report> {
    let expired = || deadline.is_some_and(|d| Instant::now() >= d);
    let skipped = || {
        let mut r = Report::new(suite);
        r.complete = false;
        Ok(r)
    };
    let parts: Vec<Result<Report>> = if suite == Suite::Fflp {
        let box_ = partitions_in_box(cfg.p, cfg.max_part);
        let pairs: Vec<(Partition, Partition)> = box_
            .iter()
            .flat_map(|l| box_.iter().map(move |m| (l.clone(), m.clone())))
            .collect();
        pairs
            .par_iter()
            .map(|(l, m)| if expired() { skipped() } else { fflp_pair_report(l, m) })
            .collect()
    } else {
        cfg.sigmas()
            .par_iter()
            .map(|s| if expired() { skipped() } else { sigma_report(suite, s) })
            .collect()
    };
    let mut report = Report::new(suite);
    for part in parts {
        report.merge(part?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn p1p2_examples() {
        assert!(verify_p1_equals_p2(&p(&[5, 3, 2, 0])).unwrap().passed());
        let zero = verify_p1_equals_p2(&p(&[0, 0])).unwrap();
        assert!(zero.passed());
        assert_eq!(zero.records.len(), 1);
        assert!(verify_p1_equals_p2(&p(&[7, 6, 4, 3])).unwrap().passed());
    }

    #[test]
    fn implication_examples() {
        assert!(verify_nonvanishing_implication(&p(&[5, 3, 2, 0])).unwrap().passed());
        assert!(verify_nonvanishing_implication(&p(&[0, 0, 0, 0])).unwrap().passed());
        let r = verify_implication_at(&p(&[7, 6, 4, 3]), &p(&[10, 8, 2])).unwrap();
        assert!(r.holds);
        let (big, small) = (r.lhs.unwrap(), r.rhs.unwrap());
        assert!(small > 0 && big > small);
        let listed = verify_nonvanishing_implication(&p(&[7, 6, 4, 3])).unwrap();
        assert!(listed.records.iter().any(|x| x.nu == p(&[10, 8, 2])));
    }

    #[test]
    fn fflp_examples() {
        let r = verify_fflp_inequality(&p(&[1]), &p(&[1]), &p(&[2])).unwrap();
        assert_eq!((r.lhs, r.rhs), (Some(1), Some(1)));
        let r = verify_fflp_inequality(&p(&[]), &p(&[]), &p(&[])).unwrap();
        assert_eq!((r.lhs, r.rhs), (Some(1), Some(1)));
        assert!(verify_fflp_inequality(&p(&[5, 2]), &p(&[3, 0]), &p(&[8, 2])).unwrap().holds);
        assert!(matches!(
            verify_fflp_inequality(&p(&[1]), &p(&[1]), &p(&[3])),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn lpp_examples() {
        let sigma = p(&[5, 3, 2, 0]);
        let r = verify_lpp_inequality(&sigma, &p(&[5, 3]), &p(&[2, 0]), &p(&[5, 5])).unwrap();
        assert!(r.holds);
        let r = verify_lpp_inequality(&sigma, &p(&[5, 2]), &p(&[3, 0]), &p(&[5, 5])).unwrap();
        assert_eq!(r.lhs, r.rhs);
        assert!(matches!(
            verify_lpp_inequality(&sigma, &p(&[5, 3]), &p(&[2, 1]), &p(&[5, 5])),
            Err(Error::InvalidSplit { .. })
        ));
        let small = p(&[2, 1, 1, 0]);
        let all = splits(&small).unwrap();
        assert_eq!(all.len(), 3);
        for (l, m) in all {
            for nu in partitions_of(4, 4, 4) {
                assert!(verify_lpp_inequality(&small, &l, &m, &nu).unwrap().holds);
            }
        }
    }

    #[test]
    fn prop2_single() {
        let r = verify_prop2(&p(&[5, 3, 2, 0]), &p(&[5, 5])).unwrap();
        assert!(r.holds, "{:?}", r.detail);
        assert_eq!(r.lhs, Some(1));
    }

    #[test]
    fn projection_small() {
        assert!(verify_projection(&p(&[1, 0])).unwrap().passed());
        assert!(verify_projection(&p(&[5, 3, 2, 0])).unwrap().passed());
    }

    #[test]
    fn report_formats() {
        let report = run_suite(
            Suite::P1p2,
            &SweepConfig {
                p: 1,
                max_part: 2,
                ..SweepConfig::default()
            },
            None,
        )
        .unwrap();
        assert!(report.complete);
        assert!(report.passed());
        let text = report.to_text();
        assert!(text.starts_with("suite=p1p2"));
        let back: Report = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn extra_only() {
        let cfg = SweepConfig {
            extra: vec![p(&[0, 0, 0, 0])],
            include_box: false,
            ..SweepConfig::default()
        };
        assert_eq!(cfg.sigmas(), vec![p(&[0, 0, 0, 0])]);
        let report = run_suite(Suite::P1p2, &cfg, None).unwrap();
        assert!(report.passed());
        assert_eq!(report.checked, 1);
    }

    #[test]
    fn expired_deadline_marks_incomplete() {
        let report = run_suite(Suite::P1p2, &SweepConfig::default(), Some(Instant::now())).unwrap();
        assert!(!report.complete);
    }
}
