//! Partitions with a declared length, the bijection with strictly increasing
//! sequences, and the `tau` doubling operation.
//!
//! A [`Partition`] keeps its trailing zeros: `[5,3,2,0]` and `[5,3,2]` are
//! different shapes (the first one splits into two halves of length 2).
//! Use [`Partition::trimmed`] or [`Partition::same_point`] when trailing
//! zeros should not matter.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing {
                index: i + 1,
                parts: parts.clone(),
            });
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The all-zero partition with `len` parts.
    pub fn zeros(len: usize) -> Self {
        Self {
            parts: vec![0; len],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of stored parts, zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn num_nonzero(&self) -> usize {
        self.parts.iter().take_while(|&&x| x > 0).count()
    }

    /// Part `i` (0-based), zero beyond the declared length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn trimmed(&self) -> Self {
        Self {
            parts: self.parts[..self.num_nonzero()].to_vec(),
        }
    }

    /// Equality up to trailing zeros.
    pub fn same_point(&self, other: &Self) -> bool {
        let n = self.len().max(other.len());
        (0..n).all(|i| self.part(i) == other.part(i))
    }

    /// Pads with zeros up to `len` parts. Fails if nonzero parts would have to
    /// be dropped.
    pub fn padded(&self, len: usize) -> Result<Self> {
        if self.num_nonzero() > len {
            return Err(Error::TooManyParts {
                partition: self.clone(),
                len,
            });
        }
        let mut parts = self.parts[..self.num_nonzero()].to_vec();
        parts.resize(len, 0);
        Ok(Self { parts })
    }

    /// Young diagram containment, ignoring declared lengths.
    pub fn contains(&self, inner: &Self) -> bool {
        let n = self.len().max(inner.len());
        (0..n).all(|i| inner.part(i) <= self.part(i))
    }

    /// Each part repeated twice: `(a, b) -> (a, a, b, b)`.
    pub fn doubled(&self) -> Self {
        Self {
            parts: self.parts.iter().flat_map(|&x| [x, x]).collect(),
        }
    }

    /// Splits a partition of even length `2p` into its odd-indexed and
    /// even-indexed halves `(sigma_minus, sigma_plus)`.
    pub fn sigma_split(&self) -> Result<(Self, Self)> {
        if !self.len().is_multiple_of(2) {
            return Err(Error::OddLength(self.clone()));
        }
        let minus = self.parts.iter().copied().step_by(2).collect();
        let plus = self.parts.iter().copied().skip(1).step_by(2).collect();
        Ok((Self { parts: minus }, Self { parts: plus }))
    }

    /// Multiplies every part by `k`, with overflow checking.
    pub fn scaled(&self, k: u32) -> Result<Self> {
        let parts = self
            .parts
            .iter()
            .map(|&x| x.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { parts })
    }

    /// Conjugate partition, with declared length equal to the first part.
    pub fn conjugate(&self) -> Self {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&x| x as usize > c).count() as u32)
            .collect();
        Self { parts }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the bracketed literal `[a,b,c]`. Whitespace around items is
    /// allowed; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |pos: usize, msg: &str| Error::Parse {
            input: s.to_string(),
            position: pos,
            message: msg.to_string(),
        };
        let start = s.len() - s.trim_start().len();
        let body = s.trim();
        if !body.starts_with('[') {
            return Err(parse_err(start, "expected '['"));
        }
        if !body.ends_with(']') || body.len() < 2 {
            return Err(parse_err(start + body.len(), "expected ']'"));
        }
        let inner = &body[1..body.len() - 1];
        let mut parts = Vec::new();
        if !inner.trim().is_empty() {
            let mut offset = start + 1;
            for item in inner.split(',') {
                let lead = item.len() - item.trim_start().len();
                let tok = item.trim();
                if tok.is_empty() {
                    return Err(parse_err(offset + lead, "empty part"));
                }
                let value = tok
                    .parse::<u32>()
                    .map_err(|_| parse_err(offset + lead, "expected a nonnegative integer"))?;
                parts.push(value);
                offset += item.len() + 1;
            }
        }
        Self::new(parts)
    }
}

/// A strictly increasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IncreasingSequence {
    terms: Vec<u32>,
}

impl IncreasingSequence {
    pub fn new(terms: Vec<u32>) -> Result<Self> {
        if terms.first() == Some(&0) || terms.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(terms));
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `(i_1 < ... < i_r) -> (i_r - r, ..., i_1 - 1)`.
pub fn lambda_of_sequence(seq: &IncreasingSequence) -> Partition {
    let parts = seq
        .terms
        .iter()
        .enumerate()
        .rev()
        .map(|(k, &i)| i - (k as u32 + 1))
        .collect();
    Partition { parts }
}

/// Inverse of [`lambda_of_sequence`]: `i_k = lambda_{r+1-k} + k`.
pub fn sequence_of_partition(lambda: &Partition) -> Result<IncreasingSequence> {
    let r = lambda.len();
    let terms = (1..=r)
        .map(|k| {
            lambda.parts[r - k]
                .checked_add(k as u32)
                .ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IncreasingSequence { terms })
}

/// Interleaves `(2 i_k - 1)` and `(2 j_k)` into one increasing sequence.
pub fn tau_sequences(i: &IncreasingSequence, j: &IncreasingSequence) -> Result<IncreasingSequence> {
    if i.len() != j.len() {
        return Err(Error::LengthMismatch {
            left: i.len(),
            right: j.len(),
        });
    }
    let mut terms = Vec::with_capacity(2 * i.len());
    for &x in &i.terms {
        terms.push(x.checked_mul(2).ok_or(Error::Overflow)? - 1);
    }
    for &y in &j.terms {
        terms.push(y.checked_mul(2).ok_or(Error::Overflow)?);
    }
    terms.sort_unstable();
    Ok(IncreasingSequence { terms })
}

/// The domino-decomposable shape `tau(lambda, mu)` of length `2r`. Both
/// arguments must have the same declared length `r`; pad explicitly.
pub fn tau_partitions(lambda: &Partition, mu: &Partition) -> Result<Partition> {
    if lambda.len() != mu.len() {
        return Err(Error::LengthMismatch {
            left: lambda.len(),
            right: mu.len(),
        });
    }
    let i = sequence_of_partition(lambda)?;
    let j = sequence_of_partition(mu)?;
    Ok(lambda_of_sequence(&tau_sequences(&i, &j)?))
}

/// All partitions with exactly `len` parts (zeros allowed) and parts at most
/// `max_part`, in reverse lexicographic order.
pub fn partitions_in_box(len: usize, max_part: u32) -> Vec<Partition> {
    fn rec(len: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if cur.len() == len {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for x in (0..=cap).rev() {
            cur.push(x);
            rec(len, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max_part, &mut Vec::with_capacity(len), &mut out);
    out
}

/// All partitions of `n` with at most `max_len` nonzero parts and first part
/// at most `max_part`, stored without trailing zeros, in reverse lexicographic
/// order.
pub fn partitions_of(n: u64, max_len: usize, max_part: u32) -> Vec<Partition> {
    fn rec(rest: u64, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if cur.len() == max_len {
            return;
        }
        let slots = (max_len - cur.len()) as u64;
        if slots.saturating_mul(u64::from(cap)) < rest {
            return;
        }
        let hi = u64::from(cap).min(rest) as u32;
        for x in (1..=hi).rev() {
            cur.push(x);
            rec(rest - u64::from(x), x, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn seq(v: &[u32]) -> IncreasingSequence {
        IncreasingSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_of_sequence(&seq(&[1, 5])), p(&[3, 0]));
        assert_eq!(lambda_of_sequence(&seq(&[])), p(&[]));
        assert_eq!(lambda_of_sequence(&seq(&[1, 2, 3, 4])), p(&[0, 0, 0, 0]));
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(sequence_of_partition(&p(&[3, 0])).unwrap(), seq(&[1, 5]));
        assert_eq!(sequence_of_partition(&p(&[5, 2])).unwrap(), seq(&[3, 7]));
        assert_eq!(sequence_of_partition(&p(&[])).unwrap(), seq(&[]));
    }

    #[test]
    fn tau_sequence_examples() {
        assert_eq!(tau_sequences(&seq(&[1, 5]), &seq(&[3, 7])).unwrap(), seq(&[1, 6, 9, 14]));
        assert_eq!(tau_sequences(&seq(&[1]), &seq(&[1])).unwrap(), seq(&[1, 2]));
        assert_eq!(tau_sequences(&seq(&[]), &seq(&[])).unwrap(), seq(&[]));
        assert!(matches!(
            tau_sequences(&seq(&[1]), &seq(&[])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn tau_partition_examples() {
        assert_eq!(tau_partitions(&p(&[3, 0]), &p(&[5, 2])).unwrap(), p(&[10, 6, 4, 0]));
        let sigma = p(&[5, 3, 2, 0]);
        assert_eq!(
            tau_partitions(&sigma, &sigma).unwrap(),
            p(&[10, 10, 6, 6, 4, 4, 0, 0])
        );
        assert_eq!(tau_partitions(&p(&[]), &p(&[])).unwrap(), p(&[]));
        assert!(tau_partitions(&p(&[1]), &p(&[1, 0])).is_err());
    }

    #[test]
    fn split_and_double() {
        assert_eq!(p(&[5, 3, 2, 0]).sigma_split().unwrap(), (p(&[5, 2]), p(&[3, 0])));
        assert_eq!(p(&[7, 6, 4, 3]).sigma_split().unwrap(), (p(&[7, 4]), p(&[6, 3])));
        assert_eq!(p(&[0, 0]).sigma_split().unwrap(), (p(&[0]), p(&[0])));
        assert!(matches!(p(&[3, 2, 1]).sigma_split(), Err(Error::OddLength(_))));

        assert_eq!(p(&[10, 8, 2]).doubled(), p(&[10, 10, 8, 8, 2, 2]));
        assert_eq!(p(&[8, 2]).doubled(), p(&[8, 8, 2, 2]));
        assert_eq!(p(&[]).doubled(), p(&[]));
    }

    #[test]
    fn rejects_invalid() {
        assert!(matches!(Partition::new(vec![1, 2]), Err(Error::NotDecreasing { index: 1, .. })));
        assert!(IncreasingSequence::new(vec![0, 1]).is_err());
        assert!(IncreasingSequence::new(vec![2, 2]).is_err());
    }

    #[test]
    fn literal_round_trip() {
        assert_eq!("[5,3,2,0]".parse::<Partition>().unwrap(), p(&[5, 3, 2, 0]));
        assert_eq!(" [ 1 , 1 ] ".parse::<Partition>().unwrap(), p(&[1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), p(&[]));
        assert_eq!(p(&[5, 3, 2, 0]).to_string(), "[5,3,2,0]");
        assert_eq!(p(&[]).to_string(), "[]");
    }

    #[test]
    fn literal_errors_carry_position() {
        match "[1,,2]".parse::<Partition>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        match "[1,x]".parse::<Partition>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!("5,3".parse::<Partition>(), Err(Error::Parse { position: 0, .. })));
        assert!(matches!("[1,2]".parse::<Partition>(), Err(Error::NotDecreasing { .. })));
    }

    #[test]
    fn trailing_zero_conventions() {
        let a = p(&[5, 3, 2, 0]);
        let b = p(&[5, 3, 2]);
        assert_ne!(a, b);
        assert!(a.same_point(&b));
        assert_eq!(a.trimmed(), b);
        assert_eq!(b.padded(4).unwrap(), a);
        assert!(a.padded(2).is_err());
    }

    #[test]
    fn enumerators() {
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_in_box(0, 3), vec![p(&[])]);
        // p(6) = 11
        assert_eq!(partitions_of(6, 6, 6).len(), 11);
        assert_eq!(partitions_of(0, 0, 0), vec![p(&[])]);
        assert_eq!(partitions_of(4, 2, 3), vec![p(&[3, 1]), p(&[2, 2])]);
    }

    #[test]
    fn conjugate_small() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
    }
}
