use std::cmp::Reverse;
use std::fmt;

use super::tableau::{Domino, DominoTableau};

/// Labels of a domino tableau read column by column, right to left, each
/// column top to bottom. A vertical domino is read in its column at its top
/// row; a horizontal domino is skipped in its right column and read in its
/// left column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReadingWord(Vec<u32>);

impl ReadingWord {
    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_yamanouchi(&self) -> bool {
        is_yamanouchi(&self.0)
    }
}

impl fmt::Display for ReadingWord {
    /// Labels concatenated; labels above 9 are wrapped in parentheses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            if x < 10 {
                write!(f, "{x}")?;
            } else {
                write!(f, "({x})")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn reading_order(dominoes: &mut [Domino]) {
    dominoes.sort_unstable_by_key(|d| {
        let (col, row) = d.reading_position();
        (Reverse(col), row)
    });
}

pub fn reading_word(t: &DominoTableau) -> ReadingWord {
    let mut ds = t.dominoes().to_vec();
    reading_order(&mut ds);
    ReadingWord(ds.into_iter().map(|d| d.label).collect())
}

/// Every prefix contains each label `i` at least as often as `i + 1`. Only
/// adjacent labels need to be compared; the general condition for `j > i`
/// follows by chaining.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut counts = vec![0u32; max + 1];
    for &x in word {
        if x == 0 {
            return false;
        }
        let i = x as usize;
        counts[i] += 1;
        if i > 1 && counts[i] > counts[i - 1] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use proptest::prelude::*;

    fn word(s: &str) -> Vec<u32> {
        s.bytes().map(|b| u32::from(b - b'0')).collect()
    }

    /// Definition with every pair `i < j` checked.
    fn yamanouchi_all_pairs(w: &[u32]) -> bool {
        let max = w.iter().copied().max().unwrap_or(0);
        if w.contains(&0) {
            return false;
        }
        (1..=w.len()).all(|n| {
            let prefix = &w[..n];
            let count = |v: u32| prefix.iter().filter(|&&x| x == v).count();
            (1..=max).all(|i| (i + 1..=max).all(|j| count(i) >= count(j)))
        })
    }

    #[test]
    fn predicate_examples() {
        assert!(is_yamanouchi(&word("1112212212")));
        assert!(!is_yamanouchi(&[2, 1]));
        assert!(is_yamanouchi(&[]));
        assert!(!is_yamanouchi(&[1, 3]));
    }

    #[test]
    fn reading_small_shapes() {
        let one = DominoTableau::new(
            Partition::new(vec![2]).unwrap(),
            vec![Domino::horizontal(1, 1, 1)],
        )
        .unwrap();
        assert_eq!(reading_word(&one).to_string(), "1");

        let stacked = DominoTableau::new(
            Partition::new(vec![2, 2]).unwrap(),
            vec![Domino::horizontal(1, 1, 1), Domino::horizontal(2, 1, 2)],
        )
        .unwrap();
        assert_eq!(reading_word(&stacked).to_string(), "12");

        // vertical in column 1, horizontal in columns 2-3: the horizontal one
        // is read first (column 2 comes before column 1).
        let mixed = DominoTableau::new(
            Partition::new(vec![3, 1]).unwrap(),
            vec![Domino::vertical(1, 1, 1), Domino::horizontal(1, 2, 2)],
        )
        .unwrap();
        assert_eq!(reading_word(&mixed).labels(), &[2, 1]);
    }

    proptest! {
        #[test]
        fn adjacent_pairs_suffice(w in proptest::collection::vec(1u32..=4, 0..12)) {
            prop_assert_eq!(is_yamanouchi(&w), yamanouchi_all_pairs(&w));
        }
    }
}
