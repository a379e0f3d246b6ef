//! The example tableaux for `sigma = (5,3,2,0)` and the strictness witness
//! for `sigma = (7,6,4,3)`, `nu = (10,8,2)`, rebuilt by enumeration.

use serde::Serialize;

use crate::domino::{enumerate_yamanouchi_tableaux, reading_word, DominoTableau};
use crate::duplication::{duplicate, undo_duplicate};
use crate::error::Result;
use crate::partition::{partitions_of, tau_partitions, Partition};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FigureEntry {
    pub name: String,
    pub weight: Partition,
    pub word: String,
    pub tableau: DominoTableau,
}

impl FigureEntry {
    fn new(name: String, weight: Partition, tableau: DominoTableau) -> Self {
        Self {
            name,
            word: reading_word(&tableau).to_string(),
            weight,
            tableau,
        }
    }
}

pub fn example_sigma() -> Partition {
    Partition::new(vec![5, 3, 2, 0]).expect("valid")
}

pub fn strict_sigma() -> Partition {
    Partition::new(vec![7, 6, 4, 3]).expect("valid")
}

pub fn strict_nu() -> Partition {
    Partition::new(vec![10, 8, 2]).expect("valid")
}

/// All Yamanouchi tableaux of shape `tau(sigma_+, sigma_-)` for the example
/// `sigma` whose weight has at most two parts, by increasing first part of
/// the weight; named `T1, T2, ...`.
pub fn figure1() -> Result<Vec<FigureEntry>> {
    let sigma = example_sigma();
    let (minus, plus) = sigma.sigma_split()?;
    let shape = tau_partitions(&plus, &minus)?;
    let mut weights = partitions_of(sigma.weight(), 2, u32::MAX);
    weights.sort();
    let mut out = Vec::new();
    for weight in weights {
        for t in enumerate_yamanouchi_tableaux(&shape, &weight) {
            out.push(FigureEntry::new(format!("T{}", out.len() + 1), weight.clone(), t));
        }
    }
    Ok(out)
}

/// Duplications of the figure-1 tableaux, named `U1, U2, ...`.
pub fn figure2() -> Result<Vec<FigureEntry>> {
    figure1()?
        .into_iter()
        .enumerate()
        .map(|(i, e)| Ok(FigureEntry::new(format!("U{}", i + 1), e.weight.doubled(), duplicate(&e.tableau)?)))
        .collect()
}

/// Whether `u` is the duplicate of a Yamanouchi tableau.
pub fn in_duplication_image(u: &DominoTableau) -> bool {
    undo_duplicate(u).is_some_and(|t| reading_word(&t).is_yamanouchi())
}

/// The first Yamanouchi tableau, in canonical order, of shape
/// `tau(sigma, sigma)` and weight `nu^(2)` for `sigma = (7,6,4,3)`,
/// `nu = (10,8,2)` that is not the duplicate of a Yamanouchi tableau.
pub fn figure3() -> Result<Option<FigureEntry>> {
    let sigma = strict_sigma();
    let shape = tau_partitions(&sigma, &sigma)?;
    let weight = strict_nu().doubled();
    Ok(enumerate_yamanouchi_tableaux(&shape, &weight)
        .into_iter()
        .find(|u| !in_duplication_image(u))
        .map(|u| FigureEntry::new("W".into(), weight, u)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure1_words() {
        let f = figure1().unwrap();
        let words: Vec<&str> = f.iter().map(|e| e.word.as_str()).collect();
        assert_eq!(words, ["1112212212", "1112212112", "1112112112", "1111112112"]);
        let weights: Vec<String> = f.iter().map(|e| e.weight.to_string()).collect();
        assert_eq!(weights, ["[5,5]", "[6,4]", "[7,3]", "[8,2]"]);
    }

    #[test]
    fn figure2_is_in_image() {
        let f = figure2().unwrap();
        assert_eq!(f.len(), 4);
        for e in &f {
            assert_eq!(e.tableau.shape().parts(), [10, 10, 6, 6, 4, 4, 0, 0]);
            assert!(reading_word(&e.tableau).is_yamanouchi());
            assert!(in_duplication_image(&e.tableau));
        }
    }

    #[test]
    fn figure3_exists() {
        let w = figure3().unwrap().expect("witness");
        assert_eq!(w.tableau.shape().parts(), [14, 14, 12, 12, 8, 8, 6, 6]);
        assert!(!in_duplication_image(&w.tableau));
        assert!(reading_word(&w.tableau).is_yamanouchi());
    }
}
