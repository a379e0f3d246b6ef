use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    /// 1 x 2: covers `(row, col)` and `(row, col + 1)`.
    Horizontal,
    /// 2 x 1: covers `(row, col)` and `(row + 1, col)`.
    Vertical,
}

/// A labelled domino. `row` and `col` locate its top-left cell, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Domino {
    pub row: usize,
    pub col: usize,
    pub orientation: Orientation,
    pub label: u32,
}

impl Domino {
    pub fn horizontal(row: usize, col: usize, label: u32) -> Self {
        Self {
            row,
            col,
            orientation: Orientation::Horizontal,
            label,
        }
    }

    pub fn vertical(row: usize, col: usize, label: u32) -> Self {
        Self {
            row,
            col,
            orientation: Orientation::Vertical,
            label,
        }
    }

    /// The two cells covered, 1-based.
    pub fn cells(&self) -> [(usize, usize); 2] {
        match self.orientation {
            Orientation::Horizontal => [(self.row, self.col), (self.row, self.col + 1)],
            Orientation::Vertical => [(self.row, self.col), (self.row + 1, self.col)],
        }
    }

    /// Position at which the domino contributes to the reading word: the
    /// column where it is read and the row within that column. Horizontal
    /// dominoes are skipped in their right column and read in their left one.
    pub(crate) fn reading_position(&self) -> (usize, usize) {
        (self.col, self.row)
    }
}

/// Which half of its domino a cell is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Half {
    Left,
    Right,
    Top,
    Bottom,
}

impl Half {
    pub fn marker(self) -> char {
        match self {
            Half::Left => 'L',
            Half::Right => 'R',
            Half::Top => 'T',
            Half::Bottom => 'B',
        }
    }

    fn from_marker(c: char) -> Option<Self> {
        match c {
            'L' => Some(Half::Left),
            'R' => Some(Half::Right),
            'T' => Some(Half::Top),
            'B' => Some(Half::Bottom),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub label: u32,
    pub half: Half,
}

/// A semistandard domino tableau: a domino tiling of a Young diagram whose
/// cell labels weakly increase along rows and strictly increase down columns
/// (two cells of the same vertical domino excepted).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominoTableau {
    shape: Partition,
    dominoes: Vec<Domino>,
}

impl DominoTableau {
    /// Validates tiling and order conditions.
    pub fn new(shape: Partition, mut dominoes: Vec<Domino>) -> Result<Self> {
        dominoes.sort_unstable_by_key(|d| (d.row, d.col));
        let t = Self { shape, dominoes };
        t.validate()?;
        Ok(t)
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts_unchecked(shape: Partition, mut dominoes: Vec<Domino>) -> Self {
        dominoes.sort_unstable_by_key(|d| (d.row, d.col));
        Self { shape, dominoes }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Dominoes sorted by anchor `(row, col)`.
    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    pub fn max_label(&self) -> u32 {
        self.dominoes.iter().map(|d| d.label).max().unwrap_or(0)
    }

    /// `weight[i]` is the number of dominoes labelled `i + 1`.
    pub fn weight(&self) -> Vec<u32> {
        let mut w = vec![0u32; self.max_label() as usize];
        for d in &self.dominoes {
            w[d.label as usize - 1] += 1;
        }
        w
    }

    /// Cell grid, row-major, 0-based; row `i` has `shape[i]` cells.
    pub fn cells(&self) -> Vec<Vec<Cell>> {
        let mut grid: Vec<Vec<Option<Cell>>> = self
            .shape
            .parts()
            .iter()
            .map(|&w| vec![None; w as usize])
            .collect();
        for d in &self.dominoes {
            let [(r1, c1), (r2, c2)] = d.cells();
            let (h1, h2) = match d.orientation {
                Orientation::Horizontal => (Half::Left, Half::Right),
                Orientation::Vertical => (Half::Top, Half::Bottom),
            };
            grid[r1 - 1][c1 - 1] = Some(Cell {
                label: d.label,
                half: h1,
            });
            grid[r2 - 1][c2 - 1] = Some(Cell {
                label: d.label,
                half: h2,
            });
        }
        grid.into_iter()
            .map(|row| row.into_iter().map(|c| c.expect("validated tiling")).collect())
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidTableau(msg));
        let rows = self.shape.len();
        let width = |r: usize| self.shape.parts()[r - 1] as usize;
        let mut owner: Vec<Vec<Option<usize>>> = self
            .shape
            .parts()
            .iter()
            .map(|&w| vec![None; w as usize])
            .collect();
        for (idx, d) in self.dominoes.iter().enumerate() {
            if d.label == 0 {
                return invalid(format!("domino at ({}, {}) has label 0", d.row, d.col));
            }
            for (r, c) in d.cells() {
                if r == 0 || c == 0 || r > rows || c > width(r) {
                    return invalid(format!(
                        "domino at ({}, {}) leaves the diagram",
                        d.row, d.col
                    ));
                }
                if owner[r - 1][c - 1].replace(idx).is_some() {
                    return invalid(format!("cell ({r}, {c}) covered twice"));
                }
            }
        }
        for (r, row) in owner.iter().enumerate() {
            if let Some(c) = row.iter().position(Option::is_none) {
                return invalid(format!("cell ({}, {}) not covered", r + 1, c + 1));
            }
        }
        let label = |r: usize, c: usize| self.dominoes[owner[r][c].unwrap()].label;
        for r in 0..rows {
            for c in 0..owner[r].len() {
                if c + 1 < owner[r].len() && label(r, c) > label(r, c + 1) {
                    return invalid(format!("row {} decreases at column {}", r + 1, c + 2));
                }
                if r + 1 < rows && c < owner[r + 1].len() && owner[r][c] != owner[r + 1][c] && label(r, c) >= label(r + 1, c)
                {
                    return invalid(format!(
                        "column {} does not strictly increase at row {}",
                        c + 1,
                        r + 2
                    ));
                }
            }
        }
        Ok(())
    }

    /// Key for the canonical order: the cell-label matrix first, the domino
    /// halves as tie-breaker.
    fn order_key(&self) -> (Vec<u32>, Vec<Half>) {
        let cells = self.cells();
        let labels = cells.iter().flatten().map(|c| c.label).collect();
        let halves = cells.iter().flatten().map(|c| c.half).collect();
        (labels, halves)
    }

    /// Text form: one line per diagram row (a row of length zero is an empty
    /// line), cells separated by a single space, each cell written as its
    /// label immediately followed by `L`, `R`, `T` or `B` for the left,
    /// right, top or bottom half of its domino. Every line ends with `\n`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in self.cells() {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                let _ = write!(s, "{}{}", cell.label, cell.half.marker());
            }
            s.push('\n');
        }
        s
    }

    /// Parses the format written by [`to_text`](Self::to_text).
    pub fn from_text(text: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::TableauParse { line, message };
        let mut grid: Vec<Vec<Cell>> = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                let Some(marker) = tok.chars().last() else {
                    continue;
                };
                let half = Half::from_marker(marker)
                    .ok_or_else(|| err(n + 1, format!("bad marker in {tok:?}")))?;
                let label = tok[..tok.len() - 1]
                    .parse::<u32>()
                    .map_err(|_| err(n + 1, format!("bad label in {tok:?}")))?;
                row.push(Cell { label, half });
            }
            grid.push(row);
        }
        let shape = Partition::new(grid.iter().map(|r| r.len() as u32).collect())
            .map_err(|e| err(0, e.to_string()))?;
        let mut dominoes = Vec::new();
        for (r, row) in grid.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let partner = match cell.half {
                    Half::Left => row.get(c + 1).map(|p| (p, Half::Right, Orientation::Horizontal)),
                    Half::Top => grid
                        .get(r + 1)
                        .and_then(|next| next.get(c))
                        .map(|p| (p, Half::Bottom, Orientation::Vertical)),
                    Half::Right | Half::Bottom => continue,
                };
                match partner {
                    Some((p, want, orientation)) if p.half == want && p.label == cell.label => {
                        dominoes.push(Domino {
                            row: r + 1,
                            col: c + 1,
                            orientation,
                            label: cell.label,
                        });
                    }
                    _ => {
                        return Err(err(
                            r + 1,
                            format!("unmatched domino half at column {}", c + 1),
                        ))
                    }
                }
            }
        }
        Self::new(shape, dominoes)
    }
}

impl Ord for DominoTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| self.order_key().cmp(&other.order_key()))
    }
}

impl PartialOrd for DominoTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
