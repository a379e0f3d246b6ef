//! Classical Littlewood-Richardson rule.
//!
//! `c^nu_{lambda mu}` counts fillings of the skew shape `nu/lambda` with
//! content `mu` that are semistandard (rows weakly increase, columns strictly
//! increase) and whose reverse reading word is a lattice word.
//!
//! Reading convention: within a row right to left, rows top to bottom. The
//! search visits cells in exactly that order, so the lattice condition can be
//! checked on every prefix as it is built.

use crate::partition::Partition;

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    outer: Vec<u32>,
    inner: Vec<u32>,
}

impl SkewShape {
    /// Returns `None` when `inner` does not fit inside `outer`.
    pub fn new(outer: &Partition, inner: &Partition) -> Option<Self> {
        if inner.num_nonzero() > outer.num_nonzero() || !outer.contains(inner) {
            return None;
        }
        let rows = outer.num_nonzero();
        let outer_parts = outer.parts()[..rows].to_vec();
        let inner_parts = (0..rows).map(|i| inner.part(i)).collect();
        Some(Self {
            outer: outer_parts,
            inner: inner_parts,
        })
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn size(&self) -> u64 {
        self.outer
            .iter()
            .zip(&self.inner)
            .map(|(&o, &i)| u64::from(o - i))
            .sum()
    }

    /// Cells in reading order: rows top to bottom, right to left in each row.
    /// Coordinates are 0-based `(row, column)`.
    fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.size() as usize);
        for r in 0..self.rows() {
            for c in (self.inner[r] as usize..self.outer[r] as usize).rev() {
                cells.push((r, c));
            }
        }
        cells
    }

    fn in_skew(&self, r: usize, c: usize) -> bool {
        r < self.rows() && (self.inner[r] as usize) <= c && c < self.outer[r] as usize
    }
}

/// A Littlewood-Richardson filling, stored row by row over the skew cells
/// (left to right within each row).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrFilling {
    pub rows: Vec<Vec<u32>>,
}

struct Search<'a> {
    shape: &'a SkewShape,
    cells: Vec<(usize, usize)>,
    content: Vec<u32>,
    grid: Vec<Vec<u32>>,
    counts: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(shape: &'a SkewShape, content: &Partition) -> Self {
        let content: Vec<u32> = content.parts()[..content.num_nonzero()].to_vec();
        let width = shape.outer.first().copied().unwrap_or(0) as usize;
        Self {
            shape,
            cells: shape.reading_cells(),
            counts: vec![0; content.len()],
            content,
            grid: vec![vec![0; width]; shape.rows()],
        }
    }

    /// Depth-first search. `visit` returns `false` to stop the search.
    fn run(&mut self, idx: usize, visit: &mut dyn FnMut(&Self) -> bool) -> bool {
        if idx == self.cells.len() {
            return visit(self);
        }
        let (r, c) = self.cells[idx];
        let hi = if self.shape.in_skew(r, c + 1) {
            self.grid[r][c + 1]
        } else {
            self.content.len() as u32
        };
        let lo = if r > 0 && self.shape.in_skew(r - 1, c) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        for label in lo..=hi {
            let k = (label - 1) as usize;
            if self.counts[k] == self.content[k] {
                continue;
            }
            if k > 0 && self.counts[k - 1] <= self.counts[k] {
                continue;
            }
            self.counts[k] += 1;
            self.grid[r][c] = label;
            let keep_going = self.run(idx + 1, visit);
            self.counts[k] -= 1;
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn filling(&self) -> LrFilling {
        let rows = (0..self.shape.rows())
            .map(|r| {
                (self.shape.inner[r] as usize..self.shape.outer[r] as usize)
                    .map(|c| self.grid[r][c])
                    .collect()
            })
            .collect();
        LrFilling { rows }
    }
}

fn prepare(lambda: &Partition, mu: &Partition, nu: &Partition) -> Option<SkewShape> {
    if nu.weight() != lambda.weight() + mu.weight() {
        return None;
    }
    SkewShape::new(nu, lambda)
}

/// Number of LR fillings of `nu/lambda` with content `mu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let Some(shape) = prepare(lambda, mu, nu) else {
        return 0;
    };
    let mut count = 0u64;
    Search::new(&shape, mu).run(0, &mut |_| {
        count += 1;
        true
    });
    count
}

/// `lr_coefficient(..) > 0`, stopping at the first filling found.
pub fn lr_nonzero(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    let Some(shape) = prepare(lambda, mu, nu) else {
        return false;
    };
    let mut found = false;
    Search::new(&shape, mu).run(0, &mut |_| {
        found = true;
        false
    });
    found
}

/// All LR fillings of `nu/lambda` with content `mu`.
pub fn lr_fillings(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<LrFilling> {
    let Some(shape) = prepare(lambda, mu, nu) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    Search::new(&shape, mu).run(0, &mut |s| {
        out.push(s.filling());
        true
    });
    out
}
