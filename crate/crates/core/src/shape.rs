//! Skew shapes `outer/inner` as positioned cell grids.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{contains, enumerate_partitions, parse_partition, Partition};

/// A cell of a Ferrers diagram, 1-based. Orders row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }

    pub fn transpose(self) -> Cell {
        Cell {
            row: self.col,
            col: self.row,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The cells of `outer` that are not cells of `inner`.
///
/// Shapes are `(outer, inner)` pairs: `(2)/()` and `(3)/(1)` are different shapes even
/// though their cells are translates of each other.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    cells: Vec<Cell>,
    row_offsets: Vec<usize>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::NotContained {
                inner: format!("({inner})"),
                outer: format!("({outer})"),
            });
        }
        let mut cells = Vec::with_capacity((outer.weight() - inner.weight()) as usize);
        let mut row_offsets = Vec::with_capacity(outer.len());
        for (i, &width) in outer.parts().iter().enumerate() {
            row_offsets.push(cells.len());
            let row = i as u32 + 1;
            for col in inner.part(i) + 1..=width {
                cells.push(Cell { row, col });
            }
        }
        let shape = SkewShape {
            outer,
            inner,
            cells,
            row_offsets,
        };
        assert!(
            shape.columns_are_intervals(),
            "column of {shape} is not contiguous"
        );
        Ok(shape)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Cells in row-major order, columns ascending within a row.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column span `(first, last)` of a 1-based row, or `None` if the row is empty.
    pub fn row_span(&self, row: u32) -> Option<(u32, u32)> {
        let i = (row as usize).checked_sub(1)?;
        let hi = self.outer.part(i);
        let lo = self.inner.part(i) + 1;
        (lo <= hi).then_some((lo, hi))
    }

    /// Position of `(row, col)` in [`cells`](Self::cells), if the cell belongs to the shape.
    pub fn index_of(&self, row: u32, col: u32) -> Option<usize> {
        let (lo, hi) = self.row_span(row)?;
        if col < lo || col > hi {
            return None;
        }
        Some(self.row_offsets[row as usize - 1] + (col - lo) as usize)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.index_of(cell.row, cell.col).is_some()
    }

    /// Cell indices of each row, in row order (empty rows give empty ranges).
    pub fn row_ranges(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        (0..self.rows()).map(move |i| {
            let start = self.row_offsets[i];
            let end = self
                .row_offsets
                .get(i + 1)
                .copied()
                .unwrap_or(self.cells.len());
            start..end
        })
    }

    fn columns_are_intervals(&self) -> bool {
        let width = self.outer.part(0);
        (1..=width).all(|col| {
            let rows: Vec<u32> = self
                .cells
                .iter()
                .filter(|c| c.col == col)
                .map(|c| c.row)
                .collect();
            rows.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }

    /// The transposed shape `outer'/inner'`.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape::new(self.outer.conjugate(), self.inner.conjugate())
            .expect("conjugation preserves containment")
    }
}

pub fn conjugate_shape(shape: &SkewShape) -> SkewShape {
    shape.conjugate()
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_shape(s)
    }
}

/// Parses `"outer/inner"`; a missing `/inner` means the empty inner partition.
pub fn parse_shape(text: &str) -> Result<SkewShape> {
    let (outer, inner) = match text.split_once('/') {
        Some((o, i)) => (o, i),
        None => (text, ""),
    };
    SkewShape::new(parse_partition(outer)?, parse_partition(inner)?)
}

/// Every shape `outer/inner` with `|outer| <= max_outer_weight`, inner contained in outer,
/// and a cell count in `min_cells..=max_cells`.
///
/// Order: outer partitions by weight then lexicographically descending; for each outer,
/// the empty inner first and then the remaining inner partitions in the same order.
pub fn enumerate_skew_shapes(max_outer_weight: u32, min_cells: u32, max_cells: u32) -> Vec<SkewShape> {
    let min_cells = min_cells.max(1);
    let partitions = enumerate_partitions(max_outer_weight);
    let mut shapes = Vec::new();
    for outer in &partitions {
        let w = outer.weight();
        let inners = std::iter::once(Partition::empty())
            .chain(partitions.iter().take_while(|p| p.weight() < w).cloned());
        for inner in inners {
            let cells = w - inner.weight();
            if cells < min_cells || cells > max_cells || !contains(&inner, outer) {
                continue;
            }
            shapes.push(SkewShape::new(outer.clone(), inner).expect("containment checked"));
        }
    }
    shapes
}
