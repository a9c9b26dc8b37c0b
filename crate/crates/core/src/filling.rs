//! Skew plane partitions: fillings of a skew shape with positive integers that
//! decrease weakly along rows and down columns.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shape::{Cell, SkewShape};

/// A skew plane partition. `values[i]` fills `shape.cells()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: SkewShape,
    values: Vec<u32>,
}

impl Filling {
    /// Validates arity, positivity, and weak decrease along rows and columns.
    pub fn new(shape: SkewShape, values: Vec<u32>) -> Result<Self> {
        if values.len() != shape.cell_count() {
            return Err(Error::MalformedFilling(format!(
                "{} values for {} cells",
                values.len(),
                shape.cell_count()
            )));
        }
        if let Some(i) = values.iter().position(|&v| v == 0) {
            return Err(Error::NonPositiveValue {
                row: shape.cells()[i].row as usize,
                value: "0".into(),
            });
        }
        check_monotone(&shape, &values)?;
        Ok(Filling { shape, values })
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, values: Vec<u32>) -> Self {
        debug_assert!(check_monotone(&shape, &values).is_ok());
        Filling { shape, values }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn weight(&self) -> u32 {
        self.values.iter().sum()
    }

    pub fn value_at(&self, row: u32, col: u32) -> Option<u32> {
        self.shape.index_of(row, col).map(|i| self.values[i])
    }

    /// Cells paired with their values, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.shape.cells().iter().copied().zip(self.values.iter().copied())
    }

    /// Distinct values, ascending.
    pub fn distinct_values(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.values.iter().copied().collect();
        set.into_iter().collect()
    }

    /// The cell at `index` is the rightmost occurrence of its value in its row.
    pub fn is_row_last(&self, index: usize) -> bool {
        let cell = self.shape.cells()[index];
        self.value_at(cell.row, cell.col + 1) != Some(self.values[index])
    }

    /// The cell at `index` is the topmost occurrence of its value in its column.
    pub fn is_column_topmost(&self, index: usize) -> bool {
        let cell = self.shape.cells()[index];
        cell.row == 1 || self.value_at(cell.row - 1, cell.col) != Some(self.values[index])
    }

    pub fn is_square_free(&self) -> bool {
        is_square_free_grid(&self.shape, &self.values)
    }

    /// Values repeated within some column.
    pub fn forced_values(&self) -> BTreeSet<u32> {
        forced_values_grid(&self.shape, &self.values)
    }

    pub fn profile(&self) -> FillingProfile {
        FillingProfile::of(&self.shape, &self.values)
    }

    /// Statistics of the values on either side of `k`.
    pub fn stats(&self, k: u32) -> Result<ValueStats> {
        if !self.is_square_free() {
            return Err(Error::NotSquareFree);
        }
        Ok(self.profile().stats(k))
    }

    /// The transposed filling on the conjugate shape.
    pub fn conjugate(&self) -> Filling {
        let shape = self.shape.conjugate();
        let values = shape
            .cells()
            .iter()
            .map(|c| {
                self.value_at(c.col, c.row)
                    .expect("transposed cell lies in the original shape")
            })
            .collect();
        Filling::from_parts_unchecked(shape, values)
    }
}

pub fn conjugate_filling(filling: &Filling) -> Filling {
    filling.conjugate()
}

pub fn is_square_free(filling: &Filling) -> bool {
    filling.is_square_free()
}

pub fn forced_values(filling: &Filling) -> BTreeSet<u32> {
    filling.forced_values()
}

pub fn stats(filling: &Filling, k: u32) -> Result<ValueStats> {
    filling.stats(k)
}

fn check_monotone(shape: &SkewShape, values: &[u32]) -> Result<()> {
    for (i, cell) in shape.cells().iter().enumerate() {
        let v = values[i];
        if let Some(left) = shape.index_of(cell.row, cell.col.wrapping_sub(1)) {
            if values[left] < v {
                return Err(Error::MonotonicityViolation {
                    from: format!("{} at {}", values[left], shape.cells()[left]),
                    to: format!("{v} at {cell}"),
                });
            }
        }
        if let Some(up) = shape.index_of(cell.row.wrapping_sub(1), cell.col) {
            if values[up] < v {
                return Err(Error::MonotonicityViolation {
                    from: format!("{} at {}", values[up], shape.cells()[up]),
                    to: format!("{v} at {cell}"),
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn is_square_free_grid(shape: &SkewShape, values: &[u32]) -> bool {
    shape.cells().iter().enumerate().all(|(i, c)| {
        let v = values[i];
        let same = |r: u32, col: u32| shape.index_of(r, col).map(|j| values[j]) == Some(v);
        !(same(c.row, c.col + 1) && same(c.row + 1, c.col) && same(c.row + 1, c.col + 1))
    })
}

pub(crate) fn forced_values_grid(shape: &SkewShape, values: &[u32]) -> BTreeSet<u32> {
    shape
        .cells()
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            shape
                .index_of(c.row.wrapping_sub(1), c.col)
                .is_some_and(|up| values[up] == values[*i])
        })
        .map(|(i, _)| values[i])
        .collect()
}

/// Per-filling data reused for every pivot: distinct values and the column-repeated
/// (forced) values, both ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillingProfile {
    pub distinct: Vec<u32>,
    pub forced: Vec<u32>,
}

impl FillingProfile {
    pub fn of(shape: &SkewShape, values: &[u32]) -> Self {
        let distinct: BTreeSet<u32> = values.iter().copied().collect();
        FillingProfile {
            distinct: distinct.into_iter().collect(),
            forced: forced_values_grid(shape, values).into_iter().collect(),
        }
    }

    pub fn stats(&self, k: u32) -> ValueStats {
        let below = |xs: &[u32]| xs.iter().filter(|&&v| v < k).count() as u32;
        let above = |xs: &[u32]| xs.iter().filter(|&&v| v > k).count() as u32;
        let l_above = above(&self.forced);
        let l_below = below(&self.forced);
        ValueStats {
            pivot: k,
            present: self.distinct.binary_search(&k).is_ok(),
            d_above: above(&self.distinct),
            l_above,
            clean_below: l_below == 0,
            d_below: below(&self.distinct),
            l_below,
            clean_above: l_above == 0,
        }
    }
}

/// Value statistics around a pivot `k`.
///
/// `d_*` counts distinct values on a side of the pivot and `l_*` counts those that are
/// repeated within a column. `clean_below` holds when no column-repeated value is
/// smaller than the pivot; `clean_above` mirrors it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ValueStats {
    pub pivot: u32,
    pub present: bool,
    pub d_above: u32,
    pub l_above: u32,
    pub clean_below: bool,
    pub d_below: u32,
    pub l_below: u32,
    pub clean_above: bool,
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, range) in self.shape.row_ranges().enumerate() {
            if r > 0 {
                f.write_str(";")?;
            }
            for (i, idx) in range.enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.values[idx])?;
            }
        }
        Ok(())
    }
}

/// Splits `"7,3,1;3,3,1;4,2;8,1"` into per-cell tokens, checking row arities.
pub(crate) fn split_rows<'a>(shape: &SkewShape, rows_text: &'a str) -> Result<Vec<&'a str>> {
    let rows: Vec<&str> = rows_text.split(';').collect();
    let expected: Vec<usize> = shape.row_ranges().map(|r| r.len()).collect();
    let mut tokens = Vec::with_capacity(shape.cell_count());
    for r in 0..rows.len().max(expected.len()) {
        let want = expected.get(r).copied().unwrap_or(0);
        let row = rows.get(r).map(|s| s.trim()).unwrap_or("");
        let found: Vec<&str> = if row.is_empty() {
            Vec::new()
        } else {
            row.split(',').map(str::trim).collect()
        };
        if found.len() != want || r >= rows.len() || r >= expected.len() {
            return Err(Error::ArityMismatch {
                row: r + 1,
                expected: want,
                found: found.len(),
            });
        }
        tokens.extend(found);
    }
    Ok(tokens)
}

pub(crate) fn parse_value(token: &str, row: usize) -> Result<u32> {
    match token.parse::<i64>() {
        Ok(v) if v <= 0 => Err(Error::NonPositiveValue {
            row,
            value: token.to_string(),
        }),
        Ok(v) => u32::try_from(v)
            .map_err(|_| Error::MalformedFilling(format!("value {token} is too large"))),
        Err(_) => Err(Error::MalformedFilling(format!(
            "{token:?} in row {row} is not an integer"
        ))),
    }
}

/// Parses rows separated by `;`, values by `,`, left to right, one row per shape row.
pub fn parse_filling(shape: &SkewShape, rows_text: &str) -> Result<Filling> {
    let tokens = split_rows(shape, rows_text)?;
    let values = tokens
        .iter()
        .zip(shape.cells())
        .map(|(t, c)| parse_value(t, c.row as usize))
        .collect::<Result<Vec<_>>>()?;
    Filling::new(shape.clone(), values)
}

/// Calls `visit` with the value vector of every filling of `shape` with total `weight`.
///
/// Depth-first over cells in row-major order with candidate values descending. Each value
/// is bounded by its left and upper neighbours and by what the remaining cells (each
/// needing at least 1) leave over.
pub fn for_each_filling<F: FnMut(&[u32])>(shape: &SkewShape, weight: u32, mut visit: F) {
    let cells = shape.cells();
    let n = cells.len();
    if n == 0 || (weight as usize) < n {
        return;
    }
    let left: Vec<Option<usize>> = cells
        .iter()
        .map(|c| shape.index_of(c.row, c.col.wrapping_sub(1)))
        .collect();
    let up: Vec<Option<usize>> = cells
        .iter()
        .map(|c| shape.index_of(c.row.wrapping_sub(1), c.col))
        .collect();
    let mut values = vec![0u32; n];
    descend(0, weight, &left, &up, &mut values, &mut visit);
}

fn descend<F: FnMut(&[u32])>(
    pos: usize,
    remaining: u32,
    left: &[Option<usize>],
    up: &[Option<usize>],
    values: &mut [u32],
    visit: &mut F,
) {
    let cells_left = (values.len() - pos) as u32;
    if remaining < cells_left {
        return;
    }
    let mut hi = remaining - (cells_left - 1);
    if let Some(l) = left[pos] {
        hi = hi.min(values[l]);
    }
    if let Some(u) = up[pos] {
        hi = hi.min(values[u]);
    }
    if cells_left == 1 {
        if remaining <= hi {
            values[pos] = remaining;
            visit(values);
        }
        return;
    }
    for v in (1..=hi).rev() {
        values[pos] = v;
        descend(pos + 1, remaining - v, left, up, values, visit);
    }
}

/// Every filling of `shape` with total `weight`, in depth-first order.
pub fn enumerate_fillings(shape: &SkewShape, weight: u32) -> Vec<Filling> {
    let mut out = Vec::new();
    for_each_filling(shape, weight, |values| {
        out.push(Filling::from_parts_unchecked(shape.clone(), values.to_vec()));
    });
    out
}
