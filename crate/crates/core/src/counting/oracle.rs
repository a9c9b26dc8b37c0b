//! Count tables by explicit enumeration of overlined fillings.
//!
//! Every subset of cells of every filling is tested against the literal overline rules;
//! accepted overlinings are classified directly by their overlined values. Nothing here
//! uses the binomial closed form.

use std::collections::{BTreeMap, BTreeSet};

use super::{CountTable, Side};
use crate::error::Result;
use crate::filling::{enumerate_fillings, Filling};
use crate::marking::brute_force_overlinings;
use crate::shape::enumerate_skew_shapes;

/// Values occurring at least twice in one column, by a plain pairwise scan.
fn column_repeated(filling: &Filling) -> BTreeSet<u32> {
    let entries: Vec<_> = filling.entries().collect();
    let mut out = BTreeSet::new();
    for (a, &(ca, va)) in entries.iter().enumerate() {
        for &(cb, vb) in &entries[a + 1..] {
            if ca.col == cb.col && va == vb {
                out.insert(va);
            }
        }
    }
    out
}

/// Tables for every pivot `1..=n` on one side.
pub fn table_oracles(n: u32, side: Side) -> Result<BTreeMap<u32, CountTable>> {
    let mut tables: BTreeMap<u32, CountTable> =
        (1..=n).map(|k| (k, CountTable::new(n, k, side))).collect();
    for shape in enumerate_skew_shapes(n, 1, n) {
        for filling in enumerate_fillings(&shape, n) {
            let repeated = column_repeated(&filling);
            for overlined in brute_force_overlinings(&filling, true) {
                let values: BTreeSet<u32> = filling
                    .entries()
                    .filter(|(c, _)| overlined.contains(c))
                    .map(|(_, v)| v)
                    .collect();
                for (&k, table) in tables.iter_mut() {
                    if !values.contains(&k) {
                        continue;
                    }
                    let beyond = |v: u32| match side {
                        Side::Above => v > k,
                        Side::Below => v < k,
                    };
                    if !values.iter().all(|&v| v == k || beyond(v)) {
                        continue;
                    }
                    let others = values.iter().filter(|&&v| beyond(v)).count() as u32;
                    let l = repeated.iter().filter(|&&v| beyond(v)).count() as u32;
                    let j = others
                        .checked_sub(l)
                        .expect("column-repeated values are always overlined");
                    table.add(j, l, 1)?;
                }
            }
        }
    }
    Ok(tables)
}

/// The `(n, k, side)` count table, computed by explicit enumeration.
pub fn table_oracle(n: u32, k: u32, side: Side) -> Result<CountTable> {
    let mut all = table_oracles(n, side)?;
    Ok(all.remove(&k).unwrap_or_else(|| CountTable::new(n, k, side)))
}
