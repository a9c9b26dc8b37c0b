use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{binom, decimal, Count, Side};
use crate::error::{Error, Result};

/// Counts of overlined fillings for one `(n, k, side)`, keyed by `(j, l)`: `l` values on
/// the counted side are column-repeated and `j` more are overlined by choice.
///
/// Only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TableRepr", try_from = "TableRepr")]
pub struct CountTable {
    pub n: u32,
    pub k: u32,
    pub side: Side,
    entries: BTreeMap<(u32, u32), Count>,
}

impl CountTable {
    pub fn new(n: u32, k: u32, side: Side) -> Self {
        CountTable {
            n,
            k,
            side,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, j: u32, l: u32) -> Count {
        self.entries.get(&(j, l)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((j, l), count)`, ordered by `j` then `l`.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), Count)> + '_ {
        self.entries.iter().map(|(&key, &c)| (key, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&mut self, j: u32, l: u32, count: Count) -> Result<()> {
        if count == 0 {
            return Ok(());
        }
        let slot = self.entries.entry((j, l)).or_insert(0);
        *slot = slot
            .checked_add(count)
            .ok_or(Error::Overflow("count table entry"))?;
        Ok(())
    }

    /// Pointwise sum.
    pub fn merge(&mut self, other: &CountTable) -> Result<()> {
        for ((j, l), c) in other.entries() {
            self.add(j, l, c)?;
        }
        Ok(())
    }
}

/// `sum over (j, l) of (-1)^(j + m - 1 - l) C(j, m - 1 - l) T(j, l)`.
///
/// Entries with `l > m - 1` contribute nothing and are skipped.
pub fn alternating_sum(table: &CountTable, m: u32) -> Result<i128> {
    assert!(m >= 1, "rank m starts at 1");
    let mut total: i128 = 0;
    for ((j, l), count) in table.entries() {
        let Some(r) = (m - 1).checked_sub(l) else {
            continue;
        };
        let term = binom(j.into(), r.into())?
            .checked_mul(count)
            .and_then(|t| i128::try_from(t).ok())
            .ok_or(Error::Overflow("alternating sum"))?;
        total = if (j + r).is_multiple_of(2) {
            total.checked_add(term)
        } else {
            total.checked_sub(term)
        }
        .ok_or(Error::Overflow("alternating sum"))?;
    }
    Ok(total)
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    j: u32,
    l: u32,
    #[serde(with = "decimal")]
    count: Count,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    n: u32,
    k: u32,
    side: Side,
    entries: Vec<EntryRepr>,
}

impl From<CountTable> for TableRepr {
    fn from(t: CountTable) -> Self {
        TableRepr {
            n: t.n,
            k: t.k,
            side: t.side,
            entries: t
                .entries
                .into_iter()
                .map(|((j, l), count)| EntryRepr { j, l, count })
                .collect(),
        }
    }
}

impl TryFrom<TableRepr> for CountTable {
    type Error = String;

    fn try_from(r: TableRepr) -> std::result::Result<Self, String> {
        let mut table = CountTable::new(r.n, r.k, r.side);
        for e in r.entries {
            if table.entries.contains_key(&(e.j, e.l)) {
                return Err(format!("duplicate entry ({}, {})", e.j, e.l));
            }
            table.add(e.j, e.l, e.count).map_err(|e| e.to_string())?;
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape_is_stable() {
        let mut t = CountTable::new(4, 1, Side::Above);
        t.add(0, 0, 5).unwrap();
        t.add(1, 0, 7).unwrap();
        t.add(0, 1, 2).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"n":4,"k":1,"side":"above","entries":[{"j":0,"l":0,"count":"5"},{"j":0,"l":1,"count":"2"},{"j":1,"l":0,"count":"7"}]}"#
        );
        let back: CountTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn zero_entries_are_not_stored() {
        let mut t = CountTable::new(2, 1, Side::Below);
        t.add(3, 0, 0).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.get(3, 0), 0);
    }

    #[test]
    fn alternating_sum_single_entry() {
        let mut t = CountTable::new(2, 1, Side::Above);
        t.add(0, 0, 2).unwrap();
        assert_eq!(alternating_sum(&t, 1).unwrap(), 2);
        assert_eq!(alternating_sum(&t, 2).unwrap(), 0);
    }

    #[test]
    fn merge_overflow_is_reported() {
        let mut a = CountTable::new(1, 1, Side::Above);
        a.add(0, 0, Count::MAX).unwrap();
        let mut b = CountTable::new(1, 1, Side::Above);
        b.add(0, 0, 1).unwrap();
        assert_eq!(a.merge(&b), Err(Error::Overflow("count table entry")));
    }
}
