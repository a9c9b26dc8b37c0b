//! One enumeration pass per weight `n` feeds every pivot, side, rank and table at once.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{alternating_sum, binom, Count, CountTable, Side, Variant};
use crate::error::{Error, Result};
use crate::filling::{for_each_filling, is_square_free_grid, FillingProfile};
use crate::shape::{enumerate_skew_shapes, SkewShape};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct SideTotals {
    /// rank m -> square-free fillings where the pivot has rank m on this side
    literal: BTreeMap<u32, Count>,
    /// same, restricted to fillings with no column-repeat on the other side
    restricted: BTreeMap<u32, Count>,
    /// (j, l) -> number of value-model liftings
    table: BTreeMap<(u32, u32), Count>,
}

fn bump<K: Ord>(map: &mut BTreeMap<K, Count>, key: K, by: Count) -> Result<()> {
    let slot = map.entry(key).or_insert(0);
    *slot = slot.checked_add(by).ok_or(Error::Overflow("sweep total"))?;
    Ok(())
}

impl SideTotals {
    fn record(&mut self, distinct_beyond: u32, forced_beyond: u32, clean: bool) -> Result<()> {
        let m = distinct_beyond + 1;
        bump(&mut self.literal, m, 1)?;
        if !clean {
            return Ok(());
        }
        bump(&mut self.restricted, m, 1)?;
        let free = distinct_beyond - forced_beyond;
        for j in 0..=free {
            bump(&mut self.table, (j, forced_beyond), binom(free.into(), j.into())?)?;
        }
        Ok(())
    }

    fn merge(&mut self, other: &SideTotals) -> Result<()> {
        for (&m, &c) in &other.literal {
            bump(&mut self.literal, m, c)?;
        }
        for (&m, &c) in &other.restricted {
            bump(&mut self.restricted, m, c)?;
        }
        for (&key, &c) in &other.table {
            bump(&mut self.table, key, c)?;
        }
        Ok(())
    }
}

/// Totals over every square-free filling of weight `n` on shapes with `|outer| <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSweep {
    n: u32,
    /// pivot k -> (above, below)
    pivots: BTreeMap<u32, (SideTotals, SideTotals)>,
}

impl WeightSweep {
    fn empty(n: u32) -> Self {
        WeightSweep {
            n,
            pivots: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn side(&self, side: Side, k: u32) -> Option<&SideTotals> {
        self.pivots.get(&k).map(|(above, below)| match side {
            Side::Above => above,
            Side::Below => below,
        })
    }

    /// `pg` (side above) or `ps` (side below) at pivot `k` and rank `m`.
    pub fn count(&self, side: Side, k: u32, m: u32, variant: Variant) -> Count {
        self.side(side, k)
            .and_then(|t| match variant {
                Variant::Literal => t.literal.get(&m),
                Variant::Restricted => t.restricted.get(&m),
            })
            .copied()
            .unwrap_or(0)
    }

    pub fn table(&self, side: Side, k: u32) -> CountTable {
        let mut table = CountTable::new(self.n, k, side);
        if let Some(t) = self.side(side, k) {
            for (&(j, l), &c) in &t.table {
                table.add(j, l, c).expect("totals were overflow-checked");
            }
        }
        table
    }

    fn record(&mut self, profile: &FillingProfile) -> Result<()> {
        for &k in &profile.distinct {
            let s = profile.stats(k);
            let (above, below) = self.pivots.entry(k).or_default();
            above.record(s.d_above, s.l_above, s.clean_below)?;
            below.record(s.d_below, s.l_below, s.clean_above)?;
        }
        Ok(())
    }

    /// Pointwise addition; associative and commutative.
    pub fn merge(&mut self, other: &WeightSweep) -> Result<()> {
        assert_eq!(self.n, other.n, "merging sweeps of different weights");
        for (&k, (a, b)) in &other.pivots {
            let (sa, sb) = self.pivots.entry(k).or_default();
            sa.merge(a)?;
            sb.merge(b)?;
        }
        Ok(())
    }
}

fn sweep_shape(shape: &SkewShape, n: u32) -> Result<WeightSweep> {
    let mut out = WeightSweep::empty(n);
    let mut failure = None;
    for_each_filling(shape, n, |values| {
        if failure.is_some() || !is_square_free_grid(shape, values) {
            return;
        }
        if let Err(e) = out.record(&FillingProfile::of(shape, values)) {
            failure = Some(e);
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Runs the weight-`n` sweep, fanning shapes out to `workers` threads.
///
/// Per-shape partials are merged in shape order; the result does not depend on
/// `workers`.
pub fn sweep_weight(n: u32, workers: usize) -> Result<WeightSweep> {
    let shapes = enumerate_skew_shapes(n, 1, n);
    let partials: Vec<Result<WeightSweep>> = if workers <= 1 {
        shapes.iter().map(|s| sweep_shape(s, n)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::WorkerPool(e.to_string()))?;
        pool.install(|| shapes.par_iter().map(|s| sweep_shape(s, n)).collect())
    };
    let mut total = WeightSweep::empty(n);
    for partial in partials {
        total.merge(&partial?)?;
    }
    Ok(total)
}

/// Square-free fillings of weight `n` (any shape with `|outer| <= n`) in which `k` is
/// the `m`-th greatest distinct value.
pub fn pg(n: u32, k: u32, m: u32, variant: Variant) -> Result<Count> {
    Ok(sweep_weight(n, 1)?.count(Side::Above, k, m, variant))
}

/// Square-free fillings of weight `n` in which `k` is the `m`-th smallest distinct value.
pub fn ps(n: u32, k: u32, m: u32, variant: Variant) -> Result<Count> {
    Ok(sweep_weight(n, 1)?.count(Side::Below, k, m, variant))
}

/// Overlined fillings with `k` overlined and the other overlined values above `k`,
/// by `(j, l)`.
pub fn pg_table(n: u32, k: u32) -> Result<CountTable> {
    Ok(sweep_weight(n, 1)?.table(Side::Above, k))
}

pub fn ps_table(n: u32, k: u32) -> Result<CountTable> {
    Ok(sweep_weight(n, 1)?.table(Side::Below, k))
}

/// Right-hand side of the `pg` identity: the alternating sum over [`pg_table`].
pub fn rhs_theorem1(n: u32, k: u32, m: u32) -> Result<i128> {
    alternating_sum(&pg_table(n, k)?, m)
}

pub fn rhs_theorem2(n: u32, k: u32, m: u32) -> Result<i128> {
    alternating_sum(&ps_table(n, k)?, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pg_examples() {
        for variant in [Variant::Restricted, Variant::Literal] {
            assert_eq!(pg(4, 1, 2, variant).unwrap(), 27);
            assert_eq!(pg(1, 1, 1, variant).unwrap(), 1);
            assert_eq!(pg(2, 2, 1, variant).unwrap(), 3);
            assert_eq!(pg(2, 1, 1, variant).unwrap(), 2);
        }
    }

    #[test]
    fn ps_examples() {
        for variant in [Variant::Restricted, Variant::Literal] {
            assert_eq!(ps(2, 1, 1, variant).unwrap(), 2);
            assert_eq!(ps(2, 2, 1, variant).unwrap(), 3);
        }
        assert_eq!(ps(3, 2, 2, Variant::Restricted).unwrap(), 6);
    }

    #[test]
    fn table_examples() {
        let t = pg_table(2, 1).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 2)]);
        let t = pg_table(2, 2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 3)]);
        let t = ps_table(2, 1).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 2)]);
        let t = ps_table(2, 2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 3)]);

        // Weight 3, pivot 2: the fillings containing 2 are [2,1] on the five
        // two-cell shapes plus [1;2] on (2,1)/(1) -- six in all, none with a
        // column-repeat, each with the single unforced value 1 below 2.
        let t = ps_table(3, 2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 6), ((1, 0), 6)]);
        let sum: Count = t.entries().filter(|((_, l), _)| *l == 0).map(|(_, c)| c).sum();
        assert_eq!(sum, 2 * ps(3, 2, 2, Variant::Restricted).unwrap());
    }

    #[test]
    fn identity_examples() {
        assert_eq!(rhs_theorem1(2, 1, 1).unwrap(), 2);
        assert_eq!(rhs_theorem1(4, 1, 2).unwrap(), 27);
        assert_eq!(rhs_theorem1(2, 2, 1).unwrap(), 3);
        assert_eq!(rhs_theorem2(2, 1, 1).unwrap(), 2);
        assert_eq!(rhs_theorem2(3, 2, 2).unwrap(), 6);
        assert_eq!(rhs_theorem2(2, 2, 1).unwrap(), 3);
    }

    #[test]
    fn worker_count_does_not_change_totals() {
        for n in 1..=6 {
            let one = sweep_weight(n, 1).unwrap();
            let many = sweep_weight(n, 4).unwrap();
            assert_eq!(one, many);
        }
    }
}
