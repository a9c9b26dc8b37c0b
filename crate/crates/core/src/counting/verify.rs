use serde::Serialize;

use super::{alternating_sum, decimal, sweep_weight, Count, Side, Variant};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub n: u32,
    pub k: u32,
    pub m: u32,
    #[serde(with = "decimal")]
    pub lhs: Count,
    #[serde(with = "decimal")]
    pub rhs: i128,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Direct counts against alternating sums for every `n <= max_n`, `k <= n`, `m <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub side: Side,
    pub variant: Variant,
    pub max_n: u32,
    pub rows: Vec<VerifyRow>,
    pub mismatch_count: usize,
}

impl VerifyReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows.iter().filter(|r| !r.matches)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub workers: usize,
    /// Stop after the first mismatching row.
    pub fail_fast: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            workers: 1,
            fail_fast: false,
        }
    }
}

/// Checks `pg` (side above) or `ps` (side below) against the alternating sum of the
/// matching count table, row by row in `(n, k, m)` order.
pub fn verify(side: Side, max_n: u32, variant: Variant, opts: VerifyOptions) -> Result<VerifyReport> {
    let mut rows = Vec::new();
    'outer: for n in 1..=max_n {
        let sweep = sweep_weight(n, opts.workers)?;
        for k in 1..=n {
            let table = sweep.table(side, k);
            for m in 1..=n {
                let lhs = sweep.count(side, k, m, variant);
                let rhs = alternating_sum(&table, m)?;
                let matches = i128::try_from(lhs).is_ok_and(|l| l == rhs);
                rows.push(VerifyRow {
                    n,
                    k,
                    m,
                    lhs,
                    rhs,
                    matches,
                });
                if !matches && opts.fail_fast {
                    break 'outer;
                }
            }
        }
    }
    let mismatch_count = rows.iter().filter(|r| !r.matches).count();
    Ok(VerifyReport {
        side,
        variant,
        max_n,
        rows,
        mismatch_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restricted_identities_hold() {
        for side in [Side::Above, Side::Below] {
            let report = verify(side, 6, Variant::Restricted, VerifyOptions::default()).unwrap();
            assert_eq!(report.mismatch_count, 0, "{side}");
            assert_eq!(report.rows.len(), (1..=6).map(|n| n * n).sum::<usize>());
        }
    }

    #[test]
    fn literal_reading_has_a_gap() {
        let report = verify(Side::Above, 5, Variant::Literal, VerifyOptions::default()).unwrap();
        assert!(report.mismatch_count >= 1);
        let row = report
            .rows
            .iter()
            .find(|r| (r.n, r.k, r.m) == (5, 3, 1))
            .unwrap();
        assert!(!row.matches);
        assert!(row.lhs as i128 > row.rhs);
    }

    #[test]
    fn fail_fast_stops_at_first_mismatch() {
        let opts = VerifyOptions {
            workers: 1,
            fail_fast: true,
        };
        let report = verify(Side::Above, 5, Variant::Literal, opts).unwrap();
        assert_eq!(report.mismatch_count, 1);
        assert!(!report.rows.last().unwrap().matches);
    }

    #[test]
    fn report_serializes_counts_as_strings() {
        let report = verify(Side::Above, 1, Variant::Restricted, VerifyOptions::default()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"side":"above","variant":"restricted","max_n":1,"rows":[{"n":1,"k":1,"m":1,"lhs":"1","rhs":"1","match":true}],"mismatch_count":0}"#
        );
    }
}
