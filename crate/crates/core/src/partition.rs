//! Integer partitions: parsing, containment and bounded enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition (weight 0) is represented by an empty part list.
/// Trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, checking that the parts are positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(&zero) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::MalformedPartition {
                text: join(&parts),
                reason: format!("part {zero} is not positive"),
            });
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition {
                text: join(&parts),
                reason: format!("{} is followed by the larger part {}", w[0], w[1]),
            });
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The transposed Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// True iff `self` fits inside `outer` row by row.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        contains(self, outer)
    }
}

/// True iff `inner` has no more rows than `outer` and `inner_i <= outer_i` for every row.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
}

fn join(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses `"5,5,3,2"`. Whitespace around tokens is ignored; the empty string is the
/// empty partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for token in trimmed.split(',') {
        let token = token.trim();
        let part: u32 = token.parse().map_err(|_| Error::MalformedPartition {
            text: text.to_string(),
            reason: format!("{token:?} is not a positive integer"),
        })?;
        parts.push(part);
    }
    Partition::new(parts).map_err(|e| match e {
        Error::MalformedPartition { reason, .. } => Error::MalformedPartition {
            text: text.to_string(),
            reason,
        },
        other => other,
    })
}

/// All partitions of `n`, lexicographically descending: `(n)` first, `(1,...,1)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every partition with weight in `1..=max_weight`, ordered by weight and then
/// lexicographically descending. The empty partition is not included.
pub fn enumerate_partitions(max_weight: u32) -> Vec<Partition> {
    (1..=max_weight).flat_map(partitions_of).collect()
}
