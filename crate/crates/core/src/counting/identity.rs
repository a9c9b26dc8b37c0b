use serde::Serialize;

use super::Count;
use crate::error::{Error, Result};

/// `C(a, b)`, zero outside `0 <= b <= a`. Overflow is reported, never wrapped.
pub fn binom(a: i64, b: i64) -> Result<Count> {
    if a < 0 || b < 0 || b > a {
        return Ok(0);
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut acc: Count = 1;
    for i in 0..b {
        // acc * (a - i) is divisible by i + 1: it is (i + 1) * C(a, i + 1)
        acc = acc
            .checked_mul(a - i)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i + 1);
    }
    Ok(acc)
}

/// `sum_j (-1)^(j + r) C(j, r) C(d, j)` over `j = 0..=max(d, r)`.
pub fn lemma1_lhs(d: u32, r: u32) -> Result<i128> {
    let mut total: i128 = 0;
    for j in 0..=d.max(r) {
        let term = binom(j.into(), r.into())?
            .checked_mul(binom(d.into(), j.into())?)
            .and_then(|t| i128::try_from(t).ok())
            .ok_or(Error::Overflow("alternating binomial sum"))?;
        total = if (j + r).is_multiple_of(2) {
            total.checked_add(term)
        } else {
            total.checked_sub(term)
        }
        .ok_or(Error::Overflow("alternating binomial sum"))?;
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Row {
    pub d: u32,
    pub r: u32,
    pub value: i64,
    pub expected: i64,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    pub max: u32,
    pub rows: Vec<Lemma1Row>,
    pub mismatch_count: usize,
}

/// Evaluates [`lemma1_lhs`] for every `0 <= d, r <= max` against `[d == r]`.
pub fn verify_lemma1(max: u32) -> Result<Lemma1Report> {
    let mut rows = Vec::new();
    for d in 0..=max {
        for r in 0..=max {
            let value = lemma1_lhs(d, r)?;
            let expected = i64::from(d == r);
            rows.push(Lemma1Row {
                d,
                r,
                value: i64::try_from(value).map_err(|_| Error::Overflow("lemma report"))?,
                expected,
                matches: value == i128::from(expected),
            });
        }
    }
    let mismatch_count = rows.iter().filter(|r| !r.matches).count();
    Ok(Lemma1Report {
        max,
        rows,
        mismatch_count,
    })
}
