//! The counting functions `pg`, `ps`, their overlined companions tabulated by `(j, l)`,
//! and the alternating sums that relate them.

mod identity;
mod oracle;
mod sweep;
mod table;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use identity::{binom, lemma1_lhs, verify_lemma1, Lemma1Report, Lemma1Row};
pub use oracle::{table_oracle, table_oracles};
pub use sweep::{
    pg, pg_table, ps, ps_table, rhs_theorem1, rhs_theorem2, sweep_weight, WeightSweep,
};
pub use table::{alternating_sum, CountTable};
pub use verify::{verify, VerifyOptions, VerifyReport, VerifyRow};

/// Exact count of combinatorial objects.
pub type Count = u128;

/// Which side of the pivot the other overlined (or counted) values lie on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Values larger than the pivot: `pg` and `PG`.
    Above,
    /// Values smaller than the pivot: `ps` and `PS`.
    Below,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Above => "above",
            Side::Below => "below",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Reading of `pg`/`ps`.
///
/// `Literal` counts every square-free filling with the right rank of the pivot.
/// `Restricted` additionally drops fillings with a column-repeated value on the opposite
/// side of the pivot (below it for `pg`, above it for `ps`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Restricted,
    Literal,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Restricted => "restricted",
            Variant::Literal => "literal",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "restricted" => Ok(Variant::Restricted),
            "literal" => Ok(Variant::Literal),
            other => Err(format!("unknown variant {other:?}")),
        }
    }
}

pub(crate) mod decimal {
    //! Counts travel as decimal strings so consumers never lose precision.
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer, T: ToString>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D, T>(d: D) -> Result<T, D::Error>
    where
        D: Deserializer<'de>,
        T: std::str::FromStr,
        T::Err: std::fmt::Display,
    {
        let text = String::deserialize(d)?;
        text.parse().map_err(D::Error::custom)
    }
}
