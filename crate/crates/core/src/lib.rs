//! Exact enumeration of skew plane partitions and skew plane overpartitions.
//!
//! A skew plane partition fills the cells of a skew shape `outer/inner` with positive
//! integers that decrease weakly along rows and down columns. Overlining some entries
//! under row and column rules gives a skew plane overpartition. This crate enumerates
//! both, counts fillings by the rank of a chosen value (`pg`, `ps`), tabulates
//! overlined fillings (`PG`, `PS`), and checks the alternating-sum identities that
//! connect the two by exhaustive enumeration.
//!
//! ```
//! use skewplane_core::{pg, Variant};
//! assert_eq!(pg(4, 1, 2, Variant::Restricted).unwrap(), 27);
//! ```

pub mod counting;
pub mod error;
pub mod filling;
pub mod marking;
pub mod partition;
pub mod shape;

pub use counting::{
    alternating_sum, binom, lemma1_lhs, pg, pg_table, ps, ps_table, rhs_theorem1,
    rhs_theorem2, sweep_weight, table_oracle, table_oracles, verify, verify_lemma1, Count,
    CountTable, Lemma1Report, Side, Variant, VerifyOptions, VerifyReport, VerifyRow,
    WeightSweep,
};
pub use error::{Error, Result};
pub use filling::{
    conjugate_filling, enumerate_fillings, for_each_filling, forced_values, is_square_free,
    parse_filling, stats, Filling, FillingProfile, ValueStats,
};
pub use marking::{
    brute_force_overlinings, count_liftings_above, count_liftings_below, enumerate_liftings,
    marked_cells, parse_lifting, satisfies_conditions, shadow, valid_markings, verify_models,
    Lifting, LiftingCount, Marking, MarkingModel, ModelReport, ZeroReason,
};
pub use partition::{contains, enumerate_partitions, parse_partition, partitions_of, Partition};
pub use shape::{conjugate_shape, enumerate_skew_shapes, parse_shape, Cell, SkewShape};

/// Bumped whenever a change could alter any computed count.
pub const ENGINE_VERSION: &str = concat!("skewplane-", env!("CARGO_PKG_VERSION"), "+1");
