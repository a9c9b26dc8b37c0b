use std::collections::BTreeMap;

use proptest::prelude::*;
use skewplane_core::{
    binom, enumerate_fillings, enumerate_skew_shapes, lemma1_lhs, parse_filling, parse_shape,
    sweep_weight, table_oracles, Count, Filling, Partition, Side, SkewShape, Variant,
};

/// Largest number of distinct positive values summing to at most `n`.
fn max_distinct(n: u32) -> u32 {
    (0..).take_while(|d| d * (d + 1) / 2 <= n).last().unwrap()
}

fn square_free_fillings(n: u32) -> Vec<Filling> {
    enumerate_skew_shapes(n, 1, n)
        .iter()
        .flat_map(|s| enumerate_fillings(s, n))
        .filter(Filling::is_square_free)
        .collect()
}

/// Literal pg/ps counts straight from a list of fillings: (side, k, m) -> count.
fn literal_counts(fillings: &[Filling]) -> BTreeMap<(Side, u32, u32), Count> {
    let mut out = BTreeMap::new();
    for f in fillings {
        let distinct = f.distinct_values();
        for (pos, &k) in distinct.iter().enumerate() {
            let below = pos as u32;
            let above = (distinct.len() - pos - 1) as u32;
            *out.entry((Side::Above, k, above + 1)).or_insert(0) += 1;
            *out.entry((Side::Below, k, below + 1)).or_insert(0) += 1;
        }
    }
    out
}

#[test]
fn closed_form_tables_equal_explicit_enumeration() {
    for n in 1..=6 {
        let sweep = sweep_weight(n, 1).unwrap();
        for side in [Side::Above, Side::Below] {
            let oracle = table_oracles(n, side).unwrap();
            for k in 1..=n {
                assert_eq!(sweep.table(side, k), oracle[&k], "n={n} k={k} {side}");
            }
        }
    }
}

#[test]
fn variants_coincide_where_nothing_lies_on_the_other_side() {
    for n in 1..=6 {
        let sweep = sweep_weight(n, 1).unwrap();
        for m in 1..=n {
            assert_eq!(
                sweep.count(Side::Above, 1, m, Variant::Literal),
                sweep.count(Side::Above, 1, m, Variant::Restricted)
            );
            assert_eq!(
                sweep.count(Side::Below, n, m, Variant::Literal),
                sweep.count(Side::Below, n, m, Variant::Restricted)
            );
        }
    }
}

#[test]
fn literal_counts_are_conjugation_invariant() {
    for n in 1..=6 {
        let fillings = square_free_fillings(n);
        let conjugated: Vec<Filling> = fillings.iter().map(Filling::conjugate).collect();
        let direct = literal_counts(&fillings);
        assert_eq!(direct, literal_counts(&conjugated), "n={n}");

        let sweep = sweep_weight(n, 1).unwrap();
        for (&(side, k, m), &c) in &direct {
            assert_eq!(sweep.count(side, k, m, Variant::Literal), c);
        }
    }
}

#[test]
fn table_entries_vanish_beyond_representable_values() {
    for n in 1..=7 {
        let sweep = sweep_weight(n, 1).unwrap();
        for side in [Side::Above, Side::Below] {
            for k in 1..=n {
                for ((j, l), c) in sweep.table(side, k).entries() {
                    assert!(c > 0);
                    assert!(j + l < max_distinct(n), "n={n} k={k} ({j},{l})");
                }
            }
        }
    }
}

#[test]
fn sweeps_are_deterministic_across_worker_counts() {
    for n in [4, 6, 7] {
        let reference = sweep_weight(n, 1).unwrap();
        for workers in [2, 3, 8] {
            assert_eq!(sweep_weight(n, workers).unwrap(), reference);
        }
    }
}

fn partition_strategy(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn shape_strategy() -> impl Strategy<Value = SkewShape> {
    (partition_strategy(5, 4), partition_strategy(5, 4)).prop_filter_map(
        "inner must fit and leave cells",
        |(a, b)| {
            let s = SkewShape::new(a, b).ok()?;
            (s.cell_count() > 0).then_some(s)
        },
    )
}

proptest! {
    #[test]
    fn shape_text_round_trips(shape in shape_strategy()) {
        prop_assert_eq!(parse_shape(&shape.to_string()).unwrap(), shape.clone());
        prop_assert_eq!(shape.conjugate().conjugate(), shape);
    }

    #[test]
    fn filling_text_round_trips(shape in shape_strategy(), extra in 0u32..4, pick in any::<prop::sample::Index>()) {
        let weight = shape.cell_count() as u32 + extra;
        let all = enumerate_fillings(&shape, weight);
        prop_assume!(!all.is_empty());
        let f = &all[pick.index(all.len())];
        prop_assert_eq!(&parse_filling(&shape, &f.to_string()).unwrap(), f);
        let c = f.conjugate();
        prop_assert_eq!(c.is_square_free(), f.is_square_free());
        prop_assert_eq!(c.weight(), f.weight());
    }

    #[test]
    fn lemma_is_an_indicator(d in 0u32..40, r in 0u32..40) {
        prop_assert_eq!(lemma1_lhs(d, r).unwrap(), i128::from(d == r));
    }

    #[test]
    fn binomial_symmetry_and_rule(a in 0i64..90, b in 0i64..90) {
        prop_assume!(b <= a);
        prop_assert_eq!(binom(a, b).unwrap(), binom(a, a - b).unwrap());
        if a > 0 && b > 0 {
            prop_assert_eq!(
                binom(a, b).unwrap(),
                binom(a - 1, b - 1).unwrap() + binom(a - 1, b).unwrap()
            );
        }
    }
}
