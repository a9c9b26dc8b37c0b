//! Overlined liftings of square-free fillings.
//!
//! A lifting overlines some cells of a filling. Three readings of the overline rules are
//! supported, see [`MarkingModel`]. The counting functions only ever use
//! [`MarkingModel::Value`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::counting::binom;
use crate::error::{Error, Result};
use crate::filling::{for_each_filling, parse_value, split_rows, Filling};
use crate::shape::{enumerate_skew_shapes, Cell, SkewShape};

/// How overlines may be placed on a square-free filling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MarkingModel {
    /// A set of values is selected; every rightmost-in-row occurrence of a selected value
    /// is overlined. Column-repeated values must be selected.
    Value,
    /// Any set of rightmost-in-row occurrences that contains every occurrence lying
    /// below an equal value in its column.
    Occurrence,
    /// Column-repeated values are overlined at every rightmost-in-row occurrence; other
    /// values are overlined freely, occurrence by occurrence. A reconstruction rather than
    /// a literal reading of the rules; never used for counting.
    Hybrid,
}

impl MarkingModel {
    pub const ALL: [MarkingModel; 3] = [Self::Value, Self::Occurrence, Self::Hybrid];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Value => "value",
            Self::Occurrence => "occurrence",
            Self::Hybrid => "hybrid",
        }
    }
}

impl fmt::Display for MarkingModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MarkingModel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "value" => Ok(Self::Value),
            "occurrence" => Ok(Self::Occurrence),
            "hybrid" => Ok(Self::Hybrid),
            other => Err(format!("unknown marking model {other:?}")),
        }
    }
}

/// Values selected for overlining, together with the column-repeated values that every
/// selection must include.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Marking {
    pub selected: BTreeSet<u32>,
    pub forced: BTreeSet<u32>,
}

/// A filling with overlined cells.
///
/// Every overlined cell is the rightmost occurrence of its value in its row, and every
/// cell lying directly below an equal value is overlined.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lifting {
    filling: Filling,
    overlined: BTreeSet<Cell>,
}

impl Lifting {
    pub fn new(filling: Filling, overlined: BTreeSet<Cell>) -> Result<Self> {
        for (i, cell) in filling.shape().cells().iter().enumerate() {
            let marked = overlined.contains(cell);
            if marked && !filling.is_row_last(i) {
                return Err(Error::InvalidLifting(format!(
                    "{cell} is overlined but is not the last {} in its row",
                    filling.values()[i]
                )));
            }
            if !marked && !filling.is_column_topmost(i) {
                return Err(Error::InvalidLifting(format!(
                    "{cell} repeats the value above it and must be overlined"
                )));
            }
        }
        if let Some(stray) = overlined.iter().find(|c| !filling.shape().contains_cell(**c)) {
            return Err(Error::InvalidLifting(format!("{stray} is outside the shape")));
        }
        Ok(Lifting { filling, overlined })
    }

    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    pub fn overlined(&self) -> &BTreeSet<Cell> {
        &self.overlined
    }

    /// Distinct values carrying at least one overline.
    pub fn overlined_values(&self) -> BTreeSet<u32> {
        self.filling
            .entries()
            .filter(|(c, _)| self.overlined.contains(c))
            .map(|(_, v)| v)
            .collect()
    }

    /// The filling with overlines erased.
    pub fn shadow(&self) -> &Filling {
        &self.filling
    }
}

pub fn shadow(lifting: &Lifting) -> Filling {
    lifting.shadow().clone()
}

impl fmt::Display for Lifting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.filling.shape().cells();
        let values = self.filling.values();
        for (r, range) in self.filling.shape().row_ranges().enumerate() {
            if r > 0 {
                f.write_str(";")?;
            }
            for (i, idx) in range.enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", values[idx])?;
                if self.overlined.contains(&cells[idx]) {
                    f.write_str("~")?;
                }
            }
        }
        Ok(())
    }
}

/// Parses the filling syntax with `~` after each overlined entry, e.g. `"2~,1;4~,2~"`.
pub fn parse_lifting(shape: &SkewShape, text: &str) -> Result<Lifting> {
    let tokens = split_rows(shape, text)?;
    let mut values = Vec::with_capacity(tokens.len());
    let mut overlined = BTreeSet::new();
    for (token, cell) in tokens.iter().zip(shape.cells()) {
        let (digits, marked) = match token.strip_suffix('~') {
            Some(d) => (d.trim_end(), true),
            None => (*token, false),
        };
        values.push(parse_value(digits, cell.row as usize)?);
        if marked {
            overlined.insert(*cell);
        }
    }
    Lifting::new(Filling::new(shape.clone(), values)?, overlined)
}

fn require_square_free(filling: &Filling) -> Result<()> {
    if filling.is_square_free() {
        Ok(())
    } else {
        Err(Error::NotSquareFree)
    }
}

/// The rightmost-in-row occurrences of every value in `selected`.
pub fn marked_cells(filling: &Filling, selected: &BTreeSet<u32>) -> Result<BTreeSet<Cell>> {
    require_square_free(filling)?;
    Ok(marked_cells_unchecked(filling, selected))
}

fn marked_cells_unchecked(filling: &Filling, selected: &BTreeSet<u32>) -> BTreeSet<Cell> {
    filling
        .entries()
        .enumerate()
        .filter(|&(i, (_, v))| selected.contains(&v) && filling.is_row_last(i))
        .map(|(_, (c, _))| c)
        .collect()
}

/// Every value set `S` with `forced ⊆ S ⊆ distinct values`.
///
/// Order: the optional (unforced) values ascending form the bits of a counter, value `i`
/// being bit `i`; markings are emitted for counter values `0, 1, 2, ...`.
pub fn valid_markings(filling: &Filling) -> Result<Vec<Marking>> {
    require_square_free(filling)?;
    let forced = filling.forced_values();
    let optional: Vec<u32> = filling
        .distinct_values()
        .into_iter()
        .filter(|v| !forced.contains(v))
        .collect();
    Ok(subsets(optional.len())
        .map(|mask| {
            let mut selected = forced.clone();
            selected.extend(
                optional
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, &v)| v),
            );
            Marking {
                selected,
                forced: forced.clone(),
            }
        })
        .collect())
}

fn subsets(len: usize) -> impl Iterator<Item = u64> {
    assert!(len < 64, "too many optional elements to enumerate");
    0..(1u64 << len)
}

/// `mandatory` plus every subset of `optional`, in counter order.
fn cell_set_family(mandatory: &BTreeSet<Cell>, optional: &[Cell]) -> Vec<BTreeSet<Cell>> {
    subsets(optional.len())
        .map(|mask| {
            let mut set = mandatory.clone();
            set.extend(
                optional
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, &c)| c),
            );
            set
        })
        .collect()
}

/// All liftings of a square-free filling under `model`.
pub fn enumerate_liftings(filling: &Filling, model: MarkingModel) -> Result<Vec<Lifting>> {
    require_square_free(filling)?;
    let sets = match model {
        MarkingModel::Value => valid_markings(filling)?
            .iter()
            .map(|m| marked_cells_unchecked(filling, &m.selected))
            .collect(),
        MarkingModel::Occurrence => {
            let mut mandatory = BTreeSet::new();
            let mut optional = Vec::new();
            for (i, (cell, _)) in filling.entries().enumerate() {
                if !filling.is_column_topmost(i) {
                    mandatory.insert(cell);
                } else if filling.is_row_last(i) {
                    optional.push(cell);
                }
            }
            cell_set_family(&mandatory, &optional)
        }
        MarkingModel::Hybrid => {
            let forced = filling.forced_values();
            let mut mandatory = BTreeSet::new();
            let mut optional = Vec::new();
            for (i, (cell, v)) in filling.entries().enumerate() {
                if !filling.is_row_last(i) {
                    continue;
                }
                if forced.contains(&v) {
                    mandatory.insert(cell);
                } else {
                    optional.push(cell);
                }
            }
            cell_set_family(&mandatory, &optional)
        }
    };
    Ok(sets
        .into_iter()
        .map(|overlined| Lifting {
            filling: filling.clone(),
            overlined,
        })
        .collect())
}

/// Checks the overline rules cell by cell, straight from their wording, with no
/// square-freeness assumption:
///
/// 1. within a row, only the last occurrence of a value may be overlined;
/// 2. within a column, every occurrence of a value after the first is overlined;
/// 3. (optional) if a value is overlined anywhere, its last occurrence in every row
///    containing it is overlined.
pub fn satisfies_conditions(
    filling: &Filling,
    overlined: &BTreeSet<Cell>,
    include_condition3: bool,
) -> bool {
    let entries: Vec<(Cell, u32)> = filling.entries().collect();
    if overlined.iter().any(|c| !entries.iter().any(|(e, _)| e == c)) {
        return false;
    }
    for &(cell, v) in &entries {
        let later_in_row = entries
            .iter()
            .any(|&(o, w)| o.row == cell.row && o.col > cell.col && w == v);
        if later_in_row && overlined.contains(&cell) {
            return false;
        }
        let earlier_in_column = entries
            .iter()
            .any(|&(o, w)| o.col == cell.col && o.row < cell.row && w == v);
        if earlier_in_column && !overlined.contains(&cell) {
            return false;
        }
    }
    if include_condition3 {
        let overlined_values: BTreeSet<u32> = entries
            .iter()
            .filter(|(c, _)| overlined.contains(c))
            .map(|&(_, v)| v)
            .collect();
        for &v in &overlined_values {
            let rows: BTreeSet<u32> = entries
                .iter()
                .filter(|&&(_, w)| w == v)
                .map(|(c, _)| c.row)
                .collect();
            for row in rows {
                let last = entries
                    .iter()
                    .filter(|&&(c, w)| c.row == row && w == v)
                    .map(|&(c, _)| c)
                    .max_by_key(|c| c.col)
                    .expect("row contains v");
                if !overlined.contains(&last) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every subset of the filling's cells accepted by [`satisfies_conditions`].
pub fn brute_force_overlinings(filling: &Filling, include_condition3: bool) -> Vec<BTreeSet<Cell>> {
    let cells = filling.shape().cells();
    cell_set_family(&BTreeSet::new(), cells)
        .into_iter()
        .filter(|set| satisfies_conditions(filling, set, include_condition3))
        .collect()
}

/// Why a lifting count is zero regardless of `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroReason {
    NotSquareFree,
    PivotAbsent,
    /// A column-repeated value lies below the pivot, so it would be overlined on the
    /// wrong side.
    ForcedBelowPivot,
    ForcedAbovePivot,
}

impl fmt::Display for ZeroReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::NotSquareFree => "filling is not square-free",
            Self::PivotAbsent => "pivot does not occur in the filling",
            Self::ForcedBelowPivot => "a column-repeated value lies below the pivot",
            Self::ForcedAbovePivot => "a column-repeated value lies above the pivot",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LiftingCount {
    pub count: u128,
    pub reason: Option<ZeroReason>,
}

impl LiftingCount {
    fn zero(reason: ZeroReason) -> Self {
        LiftingCount {
            count: 0,
            reason: Some(reason),
        }
    }
}

/// Number of value-model liftings with `k` overlined and exactly `j` freely chosen
/// overlined values above `k` besides the forced ones: `C(D - l, j)` with `D` and `l`
/// taken above `k`, or 0 when the filling cannot host such liftings.
pub fn count_liftings_above(filling: &Filling, k: u32, j: u32) -> Result<LiftingCount> {
    count_liftings(filling, k, j, true)
}

/// Mirror of [`count_liftings_above`] for values below `k`.
pub fn count_liftings_below(filling: &Filling, k: u32, j: u32) -> Result<LiftingCount> {
    count_liftings(filling, k, j, false)
}

fn count_liftings(filling: &Filling, k: u32, j: u32, above: bool) -> Result<LiftingCount> {
    if !filling.is_square_free() {
        return Ok(LiftingCount::zero(ZeroReason::NotSquareFree));
    }
    let s = filling.profile().stats(k);
    if !s.present {
        return Ok(LiftingCount::zero(ZeroReason::PivotAbsent));
    }
    let (d, l, clean, reason) = if above {
        (s.d_above, s.l_above, s.clean_below, ZeroReason::ForcedBelowPivot)
    } else {
        (s.d_below, s.l_below, s.clean_above, ZeroReason::ForcedAbovePivot)
    };
    if !clean {
        return Ok(LiftingCount::zero(reason));
    }
    Ok(LiftingCount {
        count: binom(i64::from(d - l), i64::from(j))?,
        reason: None,
    })
}

/// Outcome of checking the marking models against the literal overline rules over
/// every filling of bounded weight.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ModelReport {
    pub max_n: u32,
    pub fillings: u64,
    pub square_free: u64,
    pub with_square: u64,
    pub value_mismatches: u64,
    pub occurrence_mismatches: u64,
    pub nesting_violations: u64,
    /// Fillings with a 2x2 block of equal values that still admit an overlining.
    pub square_violations: u64,
    /// `shape | filling | problem`, capped at a few entries.
    pub examples: Vec<String>,
}

impl ModelReport {
    pub fn failures(&self) -> u64 {
        self.value_mismatches
            + self.occurrence_mismatches
            + self.nesting_violations
            + self.square_violations
    }
}

const MAX_EXAMPLES: usize = 20;

/// Compares the value and occurrence models with brute force over cell subsets, for every
/// filling of weight `1..=max_n` on shapes with `|outer| <= max_n`.
pub fn verify_models(max_n: u32) -> ModelReport {
    let mut report = ModelReport {
        max_n,
        ..Default::default()
    };
    for shape in enumerate_skew_shapes(max_n, 1, max_n) {
        for weight in 1..=max_n {
            for_each_filling(&shape, weight, |values| {
                let filling = Filling::from_parts_unchecked(shape.clone(), values.to_vec());
                check_filling(&filling, &mut report);
            });
        }
    }
    report
}

fn check_filling(filling: &Filling, report: &mut ModelReport) {
    report.fillings += 1;
    let literal: BTreeSet<BTreeSet<Cell>> = brute_force_overlinings(filling, true).into_iter().collect();
    let relaxed: BTreeSet<BTreeSet<Cell>> = brute_force_overlinings(filling, false).into_iter().collect();
    let note = |report: &mut ModelReport, problem: &str| {
        if report.examples.len() < MAX_EXAMPLES {
            report
                .examples
                .push(format!("{} | {} | {problem}", filling.shape(), filling));
        }
    };
    if !filling.is_square_free() {
        report.with_square += 1;
        if !literal.is_empty() || !relaxed.is_empty() {
            report.square_violations += 1;
            note(report, "overlining exists despite a 2x2 block");
        }
        return;
    }
    report.square_free += 1;
    let model = |m| -> BTreeSet<BTreeSet<Cell>> {
        enumerate_liftings(filling, m)
            .expect("square-free")
            .into_iter()
            .map(|l| l.overlined)
            .collect()
    };
    let value = model(MarkingModel::Value);
    let occurrence = model(MarkingModel::Occurrence);
    let hybrid = model(MarkingModel::Hybrid);
    if value != literal {
        report.value_mismatches += 1;
        note(report, "value model differs from conditions (1)(2)(3)");
    }
    if occurrence != relaxed {
        report.occurrence_mismatches += 1;
        note(report, "occurrence model differs from conditions (1)(2)");
    }
    if !value.is_subset(&hybrid) || !hybrid.is_subset(&occurrence) {
        report.nesting_violations += 1;
        note(report, "value ⊆ hybrid ⊆ occurrence fails");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filling::{enumerate_fillings, parse_filling};
    use crate::shape::parse_shape;

    fn filling(shape: &str, rows: &str) -> Filling {
        parse_filling(&parse_shape(shape).unwrap(), rows).unwrap()
    }

    fn worked() -> Filling {
        filling("5,4,4,3/2,1", "9,7,5;4,3,2;5,3,3,1;5,3,2")
    }

    fn shadow_example() -> Filling {
        filling("5,4,2,2,1/3,2", "2,1;4,2;5,4;5,4;1")
    }

    fn cells(list: &[(u32, u32)]) -> BTreeSet<Cell> {
        list.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn marked_cells_reproduce_first_worked_lifting() {
        let f = worked();
        let marked = marked_cells(&f, &BTreeSet::from([5, 3, 2])).unwrap();
        // shape rows start at columns 3, 2, 1, 1
        let expected = cells(&[(1, 5), (3, 1), (4, 1), (2, 3), (3, 3), (4, 2), (2, 4), (4, 3)]);
        assert_eq!(marked, expected);
        let lifting = Lifting::new(f, marked).unwrap();
        assert_eq!(lifting.to_string(), "9,7,5~;4,3~,2~;5~,3,3~,1;5~,3~,2~");
    }

    #[test]
    fn marked_cells_edge_cases() {
        assert!(marked_cells(&worked(), &BTreeSet::new()).unwrap().is_empty());
        let f = shadow_example();
        let all = marked_cells(&f, &BTreeSet::from([5, 4, 2, 1])).unwrap();
        assert_eq!(all.len(), 9);
        let square = filling("2,2", "1,1;1,1");
        assert_eq!(
            marked_cells(&square, &BTreeSet::from([1])),
            Err(Error::NotSquareFree)
        );
    }

    #[test]
    fn valid_marking_counts() {
        assert_eq!(valid_markings(&worked()).unwrap().len(), 32);
        let markings = valid_markings(&shadow_example()).unwrap();
        let selected: Vec<BTreeSet<u32>> = markings.into_iter().map(|m| m.selected).collect();
        assert_eq!(
            selected,
            vec![BTreeSet::from([5, 4, 2]), BTreeSet::from([5, 4, 2, 1])]
        );
        assert_eq!(valid_markings(&filling("4", "4,3,2,1")).unwrap().len(), 16);
    }

    #[test]
    fn shadow_example_liftings_per_model() {
        let f = shadow_example();
        assert_eq!(enumerate_liftings(&f, MarkingModel::Value).unwrap().len(), 2);
        let hybrid: BTreeSet<String> = enumerate_liftings(&f, MarkingModel::Hybrid)
            .unwrap()
            .iter()
            .map(|l| l.to_string())
            .collect();
        let expected: BTreeSet<String> = [
            "2~,1;4~,2~;5~,4~;5~,4~;1",
            "2~,1~;4~,2~;5~,4~;5~,4~;1~",
            "2~,1~;4~,2~;5~,4~;5~,4~;1",
            "2~,1;4~,2~;5~,4~;5~,4~;1~",
        ]
        .into_iter()
        .map(String::from)
        .collect();
        assert_eq!(hybrid, expected);
        for l in enumerate_liftings(&f, MarkingModel::Hybrid).unwrap() {
            assert_eq!(shadow(&l), f);
            assert_eq!(l.shadow().weight(), 28);
        }
    }

    #[test]
    fn square_blocks_admit_no_overlining() {
        let f = filling("2,2", "1,1;1,1");
        assert!(enumerate_liftings(&f, MarkingModel::Value).is_err());
        assert!(brute_force_overlinings(&f, false).is_empty());
        assert!(brute_force_overlinings(&f, true).is_empty());
    }

    #[test]
    fn literal_checker_examples() {
        let f = worked();
        let first = cells(&[(1, 5), (3, 1), (4, 1), (2, 3), (3, 3), (4, 2), (2, 4), (4, 3)]);
        assert!(satisfies_conditions(&f, &first, true));

        // Value 1 overlined in the top row only, not in the bottom row.
        let s = shadow_example();
        let third = cells(&[(1, 4), (1, 5), (2, 3), (2, 4), (3, 1), (3, 2), (4, 1), (4, 2)]);
        assert!(!satisfies_conditions(&s, &third, true));
        assert!(satisfies_conditions(&s, &third, false));

        // Empty overlining is fine exactly when nothing repeats in a column.
        assert!(!satisfies_conditions(&s, &BTreeSet::new(), false));
        assert!(satisfies_conditions(&filling("3,1", "3,2,2;1"), &BTreeSet::new(), true));
        // cells outside the shape are rejected
        assert!(!satisfies_conditions(&s, &cells(&[(1, 1)]), false));
    }

    #[test]
    fn count_above_examples() {
        let f = worked();
        let counts: Vec<u128> = (0..=4)
            .map(|j| count_liftings_above(&f, 2, j).unwrap().count)
            .collect();
        assert_eq!(counts, vec![1, 3, 3, 1, 0]);

        let column = filling("1,1,1", "3;1;1");
        for j in 0..3 {
            let c = count_liftings_above(&column, 3, j).unwrap();
            assert_eq!(c.count, 0);
            assert_eq!(c.reason, Some(ZeroReason::ForcedBelowPivot));
        }
        let absent = count_liftings_above(&f, 6, 0).unwrap();
        assert_eq!(absent.reason, Some(ZeroReason::PivotAbsent));
    }

    #[test]
    fn count_below_examples() {
        let row = filling("2", "2,1");
        assert_eq!(count_liftings_below(&row, 2, 0).unwrap().count, 1);
        assert_eq!(count_liftings_below(&row, 2, 1).unwrap().count, 1);
        assert_eq!(count_liftings_below(&row, 2, 2).unwrap().count, 0);
        // explicit value-model enumeration: markings containing 2 with the rest below 2
        let explicit: Vec<usize> = valid_markings(&row)
            .unwrap()
            .iter()
            .filter(|m| m.selected.contains(&2))
            .map(|m| m.selected.len() - 1)
            .collect();
        assert_eq!(explicit, vec![0, 1]);

        let f = worked();
        assert_eq!(count_liftings_below(&f, 9, 0).unwrap().count, 1);
        assert_eq!(count_liftings_below(&f, 9, 5).unwrap().count, 0);
        assert_eq!(count_liftings_below(&f, 9, 4).unwrap().count, 1);
    }

    #[test]
    fn counts_match_explicit_value_liftings() {
        for shape in enumerate_skew_shapes(6, 1, 6) {
            for weight in 1..=6 {
                for f in enumerate_fillings(&shape, weight) {
                    if !f.is_square_free() {
                        continue;
                    }
                    let forced = f.forced_values();
                    let liftings = enumerate_liftings(&f, MarkingModel::Value).unwrap();
                    for k in f.distinct_values() {
                        let s = f.stats(k).unwrap();
                        let mut total = 0u128;
                        for j in 0..=s.d_above {
                            let explicit = liftings
                                .iter()
                                .map(|l| l.overlined_values())
                                .filter(|vals| {
                                    vals.contains(&k)
                                        && vals.iter().all(|&v| v >= k)
                                        && vals.iter().filter(|&&v| v > k).count() as u32
                                            == j + s.l_above
                                })
                                .count() as u128;
                            let c = count_liftings_above(&f, k, j).unwrap().count;
                            assert_eq!(c, explicit, "{f} on {shape}, k={k}, j={j}");
                            total += c;
                        }
                        if s.clean_below {
                            assert_eq!(total, 1u128 << (s.d_above - s.l_above));
                        } else {
                            assert!(forced.iter().any(|&v| v < k));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn model_sweep_is_clean_at_small_weight() {
        let report = verify_models(5);
        assert_eq!(report.failures(), 0, "{:?}", report.examples);
        assert!(report.with_square > 0);
        assert_eq!(report.fillings, report.square_free + report.with_square);
    }

    #[test]
    fn lifting_text_round_trips() {
        let f = shadow_example();
        for model in MarkingModel::ALL {
            for l in enumerate_liftings(&f, model).unwrap() {
                assert_eq!(parse_lifting(f.shape(), &l.to_string()).unwrap(), l);
            }
        }
        assert!(matches!(
            parse_lifting(f.shape(), "2~,1;4~,2;5~,4~;5~,4~;1"),
            Err(Error::InvalidLifting(_))
        ));
        assert!(matches!(
            parse_lifting(&parse_shape("2").unwrap(), "1~,1"),
            Err(Error::InvalidLifting(_))
        ));
    }
}
