//! Named verification runs with pinned parameters. Each target produces a
//! table of pass/fail rows; the CLI's `reproduce` verb and the acceptance
//! tests both drive these.

use std::fmt;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds;
use crate::error::{Error, Result};
use crate::search::{sweep, BoundChoice, Filter, SearchSpace, SweepOptions, SweepSummary};
use crate::set::{IntegerSet, StructureKind};
use crate::sumset::{compute_sumset, Operator};
use crate::verify::{check_ap_theorem, check_lemma_decomposition, Family, Verdict};

/// Seed of the random sets in the `lemma-audit` target.
pub const LEMMA_AUDIT_SEED: u64 = 20_230_521;
pub const LEMMA_AUDIT_SAMPLES: usize = 300;

pub const TARGETS: &[&str] = &[
    "thm-h4-positive",
    "thm-h4-zero",
    "ap-iff",
    "interval",
    "lemma-audit",
    "theorem11-small",
    "h3-proved",
    "special-direct",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckRow {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckRow {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReproduceTable {
    pub target: String,
    pub rows: Vec<CheckRow>,
    /// Sets on which a claim failed.
    pub offending_sets: Vec<IntegerSet>,
}

impl ReproduceTable {
    fn new(target: &str) -> Self {
        ReproduceTable {
            target: target.to_string(),
            rows: Vec::new(),
            offending_sets: Vec::new(),
        }
    }

    fn row(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.rows.push(CheckRow::new(name, pass, detail));
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

impl fmt::Display for ReproduceTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "target: {}", self.target)?;
        let width = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &self.rows {
            writeln!(
                f,
                "  [{}] {:width$}  {}",
                if r.pass { "PASS" } else { "FAIL" },
                r.name,
                r.detail
            )?;
        }
        for set in &self.offending_sets {
            writeln!(f, "  offending set: {set}")?;
        }
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

pub fn run_target(target: &str, threads: Option<usize>) -> Result<ReproduceTable> {
    match target {
        "thm-h4-positive" => thm_h4_positive(threads),
        "thm-h4-zero" => thm_h4_zero(threads),
        "ap-iff" => ap_iff(),
        "interval" => interval(),
        "lemma-audit" => lemma_audit(),
        "theorem11-small" => universal_small(threads),
        "h3-proved" => h3_proved(threads),
        "special-direct" => special_direct(threads),
        other => Err(Error::UnknownTarget(other.to_string())),
    }
}

fn options(threads: Option<usize>) -> SweepOptions {
    SweepOptions {
        threads,
        ..SweepOptions::default()
    }
}

fn fmt_sets(sets: &[IntegerSet]) -> String {
    sets.iter().join(" ")
}

/// Rows shared by the two `h = 4` sweeps.
fn h4_rows(
    table: &mut ReproduceTable,
    summary: &SweepSummary,
    visited: u128,
    min_card: i64,
    expected: &[IntegerSet],
) {
    table.row(
        "visited",
        summary.visited == visited,
        format!("{} (expected {visited})", summary.visited),
    );
    table.row(
        "min cardinality",
        summary.min_cardinality == Some(min_card),
        format!("{:?} (expected {min_card})", summary.min_cardinality),
    );
    table.row(
        "violations",
        summary.violation_count == 0,
        summary.violation_count.to_string(),
    );
    table.row(
        "equality set",
        summary.equality_sets == expected,
        format!(
            "found [{}], expected [{}]",
            fmt_sets(&summary.equality_sets),
            fmt_sets(expected)
        ),
    );
    table
        .offending_sets
        .extend(summary.violations.iter().map(|r| r.set.clone()));
    table.offending_sets.extend(
        summary
            .equality_sets
            .iter()
            .filter(|s| !expected.contains(s))
            .cloned(),
    );
}

fn thm_h4_positive(threads: Option<usize>) -> Result<ReproduceTable> {
    let mut table = ReproduceTable::new("thm-h4-positive");
    let space = SearchSpace::new(5, 4, 20, Family::Positive);
    let summary = sweep(&space, &options(threads), |_| {})?;
    let expected = [
        IntegerSet::odd_ap_dilate(1, 5)?,
        IntegerSet::odd_ap_dilate(2, 5)?,
    ];
    h4_rows(&mut table, &summary, 15504, 25, &expected);
    Ok(table)
}

fn thm_h4_zero(threads: Option<usize>) -> Result<ReproduceTable> {
    let mut table = ReproduceTable::new("thm-h4-zero");
    let space = SearchSpace::new(5, 4, 16, Family::ZeroBased);
    let summary = sweep(&space, &options(threads), |_| {})?;
    let expected = (1..=4)
        .map(|d| IntegerSet::zero_ap_dilate(d, 5))
        .collect::<Result<Vec<_>>>()?;
    h4_rows(&mut table, &summary, 1820, 21, &expected);
    Ok(table)
}

fn ap_iff() -> Result<ReproduceTable> {
    let mut table = ReproduceTable::new("ap-iff");
    for h in 3..=6 {
        let mut failures = Vec::new();
        let mut equalities = 0;
        for a1 in 1..=5 {
            for d in 1..=12 {
                let report = check_ap_theorem(a1, d, h)?;
                equalities += report.equality as usize;
                if report.is_counterexample() {
                    failures.push(report.set.clone());
                }
            }
        }
        table.row(
            format!("h={h}"),
            failures.is_empty(),
            format!(
                "60 progressions, {equalities} with |h^+-A| = (h+1)^2, {} failures",
                failures.len()
            ),
        );
        table.offending_sets.extend(failures);
    }
    Ok(table)
}

fn interval() -> Result<ReproduceTable> {
    let mut table = ReproduceTable::new("interval");
    for k in 5..=10 {
        for h in 4..k {
            let set = IntegerSet::zero_ap_dilate(1, k)?;
            let sums = compute_sumset(&set, h, Operator::RestrictedSigned)?;
            let (lo, hi) = bounds::interval_for_zero_ap(h, k)?;
            let expected: Vec<i64> = (lo..=hi).collect();
            let pass = sums.sums == expected;
            table.row(
                format!("k={k} h={h}"),
                pass,
                format!(
                    "[{}, {}] with {} sums, predicted [{lo}, {hi}]",
                    sums.min_sum, sums.max_sum, sums.cardinality
                ),
            );
            if !pass {
                table.offending_sets.push(set);
            }
        }
    }
    Ok(table)
}

/// The random inputs audited by `lemma-audit`: `(set, h)` pairs with
/// `k` in `[5, 8]`, elements at most 40 and `h` in `[3, k-1]`.
pub fn lemma_audit_inputs(family: Family, seed: u64, count: usize) -> Vec<(IntegerSet, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(5..=8usize);
            let h = rng.gen_range(3..k);
            let free = match family {
                Family::Positive => k,
                Family::ZeroBased => k - 1,
            };
            let mut elements: Vec<i64> = sample(&mut rng, 40, free)
                .into_iter()
                .map(|i| i as i64 + 1)
                .collect();
            if family == Family::ZeroBased {
                elements.push(0);
            }
            (IntegerSet::new(elements).expect("nonempty"), h)
        })
        .collect()
}

fn lemma_audit() -> Result<ReproduceTable> {
    let mut table = ReproduceTable::new("lemma-audit");
    for (family, seed) in [
        (Family::Positive, LEMMA_AUDIT_SEED),
        (Family::ZeroBased, LEMMA_AUDIT_SEED + 1),
    ] {
        let mut applicable = 0;
        let mut failures = Vec::new();
        for (set, h) in lemma_audit_inputs(family, seed, LEMMA_AUDIT_SAMPLES) {
            let audit = check_lemma_decomposition(&set, h)?;
            applicable += audit.applicable as usize;
            if audit.is_counterexample() {
                failures.push(set);
            }
        }
        table.row(
            family.as_str(),
            failures.is_empty(),
            format!(
                "{LEMMA_AUDIT_SAMPLES} sets, {applicable} with t >= 0, {} where the bound exceeds |h^+-A|",
                failures.len()
            ),
        );
        table.offending_sets.extend(failures);
    }
    Ok(table)
}

fn universal_small(threads: Option<usize>) -> Result<ReproduceTable> {
    let mut table = ReproduceTable::new("theorem11-small");
    for h in 1..=2 {
        for k in h..=6 {
            for (family, max) in [(Family::Positive, 12), (Family::ZeroBased, 11)] {
                let space = SearchSpace::new(k, h, max, family).with_bound(BoundChoice::Universal);
                let summary = sweep(&space, &options(threads), |_| {})?;
                let pass = summary.violation_count == 0 && summary.equality_count >= 1;
                table.row(
                    format!("h={h} k={k} {family}"),
                    pass,
                    format!(
                        "bound {}, {} sets, min {:?}, {} equality, {} violations",
                        summary.bound_value,
                        summary.visited,
                        summary.min_cardinality,
                        summary.equality_count,
                        summary.violation_count
                    ),
                );
                table
                    .offending_sets
                    .extend(summary.violations.into_iter().map(|r| r.set));
            }
        }
    }
    Ok(table)
}

fn h3_proved(threads: Option<usize>) -> Result<ReproduceTable> {
    let mut table = ReproduceTable::new("h3-proved");
    for (k, max) in [(4, 16), (5, 14)] {
        let space = SearchSpace::new(k, 3, max, Family::Positive);
        let summary = sweep(&space, &options(threads), |_| {})?;
        let odd_only = summary.equality_sets.iter().all(|s| {
            s.classify_structure()
                .is_ok_and(|c| c.kind == StructureKind::OddApDilate)
        });
        table.row(
            format!("k={k} h=3 M={max} violations"),
            summary.violation_count == 0,
            format!(
                "bound {}, {} sets, min {:?}, {} violations",
                summary.bound_value,
                summary.visited,
                summary.min_cardinality,
                summary.violation_count
            ),
        );
        table.row(
            format!("k={k} h=3 M={max} equality structure"),
            odd_only,
            format!("equality cases [{}]", fmt_sets(&summary.equality_sets)),
        );
        table
            .offending_sets
            .extend(summary.violations.into_iter().map(|r| r.set));
    }
    Ok(table)
}

fn special_direct(threads: Option<usize>) -> Result<ReproduceTable> {
    let mut table = ReproduceTable::new("special-direct");
    for h in 3..=5 {
        let space = SearchSpace::new(h + 1, h, 30, Family::Positive)
            .with_bound(BoundChoice::SpecialDirect)
            .with_filter(Filter::Special);
        let summary = sweep(&space, &options(threads), |_| {})?;
        table.row(
            format!("h={h}"),
            summary.violation_count == 0,
            format!(
                "bound {}, {} of {} sets satisfy a predicate, min {:?}, {} violations",
                summary.bound_value,
                summary.evaluated,
                summary.visited,
                summary.min_cardinality,
                summary.violation_count
            ),
        );
        table
            .offending_sets
            .extend(summary.violations.into_iter().map(|r| r.set));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_target() {
        assert_eq!(
            run_target("no-such-target", None),
            Err(Error::UnknownTarget("no-such-target".into()))
        );
    }

    #[test]
    fn lemma_inputs_are_reproducible_and_in_range() {
        let a = lemma_audit_inputs(Family::ZeroBased, 5, 50);
        assert_eq!(a, lemma_audit_inputs(Family::ZeroBased, 5, 50));
        for (set, h) in a {
            assert!((5..=8).contains(&set.len()));
            assert!((3..set.len()).contains(&h));
            assert!(set.contains_zero() && set.largest() <= 40);
        }
    }

    #[test]
    fn interval_target_passes() {
        let t = run_target("interval", None).unwrap();
        assert!(t.passed(), "{t}");
        assert_eq!(t.rows.len(), (5..=10).map(|k| k - 4).sum::<usize>());
    }
}
