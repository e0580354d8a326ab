//! Exhaustive sweeps and seeded random probes over families of candidate
//! sets, hunting for bound violations and harvesting equality cases.
//!
//! A sweep visits every set of its space in lexicographic order. The space
//! is split into shards by fixing the smallest free elements; shards run in
//! parallel in fixed-size batches and are merged in shard order, so
//! summaries and record streams do not depend on the thread count.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds;
use crate::error::{Error, Result};
use crate::set::{classify_or_none, IntegerSet, StructureClass};
use crate::sumset::{compute_sumset, Operator};
use crate::verify::Family;

/// Default cap on the number of candidate sets one sweep may visit.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Which lower bound the candidates are measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundChoice {
    /// `2hk - h^2 + 1` or `2hk - h(h+1) + 1` by family; inverse structure is checked too.
    Conjectured,
    /// The bound valid for every `1 <= h <= k`.
    Universal,
    /// `(h+1)^2 + 1`, for `k = h + 1`; pair with a gap-predicate filter.
    SpecialDirect,
}

impl FromStr for BoundChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "conjectured" => Ok(BoundChoice::Conjectured),
            "universal" => Ok(BoundChoice::Universal),
            "special-direct" => Ok(BoundChoice::SpecialDirect),
            other => Err(format!(
                "unknown bound '{other}' (expected conjectured, universal or special-direct)"
            )),
        }
    }
}

/// Candidate filter applied before evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    Superincreasing,
    Smallgap,
    /// Either gap predicate.
    Special,
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "superincreasing" => Ok(Filter::Superincreasing),
            "smallgap" => Ok(Filter::Smallgap),
            "special" => Ok(Filter::Special),
            other => Err(format!(
                "unknown filter '{other}' (expected superincreasing, smallgap or special)"
            )),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "positive" => Ok(Family::Positive),
            "zero-based" | "zero" => Ok(Family::ZeroBased),
            other => Err(format!(
                "unknown family '{other}' (expected positive or zero-based)"
            )),
        }
    }
}

/// `POSITIVE`: the `k`-subsets of `[1, M]`. `ZERO_BASED`: `{0}` joined
/// with the `(k-1)`-subsets of `[1, M]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSpace {
    pub k: usize,
    pub h: usize,
    pub max_element: i64,
    pub family: Family,
    pub filter: Option<Filter>,
    /// Keep only sets whose elements have gcd 1.
    pub primitive_only: bool,
    pub bound: BoundChoice,
}

impl SearchSpace {
    pub fn new(k: usize, h: usize, max_element: i64, family: Family) -> Self {
        SearchSpace {
            k,
            h,
            max_element,
            family,
            filter: None,
            primitive_only: false,
            bound: BoundChoice::Conjectured,
        }
    }

    pub fn with_bound(mut self, bound: BoundChoice) -> Self {
        self.bound = bound;
        self
    }

    pub fn with_filter(mut self, filter: Filter) -> Self {
        self.filter = Some(filter);
        self
    }

    pub fn primitive_only(mut self, on: bool) -> Self {
        self.primitive_only = on;
        self
    }

    /// Number of elements chosen freely from `[1, M]`.
    fn free_len(&self) -> usize {
        match self.family {
            Family::Positive => self.k,
            Family::ZeroBased => self.k.saturating_sub(1),
        }
    }

    /// Number of candidate sets, before filtering.
    pub fn size(&self) -> u128 {
        let m = self.max_element.max(0) as u128;
        let r = self.free_len() as u128;
        if r > m {
            return 0;
        }
        let r = r.min(m - r);
        (0..r).fold(1u128, |acc, i| acc.saturating_mul(m - i) / (i + 1))
    }

    fn bound_value(&self) -> Result<i64> {
        let (h, k) = (self.h, self.k);
        let value = match self.bound {
            BoundChoice::Conjectured => match self.family {
                Family::Positive => bounds::bound_positive_conjectured(h, k)?.value,
                Family::ZeroBased => bounds::bound_zero_conjectured(h, k)?.value,
            },
            BoundChoice::Universal => {
                bounds::bound_universal(h, k, self.family == Family::ZeroBased)?.value
            }
            BoundChoice::SpecialDirect => {
                if self.family != Family::Positive || k != h + 1 {
                    return Err(Error::InvalidSpace(
                        "special-direct bound needs the positive family and k = h+1".into(),
                    ));
                }
                bounds::special_direct_bound(h, true)?.value
            }
        };
        Ok(value)
    }

    fn evaluator(&self) -> Result<Evaluator> {
        if self.k == 0 {
            return Err(Error::InvalidSpace("k must be at least 1".into()));
        }
        if self.max_element < 1 {
            return Err(Error::InvalidSpace("max element must be at least 1".into()));
        }
        if (self.free_len() as i64) > self.max_element {
            return Err(Error::InvalidSpace(format!(
                "space smaller than k: [1, {}] has no {}-subsets",
                self.max_element,
                self.free_len()
            )));
        }
        Ok(Evaluator {
            h: self.h,
            bound: self.bound_value()?,
            extremal: match self.bound {
                BoundChoice::Conjectured => Some(self.family.extremal_kind()),
                _ => None,
            },
            filter: self.filter,
            primitive_only: self.primitive_only,
        })
    }
}

/// One evaluated candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchRecord {
    pub set: IntegerSet,
    pub cardinality: i64,
    pub slack: i64,
    pub equality: bool,
    pub structure: StructureClass,
    /// Equality under the conjectured bound without the predicted structure.
    pub structure_mismatch: bool,
}

pub const CSV_HEADER: &str = "set;cardinality;slack;equality;structure_kind;d";

impl SearchRecord {
    pub fn is_violation(&self) -> bool {
        self.slack < 0
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{};{};{};{};{};{}",
            self.set.elements().iter().join(","),
            self.cardinality,
            self.slack,
            self.equality,
            self.structure.kind,
            self.structure.d.map(|d| d.to_string()).unwrap_or_default()
        )
    }
}

struct Evaluator {
    h: usize,
    bound: i64,
    extremal: Option<crate::set::StructureKind>,
    filter: Option<Filter>,
    primitive_only: bool,
}

impl Evaluator {
    fn admits(&self, set: &IntegerSet) -> bool {
        if self.primitive_only && set.gcd() != 1 {
            return false;
        }
        let Some(filter) = self.filter else {
            return true;
        };
        let si = || bounds::predicate_superincreasing_tail(set).unwrap_or(false);
        let sg = || bounds::predicate_smallgap(set).unwrap_or(false);
        match filter {
            Filter::Superincreasing => si(),
            Filter::Smallgap => sg(),
            Filter::Special => si() || sg(),
        }
    }

    fn evaluate(&self, set: IntegerSet) -> Result<Option<SearchRecord>> {
        if !self.admits(&set) {
            return Ok(None);
        }
        let cardinality =
            compute_sumset(&set, self.h, Operator::RestrictedSigned)?.cardinality as i64;
        let slack = cardinality - self.bound;
        let structure = classify_or_none(&set);
        let equality = slack == 0;
        let structure_mismatch =
            equality && self.extremal.is_some_and(|kind| structure.kind != kind);
        Ok(Some(SearchRecord {
            set,
            cardinality,
            slack,
            equality,
            structure,
            structure_mismatch,
        }))
    }
}

/// Which records a sweep hands to its sink.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Emit {
    All,
    /// Equality cases, violations and structure mismatches.
    #[default]
    Notable,
    Nothing,
}

impl FromStr for Emit {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "all" => Ok(Emit::All),
            "notable" => Ok(Emit::Notable),
            "none" => Ok(Emit::Nothing),
            other => Err(format!(
                "unknown record selection '{other}' (expected all, notable or none)"
            )),
        }
    }
}

impl Emit {
    fn wants(self, r: &SearchRecord) -> bool {
        match self {
            Emit::All => true,
            Emit::Notable => r.equality || r.is_violation() || r.structure_mismatch,
            Emit::Nothing => false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub budget: u128,
    /// `None` uses the available parallelism.
    pub threads: Option<usize>,
    pub emit: Emit,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            budget: DEFAULT_BUDGET,
            threads: None,
            emit: Emit::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub space: SearchSpace,
    pub bound_value: i64,
    /// Candidate sets enumerated, before filtering.
    pub visited: u128,
    /// Candidates that passed the filter and were evaluated.
    pub evaluated: u128,
    pub min_cardinality: Option<i64>,
    pub min_slack: Option<i64>,
    pub equality_count: u64,
    pub violation_count: u64,
    pub structure_mismatch_count: u64,
    /// Every equality case, in lexicographic order.
    pub equality_sets: Vec<IntegerSet>,
    pub violations: Vec<SearchRecord>,
}

impl SweepSummary {
    fn empty(space: &SearchSpace, bound_value: i64) -> Self {
        SweepSummary {
            space: space.clone(),
            bound_value,
            visited: 0,
            evaluated: 0,
            min_cardinality: None,
            min_slack: None,
            equality_count: 0,
            violation_count: 0,
            structure_mismatch_count: 0,
            equality_sets: Vec::new(),
            violations: Vec::new(),
        }
    }

    fn absorb_record(&mut self, r: &SearchRecord) {
        self.evaluated += 1;
        self.min_cardinality = Some(
            self.min_cardinality
                .map_or(r.cardinality, |m| m.min(r.cardinality)),
        );
        self.min_slack = Some(self.min_slack.map_or(r.slack, |m| m.min(r.slack)));
        if r.equality {
            self.equality_count += 1;
            self.equality_sets.push(r.set.clone());
        }
        if r.is_violation() {
            self.violation_count += 1;
            self.violations.push(r.clone());
        }
        if r.structure_mismatch {
            self.structure_mismatch_count += 1;
        }
    }

    fn merge(&mut self, other: SweepSummary) {
        self.visited += other.visited;
        self.evaluated += other.evaluated;
        self.min_cardinality = match (self.min_cardinality, other.min_cardinality) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.min_slack = match (self.min_slack, other.min_slack) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.equality_count += other.equality_count;
        self.violation_count += other.violation_count;
        self.structure_mismatch_count += other.structure_mismatch_count;
        self.equality_sets.extend(other.equality_sets);
        self.violations.extend(other.violations);
    }

    /// A bound violation or an equality case outside the predicted family.
    pub fn found_counterexample(&self) -> bool {
        self.violation_count > 0 || self.structure_mismatch_count > 0
    }
}

fn build_pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n.max(1));
    }
    builder
        .build()
        .map_err(|e| Error::InvalidSpace(format!("cannot start worker threads: {e}")))
}

/// Shard prefixes: the smallest one or two free elements, in lex order.
fn shard_prefixes(free_len: usize, max: i64) -> Vec<Vec<i64>> {
    let fixed = free_len.saturating_sub(1).min(2);
    if fixed == 0 {
        return vec![Vec::new()];
    }
    (1..=max).combinations(fixed).collect()
}

fn shard_sets(
    family: Family,
    prefix: &[i64],
    free_len: usize,
    max: i64,
) -> impl Iterator<Item = IntegerSet> + '_ {
    let start = prefix.last().map_or(1, |&p| p + 1);
    (start..=max)
        .combinations(free_len - prefix.len())
        .map(move |tail| {
            let mut elements = Vec::with_capacity(free_len + 1);
            if family == Family::ZeroBased {
                elements.push(0);
            }
            elements.extend_from_slice(prefix);
            elements.extend(tail);
            IntegerSet::from_sorted(elements)
        })
}

/// Visits every set of `space` in lexicographic order, passing the records
/// selected by `options.emit` to `sink` in that order.
pub fn sweep(
    space: &SearchSpace,
    options: &SweepOptions,
    mut sink: impl FnMut(&SearchRecord),
) -> Result<SweepSummary> {
    let evaluator = space.evaluator()?;
    let size = space.size();
    if size > options.budget {
        return Err(Error::BudgetExceeded {
            size,
            budget: options.budget,
        });
    }
    let pool = build_pool(options.threads)?;
    let free_len = space.free_len();
    let prefixes = shard_prefixes(free_len, space.max_element);
    let batch = pool.current_num_threads() * 8;
    let mut summary = SweepSummary::empty(space, evaluator.bound);

    for chunk in prefixes.chunks(batch) {
        let outcomes: Vec<Result<(SweepSummary, Vec<SearchRecord>)>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|prefix| {
                    let mut part = SweepSummary::empty(space, evaluator.bound);
                    let mut kept = Vec::new();
                    for set in shard_sets(space.family, prefix, free_len, space.max_element) {
                        part.visited += 1;
                        if let Some(record) = evaluator.evaluate(set)? {
                            part.absorb_record(&record);
                            if options.emit.wants(&record) {
                                kept.push(record);
                            }
                        }
                    }
                    Ok((part, kept))
                })
                .collect()
        });
        for outcome in outcomes {
            let (part, kept) = outcome?;
            summary.merge(part);
            kept.iter().for_each(&mut sink);
        }
    }
    debug_assert_eq!(summary.visited, size);
    Ok(summary)
}

/// Runs a sweep and writes the emitted records as CSV.
pub fn sweep_to_csv<W: Write>(
    space: &SearchSpace,
    options: &SweepOptions,
    out: &mut W,
) -> io::Result<Result<SweepSummary>> {
    writeln!(out, "{CSV_HEADER}")?;
    let mut io_err = None;
    let summary = sweep(space, options, |r| {
        if io_err.is_none() {
            if let Err(e) = writeln!(out, "{}", r.csv_line()) {
                io_err = Some(e);
            }
        }
    });
    match io_err {
        Some(e) => Err(e),
        None => Ok(summary),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeSummary {
    pub space: SearchSpace,
    pub trials: u64,
    pub seed: u64,
    pub bound_value: i64,
    /// Samples rejected by the space's filter.
    pub filtered_out: u64,
    pub min_cardinality: Option<i64>,
    pub min_slack: Option<i64>,
    /// Distinct sampled sets attaining the minimum slack, sorted.
    pub min_slack_sets: Vec<IntegerSet>,
    pub min_slack_structures: Vec<StructureClass>,
    pub equality_count: u64,
    pub violation_count: u64,
    pub structure_mismatch_count: u64,
    pub violations: Vec<SearchRecord>,
}

impl ProbeSummary {
    pub fn found_counterexample(&self) -> bool {
        self.violation_count > 0 || self.structure_mismatch_count > 0
    }
}

/// Draws `trials` sets uniformly from `space` (each a sample without
/// replacement from `[1, M]`), reproducibly from `seed`, and measures each
/// against the space's bound.
pub fn random_probe(
    space: &SearchSpace,
    trials: u64,
    seed: u64,
    threads: Option<usize>,
) -> Result<ProbeSummary> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let evaluator = space.evaluator()?;
    let free_len = space.free_len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<IntegerSet> = (0..trials)
        .map(|_| {
            let mut elements: Vec<i64> = sample(&mut rng, space.max_element as usize, free_len)
                .into_iter()
                .map(|i| i as i64 + 1)
                .collect();
            if space.family == Family::ZeroBased {
                elements.push(0);
            }
            IntegerSet::new(elements).expect("k >= 1")
        })
        .collect();

    let pool = build_pool(threads)?;
    let records: Vec<Option<SearchRecord>> = pool.install(|| {
        samples
            .into_par_iter()
            .map(|set| evaluator.evaluate(set))
            .collect::<Result<_>>()
    })?;

    let mut summary = ProbeSummary {
        space: space.clone(),
        trials,
        seed,
        bound_value: evaluator.bound,
        filtered_out: 0,
        min_cardinality: None,
        min_slack: None,
        min_slack_sets: Vec::new(),
        min_slack_structures: Vec::new(),
        equality_count: 0,
        violation_count: 0,
        structure_mismatch_count: 0,
        violations: Vec::new(),
    };
    for record in records {
        let Some(r) = record else {
            summary.filtered_out += 1;
            continue;
        };
        summary.min_cardinality = Some(
            summary
                .min_cardinality
                .map_or(r.cardinality, |m| m.min(r.cardinality)),
        );
        match summary.min_slack {
            Some(m) if r.slack > m => {}
            Some(m) if r.slack == m => summary.min_slack_sets.push(r.set.clone()),
            _ => {
                summary.min_slack = Some(r.slack);
                summary.min_slack_sets = vec![r.set.clone()];
            }
        }
        summary.equality_count += r.equality as u64;
        summary.structure_mismatch_count += r.structure_mismatch as u64;
        if r.is_violation() {
            summary.violation_count += 1;
            summary.violations.push(r);
        }
    }
    summary.min_slack_sets.sort();
    summary.min_slack_sets.dedup();
    summary.min_slack_structures = summary
        .min_slack_sets
        .iter()
        .map(classify_or_none)
        .collect();
    Ok(summary)
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.space;
        writeln!(
            f,
            "space: k={} h={} M={} family={} bound={:?} ({})",
            s.k, s.h, s.max_element, s.family, s.bound, self.bound_value
        )?;
        writeln!(f, "visited: {}", self.visited)?;
        writeln!(f, "evaluated: {}", self.evaluated)?;
        if let Some(m) = self.min_cardinality {
            writeln!(f, "min cardinality: {m}")?;
        }
        if let Some(m) = self.min_slack {
            writeln!(f, "min slack: {m}")?;
        }
        writeln!(f, "equality cases: {}", self.equality_count)?;
        for set in &self.equality_sets {
            writeln!(f, "  {set} {}", classify_or_none(set))?;
        }
        writeln!(f, "violations: {}", self.violation_count)?;
        write!(f, "structure mismatches: {}", self.structure_mismatch_count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::{make_set, StructureKind};
    use crate::verify::check_direct;

    fn set(v: &[i64]) -> IntegerSet {
        make_set(v).unwrap()
    }

    #[test]
    fn positive_h4_equality_cases() {
        let space = SearchSpace::new(5, 4, 20, Family::Positive);
        let summary = sweep(&space, &SweepOptions::default(), |_| {}).unwrap();
        assert_eq!(summary.visited, 15504);
        assert_eq!(summary.min_cardinality, Some(25));
        assert_eq!(summary.violation_count, 0);
        assert_eq!(
            summary.equality_sets,
            vec![set(&[1, 3, 5, 7, 9]), set(&[2, 6, 10, 14, 18])]
        );
        assert!(!summary.found_counterexample());
    }

    #[test]
    fn zero_based_h4_small_range() {
        // Brute force finds two equality cases beyond d * [0,4] in this range.
        let space = SearchSpace::new(5, 4, 12, Family::ZeroBased);
        let summary = sweep(&space, &SweepOptions::default(), |_| {}).unwrap();
        assert_eq!(summary.visited, 495);
        assert_eq!(summary.violation_count, 0);
        assert_eq!(
            summary.equality_sets,
            vec![
                set(&[0, 1, 2, 3, 4]),
                set(&[0, 1, 2, 4, 6]),
                set(&[0, 2, 4, 6, 8]),
                set(&[0, 2, 4, 8, 12]),
                set(&[0, 3, 6, 9, 12]),
            ]
        );
        assert_eq!(summary.structure_mismatch_count, 2);
    }

    #[test]
    fn positive_h3_no_violations() {
        let space = SearchSpace::new(5, 3, 15, Family::Positive);
        let summary = sweep(&space, &SweepOptions::default(), |_| {}).unwrap();
        assert_eq!(summary.visited, 3003);
        assert_eq!(summary.bound_value, 22);
        assert_eq!(summary.violation_count, 0);
        assert_eq!(summary.min_cardinality, Some(22));
    }

    #[test]
    fn space_smaller_than_k() {
        let space = SearchSpace::new(4, 3, 2, Family::Positive);
        assert_eq!(space.size(), 0);
        assert!(matches!(
            sweep(&space, &SweepOptions::default(), |_| {}),
            Err(Error::InvalidSpace(_))
        ));
    }

    #[test]
    fn budget_checked_up_front() {
        let space = SearchSpace::new(5, 4, 20, Family::Positive);
        let options = SweepOptions {
            budget: 1000,
            ..SweepOptions::default()
        };
        assert_eq!(
            sweep(&space, &options, |_| panic!(
                "no work before the budget check"
            )),
            Err(Error::BudgetExceeded {
                size: 15504,
                budget: 1000
            })
        );
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let space = SearchSpace::new(5, 3, 12, Family::Positive);
        let run = |threads| {
            let mut seen = Vec::new();
            let options = SweepOptions {
                threads: Some(threads),
                emit: Emit::All,
                ..SweepOptions::default()
            };
            let summary = sweep(&space, &options, |r| seen.push(r.clone())).unwrap();
            (summary, seen)
        };
        let (one, seen_one) = run(1);
        let (many, seen_many) = run(4);
        assert_eq!(one, many);
        assert_eq!(seen_one, seen_many);
        assert_eq!(seen_one.len(), 792);
        assert!(seen_one.windows(2).all(|w| w[0].set < w[1].set));
    }

    #[test]
    fn records_agree_with_direct_check() {
        let space = SearchSpace::new(5, 4, 9, Family::Positive);
        let options = SweepOptions {
            emit: Emit::All,
            ..SweepOptions::default()
        };
        let mut records = Vec::new();
        sweep(&space, &options, |r| records.push(r.clone())).unwrap();
        for r in records {
            let report = check_direct(&r.set, 4).unwrap();
            assert_eq!(r.cardinality, report.cardinality);
            assert_eq!(r.slack, report.slack);
            assert_eq!(r.equality, report.equality);
            assert_eq!(Some(r.structure), report.structure);
        }
    }

    #[test]
    fn primitive_only_skips_dilates() {
        let space = SearchSpace::new(5, 4, 20, Family::Positive).primitive_only(true);
        let summary = sweep(&space, &SweepOptions::default(), |_| {}).unwrap();
        assert_eq!(summary.visited, 15504);
        assert!(summary.evaluated < summary.visited);
        assert_eq!(summary.equality_sets, vec![set(&[1, 3, 5, 7, 9])]);
    }

    #[test]
    fn csv_line_format() {
        let r = SearchRecord {
            set: set(&[1, 3, 5, 7, 9]),
            cardinality: 25,
            slack: 0,
            equality: true,
            structure: set(&[1, 3, 5, 7, 9]).classify_structure().unwrap(),
            structure_mismatch: false,
        };
        assert_eq!(r.csv_line(), "1,3,5,7,9;25;0;true;ODD_AP_DILATE;1");
        let mut buf = Vec::new();
        let space = SearchSpace::new(5, 4, 9, Family::Positive);
        sweep_to_csv(&space, &SweepOptions::default(), &mut buf)
            .unwrap()
            .unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert_eq!(lines.next(), Some("1,3,5,7,9;25;0;true;ODD_AP_DILATE;1"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn probe_is_reproducible() {
        let space = SearchSpace::new(6, 4, 30, Family::Positive);
        let a = random_probe(&space, 500, 7, Some(1)).unwrap();
        let b = random_probe(&space, 500, 7, Some(3)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.violation_count, 0);
        let c = random_probe(&space, 500, 8, None).unwrap();
        assert_ne!(a.min_slack_sets, c.min_slack_sets);
        assert_eq!(random_probe(&space, 0, 1, None), Err(Error::NoTrials));
    }

    #[test]
    fn probe_min_slack_classified() {
        let space = SearchSpace::new(5, 4, 5, Family::Positive);
        // Only one set exists; every trial draws it.
        let p = random_probe(&space, 3, 1, None).unwrap();
        assert_eq!(p.min_slack_sets, vec![set(&[1, 2, 3, 4, 5])]);
        assert_eq!(p.min_slack_structures[0].kind, StructureKind::GeneralAp);
    }

    #[test]
    fn universal_bound_space() {
        let space = SearchSpace::new(3, 2, 12, Family::Positive).with_bound(BoundChoice::Universal);
        let summary = sweep(&space, &SweepOptions::default(), |_| {}).unwrap();
        assert_eq!(summary.bound_value, 8);
        assert_eq!(summary.equality_count, 2);
        assert_eq!(summary.structure_mismatch_count, 0);

        let space =
            SearchSpace::new(1, 1, 11, Family::ZeroBased).with_bound(BoundChoice::Universal);
        let summary = sweep(&space, &SweepOptions::default(), |_| {}).unwrap();
        assert_eq!(summary.visited, 1);
        assert_eq!(summary.equality_sets, vec![set(&[0])]);
    }

    #[test]
    fn special_filter_space() {
        let space = SearchSpace::new(4, 3, 10, Family::Positive)
            .with_bound(BoundChoice::SpecialDirect)
            .with_filter(Filter::Special);
        let summary = sweep(&space, &SweepOptions::default(), |_| {}).unwrap();
        assert!(summary.evaluated > 0 && summary.evaluated < summary.visited);
        assert_eq!(summary.violation_count, 0);

        let bad =
            SearchSpace::new(5, 3, 10, Family::Positive).with_bound(BoundChoice::SpecialDirect);
        assert!(sweep(&bad, &SweepOptions::default(), |_| {}).is_err());
    }
}
