//! Executable checks for the direct and inverse statements about `h^±A`.
//!
//! Hypotheses are preconditions: a violated one is an [`Error`]. A failed
//! conclusion is data: it comes back inside the report with
//! [`Verdict::is_counterexample`] set, so sweeps can record it and move on.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundFormula};
use crate::error::{Error, Result};
use crate::set::{classify_structure, IntegerSet, StructureClass, StructureKind};
use crate::sumset::{compute_sumset, Operator};

/// Which extremal family a nonnegative input belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    /// Every element positive.
    Positive,
    /// Nonnegative with `0` as an element.
    ZeroBased,
}

impl Family {
    /// Structure the conjectured extremal sets of this family have.
    pub fn extremal_kind(self) -> StructureKind {
        match self {
            Family::Positive => StructureKind::OddApDilate,
            Family::ZeroBased => StructureKind::ZeroApDilate,
        }
    }

    pub fn of(set: &IntegerSet) -> Result<Family> {
        if set.smallest() < 0 {
            return Err(Error::Hypothesis(format!(
                "elements must be nonnegative, {set} has {}",
                set.smallest()
            )));
        }
        Ok(if set.contains_zero() {
            Family::ZeroBased
        } else {
            Family::Positive
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Positive => "POSITIVE",
            Family::ZeroBased => "ZERO_BASED",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Common interface of every checker result.
pub trait Verdict {
    /// The mathematical claim under test failed on this input.
    fn is_counterexample(&self) -> bool;
    fn subject(&self) -> &IntegerSet;
}

/// Measured cardinality against one lower bound.
///
/// `slack` is never clamped: a negative value is a counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub set: IntegerSet,
    pub h: usize,
    pub operator: Operator,
    pub cardinality: i64,
    pub bound_name: &'static str,
    pub bound_value: i64,
    pub slack: i64,
    pub equality: bool,
    pub structure: Option<StructureClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl BoundReport {
    pub fn new(
        set: &IntegerSet,
        h: usize,
        operator: Operator,
        cardinality: usize,
        bound: &BoundFormula,
    ) -> Self {
        let cardinality = cardinality as i64;
        let slack = cardinality - bound.value;
        BoundReport {
            set: set.clone(),
            h,
            operator,
            cardinality,
            bound_name: bound.name,
            bound_value: bound.value,
            slack,
            equality: slack == 0,
            structure: classify_structure(set).ok(),
            note: None,
        }
    }
}

impl Verdict for BoundReport {
    fn is_counterexample(&self) -> bool {
        self.slack < 0
    }

    fn subject(&self) -> &IntegerSet {
        &self.set
    }
}

fn restricted_signed_size(set: &IntegerSet, h: usize) -> Result<usize> {
    Ok(compute_sumset(set, h, Operator::RestrictedSigned)?.cardinality)
}

fn conjectured_bound(set: &IntegerSet, h: usize) -> Result<(Family, BoundFormula)> {
    let family = Family::of(set)?;
    let bound = match family {
        Family::Positive => bounds::bound_positive_conjectured(h, set.len())?,
        Family::ZeroBased => bounds::bound_zero_conjectured(h, set.len())?,
    };
    Ok((family, bound))
}

/// `|h^±A|` against `2hk - h^2 + 1` (positive `A`) or `2hk - h(h+1) + 1`
/// (`0` in `A`).
pub fn check_direct(set: &IntegerSet, h: usize) -> Result<BoundReport> {
    let (family, bound) = conjectured_bound(set, h)?;
    let mut report = BoundReport::new(
        set,
        h,
        Operator::RestrictedSigned,
        restricted_signed_size(set, h)?,
        &bound,
    );
    if family == Family::ZeroBased && h == 3 {
        report.note = Some("h = 3 with 0 in A: bound is conjectured, exactness not established");
    }
    Ok(report)
}

/// `|h^±A|` against the bound valid for every `1 <= h <= k` on
/// nonnegative sets.
pub fn check_universal(set: &IntegerSet, h: usize) -> Result<BoundReport> {
    let family = Family::of(set)?;
    let bound = bounds::bound_universal(h, set.len(), family == Family::ZeroBased)?;
    Ok(BoundReport::new(
        set,
        h,
        Operator::RestrictedSigned,
        restricted_signed_size(set, h)?,
        &bound,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseVerdict {
    pub report: BoundReport,
    pub family: Family,
    pub equality_holds: bool,
    pub predicted_structure: StructureClass,
    /// Present only when equality holds.
    pub structure_matches: Option<bool>,
}

impl Verdict for InverseVerdict {
    fn is_counterexample(&self) -> bool {
        self.report.is_counterexample() || self.structure_matches == Some(false)
    }

    fn subject(&self) -> &IntegerSet {
        &self.report.set
    }
}

/// If `A` attains the conjectured bound, does it belong to the predicted
/// extremal family?
pub fn check_inverse(set: &IntegerSet, h: usize) -> Result<InverseVerdict> {
    let report = check_direct(set, h)?;
    let family = Family::of(set)?;
    let predicted_structure = classify_structure(set)?;
    let equality_holds = report.equality;
    Ok(InverseVerdict {
        structure_matches: equality_holds
            .then_some(predicted_structure.kind == family.extremal_kind()),
        report,
        family,
        equality_holds,
        predicted_structure,
    })
}

/// Both sides of the prefix-surplus inequality: if the `h+1` smallest
/// elements already give `base + t` sums with `t >= 0`, the full set gives
/// at least the conjectured bound plus `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionAudit {
    pub set: IntegerSet,
    pub h: usize,
    pub family: Family,
    pub prefix: IntegerSet,
    pub prefix_cardinality: i64,
    /// `(h+1)^2` for positive sets, `h(h+1) + 1` with `0` in `A`.
    pub prefix_threshold: i64,
    pub t: i64,
    /// The inequality's hypothesis `t >= 0` holds.
    pub applicable: bool,
    pub asserted_bound: i64,
    pub actual: i64,
    /// `asserted_bound <= actual`; present only when applicable.
    pub holds: Option<bool>,
}

impl Verdict for DecompositionAudit {
    fn is_counterexample(&self) -> bool {
        self.holds == Some(false)
    }

    fn subject(&self) -> &IntegerSet {
        &self.set
    }
}

pub fn check_lemma_decomposition(set: &IntegerSet, h: usize) -> Result<DecompositionAudit> {
    let (family, bound) = conjectured_bound(set, h)?;
    let prefix = set.prefix(h + 1)?;
    let hi = h as i64;
    let prefix_threshold = match family {
        Family::Positive => (hi + 1) * (hi + 1),
        Family::ZeroBased => hi * (hi + 1) + 1,
    };
    let prefix_cardinality = restricted_signed_size(&prefix, h)? as i64;
    let t = prefix_cardinality - prefix_threshold;
    let applicable = t >= 0;
    let asserted_bound = bound.value + t;
    let actual = restricted_signed_size(set, h)? as i64;
    Ok(DecompositionAudit {
        set: set.clone(),
        h,
        family,
        prefix,
        prefix_cardinality,
        prefix_threshold,
        t,
        applicable,
        asserted_bound,
        actual,
        holds: applicable.then_some(asserted_bound <= actual),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub id: char,
    pub description: &'static str,
    /// The condition itself holds for `A`.
    pub applicable: bool,
    /// Equality and the condition both hold, so the conclusion is claimed.
    pub triggered: bool,
    /// Present only when triggered.
    pub conclusion_verified: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialInverseReport {
    pub set: IntegerSet,
    pub h: usize,
    pub family: Family,
    pub cardinality: i64,
    pub bound_value: i64,
    pub equality: bool,
    /// The claimed conclusion: `A = a * {1,3,...,2k-1}` (positive) or
    /// `A = a * [0,k-1]` (zero-based), `a` the smallest positive element.
    pub conclusion_holds: bool,
    pub conditions: Vec<ConditionCheck>,
}

impl Verdict for PartialInverseReport {
    fn is_counterexample(&self) -> bool {
        self.conditions
            .iter()
            .any(|c| c.conclusion_verified == Some(false))
    }

    fn subject(&self) -> &IntegerSet {
        &self.set
    }
}

/// Conditions under which equality in the conjectured bound is known to
/// force the extremal structure, each tested on `A`.
///
/// `A_p` is the `h+1` smallest elements and `A'` is `A` without its
/// minimum. Condition (c) is only defined for `4 <= h <= k - 3` and is
/// reported inapplicable outside that window.
pub fn check_partial_inverse_conditions(
    set: &IntegerSet,
    h: usize,
) -> Result<PartialInverseReport> {
    let k = set.len();
    if h < 4 || h + 1 > k {
        return Err(Error::OutOfWindow {
            bound: "partial inverse conditions",
            window: "4 <= h <= k-1",
            h,
            k,
        });
    }
    let (family, bound) = conjectured_bound(set, h)?;
    let full = compute_sumset(set, h, Operator::RestrictedSigned)?;
    let cardinality = full.cardinality as i64;
    let equality = cardinality == bound.value;

    let prefix = set.prefix(h + 1)?;
    let rest = set.without_min()?;
    let prefix_sums = compute_sumset(&prefix, h, Operator::RestrictedSigned)?;
    let hi = h as i64;
    let prefix_threshold = match family {
        Family::Positive => (hi + 1) * (hi + 1),
        Family::ZeroBased => hi * (hi + 1) + 1,
    };
    let prefix_large = prefix_sums.cardinality as i64 >= prefix_threshold;
    let rest_is_ap = rest.is_arithmetic_progression();

    // h^(-A') ∪ h^±A_p ∪ h^A' as a set, compared to h^±A.
    let rest_sums = compute_sumset(&rest, h, Operator::Restricted)?;
    let mut union: BTreeSet<i64> = rest_sums.sums.iter().map(|&x| -x).collect();
    union.extend(prefix_sums.sums.iter().copied());
    union.extend(rest_sums.sums.iter().copied());
    let decomposes = union.len() == full.sums.len() && union.iter().eq(full.sums.iter());

    let scale = match family {
        Family::Positive => set.smallest(),
        Family::ZeroBased => set.min_plus().expect("k >= 5"),
    };
    let conclusion_holds = match family {
        Family::Positive => IntegerSet::odd_ap_dilate(scale, k)? == *set,
        Family::ZeroBased => IntegerSet::zero_ap_dilate(scale, k)? == *set,
    };

    let conditions = [
        (
            'a',
            "A is an arithmetic progression",
            set.is_arithmetic_progression(),
        ),
        (
            'b',
            "the h+1 smallest elements form an arithmetic progression",
            prefix.is_arithmetic_progression(),
        ),
        (
            'c',
            "prefix sumset reaches its threshold and 4 <= h <= k-3",
            prefix_large && h + 3 <= k,
        ),
        (
            'd',
            "h^+-A = h^(-A') U h^+-A_p U h^A' and A' is an arithmetic progression",
            decomposes && rest_is_ap,
        ),
        (
            'e',
            "prefix sumset reaches its threshold and A' is an arithmetic progression",
            prefix_large && rest_is_ap,
        ),
    ]
    .into_iter()
    .map(|(id, description, applicable)| {
        let triggered = equality && applicable;
        ConditionCheck {
            id,
            description,
            applicable,
            triggered,
            conclusion_verified: triggered.then_some(conclusion_holds),
        }
    })
    .collect();

    Ok(PartialInverseReport {
        set: set.clone(),
        h,
        family,
        cardinality,
        bound_value: bound.value,
        equality,
        conclusion_holds,
        conditions,
    })
}

/// `|h^±A| >= (h+1)^2 + 1` for an `(h+1)`-element positive set satisfying
/// either gap predicate. The superincreasing predicate is reported when
/// both hold.
pub fn check_special_direct(set: &IntegerSet, h: usize) -> Result<BoundReport> {
    if h < 3 {
        return Err(Error::OutOfWindow {
            bound: "special-condition bound",
            window: "h >= 3",
            h,
            k: set.len(),
        });
    }
    if set.len() != h + 1 {
        return Err(Error::Hypothesis(format!(
            "special-condition bounds need exactly h+1 = {} elements, got {}",
            h + 1,
            set.len()
        )));
    }
    if !set.all_positive() {
        return Err(Error::Hypothesis(
            "special-condition bounds need positive elements".into(),
        ));
    }
    let bound = if bounds::predicate_superincreasing_tail(set)? {
        bounds::special_direct_bound(h, true)?
    } else if bounds::predicate_smallgap(set)? {
        bounds::special_direct_bound(h, false)?
    } else {
        return Err(Error::Hypothesis(
            "neither the superincreasing nor the small-gap predicate holds".into(),
        ));
    };
    Ok(BoundReport::new(
        set,
        h,
        Operator::RestrictedSigned,
        restricted_signed_size(set, h)?,
        &bound,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApTheoremReport {
    pub set: IntegerSet,
    pub h: usize,
    pub a1: i64,
    pub d: i64,
    pub d_equals_2a1: bool,
    pub cardinality: i64,
    /// `(h+1)^2`.
    pub target: i64,
    pub lower_bound: i64,
    pub lower_bound_holds: bool,
    /// `cardinality == target`.
    pub equality: bool,
    /// `equality == d_equals_2a1`.
    pub iff_holds: bool,
}

impl Verdict for ApTheoremReport {
    fn is_counterexample(&self) -> bool {
        !(self.lower_bound_holds && self.iff_holds)
    }

    fn subject(&self) -> &IntegerSet {
        &self.set
    }
}

/// For `A = {a1 + i d : 0 <= i <= h}`: `|h^±A| = (h+1)^2` exactly when
/// `d = 2 a1`, and `|h^±A| >= (h+1)^2 + 1` otherwise.
pub fn check_ap_theorem(a1: i64, d: i64, h: usize) -> Result<ApTheoremReport> {
    if a1 <= 0 || d <= 0 {
        return Err(Error::Hypothesis(format!(
            "a1 and d must be positive, got a1 = {a1}, d = {d}"
        )));
    }
    let d_equals_2a1 = d == 2 * a1;
    let lower = bounds::ap_prefix_bound(h, d_equals_2a1)?;
    let set = IntegerSet::progression(a1, d, h + 1)?;
    let cardinality = restricted_signed_size(&set, h)? as i64;
    let target = (h as i64 + 1).pow(2);
    let equality = cardinality == target;
    Ok(ApTheoremReport {
        set,
        h,
        a1,
        d,
        d_equals_2a1,
        cardinality,
        target,
        lower_bound: lower.value,
        lower_bound_holds: cardinality >= lower.value,
        equality,
        iff_holds: equality == d_equals_2a1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedReport {
    pub report: BoundReport,
    /// `k >= 5` and `2 <= h <= k-2`, where equality forces a progression.
    pub inverse_window: bool,
    pub is_ap: bool,
    /// Present only when equality holds inside the inverse window.
    pub inverse_holds: Option<bool>,
}

impl Verdict for RestrictedReport {
    fn is_counterexample(&self) -> bool {
        self.report.is_counterexample() || self.inverse_holds == Some(false)
    }

    fn subject(&self) -> &IntegerSet {
        &self.report.set
    }
}

/// `|h^A| >= hk - h^2 + 1`, with equality forcing an arithmetic
/// progression when `k >= 5` and `2 <= h <= k - 2`.
pub fn check_restricted(set: &IntegerSet, h: usize) -> Result<RestrictedReport> {
    let k = set.len();
    let bound = bounds::bound_restricted(h, k)?;
    let sums = compute_sumset(set, h, Operator::Restricted)?;
    let report = BoundReport::new(set, h, Operator::Restricted, sums.cardinality, &bound);
    let inverse_window = k >= 5 && h >= 2 && h + 2 <= k;
    let is_ap = set.is_arithmetic_progression();
    Ok(RestrictedReport {
        inverse_holds: (inverse_window && report.equality).then_some(is_ap),
        report,
        inverse_window,
        is_ap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::make_set;

    fn set(v: &[i64]) -> IntegerSet {
        make_set(v).unwrap()
    }

    #[test]
    fn direct_examples() {
        let r = check_direct(&set(&[1, 3, 5, 7, 9]), 4).unwrap();
        assert_eq!(
            (r.cardinality, r.bound_value, r.slack, r.equality),
            (25, 25, 0, true)
        );

        let r = check_direct(&set(&[0, 1, 2, 3, 4]), 4).unwrap();
        assert_eq!((r.cardinality, r.bound_value, r.equality), (21, 21, true));

        let r = check_direct(&set(&[1, 2, 4, 6, 10]), 4).unwrap();
        assert_eq!(r.cardinality, 34);
        assert_eq!(r.slack, 9);
    }

    #[test]
    fn direct_hypotheses() {
        assert!(matches!(
            check_direct(&set(&[-1, 2, 3, 4, 5]), 4),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            check_direct(&set(&[1, 2, 3]), 4),
            Err(Error::OutOfWindow { .. })
        ));
        // 0 in A needs k >= 5.
        assert!(check_direct(&set(&[0, 1, 2, 3]), 3).is_err());
        let r = check_direct(&set(&[0, 1, 2, 3, 4]), 3).unwrap();
        assert!(r.note.is_some());
        assert_eq!(r.bound_value, 19);
    }

    #[test]
    fn inverse_examples() {
        let v = check_inverse(&set(&[2, 6, 10, 14, 18]), 4).unwrap();
        assert!(v.equality_holds);
        assert_eq!(v.report.cardinality, 25);
        assert_eq!(
            v.predicted_structure,
            StructureClass {
                kind: StructureKind::OddApDilate,
                d: Some(2)
            }
        );
        assert_eq!(v.structure_matches, Some(true));
        assert!(!v.is_counterexample());

        let v = check_inverse(&set(&[1, 3, 5, 7, 11]), 4).unwrap();
        assert!(!v.equality_holds);
        assert_eq!(v.report.cardinality, 27);
        assert_eq!(v.structure_matches, None);

        let v = check_inverse(&set(&[0, 2, 4, 6, 8]), 4).unwrap();
        assert!(v.equality_holds);
        assert_eq!(v.predicted_structure.kind, StructureKind::ZeroApDilate);
        assert_eq!(v.predicted_structure.d, Some(2));
        assert_eq!(v.structure_matches, Some(true));
    }

    #[test]
    fn zero_based_k5_equality_outside_the_predicted_family() {
        // {0,1,2,4,6}: odd sums -13..13 plus {0, ±4, ±8, ±12}, 21 in total.
        let v = check_inverse(&set(&[0, 1, 2, 4, 6]), 4).unwrap();
        assert!(v.equality_holds);
        assert_eq!(v.predicted_structure, StructureClass::NONE);
        assert_eq!(v.structure_matches, Some(false));
        assert!(v.is_counterexample());
    }

    #[test]
    fn lemma_examples() {
        let a = check_lemma_decomposition(&set(&[1, 3, 5, 7, 9, 11]), 4).unwrap();
        assert_eq!(a.prefix_cardinality, 25);
        assert_eq!(a.t, 0);
        assert_eq!(a.asserted_bound, 33);
        assert_eq!(a.actual, 33);
        assert_eq!(a.holds, Some(true));

        let a = check_lemma_decomposition(&set(&[1, 2, 3, 4, 5, 6]), 4).unwrap();
        assert_eq!(a.prefix_cardinality, 29);
        assert_eq!(a.t, 4);
        assert_eq!(a.asserted_bound, 37);
        assert_eq!(a.actual, 37);
        assert_eq!(a.holds, Some(true));

        let a = check_lemma_decomposition(&set(&[0, 1, 2, 3, 4, 5]), 4).unwrap();
        assert_eq!(a.family, Family::ZeroBased);
        assert_eq!(a.prefix, set(&[0, 1, 2, 3, 4]));
        assert_eq!(a.prefix_threshold, 21);
        assert_eq!(a.t, 0);
        assert_eq!(a.asserted_bound, 29);
        assert_eq!(a.actual, 29);
    }

    #[test]
    fn partial_inverse_examples() {
        let r = check_partial_inverse_conditions(&set(&[1, 3, 5, 7, 9, 11]), 4).unwrap();
        assert!(r.equality);
        let a = &r.conditions[0];
        assert!(a.applicable && a.triggered);
        assert_eq!(a.conclusion_verified, Some(true));
        assert!(r
            .conditions
            .iter()
            .all(|c| c.conclusion_verified != Some(false)));

        let r = check_partial_inverse_conditions(&set(&[1, 2, 4, 8, 16, 32]), 4).unwrap();
        assert!(!r.equality);
        assert_eq!(r.cardinality, 104);
        assert!(r.conditions.iter().all(|c| !c.triggered));

        let r = check_partial_inverse_conditions(&set(&[3, 9, 15, 21, 27, 33]), 4).unwrap();
        assert!(r.equality);
        assert_eq!(r.conditions[0].conclusion_verified, Some(true));

        // (c) needs h <= k-3.
        let r = check_partial_inverse_conditions(&set(&[1, 3, 5, 7, 9]), 4).unwrap();
        assert!(!r.conditions[2].applicable);
        assert!(r.conditions[1].triggered);

        assert!(check_partial_inverse_conditions(&set(&[1, 3, 5, 7, 9]), 3).is_err());
    }

    #[test]
    fn partial_inverse_zero_based() {
        let r = check_partial_inverse_conditions(&set(&[0, 2, 4, 6, 8, 10]), 4).unwrap();
        assert!(r.equality);
        assert!(r.conclusion_holds);
        assert!(!r.is_counterexample());
    }

    #[test]
    fn special_direct_examples() {
        let r = check_special_direct(&set(&[1, 5, 6, 11, 17]), 4).unwrap();
        assert_eq!(r.bound_name, bounds::SPECIAL_SUPERINCREASING);
        assert_eq!(r.cardinality, 47);
        assert!(r.slack >= 1);

        let r = check_special_direct(&set(&[3, 4, 5, 6, 7]), 4).unwrap();
        assert_eq!(r.bound_name, bounds::SPECIAL_SMALLGAP);
        assert_eq!(r.cardinality, 41);

        let r = check_special_direct(&set(&[2, 3, 4, 5, 6]), 4).unwrap();
        assert_eq!(r.cardinality, 37);

        let r = check_special_direct(&set(&[1, 2, 3, 4, 5]), 4).unwrap();
        assert_eq!(r.cardinality, 29);

        assert!(matches!(
            check_special_direct(&set(&[1, 2, 5, 6, 7]), 4),
            Err(Error::Hypothesis(_))
        ));
        assert!(check_special_direct(&set(&[1, 2, 4, 6, 10, 16]), 4).is_err());
    }

    #[test]
    fn ap_theorem_examples() {
        let r = check_ap_theorem(1, 2, 4).unwrap();
        assert_eq!(r.cardinality, 25);
        assert!(r.equality && r.iff_holds);

        let r = check_ap_theorem(1, 3, 3).unwrap();
        assert_eq!(r.cardinality, 24);
        assert!(r.cardinality >= 17 && !r.equality && r.iff_holds);

        let r = check_ap_theorem(2, 4, 4).unwrap();
        assert_eq!(r.cardinality, 25);

        assert!(check_ap_theorem(0, 2, 4).is_err());
        assert!(check_ap_theorem(1, 2, 2).is_err());
    }

    #[test]
    fn restricted_bound() {
        let r = check_restricted(&set(&[1, 2, 3, 4]), 2).unwrap();
        assert_eq!(r.report.cardinality, 5);
        assert!(r.report.equality);
        let r = check_restricted(&set(&[1, 2, 3, 4, 5]), 2).unwrap();
        assert_eq!(r.inverse_holds, Some(true));
        let r = check_restricted(&set(&[1, 2, 3, 5, 8]), 2).unwrap();
        assert!(r.report.slack > 0);
    }

    #[test]
    fn report_json_field_names() {
        let r = check_direct(&set(&[1, 3, 5, 7, 9]), 4).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "set",
            "h",
            "operator",
            "cardinality",
            "bound_name",
            "bound_value",
            "slack",
            "equality",
            "structure",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["structure"]["kind"], "ODD_AP_DILATE");
        assert_eq!(v["structure"]["d"], 1);
    }
}
