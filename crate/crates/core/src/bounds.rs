//! Closed-form lower bounds and exact cardinalities for restricted signed
//! sumsets, each with an explicit validity window, plus the two gap
//! predicates used by the special-condition bounds.
//!
//! All formulas are evaluated in exact integer arithmetic. The triangular
//! terms `h(h+1)/2` and `h(h-1)/2` are formed as products first and halved
//! afterwards; the product of consecutive integers is always even.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::IntegerSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundFormula {
    pub name: &'static str,
    pub value: i64,
    /// Identifier of the hypothesis the bound is conditioned on.
    pub hypothesis: &'static str,
    /// Whether the bound is known to be attained.
    pub sharp: bool,
}

pub const UNIVERSAL_POSITIVE: &str = "universal-positive";
pub const UNIVERSAL_ZERO: &str = "universal-zero";
pub const POSITIVE_CONJECTURED: &str = "positive-conjectured";
pub const ZERO_CONJECTURED: &str = "zero-conjectured";
pub const RESTRICTED: &str = "restricted";
pub const AP_PREFIX: &str = "ap-prefix";
pub const SPECIAL_SUPERINCREASING: &str = "special-superincreasing";
pub const SPECIAL_SMALLGAP: &str = "special-smallgap";

fn tri_up(h: i64) -> i64 {
    h * (h + 1) / 2
}

fn tri_down(h: i64) -> i64 {
    h * (h - 1) / 2
}

fn window_err(bound: &'static str, window: &'static str, h: usize, k: usize) -> Error {
    Error::OutOfWindow {
        bound,
        window,
        h,
        k,
    }
}

/// `2(hk - h^2) + h(h+1)/2 + 1` for sets of positive integers and
/// `2(hk - h^2) + h(h-1)/2 + 1` when `0` is an element. Valid for
/// `1 <= h <= k`; sharp for `h` in `{1, 2}`.
pub fn bound_universal(h: usize, k: usize, zero_in_a: bool) -> Result<BoundFormula> {
    const WINDOW: &str = "1 <= h <= k";
    if h == 0 || h > k {
        return Err(window_err("universal bound", WINDOW, h, k));
    }
    let (hi, ki) = (h as i64, k as i64);
    let base = 2 * (hi * ki - hi * hi) + 1;
    let (name, value) = if zero_in_a {
        (UNIVERSAL_ZERO, base + tri_down(hi))
    } else {
        (UNIVERSAL_POSITIVE, base + tri_up(hi))
    };
    Ok(BoundFormula {
        name,
        value,
        hypothesis: if zero_in_a {
            "nonnegative, 0 in A, 1 <= h <= k"
        } else {
            "nonnegative, 0 not in A, 1 <= h <= k"
        },
        sharp: h <= 2,
    })
}

/// `2hk - h^2 + 1` for `k >= 4` positive integers and `3 <= h <= k - 1`.
pub fn bound_positive_conjectured(h: usize, k: usize) -> Result<BoundFormula> {
    if k < 4 || h < 3 || h + 1 > k {
        return Err(window_err(
            "positive conjectured bound",
            "k >= 4, 3 <= h <= k-1",
            h,
            k,
        ));
    }
    let (hi, ki) = (h as i64, k as i64);
    Ok(BoundFormula {
        name: POSITIVE_CONJECTURED,
        value: 2 * hi * ki - hi * hi + 1,
        hypothesis: "positive, k >= 4, 3 <= h <= k-1",
        sharp: true,
    })
}

/// `2hk - h(h+1) + 1` for `k >= 5` nonnegative integers containing `0`
/// and `3 <= h <= k - 1`.
pub fn bound_zero_conjectured(h: usize, k: usize) -> Result<BoundFormula> {
    if k < 5 || h < 3 || h + 1 > k {
        return Err(window_err(
            "zero-based conjectured bound",
            "k >= 5, 3 <= h <= k-1",
            h,
            k,
        ));
    }
    let (hi, ki) = (h as i64, k as i64);
    Ok(BoundFormula {
        name: ZERO_CONJECTURED,
        value: 2 * hi * ki - hi * (hi + 1) + 1,
        hypothesis: "nonnegative, 0 in A, k >= 5, 3 <= h <= k-1",
        sharp: true,
    })
}

/// `hk - h^2 + 1`, the classical lower bound for `h^A` over any `k`-element
/// integer set. Equality forces an arithmetic progression once `k >= 5`
/// and `2 <= h <= k - 2`.
pub fn bound_restricted(h: usize, k: usize) -> Result<BoundFormula> {
    if h == 0 || h > k {
        return Err(window_err("restricted bound", "1 <= h <= k", h, k));
    }
    let (hi, ki) = (h as i64, k as i64);
    Ok(BoundFormula {
        name: RESTRICTED,
        value: hi * ki - hi * hi + 1,
        hypothesis: "any integers, 1 <= h <= k",
        sharp: true,
    })
}

/// Restricted signed sumset size of a positive `k`-term progression with
/// `3 <= h <= k - 1`: exactly `2hk - h^2 + 1` when the common difference is
/// twice the minimum, otherwise at least `2hk - h^2 + 2`.
pub fn ap_exact_cardinality(h: usize, k: usize, d_equals_2a1: bool) -> Result<i64> {
    if h < 3 || h + 1 > k {
        return Err(window_err("progression cardinality", "3 <= h <= k-1", h, k));
    }
    let (hi, ki) = (h as i64, k as i64);
    let exact = 2 * hi * ki - hi * hi + 1;
    Ok(if d_equals_2a1 { exact } else { exact + 1 })
}

/// Lower bound for an `(h+1)`-term positive progression: `(h+1)^2` when
/// `d = 2 min(A)`, else `(h+1)^2 + 1`. Requires `h >= 3`.
pub fn ap_prefix_bound(h: usize, d_equals_2a1: bool) -> Result<BoundFormula> {
    if h < 3 {
        return Err(window_err("progression prefix bound", "h >= 3", h, h + 1));
    }
    let sq = (h as i64 + 1).pow(2);
    Ok(BoundFormula {
        name: AP_PREFIX,
        value: if d_equals_2a1 { sq } else { sq + 1 },
        hypothesis: "positive (h+1)-term progression, h >= 3",
        sharp: true,
    })
}

/// `(h+1)^2 + 1` for `(h+1)`-element positive sets satisfying either gap
/// predicate. Requires `h >= 3`.
pub fn special_direct_bound(h: usize, superincreasing: bool) -> Result<BoundFormula> {
    if h < 3 {
        return Err(window_err("special-condition bound", "h >= 3", h, h + 1));
    }
    Ok(BoundFormula {
        name: if superincreasing {
            SPECIAL_SUPERINCREASING
        } else {
            SPECIAL_SMALLGAP
        },
        value: (h as i64 + 1).pow(2) + 1,
        hypothesis: if superincreasing {
            "positive, k = h+1, a_i >= a_{i-1} + a_{i-2} for i >= 4"
        } else {
            "positive, k = h+1, a_3 - a_2 < 2a_1 and 2(a_i - a_{i-1}) > a_2 - a_1 for i >= 4"
        },
        sharp: false,
    })
}

/// The exact sumset `[-(hk - h(h+1)/2), hk - h(h+1)/2]` of `[0, k-1]` for
/// `4 <= h <= k - 1`, returned as its endpoints.
pub fn interval_for_zero_ap(h: usize, k: usize) -> Result<(i64, i64)> {
    if h < 4 || h + 1 > k {
        return Err(window_err("zero-based interval", "4 <= h <= k-1", h, k));
    }
    let (hi, ki) = (h as i64, k as i64);
    let top = hi * ki - tri_up(hi);
    Ok((-top, top))
}

fn check_predicate_input(set: &IntegerSet) -> Result<&[i64]> {
    if set.len() < 4 {
        return Err(Error::Hypothesis(format!(
            "gap predicates need at least 4 elements, got {}",
            set.len()
        )));
    }
    if !set.all_positive() {
        return Err(Error::Hypothesis(
            "gap predicates need positive elements".into(),
        ));
    }
    Ok(set.elements())
}

/// `a_i >= a_{i-1} + a_{i-2}` for every `i` from 4 to `k` (1-based).
pub fn predicate_superincreasing_tail(set: &IntegerSet) -> Result<bool> {
    let a = check_predicate_input(set)?;
    Ok((3..a.len()).all(|i| a[i] >= a[i - 1] + a[i - 2]))
}

/// `a_3 - a_2 < 2 a_1` and `a_i - a_{i-1} > (a_2 - a_1) / 2` for `i` from 4
/// to `k` (1-based), the second compared as `2(a_i - a_{i-1}) > a_2 - a_1`.
pub fn predicate_smallgap(set: &IntegerSet) -> Result<bool> {
    let a = check_predicate_input(set)?;
    let first_gap = a[1] - a[0];
    Ok(a[2] - a[1] < 2 * a[0] && (3..a.len()).all(|i| 2 * (a[i] - a[i - 1]) > first_gap))
}

/// One row of the exported bound catalogue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogueEntry {
    pub name: &'static str,
    pub window: &'static str,
    pub hypothesis: &'static str,
    /// `None` when `(h, k)` lies outside the window.
    pub value: Option<i64>,
}

/// Every `(h, k)`-only bound, evaluated where its window allows.
pub fn bound_catalogue(h: usize, k: usize) -> Vec<CatalogueEntry> {
    fn entry(
        name: &'static str,
        window: &'static str,
        hypothesis: &'static str,
        value: Result<i64>,
    ) -> CatalogueEntry {
        CatalogueEntry {
            name,
            window,
            hypothesis,
            value: value.ok(),
        }
    }
    let interval_size = interval_for_zero_ap(h, k).map(|(lo, hi)| hi - lo + 1);
    vec![
        entry(
            UNIVERSAL_POSITIVE,
            "1 <= h <= k",
            "nonnegative, 0 not in A",
            bound_universal(h, k, false).map(|b| b.value),
        ),
        entry(
            UNIVERSAL_ZERO,
            "1 <= h <= k",
            "nonnegative, 0 in A",
            bound_universal(h, k, true).map(|b| b.value),
        ),
        entry(
            POSITIVE_CONJECTURED,
            "k >= 4, 3 <= h <= k-1",
            "positive",
            bound_positive_conjectured(h, k).map(|b| b.value),
        ),
        entry(
            ZERO_CONJECTURED,
            "k >= 5, 3 <= h <= k-1",
            "nonnegative, 0 in A",
            bound_zero_conjectured(h, k).map(|b| b.value),
        ),
        entry(
            RESTRICTED,
            "1 <= h <= k",
            "any integers (restricted sumset h^A)",
            bound_restricted(h, k).map(|b| b.value),
        ),
        entry(
            "ap-odd-exact",
            "3 <= h <= k-1",
            "positive progression with d = 2 min(A)",
            ap_exact_cardinality(h, k, true),
        ),
        entry(
            "ap-other-lower",
            "3 <= h <= k-1",
            "positive progression with d != 2 min(A)",
            ap_exact_cardinality(h, k, false),
        ),
        entry(
            "zero-ap-interval",
            "4 <= h <= k-1",
            "A = d * [0, k-1]",
            interval_size,
        ),
        entry(
            "special-direct",
            "h >= 3, k = h+1",
            "positive, either gap predicate",
            if k == h + 1 {
                special_direct_bound(h, true).map(|b| b.value)
            } else {
                Err(window_err("special-condition bound", "k = h+1", h, k))
            },
        ),
    ]
}
