//! The four h-fold sumset operators.
//!
//! [`compute_sumset`] runs a layered dynamic program: layer `t` holds the
//! partial sums reachable with total coefficient weight `t`, stored as a
//! dense bitmap over `[-R, R]` when that fits in memory and as a hash set
//! otherwise. [`compute_sumset_naive`] enumerates coefficient vectors one by
//! one and exists to cross-check the DP.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};
use crate::set::IntegerSet;

/// Largest accepted `sum |a_i|` and largest accepted sum magnitude.
pub const RANGE_LIMIT: i64 = 1 << 40;

/// The naive oracle refuses instances with more coefficient vectors than this.
pub const ORACLE_VECTOR_LIMIT: u128 = 100_000_000;

/// Above this many bits across all DP layers the engine switches to sparse layers.
const DENSE_BIT_LIMIT: u128 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operator {
    /// `hA`: `lambda_i in [0, h]`, `sum lambda_i = h`.
    Classical,
    /// `h^A`: `lambda_i in {0, 1}`, `sum lambda_i = h`.
    Restricted,
    /// `h±A`: `lambda_i in [-h, h]`, `sum |lambda_i| = h`.
    Signed,
    /// `h^±A`: `lambda_i in {-1, 0, 1}`, `sum |lambda_i| = h`.
    RestrictedSigned,
}

impl Operator {
    pub const ALL: [Operator; 4] = [
        Operator::Classical,
        Operator::Restricted,
        Operator::Signed,
        Operator::RestrictedSigned,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Operator::Classical => "classical",
            Operator::Restricted => "restricted",
            Operator::Signed => "signed",
            Operator::RestrictedSigned => "restricted-signed",
        }
    }

    /// Each coefficient is limited to magnitude 1.
    pub fn is_restricted(self) -> bool {
        matches!(self, Operator::Restricted | Operator::RestrictedSigned)
    }

    pub fn is_signed(self) -> bool {
        matches!(self, Operator::Signed | Operator::RestrictedSigned)
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operator {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "classical" => Ok(Operator::Classical),
            "restricted" => Ok(Operator::Restricted),
            "signed" => Ok(Operator::Signed),
            "restricted-signed" => Ok(Operator::RestrictedSigned),
            other => Err(format!(
                "unknown operator '{other}' (expected classical, restricted, signed or restricted-signed)"
            )),
        }
    }
}

/// A computed sumset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsetResult {
    pub operator: Operator,
    pub h: usize,
    pub set: IntegerSet,
    pub cardinality: usize,
    #[serde(rename = "min")]
    pub min_sum: i64,
    #[serde(rename = "max")]
    pub max_sum: i64,
    /// Strictly increasing.
    pub sums: Vec<i64>,
}

#[derive(Serialize)]
struct SumsetJson<'a> {
    operator: Operator,
    h: usize,
    set: &'a IntegerSet,
    cardinality: usize,
    min: i64,
    max: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    sums: Option<&'a [i64]>,
}

impl SumsetResult {
    fn from_sorted(operator: Operator, h: usize, set: &IntegerSet, sums: Vec<i64>) -> Self {
        debug_assert!(sums.windows(2).all(|w| w[0] < w[1]));
        SumsetResult {
            operator,
            h,
            set: set.clone(),
            cardinality: sums.len(),
            min_sum: sums[0],
            max_sum: sums[sums.len() - 1],
            sums,
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        self.sums.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &SumsetResult) -> bool {
        self.sums.iter().all(|&x| other.contains(x))
    }

    /// JSON object with the sum list included only when `with_sums` is set.
    pub fn to_json(&self, with_sums: bool) -> serde_json::Value {
        let view = SumsetJson {
            operator: self.operator,
            h: self.h,
            set: &self.set,
            cardinality: self.cardinality,
            min: self.min_sum,
            max: self.max_sum,
            sums: with_sums.then_some(self.sums.as_slice()),
        };
        serde_json::to_value(view).expect("sumset JSON is always serializable")
    }
}

/// True iff `0` is an element of `set`.
pub fn contains_zero_fastpath(set: &IntegerSet) -> bool {
    set.contains_zero()
}

/// Validates `(set, h, op)` and returns the radius `R` such that every
/// partial sum the DP can produce lies in `[-R, R]`.
fn sum_radius(set: &IntegerSet, h: usize, op: Operator) -> Result<i64> {
    if h == 0 {
        return Err(Error::NonPositiveFold);
    }
    let k = set.len();
    if op.is_restricted() && h > k {
        return Err(Error::FoldExceedsSize { h, k });
    }
    let mut magnitudes: Vec<i64> = set
        .elements()
        .iter()
        .map(|a| a.checked_abs().ok_or(Error::RangeOverflow))
        .collect::<Result<_>>()?;
    let total = magnitudes
        .iter()
        .try_fold(0i64, |acc, &m| acc.checked_add(m))
        .ok_or(Error::RangeOverflow)?;
    if total > RANGE_LIMIT {
        return Err(Error::RangeOverflow);
    }
    let radius = if op.is_restricted() {
        magnitudes.sort_unstable_by(|a, b| b.cmp(a));
        magnitudes[..h].iter().sum()
    } else {
        let largest = magnitudes.iter().copied().max().unwrap_or(0);
        i64::try_from(h)
            .ok()
            .and_then(|h| h.checked_mul(largest))
            .ok_or(Error::RangeOverflow)?
    };
    if radius > RANGE_LIMIT {
        return Err(Error::RangeOverflow);
    }
    Ok(radius)
}

/// Computes the h-fold sumset of `set` under `op`.
pub fn compute_sumset(set: &IntegerSet, h: usize, op: Operator) -> Result<SumsetResult> {
    let radius = sum_radius(set, h, op)?;
    let width = 2 * radius as u128 + 1;
    let sums = if width * (h as u128 + 1) <= DENSE_BIT_LIMIT {
        dense_sums(set.elements(), h, op, radius)
    } else {
        sparse_sums(set.elements(), h, op)
    };
    Ok(SumsetResult::from_sorted(op, h, set, sums))
}

fn dense_sums(elements: &[i64], h: usize, op: Operator, radius: i64) -> Vec<i64> {
    let width = (2 * radius + 1) as usize;
    let mut layers = vec![Bitmap::zeros(width); h + 1];
    layers[0].set(radius as usize);

    for (i, &a) in elements.iter().enumerate() {
        match op {
            Operator::Restricted | Operator::RestrictedSigned => {
                // Descending so each element is used at most once.
                for t in (1..=h.min(i + 1)).rev() {
                    let (lower, upper) = layers.split_at_mut(t);
                    let (src, dst) = (&lower[t - 1], &mut upper[0]);
                    dst.or_shifted(src, a);
                    if op == Operator::RestrictedSigned {
                        dst.or_shifted(src, -a);
                    }
                }
            }
            Operator::Classical => {
                // Ascending lets the same element be reused.
                for t in 1..=h {
                    let (lower, upper) = layers.split_at_mut(t);
                    upper[0].or_shifted(&lower[t - 1], a);
                }
            }
            Operator::Signed => {
                // lambda_i has a single sign, so run the +a and -a chains
                // from the same starting layers and merge.
                let mut negative = layers.clone();
                for t in 1..=h {
                    let (lower, upper) = layers.split_at_mut(t);
                    upper[0].or_shifted(&lower[t - 1], a);
                    let (lower, upper) = negative.split_at_mut(t);
                    upper[0].or_shifted(&lower[t - 1], -a);
                }
                for (layer, neg) in layers.iter_mut().zip(&negative) {
                    layer.or_assign(neg);
                }
            }
        }
    }

    layers[h]
        .iter_ones()
        .map(|idx| idx as i64 - radius)
        .collect()
}

fn sparse_sums(elements: &[i64], h: usize, op: Operator) -> Vec<i64> {
    let mut layers: Vec<HashSet<i64>> = vec![HashSet::new(); h + 1];
    layers[0].insert(0);

    for (i, &a) in elements.iter().enumerate() {
        match op {
            Operator::Restricted | Operator::RestrictedSigned => {
                for t in (1..=h.min(i + 1)).rev() {
                    let mut added: Vec<i64> = layers[t - 1].iter().map(|s| s + a).collect();
                    if op == Operator::RestrictedSigned {
                        added.extend(layers[t - 1].iter().map(|s| s - a));
                    }
                    layers[t].extend(added);
                }
            }
            Operator::Classical => {
                for t in 1..=h {
                    let added: Vec<i64> = layers[t - 1].iter().map(|s| s + a).collect();
                    layers[t].extend(added);
                }
            }
            Operator::Signed => {
                let mut negative = layers.clone();
                for t in 1..=h {
                    let added: Vec<i64> = layers[t - 1].iter().map(|s| s + a).collect();
                    layers[t].extend(added);
                    let added: Vec<i64> = negative[t - 1].iter().map(|s| s - a).collect();
                    negative[t].extend(added);
                }
                for (layer, neg) in layers.iter_mut().zip(negative) {
                    layer.extend(neg);
                }
            }
        }
    }

    let mut sums: Vec<i64> = layers.swap_remove(h).into_iter().collect();
    sums.sort_unstable();
    sums
}

fn binomial(n: u128, r: u128) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Number of coefficient vectors `(lambda_1, ..., lambda_k)` admitted by `op`.
pub fn coefficient_vector_count(k: usize, h: usize, op: Operator) -> u128 {
    let (k, h) = (k as u128, h as u128);
    match op {
        Operator::Classical => binomial(h + k - 1, k.saturating_sub(1)),
        Operator::Restricted => binomial(k, h),
        Operator::RestrictedSigned => binomial(k, h).saturating_mul(1u128 << h.min(127)),
        Operator::Signed => (1..=k.min(h))
            .map(|j| {
                binomial(k, j)
                    .saturating_mul(binomial(h - 1, j - 1))
                    .saturating_mul(1u128 << j.min(127))
            })
            .fold(0u128, |acc, x| acc.saturating_add(x)),
    }
}

/// Reference implementation: walks every admissible coefficient vector and
/// collects `sum lambda_i a_i`.
pub fn compute_sumset_naive(set: &IntegerSet, h: usize, op: Operator) -> Result<SumsetResult> {
    sum_radius(set, h, op)?;
    let vectors = coefficient_vector_count(set.len(), h, op);
    if vectors > ORACLE_VECTOR_LIMIT {
        return Err(Error::OracleTooLarge {
            vectors,
            limit: ORACLE_VECTOR_LIMIT,
        });
    }
    let mut sums = BTreeSet::new();
    let mut lambda = vec![0i64; set.len()];
    enumerate_vectors(set.elements(), h as i64, op, 0, &mut lambda, &mut sums);
    Ok(SumsetResult::from_sorted(
        op,
        h,
        set,
        sums.into_iter().collect(),
    ))
}

fn enumerate_vectors(
    elements: &[i64],
    remaining: i64,
    op: Operator,
    i: usize,
    lambda: &mut [i64],
    out: &mut BTreeSet<i64>,
) {
    let k = elements.len();
    if i == k {
        if remaining == 0 {
            out.insert(lambda.iter().zip(elements).map(|(l, a)| l * a).sum());
        }
        return;
    }
    if op.is_restricted() && remaining > (k - i) as i64 {
        return;
    }
    let cap = if op.is_restricted() {
        remaining.min(1)
    } else {
        remaining
    };
    let last = i + 1 == k;
    for magnitude in 0..=cap {
        // The final coordinate must absorb all remaining weight.
        if last && magnitude != remaining {
            continue;
        }
        let signs: &[i64] = if magnitude == 0 || !op.is_signed() {
            &[1]
        } else {
            &[1, -1]
        };
        for &sign in signs {
            lambda[i] = sign * magnitude;
            enumerate_vectors(elements, remaining - magnitude, op, i + 1, lambda, out);
        }
    }
    lambda[i] = 0;
}
