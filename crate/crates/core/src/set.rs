//! Finite integer sets and the structural patterns the extremal theorems
//! talk about.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonempty finite set of integers, stored strictly increasing.
///
/// Negative elements are allowed; theorem-specific sign hypotheses are
/// checked by the [`verify`](crate::verify) module.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntegerSet(Vec<i64>);

/// Sorts and deduplicates `raw`. Duplicates are merged, not rejected.
pub fn make_set(raw: &[i64]) -> Result<IntegerSet> {
    IntegerSet::new(raw.iter().copied())
}

impl IntegerSet {
    pub fn new(raw: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut elements: Vec<i64> = raw.into_iter().collect();
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(IntegerSet(elements))
    }

    /// Wraps a vector the caller guarantees is strictly increasing and nonempty.
    pub(crate) fn from_sorted(elements: Vec<i64>) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        IntegerSet(elements)
    }

    /// `{start, start + step, ..., start + (len - 1) step}`.
    pub fn progression(start: i64, step: i64, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptySet);
        }
        if step == 0 && len > 1 {
            return Err(Error::DegenerateDilation);
        }
        let mut elements = Vec::with_capacity(len);
        for i in 0..len as i64 {
            let x = step
                .checked_mul(i)
                .and_then(|v| v.checked_add(start))
                .ok_or(Error::RangeOverflow)?;
            elements.push(x);
        }
        IntegerSet::new(elements)
    }

    /// `d * {1, 3, ..., 2k - 1}`.
    pub fn odd_ap_dilate(d: i64, k: usize) -> Result<Self> {
        Self::progression(d, 2 * d, k)
    }

    /// `d * [0, k - 1]`.
    pub fn zero_ap_dilate(d: i64, k: usize) -> Result<Self> {
        Self::progression(0, d, k)
    }

    pub fn elements(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// Cardinality `k`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn smallest(&self) -> i64 {
        self.0[0]
    }

    pub fn largest(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    /// Second smallest element.
    pub fn min_plus(&self) -> Option<i64> {
        self.0.get(1).copied()
    }

    /// Second largest element.
    pub fn max_minus(&self) -> Option<i64> {
        self.0.len().checked_sub(2).map(|i| self.0[i])
    }

    pub fn contains(&self, x: i64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(0)
    }

    pub fn all_positive(&self) -> bool {
        self.smallest() > 0
    }

    pub fn all_nonnegative(&self) -> bool {
        self.smallest() >= 0
    }

    pub fn is_subset_of(&self, other: &IntegerSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    /// The `n` smallest elements.
    pub fn prefix(&self, n: usize) -> Result<IntegerSet> {
        if n == 0 {
            return Err(Error::EmptySet);
        }
        Ok(IntegerSet(self.0[..n.min(self.0.len())].to_vec()))
    }

    /// The set with its minimum removed.
    pub fn without_min(&self) -> Result<IntegerSet> {
        if self.0.len() < 2 {
            return Err(Error::EmptySet);
        }
        Ok(IntegerSet(self.0[1..].to_vec()))
    }

    /// `c * A`.
    pub fn dilate(&self, c: i64) -> Result<IntegerSet> {
        if c == 0 {
            return Err(Error::DegenerateDilation);
        }
        let scaled = self
            .0
            .iter()
            .map(|&a| a.checked_mul(c).ok_or(Error::RangeOverflow))
            .collect::<Result<Vec<_>>>()?;
        IntegerSet::new(scaled)
    }

    /// `[a_2 - a_1, ..., a_k - a_{k-1}]`.
    pub fn gaps(&self) -> Result<Vec<i64>> {
        if self.0.len() < 2 {
            return Err(Error::GapsUndefined(self.0.len()));
        }
        Ok(self.0.windows(2).map(|w| w[1] - w[0]).collect())
    }

    /// Constant consecutive gaps. Sets with fewer than three elements
    /// qualify trivially.
    pub fn is_arithmetic_progression(&self) -> bool {
        match self.0.len() {
            0..=2 => true,
            _ => {
                let d = self.0[1] - self.0[0];
                self.0.windows(2).all(|w| w[1] - w[0] == d)
            }
        }
    }

    /// Greatest common divisor of the absolute values of the elements.
    pub fn gcd(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &a| gcd(g, a.abs()))
    }

    pub fn classify_structure(&self) -> Result<StructureClass> {
        classify_structure(self)
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl TryFrom<Vec<i64>> for IntegerSet {
    type Error = Error;

    fn try_from(raw: Vec<i64>) -> Result<Self> {
        IntegerSet::new(raw)
    }
}

impl From<IntegerSet> for Vec<i64> {
    fn from(set: IntegerSet) -> Self {
        set.0
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StructureKind {
    /// `d * {1, 3, ..., 2k - 1}`
    OddApDilate,
    /// `d * [0, k - 1]`
    ZeroApDilate,
    GeneralAp,
    None,
}

impl StructureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StructureKind::OddApDilate => "ODD_AP_DILATE",
            StructureKind::ZeroApDilate => "ZERO_AP_DILATE",
            StructureKind::GeneralAp => "GENERAL_AP",
            StructureKind::None => "NONE",
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Structural classification of a set. `d` is the dilation factor for the
/// two special families, the common difference for a general progression,
/// and absent for [`StructureKind::None`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StructureClass {
    pub kind: StructureKind,
    pub d: Option<i64>,
}

impl StructureClass {
    pub const NONE: StructureClass = StructureClass {
        kind: StructureKind::None,
        d: None,
    };
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "{} (d={d})", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

/// Classifies `set` as an odd-progression dilate, a zero-based progression
/// dilate, some other progression, or none of these.
///
/// The dilation factor of the two special families must be positive, so
/// `-1 * {1, 3, 5}` is only a general progression.
pub fn classify_structure(set: &IntegerSet) -> Result<StructureClass> {
    let k = set.len();
    if k < 2 {
        return Err(Error::ClassificationUndefined(k));
    }
    if !set.is_arithmetic_progression() {
        return Ok(StructureClass::NONE);
    }
    let first = set.smallest();
    let step = set.elements()[1] - first;
    let class = if first > 0 && step == 2 * first {
        StructureClass {
            kind: StructureKind::OddApDilate,
            d: Some(first),
        }
    } else if first == 0 {
        StructureClass {
            kind: StructureKind::ZeroApDilate,
            d: Some(step),
        }
    } else {
        StructureClass {
            kind: StructureKind::GeneralAp,
            d: Some(step),
        }
    };
    Ok(class)
}

/// Like [`classify_structure`] but maps singletons to `NONE`.
pub fn classify_or_none(set: &IntegerSet) -> StructureClass {
    classify_structure(set).unwrap_or(StructureClass::NONE)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[i64]) -> IntegerSet {
        make_set(v).unwrap()
    }

    #[test]
    fn make_set_sorts_and_dedups() {
        let a = set(&[9, 1, 5, 3, 7]);
        assert_eq!(a.elements(), &[1, 3, 5, 7, 9]);
        assert_eq!(a.len(), 5);

        let b = set(&[0, 0, 2]);
        assert_eq!(b.elements(), &[0, 2]);
        assert_eq!(b.len(), 2);

        assert_eq!(make_set(&[]), Err(Error::EmptySet));
    }

    #[test]
    fn dilate_examples() {
        assert_eq!(set(&[1, 3, 5]).dilate(2).unwrap(), set(&[2, 6, 10]));
        assert_eq!(set(&[1, 3, 5]).dilate(-1).unwrap(), set(&[-5, -3, -1]));
        assert_eq!(set(&[0, 1, 2]).dilate(3).unwrap(), set(&[0, 3, 6]));
        assert_eq!(set(&[1]).dilate(0), Err(Error::DegenerateDilation));
        assert_eq!(set(&[i64::MAX]).dilate(2), Err(Error::RangeOverflow));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            set(&[2, 6, 10, 14, 18]).classify_structure().unwrap(),
            StructureClass {
                kind: StructureKind::OddApDilate,
                d: Some(2)
            }
        );
        assert_eq!(
            set(&[0, 3, 6, 9, 12]).classify_structure().unwrap(),
            StructureClass {
                kind: StructureKind::ZeroApDilate,
                d: Some(3)
            }
        );
        assert_eq!(
            set(&[1, 2, 4, 6, 8]).classify_structure().unwrap(),
            StructureClass::NONE
        );
        assert_eq!(
            set(&[2, 5, 8]).classify_structure().unwrap(),
            StructureClass {
                kind: StructureKind::GeneralAp,
                d: Some(3)
            }
        );
        assert_eq!(
            set(&[-5, -3, -1]).classify_structure().unwrap().kind,
            StructureKind::GeneralAp
        );
        assert_eq!(
            set(&[5]).classify_structure(),
            Err(Error::ClassificationUndefined(1))
        );
    }

    #[test]
    fn gaps_examples() {
        assert_eq!(set(&[1, 3, 5, 7, 9]).gaps().unwrap(), vec![2, 2, 2, 2]);
        assert_eq!(set(&[1, 2, 4, 8]).gaps().unwrap(), vec![1, 2, 4]);
        assert_eq!(set(&[5]).gaps(), Err(Error::GapsUndefined(1)));
    }

    #[test]
    fn order_statistics() {
        let a = set(&[4, -2, 9, 0]);
        assert_eq!(a.smallest(), -2);
        assert_eq!(a.largest(), 9);
        assert_eq!(a.min_plus(), Some(0));
        assert_eq!(a.max_minus(), Some(4));
        assert!(a.contains_zero());
        assert_eq!(set(&[7]).min_plus(), None);
        assert_eq!(set(&[6, 10, 14]).gcd(), 2);
    }

    #[test]
    fn json_is_ascending_array() {
        let a = set(&[3, 1, 2]);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[1,2,3]");
        let b: IntegerSet = serde_json::from_str("[5,1,5]").unwrap();
        assert_eq!(b.elements(), &[1, 5]);
        assert!(serde_json::from_str::<IntegerSet>("[]").is_err());
    }

    #[test]
    fn family_constructors() {
        assert_eq!(
            IntegerSet::odd_ap_dilate(1, 5).unwrap(),
            set(&[1, 3, 5, 7, 9])
        );
        assert_eq!(
            IntegerSet::zero_ap_dilate(3, 4).unwrap(),
            set(&[0, 3, 6, 9])
        );
    }
}
