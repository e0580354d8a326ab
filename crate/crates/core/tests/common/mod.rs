//! Strategies and property bodies shared by the `invariants` and
//! `acceptance` targets.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use sumset_core::{
    compute_sumset, compute_sumset_naive, make_set, IntegerSet, Operator, StructureKind,
};

pub type PropResult = Result<(), TestCaseError>;

pub fn operator() -> impl Strategy<Value = Operator> {
    prop::sample::select(Operator::ALL.to_vec())
}

pub fn signed_operator() -> impl Strategy<Value = Operator> {
    prop::sample::select(vec![Operator::Signed, Operator::RestrictedSigned])
}

/// A set of `1..=max_k` distinct elements from `[-bound, bound]`.
pub fn set(max_k: usize, bound: i64) -> impl Strategy<Value = IntegerSet> {
    prop::collection::btree_set(-bound..=bound, 1..=max_k)
        .prop_map(|s| IntegerSet::new(s).expect("nonempty"))
}

/// A set together with a fold `h` in `[1, min(k, max_h)]`.
pub fn set_and_fold(
    max_k: usize,
    bound: i64,
    max_h: usize,
) -> impl Strategy<Value = (IntegerSet, usize)> {
    set(max_k, bound).prop_flat_map(move |a| {
        let top = a.len().min(max_h);
        (Just(a), 1..=top)
    })
}

pub fn nonzero_factor() -> impl Strategy<Value = i64> {
    prop_oneof![-6i64..=-1, 1i64..=6]
}

pub fn symmetry((a, h): (IntegerSet, usize), op: Operator) -> PropResult {
    let s = compute_sumset(&a, h, op).unwrap();
    for &x in &s.sums {
        prop_assert!(
            s.contains(-x),
            "{} present but {} absent, op {}, h {}, A = {}",
            x,
            -x,
            op,
            h,
            a
        );
    }
    Ok(())
}

pub fn dilation((a, h): (IntegerSet, usize), op: Operator, c: i64) -> PropResult {
    let s = compute_sumset(&a, h, op).unwrap();
    let t = compute_sumset(&a.dilate(c).unwrap(), h, op).unwrap();
    prop_assert_eq!(s.cardinality, t.cardinality);
    let mut scaled: Vec<i64> = s.sums.iter().map(|x| x * c).collect();
    scaled.sort_unstable();
    prop_assert_eq!(scaled, t.sums);
    Ok(())
}

pub fn containment((a, h): (IntegerSet, usize)) -> PropResult {
    let [c, r, s, rs] = Operator::ALL.map(|op| compute_sumset(&a, h, op).unwrap());
    prop_assert!(
        r.is_subset_of(&c),
        "restricted not within classical for {}",
        a
    );
    prop_assert!(
        r.is_subset_of(&rs),
        "restricted not within restricted signed for {}",
        a
    );
    prop_assert!(
        rs.is_subset_of(&s),
        "restricted signed not within signed for {}",
        a
    );
    Ok(())
}

/// `A = d * {1, 3, ..., 2k-1}` with `d` odd, so every element is odd.
pub fn parity_on_odd_progression(k: usize, h: usize, d: i64) -> PropResult {
    let a = IntegerSet::odd_ap_dilate(d, k).unwrap();
    let h = h.min(k);
    let s = compute_sumset(&a, h, Operator::RestrictedSigned).unwrap();
    for &x in &s.sums {
        prop_assert_eq!(x.rem_euclid(2), (h % 2) as i64, "{} in {}^±{}", x, h, a);
    }
    Ok(())
}

/// `A` is a subset of `A ∪ extra`.
pub fn monotonicity((a, h): (IntegerSet, usize), extra: Vec<i64>) -> PropResult {
    let mut wider = a.elements().to_vec();
    wider.extend(extra);
    let b = make_set(&wider).unwrap();
    let small = compute_sumset(&a, h, Operator::RestrictedSigned).unwrap();
    let big = compute_sumset(&b, h, Operator::RestrictedSigned).unwrap();
    prop_assert!(small.is_subset_of(&big), "A = {}, B = {}, h = {}", a, b, h);
    Ok(())
}

pub fn oracle_equivalence((a, h): (IntegerSet, usize), op: Operator) -> PropResult {
    let fast = compute_sumset(&a, h, op).unwrap();
    let slow = compute_sumset_naive(&a, h, op).unwrap();
    prop_assert_eq!(fast, slow);
    Ok(())
}

pub fn result_shape((a, h): (IntegerSet, usize), op: Operator) -> PropResult {
    let s = compute_sumset(&a, h, op).unwrap();
    prop_assert!(s.sums.windows(2).all(|w| w[0] < w[1]));
    prop_assert_eq!(s.cardinality, s.sums.len());
    prop_assert_eq!(s.min_sum, s.sums[0]);
    prop_assert_eq!(s.max_sum, *s.sums.last().unwrap());
    Ok(())
}

pub fn make_set_idempotent(raw: Vec<i64>) -> PropResult {
    let once = make_set(&raw).unwrap();
    prop_assert_eq!(make_set(once.elements()).unwrap(), once.clone());
    prop_assert!(once.elements().windows(2).all(|w| w[0] < w[1]));
    Ok(())
}

pub fn special_kind_survives_dilation(k: usize, d: i64, c: i64, odd: bool) -> PropResult {
    let a = if odd {
        IntegerSet::odd_ap_dilate(d, k).unwrap()
    } else {
        IntegerSet::zero_ap_dilate(d, k).unwrap()
    };
    let before = a.classify_structure().unwrap();
    let after = a.dilate(c).unwrap().classify_structure().unwrap();
    prop_assert_eq!(before.kind, after.kind);
    prop_assert_eq!(after.d, before.d.map(|x| x * c));
    if odd {
        prop_assert_eq!(before.kind, StructureKind::OddApDilate);
        prop_assert!(a.gaps().unwrap().iter().all(|&g| g == 2 * d));
        prop_assert_eq!(a.smallest(), d);
    } else {
        prop_assert_eq!(before.kind, StructureKind::ZeroApDilate);
    }
    Ok(())
}
