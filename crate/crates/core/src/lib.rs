//! Sumsets of finite integer sets: the classical `hA`, restricted `h^A`,
//! signed `h±A` and restricted signed `h^±A` operators, closed-form lower
//! bounds for `|h^±A|`, executable checks of the direct and inverse
//! statements about it, and exhaustive searches for extremal sets.

mod bitmap;
pub mod bounds;
pub mod error;
pub mod reproduce;
pub mod search;
pub mod set;
pub mod sumset;
pub mod verify;

pub use error::{Error, Result};
pub use set::{classify_structure, make_set, IntegerSet, StructureClass, StructureKind};
pub use sumset::{
    compute_sumset, compute_sumset_naive, contains_zero_fastpath, Operator, SumsetResult,
};
pub use verify::{Family, Verdict};
