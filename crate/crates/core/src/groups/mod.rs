//! Finite groups small enough to hold as a Cayley table: permutations,
//! closure from generators, conjugacy classes, centralizers and G-sets.

mod finite_group;
mod gset;
pub mod parse;
mod permutation;

use thiserror::Error;

pub use finite_group::{symmetric_group, Elem, FiniteGroup, DEFAULT_ORDER_CAP};
pub use gset::GSet;
pub use permutation::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generators have different degrees ({expected} vs {found})")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("not a bijection: {0:?}")]
    NotABijection(Vec<usize>),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("symmetric group of degree 0 is not supported")]
    EmptyDegree,
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element {0} is not in the group")]
    NotInGroup(String),
}
