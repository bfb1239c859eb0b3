//! The Schur double cover of the symmetric group and its ±1 cocycle.
//!
//! Permutations are lifted through their lexicographically smallest reduced
//! words into a Clifford algebra where the simple transpositions become
//! `ŝ_i = i (e_i - e_{i+1}) / √2`. Comparing `lift(σ) lift(τ)` with
//! `lift(στ)` yields the cocycle. An independent table built only from the
//! defining relations of the cover serves as a cross-check for small degree.

mod clifford;
mod regularity;
mod rewriting;
mod table;
mod words;

use thiserror::Error;

use crate::groups::GroupError;
use crate::partitions::PartitionError;

pub use clifford::{CliffordElement, GaussianInt};
pub use regularity::{
    classify_classes, count_regular_classes, irreducible_counts, is_c_regular_bruteforce, is_c_regular_schur,
    schur_supersymbol_character, ClassRegularity, RegularityMode, MAX_CRITERION_DEGREE,
};
pub use rewriting::{rewriting_cocycle, MAX_REWRITING_DEGREE};
pub use table::{clifford_cocycle_value, clifford_lift, cocycle, CocycleTable, MAX_LIFT_DEGREE, MAX_TABLE_DEGREE};
pub use words::{
    canonical_reduced_word, is_left_descent, is_right_descent, square_move_parity_check, word_to_permutation,
    ReducedWord, WordGraph, MAX_WORD_GRAPH_DEGREE, MAX_WORD_GRAPH_VERTICES,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("{g} and {h} do not commute")]
    NotCommuting { g: String, h: String },
    #[error("lifts of {sigma} and {tau} differ by more than a sign")]
    NonCentralDiscrepancy { sigma: String, tau: String },
    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("reduced-word graph too large for degree {degree} (cap {cap})")]
    GraphTooLarge { degree: usize, cap: usize },
    #[error("{0} is not an element of the symmetric group in use")]
    NotInGroup(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}
