//! Exact decategorified computations around symmetric and exterior powers
//! of categories: the Schur cocycle of the symmetric groups, supersymbols and
//! 2-characters, graded character series of power operations, and the
//! Grothendieck-group shadow of the categorical Koszul complexes.

pub mod groups;
pub mod partitions;
pub mod schur_cocycle;
pub mod super_k;
pub mod two_reps;
pub mod power_ops;
pub mod koszul;
