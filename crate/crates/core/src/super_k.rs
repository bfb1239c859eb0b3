//! Dimension arithmetic for super 2-vector spaces and complexified
//! Grothendieck groups.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::groups::{Elem, FiniteGroup};
use crate::partitions::{partition_count, strict_parity_counts, PartitionError};

pub const MAX_KDIM_DEGREE: usize = 30;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuperKError {
    #[error("degree {degree} exceeds the cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("grading is not a homomorphism to Z/2 at ({g}, {h})")]
    BadGrading { g: Elem, h: Elem },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// `[n|m]`: `n` absolutely irreducible classes up to shift and `m`
/// self-associate ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SuperDim {
    pub n_abs: u64,
    pub m_self: u64,
}

impl SuperDim {
    pub fn new(n_abs: u64, m_self: u64) -> Self {
        SuperDim { n_abs, m_self }
    }

    pub fn unit() -> Self {
        SuperDim::new(1, 0)
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.n_abs, self.m_self)
    }
}

/// `[k|l] ⊗ [m|n] = [km + ln | kn + lm]`.
pub fn tensor_super_2vs(a: SuperDim, b: SuperDim) -> SuperDim {
    SuperDim::new(a.n_abs * b.n_abs + a.m_self * b.m_self, a.n_abs * b.m_self + a.m_self * b.n_abs)
}

/// Dimensions of the super center and of the trace of the parity shift:
/// `(n + m, m)` for `[n|m]`.
pub fn scenter_dims(v: SuperDim) -> (u64, u64) {
    (v.n_abs + v.m_self, v.m_self)
}

/// Ranks of a complexified `Z/2`-graded Grothendieck group, `(d0|d1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KDim {
    pub d0: u64,
    pub d1: u64,
}

impl KDim {
    pub fn new(d0: u64, d1: u64) -> Self {
        KDim { d0, d1 }
    }

    /// `d0 - d1`.
    pub fn sdim(&self) -> i64 {
        self.d0 as i64 - self.d1 as i64
    }

    pub fn total(&self) -> u64 {
        self.d0 + self.d1
    }

    /// The parity shift swaps the two ranks.
    pub fn shift(&self) -> KDim {
        KDim::new(self.d1, self.d0)
    }

    /// Rank-level product `(d0e0 + d1e1 | d0e1 + d1e0)`.
    pub fn product(&self, other: &KDim) -> KDim {
        KDim::new(self.d0 * other.d0 + self.d1 * other.d1, self.d0 * other.d1 + self.d1 * other.d0)
    }
}

impl fmt::Display for KDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.d0, self.d1)
    }
}

/// K-theory of the Clifford algebra `C_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordK {
    pub n: usize,
    /// `K_0 ⊕ K_1` of finite supermodules, torsion recorded as text.
    pub graded_groups: String,
    pub complexified: KDim,
    /// Rank of `K` of finite ungraded modules.
    pub ungraded_rank: u64,
}

pub fn clifford_k(n: usize) -> CliffordK {
    if n % 2 == 0 {
        CliffordK { n, graded_groups: "Z ⊕ Z/2".into(), complexified: KDim::new(1, 0), ungraded_rank: 1 }
    } else {
        CliffordK { n, graded_groups: "Z/2 ⊕ Z".into(), complexified: KDim::new(0, 1), ungraded_rank: 2 }
    }
}

/// `(even regular classes - odd regular classes | odd regular classes)` for a
/// graded group with a ±1 cocycle.
///
/// Every regular class contributes one simple object up to shift: the even
/// ones count all of them, the odd ones count the self-associate ones. A
/// self-associate simple object is a module over `C_1` and so sits in degree
/// 1 of the complexified K-group; the others sit in degree 0.
pub fn equivariant_count_formula<G, C>(group: &FiniteGroup, grading: G, cocycle: C) -> Result<KDim, SuperKError>
where
    G: Fn(Elem) -> bool,
    C: Fn(Elem, Elem) -> i8,
{
    for g in group.elements() {
        for h in group.elements() {
            if grading(group.mul(g, h)) != (grading(g) ^ grading(h)) {
                return Err(SuperKError::BadGrading { g, h });
            }
        }
    }
    let mut even = 0u64;
    let mut odd = 0u64;
    for class in group.conjugacy_classes() {
        let g = class[0];
        let regular = group.centralizer(g).into_iter().all(|h| cocycle(g, h) == cocycle(h, g));
        if regular {
            if grading(g) {
                odd += 1;
            } else {
                even += 1;
            }
        }
    }
    Ok(KDim::new(even - odd, odd))
}

fn check_degree(n: usize) -> Result<(), SuperKError> {
    if n > MAX_KDIM_DEGREE {
        return Err(SuperKError::DegreeTooLarge { degree: n, cap: MAX_KDIM_DEGREE });
    }
    Ok(())
}

/// `(p(n)|0)`.
pub fn sym_k_dim(n: usize) -> Result<KDim, SuperKError> {
    check_degree(n)?;
    Ok(KDim::new(partition_count(n)?, 0))
}

/// `(even strict partitions | odd strict partitions)`.
pub fn ext_k_dim(n: usize) -> Result<KDim, SuperKError> {
    check_degree(n)?;
    let (even, odd) = strict_parity_counts(n)?;
    Ok(KDim::new(even, odd))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_examples() {
        assert_eq!(tensor_super_2vs(SuperDim::new(0, 1), SuperDim::new(0, 1)), SuperDim::new(1, 0));
        assert_eq!(tensor_super_2vs(SuperDim::new(2, 1), SuperDim::new(1, 1)), SuperDim::new(3, 3));
        assert_eq!(tensor_super_2vs(SuperDim::unit(), SuperDim::new(4, 2)), SuperDim::new(4, 2));
    }

    #[test]
    fn scenter_examples() {
        assert_eq!(scenter_dims(SuperDim::new(1, 0)), (1, 0));
        assert_eq!(scenter_dims(SuperDim::new(0, 1)), (1, 1));
        assert_eq!(scenter_dims(SuperDim::new(3, 2)), (5, 2));
    }

    #[test]
    fn clifford_table() {
        assert_eq!(clifford_k(0).complexified, KDim::new(1, 0));
        assert_eq!(clifford_k(3).complexified, KDim::new(0, 1));
        assert_eq!(clifford_k(3).ungraded_rank, 2);
        assert_eq!(clifford_k(4).graded_groups, "Z ⊕ Z/2");
    }

    #[test]
    fn power_dims() {
        assert_eq!(sym_k_dim(4).unwrap(), KDim::new(5, 0));
        assert_eq!(ext_k_dim(4).unwrap(), KDim::new(1, 1));
        assert_eq!(ext_k_dim(0).unwrap(), KDim::new(1, 0));
        assert!(sym_k_dim(31).is_err());
    }

    #[test]
    fn trivial_cocycle_counts_classes() {
        let s3 = crate::groups::symmetric_group(3).unwrap();
        assert_eq!(equivariant_count_formula(&s3, |_| false, |_, _| 1).unwrap(), KDim::new(3, 0));
        assert!(equivariant_count_formula(&s3, |g| g == 1, |_, _| 1).is_err());
    }
}
