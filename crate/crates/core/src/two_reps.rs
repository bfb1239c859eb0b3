//! Two families of 2-representations small enough to compute with exactly:
//! a graded group acting on super vector spaces through a ±1 cocycle, and a
//! group acting on a finite set (the permutation matrix 2-representation).

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::groups::{Elem, FiniteGroup, GSet};
use crate::partitions::Parity;
use crate::schur_cocycle::{cocycle, CocycleError, CocycleTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwoRepError {
    #[error("elements {g} and {h} do not commute")]
    NotCommuting { g: Elem, h: Elem },
    #[error("cocycle identity fails at ({0}, {1}, {2})")]
    NotACocycle(Elem, Elem, Elem),
    #[error("grading is not a homomorphism at ({0}, {1})")]
    BadGrading(Elem, Elem),
    #[error("table sizes do not match the group order")]
    ShapeMismatch,
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

/// A value of a super 2-character: traces on the even and odd parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SuperPair {
    pub even: i64,
    pub odd: i64,
}

impl SuperPair {
    pub fn new(even: i64, odd: i64) -> Self {
        SuperPair { even, odd }
    }

    pub fn in_parity(value: i64, parity: Parity) -> Self {
        match parity {
            Parity::Even => SuperPair::new(value, 0),
            Parity::Odd => SuperPair::new(0, value),
        }
    }
}

impl fmt::Display for SuperPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

/// A vector space with a basis permuted up to sign by a set of group
/// elements; all of it sits in a single parity.
#[derive(Clone, Debug)]
pub struct SignedPermRep {
    dim: usize,
    parity: Parity,
    /// `(element, images of basis vectors, sign picked up by each basis vector)`
    action: Vec<(Elem, Vec<usize>, Vec<i8>)>,
}

impl SignedPermRep {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.action.iter().map(|(h, _, _)| *h)
    }

    fn entry(&self, h: Elem) -> Option<&(Elem, Vec<usize>, Vec<i8>)> {
        self.action.iter().find(|(x, _, _)| *x == h)
    }

    /// The signed permutation by which `h` acts: basis vector `b` goes to
    /// `sign[b] * e_{image[b]}`.
    pub fn action_of(&self, h: Elem) -> Option<(&[usize], &[i8])> {
        self.entry(h).map(|(_, img, sgn)| (img.as_slice(), sgn.as_slice()))
    }

    /// Trace of `h`: the sum of signs over fixed basis vectors.
    pub fn trace(&self, h: Elem) -> Option<i64> {
        self.entry(h).map(|(_, img, sgn)| (0..self.dim).filter(|&b| img[b] == b).map(|b| sgn[b] as i64).sum())
    }

    /// Graded trace: the trace placed in the slot of this space's parity.
    pub fn super_trace(&self, h: Elem) -> Option<SuperPair> {
        self.trace(h).map(|t| SuperPair::in_parity(t, self.parity))
    }

    /// Checks that the recorded actions compose like a representation of
    /// the listed elements.
    pub fn is_homomorphism(&self, group: &FiniteGroup) -> bool {
        for (a, img_a, sgn_a) in &self.action {
            for (b, img_b, sgn_b) in &self.action {
                let Some((_, img_ab, sgn_ab)) = self.entry(group.mul(*a, *b)) else {
                    return false;
                };
                for v in 0..self.dim {
                    let mid = img_b[v];
                    if img_a[mid] != img_ab[v] || sgn_a[mid] * sgn_b[v] != sgn_ab[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A graded group acting on super vector spaces through a ±1 cocycle.
#[derive(Clone)]
pub struct CocycleSuperTwoRep {
    group: Arc<FiniteGroup>,
    odd: Vec<bool>,
    cocycle: Vec<i8>,
}

impl CocycleSuperTwoRep {
    /// Validates the grading and the cocycle identity.
    pub fn new(group: Arc<FiniteGroup>, odd: Vec<bool>, cocycle: Vec<i8>) -> Result<Self, TwoRepError> {
        let order = group.order();
        if odd.len() != order || cocycle.len() != order * order || cocycle.iter().any(|&c| c != 1 && c != -1) {
            return Err(TwoRepError::ShapeMismatch);
        }
        for g in group.elements() {
            for h in group.elements() {
                if odd[group.mul(g, h)] != (odd[g] ^ odd[h]) {
                    return Err(TwoRepError::BadGrading(g, h));
                }
            }
        }
        let rep = CocycleSuperTwoRep { group, odd, cocycle };
        if let Some((g, h, k)) = rep.first_cocycle_failure() {
            return Err(TwoRepError::NotACocycle(g, h, k));
        }
        Ok(rep)
    }

    fn first_cocycle_failure(&self) -> Option<(Elem, Elem, Elem)> {
        let grp = &self.group;
        grp.elements().into_par_iter().find_map_first(|g| {
            for h in grp.elements() {
                for k in grp.elements() {
                    if self.c(grp.mul(g, h), k) * self.c(g, h) != self.c(g, grp.mul(h, k)) * self.c(h, k) {
                        return Some((g, h, k));
                    }
                }
            }
            None
        })
    }

    pub fn from_table(table: &CocycleTable) -> Self {
        let group = table.group().clone();
        let odd = group.elements().map(|g| group.label(g).is_odd()).collect();
        CocycleSuperTwoRep { group, odd, cocycle: table.values().to_vec() }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    #[inline]
    pub fn c(&self, g: Elem, h: Elem) -> i8 {
        self.cocycle[g * self.group.order() + h]
    }

    pub fn is_odd(&self, g: Elem) -> bool {
        self.odd[g]
    }

    fn check_commute(&self, g: Elem, h: Elem) -> Result<(), TwoRepError> {
        if self.group.commute(g, h) {
            Ok(())
        } else {
            Err(TwoRepError::NotCommuting { g, h })
        }
    }

    /// `e(g, h) = (-1)^(deg g · deg h) c(g, h) / c(h, g)`.
    pub fn supersymbol(&self, g: Elem, h: Elem) -> Result<i8, TwoRepError> {
        self.check_commute(g, h)?;
        let eps = self.c(g, h) * self.c(h, g);
        Ok(if self.odd[g] && self.odd[h] { -eps } else { eps })
    }

    /// The one-dimensional categorical character at `g`, in the parity of
    /// `g`, with `h ∈ C_g` acting by `e(g, h)`.
    pub fn categorical_character(&self, g: Elem) -> SignedPermRep {
        let action = self
            .group
            .centralizer(g)
            .into_iter()
            .map(|h| (h, vec![0], vec![self.supersymbol(g, h).expect("h centralizes g")]))
            .collect();
        let parity = if self.odd[g] { Parity::Odd } else { Parity::Even };
        SignedPermRep { dim: 1, parity, action }
    }

    /// `(e(g,h) | 0)` for even `g`, `(0 | e(g,h))` for odd `g`.
    pub fn two_character(&self, g: Elem, h: Elem) -> Result<SuperPair, TwoRepError> {
        let e = self.supersymbol(g, h)? as i64;
        Ok(if self.odd[g] { SuperPair::new(0, e) } else { SuperPair::new(e, 0) })
    }
}

/// The sign super 2-representation of `S_n`: Schur cocycle, sign grading.
pub fn sign_two_rep(n: usize) -> Result<CocycleSuperTwoRep, TwoRepError> {
    Ok(CocycleSuperTwoRep::from_table(&cocycle(n)?))
}

pub fn two_character_cocycle(rep: &CocycleSuperTwoRep, g: Elem, h: Elem) -> Result<SuperPair, TwoRepError> {
    rep.two_character(g, h)
}

/// The permutation matrix 2-representation of a G-set.
#[derive(Clone, Debug)]
pub struct PermTwoRep {
    gset: GSet,
}

impl PermTwoRep {
    pub fn new(gset: GSet) -> Self {
        PermTwoRep { gset }
    }

    pub fn gset(&self) -> &GSet {
        &self.gset
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.gset.group()
    }

    /// Disjoint union of the underlying G-sets.
    pub fn direct_sum(&self, other: &PermTwoRep) -> Result<PermTwoRep, crate::groups::GroupError> {
        Ok(PermTwoRep::new(self.gset.disjoint_union(&other.gset)?))
    }

    /// `X(g)` has a basis indexed by the fixed points of `g`; the centralizer
    /// permutes them.
    pub fn categorical_character(&self, g: Elem) -> SignedPermRep {
        let fixed = self.gset.fixed_points(g);
        let slot = |x: usize| fixed.binary_search(&x).expect("centralizer preserves Fix(g)");
        let action = self
            .group()
            .centralizer(g)
            .into_iter()
            .map(|h| {
                let images = fixed.iter().map(|&x| slot(self.gset.act(h, x))).collect();
                (h, images, vec![1; fixed.len()])
            })
            .collect();
        SignedPermRep { dim: fixed.len(), parity: Parity::Even, action }
    }

    /// The number of points fixed by both `g` and `h`.
    pub fn two_character(&self, g: Elem, h: Elem) -> Result<i64, TwoRepError> {
        if !self.group().commute(g, h) {
            return Err(TwoRepError::NotCommuting { g, h });
        }
        Ok((0..self.gset.points()).filter(|&x| self.gset.act(g, x) == x && self.gset.act(h, x) == x).count() as i64)
    }
}

pub fn categorical_character(rep: &PermTwoRep, g: Elem) -> SignedPermRep {
    rep.categorical_character(g)
}

pub fn two_character_perm(rep: &PermTwoRep, g: Elem, h: Elem) -> Result<i64, TwoRepError> {
    rep.two_character(g, h)
}

/// One row of a 2-character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoCharacterEntry {
    pub g: String,
    pub h: String,
    pub value: SuperPair,
}

fn table_over_representatives<F>(group: &FiniteGroup, value: F) -> Result<Vec<TwoCharacterEntry>, TwoRepError>
where
    F: Fn(Elem, Elem) -> Result<SuperPair, TwoRepError> + Sync,
{
    group
        .commuting_pair_representatives()
        .into_par_iter()
        .map(|(g, h)| {
            Ok(TwoCharacterEntry {
                g: group.label(g).to_cycle_string(),
                h: group.label(h).to_cycle_string(),
                value: value(g, h)?,
            })
        })
        .collect()
}

/// The 2-character on one commuting pair per simultaneous-conjugacy orbit.
pub fn cocycle_two_character_table(rep: &CocycleSuperTwoRep) -> Result<Vec<TwoCharacterEntry>, TwoRepError> {
    table_over_representatives(rep.group(), |g, h| rep.two_character(g, h))
}

pub fn perm_two_character_table(rep: &PermTwoRep) -> Result<Vec<TwoCharacterEntry>, TwoRepError> {
    table_over_representatives(rep.group(), |g, h| Ok(SuperPair::new(rep.two_character(g, h)?, 0)))
}
