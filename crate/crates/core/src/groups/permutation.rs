use std::fmt;

use serde::{Deserialize, Serialize};

use super::GroupError;
use crate::partitions::Partition;

/// A bijection of `{0, .., n-1}` in one-line notation: `j` maps to `images[j]`.
///
/// Products compose right to left, `(p * q)(x) = p(q(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotABijection(images.clone()));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from disjoint or overlapping cycles.
    /// Cycles are applied right to left, matching the product convention.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut result = Permutation::identity(n);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..n).collect();
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(GroupError::PointOutOfRange { point: a.max(b), degree: n });
                }
                images[a] = b;
            }
            let c = Permutation::from_images(images)?;
            result = c.compose(&result);
        }
        Ok(result)
    }

    /// The transposition of `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The elementary transposition `sigma_i = (i, i+1)` with `i` counted from 1,
    /// i.e. it swaps the 0-based points `i - 1` and `i`.
    pub fn elementary(n: usize, i: usize) -> Self {
        debug_assert!(i >= 1 && i < n);
        Self::transposition(n, i - 1, i)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self * other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (j, &x) in self.images.iter().enumerate() {
            inv[x] = j;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &x)| j == x)
    }

    /// Cycles including fixed points, each starting at its smallest point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(|c| c.len()).collect())
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        let n = self.degree();
        let cycles = self.cycles().len();
        if (n - cycles) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_odd(&self) -> bool {
        self.sign() < 0
    }

    /// Number of inversions, which is the Coxeter length with respect to the
    /// elementary transpositions.
    pub fn inversions(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Cycle notation with fixed points omitted; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect();
        if parts.is_empty() {
            "()".to_string()
        } else {
            parts.concat()
        }
    }

    /// A permutation of the given cycle type: consecutive blocks, longest first.
    pub fn with_cycle_type(shape: &Partition) -> Permutation {
        let n = shape.size();
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in shape.parts() {
            let len = len as usize;
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cs: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cs).unwrap()
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(p(5, &[&[0, 1, 2], &[3, 4]]).cycle_type().parts(), &[3, 2]);
        assert_eq!(p(4, &[&[0, 1], &[2, 3]]).cycle_type().parts(), &[2, 2]);
    }

    #[test]
    fn signs() {
        assert_eq!(Permutation::identity(3).sign(), 1);
        assert_eq!(Permutation::transposition(3, 0, 2).sign(), -1);
        assert_eq!(p(3, &[&[0, 1, 2]]).sign(), 1);
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Permutation::transposition(3, 0, 1);
        let b = Permutation::transposition(3, 1, 2);
        // b first: 0 -> 0 -> 1
        assert_eq!(a.compose(&b).apply(0), 1);
        assert_eq!(a.compose(&b).apply(2), 0);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn cycle_string_round_trip() {
        let q = p(6, &[&[0, 3, 5], &[1, 2]]);
        assert_eq!(q.to_cycle_string(), "(0 3 5)(1 2)");
        assert_eq!(Permutation::identity(3).to_cycle_string(), "()");
    }

    #[test]
    fn with_cycle_type_matches() {
        let shape = Partition::new(vec![3, 2, 2, 1]).unwrap();
        assert_eq!(Permutation::with_cycle_type(&shape).cycle_type(), shape);
    }
}
