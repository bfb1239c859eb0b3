use std::fmt;

use serde::{Deserialize, Serialize};

use super::PartitionError;

/// Parity of a partition, i.e. of any permutation with that cycle type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given positive sizes into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: parts.into_iter().filter(|&p| p > 0).map(|p| p as u32).collect() }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Distinct parts.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    /// Even iff `(-1)^(|λ| - ℓ(λ)) = +1`.
    pub fn parity(&self) -> Parity {
        if (self.size() - self.len()) % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Largest multiplicity of any part (0 for the empty partition).
    pub fn max_multiplicity(&self) -> usize {
        let mut best = 0;
        let mut run = 0;
        for (i, &p) in self.parts.iter().enumerate() {
            run = if i > 0 && self.parts[i - 1] == p { run + 1 } else { 1 };
            best = best.max(run);
        }
        best
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn parity_examples() {
        assert_eq!(part(&[1, 1, 1]).parity(), Parity::Even);
        assert_eq!(part(&[2]).parity(), Parity::Odd);
        assert_eq!(part(&[4, 1]).parity(), Parity::Odd);
        assert_eq!(Partition::empty().parity(), Parity::Even);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(part(&[3, 2, 1]).is_strict());
        assert!(!part(&[2, 2]).is_strict());
        assert_eq!(part(&[3, 3, 3, 1, 1]).max_multiplicity(), 3);
    }
}
