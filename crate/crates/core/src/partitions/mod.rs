//! Integer partitions and the generating functions built from them.

mod partition;
mod series;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use partition::{Parity, Partition};
pub use series::{IntSeries, RatSeries, TruncatedSeries};

/// Largest `n` accepted by the enumeration functions.
pub const MAX_ENUMERATION_SIZE: usize = 60;
/// Largest truncation order accepted by the named series constructors.
pub const MAX_SERIES_ORDER: usize = 200;
/// Largest `n` for explicit multipartition enumeration.
pub const MAX_MULTIPARTITION_SIZE: usize = 40;
/// Largest number of components `d` in multipartitions and `1/φ^d`.
pub const MAX_COMPONENTS: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("size {size} exceeds the cap of {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("series is not invertible")]
    NotInvertible,
    #[error("exp needs a series with zero constant term")]
    NonzeroConstant,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

fn check_cap(size: usize, cap: usize) -> Result<(), PartitionError> {
    if size > cap {
        Err(PartitionError::SizeCapExceeded { size, cap })
    } else {
        Ok(())
    }
}

/// Partitions of `n` whose next part is accepted by `keep(part, parts_so_far)`,
/// in reverse-lexicographic order.
fn enumerate_with<F>(n: usize, keep: &F) -> Vec<Partition>
where
    F: Fn(u32, &[u32]) -> bool,
{
    fn rec<F: Fn(u32, &[u32]) -> bool>(rest: u32, max: u32, cur: &mut Vec<u32>, keep: &F, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            if !keep(part, cur) {
                continue;
            }
            cur.push(part);
            rec(rest - part, part, cur, keep, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), keep, &mut out);
    out
}

/// All partitions of `n`, largest first in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>, PartitionError> {
    check_cap(n, MAX_ENUMERATION_SIZE)?;
    Ok(enumerate_with(n, &|_, _| true))
}

/// Partitions of `n` into distinct parts.
pub fn enumerate_strict(n: usize) -> Result<Vec<Partition>, PartitionError> {
    check_cap(n, MAX_ENUMERATION_SIZE)?;
    Ok(enumerate_with(n, &|part, cur: &[u32]| cur.last() != Some(&part)))
}

/// Partitions of `n` into odd parts.
pub fn enumerate_odd_parts(n: usize) -> Result<Vec<Partition>, PartitionError> {
    check_cap(n, MAX_ENUMERATION_SIZE)?;
    Ok(enumerate_with(n, &|part, _| part % 2 == 1))
}

/// Partitions of `n` in which no part occurs `p` or more times.
pub fn enumerate_p_regular(n: usize, p: usize) -> Result<Vec<Partition>, PartitionError> {
    check_cap(n, MAX_ENUMERATION_SIZE)?;
    check_p(p)?;
    Ok(enumerate_with(n, &|part, cur: &[u32]| {
        cur.iter().rev().take_while(|&&x| x == part).count() + 1 < p
    }))
}

fn check_p(p: usize) -> Result<(), PartitionError> {
    if p < 2 {
        return Err(PartitionError::InvalidArgument(format!("p must be at least 2, got {p}")));
    }
    Ok(())
}

pub fn partition_parity(lambda: &Partition) -> Parity {
    lambda.parity()
}

/// Number of partitions of `n` with every multiplicity below `p`, counted
/// without enumerating them.
pub fn count_p_regular(n: usize, p: usize) -> Result<BigInt, PartitionError> {
    check_cap(n, MAX_ENUMERATION_SIZE)?;
    check_p(p)?;
    // ways[m] over parts processed so far; each part k is used 0..p-1 times
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for k in 1..=n {
        let mut next = vec![BigInt::zero(); n + 1];
        for (m, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for uses in 0..p {
                let total = m + uses * k;
                if total > n {
                    break;
                }
                next[total] += w;
            }
        }
        ways = next;
    }
    Ok(ways.swap_remove(n))
}

/// Number of `d`-tuples of partitions whose sizes add up to `n`, by listing
/// the tuples one at a time.
pub fn count_multipartitions(n: usize, d: usize) -> Result<BigInt, PartitionError> {
    check_cap(n, MAX_MULTIPARTITION_SIZE)?;
    if d == 0 || d > MAX_COMPONENTS {
        return Err(PartitionError::InvalidArgument(format!("d must be in 1..={MAX_COMPONENTS}, got {d}")));
    }
    let by_size: Vec<u64> = (0..=n).map(|m| enumerate_with(m, &|_, _| true).len() as u64).collect();
    // walk over compositions of n into d sizes, multiplying the counts of each slot
    fn rec(slot: usize, rest: usize, d: usize, by_size: &[u64], acc: &BigInt, total: &mut BigInt) {
        if slot + 1 == d {
            *total += acc * by_size[rest];
            return;
        }
        for m in 0..=rest {
            rec(slot + 1, rest - m, d, by_size, &(acc * by_size[m]), total);
        }
    }
    let mut total = BigInt::zero();
    rec(0, n, d, &by_size, &BigInt::one(), &mut total);
    Ok(total)
}

fn check_order(order: usize) -> Result<(), PartitionError> {
    check_cap(order, MAX_SERIES_ORDER)
}

/// `φ(q) = Π_{n≥1} (1 - q^n)` expanded directly.
pub fn euler_phi_series(order: usize) -> Result<IntSeries, PartitionError> {
    check_order(order)?;
    let mut acc = IntSeries::one(order);
    for k in 1..=order {
        let factor = IntSeries::one(order).sub(&IntSeries::monomial(order, k, BigInt::one()))?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// `1/φ(q)^d`.
pub fn inv_phi_pow_series(d: usize, order: usize) -> Result<IntSeries, PartitionError> {
    check_order(order)?;
    if d == 0 || d > MAX_COMPONENTS {
        return Err(PartitionError::InvalidArgument(format!("d must be in 1..={MAX_COMPONENTS}, got {d}")));
    }
    Ok(euler_phi_series(order)?.inverse()?.pow(d as u32))
}

/// `Π_{n≥1} (1 + q^n)`, the generating function of strict partitions.
pub fn strict_series(order: usize) -> Result<IntSeries, PartitionError> {
    check_order(order)?;
    let mut acc = IntSeries::one(order);
    for k in 1..=order {
        let factor = IntSeries::one(order).add(&IntSeries::monomial(order, k, BigInt::one()))?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// `Π_{k odd} 1/(1 - q^k)`, the generating function of partitions into odd parts.
pub fn odd_parts_series(order: usize) -> Result<IntSeries, PartitionError> {
    check_order(order)?;
    let mut acc = IntSeries::one(order);
    for k in (1..=order).step_by(2) {
        let factor = IntSeries::one(order).sub(&IntSeries::monomial(order, k, BigInt::one()))?;
        acc = acc.mul(&factor.inverse()?)?;
    }
    Ok(acc)
}

/// Strict partitions of `n` counted by parity: `(even, odd)`.
pub fn strict_parity_counts(n: usize) -> Result<(u64, u64), PartitionError> {
    let mut even = 0;
    let mut odd = 0;
    for lambda in enumerate_strict(n)? {
        match lambda.parity() {
            Parity::Even => even += 1,
            Parity::Odd => odd += 1,
        }
    }
    Ok((even, odd))
}

/// `p(n)` for `n ≤ 60`, by enumeration.
pub fn partition_count(n: usize) -> Result<u64, PartitionError> {
    Ok(enumerate_partitions(n)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shapes(v: Vec<Partition>) -> Vec<Vec<u32>> {
        v.into_iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn reverse_lex_order() {
        assert_eq!(
            shapes(enumerate_partitions(4).unwrap()),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(shapes(enumerate_partitions(0).unwrap()), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn strict_of_five() {
        assert_eq!(shapes(enumerate_strict(5).unwrap()), vec![vec![5], vec![4, 1], vec![3, 2]]);
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(enumerate_partitions(61), Err(PartitionError::SizeCapExceeded { .. })));
        assert!(count_multipartitions(41, 1).is_err());
        assert!(euler_phi_series(201).is_err());
        assert!(count_p_regular(4, 1).is_err());
    }

    #[test]
    fn p_regular_dp_matches_enumeration() {
        for n in 0..=20 {
            for p in 2..=5 {
                let dp = count_p_regular(n, p).unwrap();
                assert_eq!(dp, BigInt::from(enumerate_p_regular(n, p).unwrap().len()), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn phi_low_terms() {
        assert_eq!(euler_phi_series(7).unwrap(), IntSeries::from_i64(7, &[1, -1, -1, 0, 0, 1, 0, 1]));
    }
}
