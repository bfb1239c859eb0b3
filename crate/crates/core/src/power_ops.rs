//! Graded traces of commuting pairs on the categorical characters of
//! `Sym^n ρ` and `Λ^n ρ` for a permutation 2-representation `ρ`, computed two
//! ways: from the product formulas over cyclic invariants, and by direct
//! Burnside averaging over the symmetric group.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::groups::{symmetric_group, Elem, Permutation};
use crate::partitions::{PartitionError, RatSeries};
use crate::schur_cocycle::{cocycle, CocycleError};
use crate::two_reps::PermTwoRep;

/// Largest truncation order of the character series.
pub const MAX_SERIES_ORDER: usize = 12;
/// Largest power for the Burnside oracles.
pub const MAX_ORACLE_POWER: usize = 6;
/// Largest number of tuples `m^n` scanned by the Burnside oracles.
pub const MAX_ORACLE_TUPLES: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PowerError {
    #[error("elements {g} and {h} do not commute")]
    NotCommuting { g: Elem, h: Elem },
    #[error("k must be even, got {0}")]
    KOdd(usize),
    #[error("k must be positive")]
    KZero,
    #[error("{0} exceeds the configured cap")]
    TooLarge(String),
    #[error("non-integral trace at degree {0}")]
    NonIntegral(usize),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

fn check_commute(rep: &PermTwoRep, g: Elem, h: Elem) -> Result<(), PowerError> {
    if rep.group().commute(g, h) {
        Ok(())
    } else {
        Err(PowerError::NotCommuting { g, h })
    }
}

/// The `⟨g⟩`-orbits on `Fix(g^k)`, each listed from its smallest point
/// along `x, g x, g² x, …`.
fn orbits_on_fixed(rep: &PermTwoRep, g: Elem, k: usize) -> Vec<Vec<usize>> {
    let grp = rep.group();
    let gk = grp.pow(g, k as u64);
    let set = rep.gset();
    let mut seen = vec![false; set.points()];
    let mut orbits = Vec::new();
    for x in set.fixed_points(gk) {
        if seen[x] {
            continue;
        }
        let mut orbit = vec![x];
        seen[x] = true;
        let mut y = set.act(g, x);
        while y != x {
            seen[y] = true;
            orbit.push(y);
            y = set.act(g, y);
        }
        orbits.push(orbit);
    }
    orbits
}

/// For an element `h` commuting with `g` and an orbit `O`, returns `Some(r)`
/// when `h` maps `O` to itself with `h x = g^r x` for the first point `x`.
fn rotation_of(rep: &PermTwoRep, h: Elem, orbit: &[usize]) -> Option<usize> {
    let hx = rep.gset().act(h, orbit[0]);
    orbit.iter().position(|&y| y == hx)
}

/// `⟨g⟩`-invariants of `X(g^k)` with the trace of `h` on them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicInvariants {
    pub orbits: Vec<Vec<usize>>,
    pub trace: i64,
}

/// The invariants of the cyclic rotation on `X(g^k)`: one basis vector per
/// `⟨g⟩`-orbit on `Fix(g^k)`, permuted by `h`.
pub fn cyclic_invariants(rep: &PermTwoRep, g: Elem, k: usize, h: Elem) -> Result<CyclicInvariants, PowerError> {
    check_commute(rep, g, h)?;
    if k == 0 {
        return Err(PowerError::KZero);
    }
    let orbits = orbits_on_fixed(rep, g, k);
    let trace = orbits.iter().filter(|o| rotation_of(rep, h, o).is_some()).count() as i64;
    Ok(CyclicInvariants { orbits, trace })
}

/// Traces of `h` on the `+1` and `-1` eigenspaces of the twisted rotation
/// `T = χ_spin(1) · g = -g` acting on `X(g^k)` for even `k`.
///
/// On an orbit of length `ℓ`, `T^ℓ = (-1)^ℓ`. The `-1` eigenspace is spanned
/// by the orbit sums, so `h` contributes `1` for each orbit it preserves. The
/// `+1` eigenspace has one alternating vector `Σ_r (-1)^r g^r x` per orbit of
/// even length, on which `h x = g^r x` acts by `(-1)^r`.
pub fn cyclic_spin_eigenspaces(rep: &PermTwoRep, g: Elem, k: usize, h: Elem) -> Result<(i64, i64), PowerError> {
    check_commute(rep, g, h)?;
    if k == 0 {
        return Err(PowerError::KZero);
    }
    if k % 2 == 1 {
        return Err(PowerError::KOdd(k));
    }
    let orbits = orbits_on_fixed(rep, g, k);
    Ok(spin_traces(rep, &orbits, h))
}

fn spin_traces(rep: &PermTwoRep, orbits: &[Vec<usize>], h: Elem) -> (i64, i64) {
    let mut plus = 0;
    let mut minus = 0;
    for o in orbits {
        if let Some(r) = rotation_of(rep, h, o) {
            minus += 1;
            if o.len() % 2 == 0 {
                plus += if r % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    (plus, minus)
}

/// Traces on the graded pieces of a super vector space, `Σ_n (even_n | odd_n) q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTraceSeries {
    pub even: RatSeries,
    pub odd: RatSeries,
}

impl GradedTraceSeries {
    pub fn one(order: usize) -> Self {
        GradedTraceSeries { even: RatSeries::one(order), odd: RatSeries::zero(order) }
    }

    pub fn order(&self) -> usize {
        self.even.order()
    }

    /// `(a0 | a1)(b0 | b1) = (a0 b0 + a1 b1 | a0 b1 + a1 b0)`.
    pub fn mul(&self, other: &GradedTraceSeries) -> Result<GradedTraceSeries, PartitionError> {
        Ok(GradedTraceSeries {
            even: self.even.mul(&other.even)?.add(&self.odd.mul(&other.odd)?)?,
            odd: self.even.mul(&other.odd)?.add(&self.odd.mul(&other.even)?)?,
        })
    }

    pub fn coefficient(&self, n: usize) -> (BigRational, BigRational) {
        (self.even.coeff(n), self.odd.coeff(n))
    }

    /// Integer coefficients of both parts; fails on any fraction.
    pub fn to_integers(&self) -> Result<(Vec<BigInt>, Vec<BigInt>), PowerError> {
        let conv = |s: &RatSeries| -> Result<Vec<BigInt>, PowerError> {
            s.coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| if c.is_integer() { Ok(c.to_integer()) } else { Err(PowerError::NonIntegral(n)) })
                .collect()
        };
        Ok((conv(&self.even)?, conv(&self.odd)?))
    }

    /// Total dimension series `even + odd`.
    pub fn total(&self) -> RatSeries {
        self.even.add(&self.odd).expect("same order")
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `Σ_j sign_j p_j t^j / j` for `t = q^k`, where `p_j` is the trace of `h^j`.
fn log_series<F>(order: usize, k: usize, alternating: bool, trace_of_power: F) -> RatSeries
where
    F: Fn(u64) -> i64,
{
    let mut s = RatSeries::zero(order);
    let mut j = 1;
    while j * k <= order {
        let sign = if alternating && j % 2 == 0 { -1 } else { 1 };
        s.set_coeff(j * k, rat(sign * trace_of_power(j as u64)) / rat(j as i64));
        j += 1;
    }
    s
}

fn check_order(order: usize) -> Result<(), PowerError> {
    if order > MAX_SERIES_ORDER {
        return Err(PowerError::TooLarge(format!("truncation order {order} (cap {MAX_SERIES_ORDER})")));
    }
    Ok(())
}

fn assert_integral(series: &GradedTraceSeries) -> Result<(), PowerError> {
    series.to_integers().map(|_| ())
}

/// `Σ_n tr(h | X_{Sym^n ρ}(g)) q^n = Π_k S_{q^k}(W_k)` with `W_k` the cyclic
/// invariants on `X(g^k)`, each factor `exp(Σ_j tr(h^j | W_k) q^{jk} / j)`.
pub fn sym_character_series(rep: &PermTwoRep, g: Elem, h: Elem, order: usize) -> Result<GradedTraceSeries, PowerError> {
    check_commute(rep, g, h)?;
    check_order(order)?;
    let grp = rep.group();
    let mut acc = RatSeries::one(order);
    for k in 1..=order {
        let orbits = orbits_on_fixed(rep, g, k);
        if orbits.is_empty() {
            continue;
        }
        let log = log_series(order, k, false, |j| {
            let hj = grp.pow(h, j);
            orbits.iter().filter(|o| rotation_of(rep, hj, o).is_some()).count() as i64
        });
        acc = acc.mul(&log.exp()?)?;
    }
    let series = GradedTraceSeries { even: acc, odd: RatSeries::zero(order) };
    assert_integral(&series)?;
    Ok(series)
}

/// The exterior analogue: odd `k` contribute `S_{q^k}` of the cyclic
/// invariants in even degree; even `k` contribute the exterior algebra
/// `Λ_{q^k}` of the `+1` eigenspace of the twisted rotation, shifted to odd
/// degree, so that `Λ^j` lands in parity `j mod 2`.
pub fn ext_character_series(rep: &PermTwoRep, g: Elem, h: Elem, order: usize) -> Result<GradedTraceSeries, PowerError> {
    ext_character_series_with(rep, g, h, order, SpinEigenspace::Plus)
}

/// Which eigenspace of the twisted rotation feeds the even-`k` factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinEigenspace {
    Plus,
    Minus,
}

/// [`ext_character_series`] with a selectable eigenspace for even `k`. Only
/// [`SpinEigenspace::Plus`] agrees with [`burnside_oracle_ext`].
pub fn ext_character_series_with(
    rep: &PermTwoRep,
    g: Elem,
    h: Elem,
    order: usize,
    eigenspace: SpinEigenspace,
) -> Result<GradedTraceSeries, PowerError> {
    check_commute(rep, g, h)?;
    check_order(order)?;
    let grp = rep.group();
    let mut acc = GradedTraceSeries::one(order);
    for k in 1..=order {
        let orbits = orbits_on_fixed(rep, g, k);
        if orbits.is_empty() {
            continue;
        }
        let factor = if k % 2 == 1 {
            let log = log_series(order, k, false, |j| {
                let hj = grp.pow(h, j);
                orbits.iter().filter(|o| rotation_of(rep, hj, o).is_some()).count() as i64
            });
            GradedTraceSeries { even: log.exp()?, odd: RatSeries::zero(order) }
        } else {
            let log = log_series(order, k, true, |j| {
                let (plus, minus) = spin_traces(rep, &orbits, grp.pow(h, j));
                match eigenspace {
                    SpinEigenspace::Plus => plus,
                    SpinEigenspace::Minus => minus,
                }
            });
            let lambda = log.exp()?;
            let mut even = RatSeries::zero(order);
            let mut odd = RatSeries::zero(order);
            for (n, c) in lambda.coeffs().iter().enumerate() {
                if (n / k) % 2 == 0 {
                    even.set_coeff(n, c.clone());
                } else {
                    odd.set_coeff(n, c.clone());
                }
            }
            GradedTraceSeries { even, odd }
        };
        acc = acc.mul(&factor)?;
    }
    assert_integral(&acc)?;
    Ok(acc)
}

fn check_oracle_size(rep: &PermTwoRep, n: usize) -> Result<(), PowerError> {
    if n > MAX_ORACLE_POWER {
        return Err(PowerError::TooLarge(format!("power {n} (cap {MAX_ORACLE_POWER})")));
    }
    let m = rep.gset().points() as u64;
    let tuples = m.checked_pow(n as u32).unwrap_or(u64::MAX);
    if tuples > MAX_ORACLE_TUPLES {
        return Err(PowerError::TooLarge(format!("{m}^{n} tuples (cap {MAX_ORACLE_TUPLES})")));
    }
    Ok(())
}

/// Number of maps `i : {0..n-1} → points` with `i(σ a) = g · i(a)` and
/// `i(τ a) = h · i(a)` for all `a`.
fn count_equivariant_maps(rep: &PermTwoRep, g: Elem, h: Elem, sigma: &Permutation, tau: &Permutation) -> u64 {
    let n = sigma.degree();
    let set = rep.gset();
    let mut visited = vec![false; n];
    let mut total = 1u64;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut orbit = vec![start];
        visited[start] = true;
        let mut idx = 0;
        while idx < orbit.len() {
            let a = orbit[idx];
            for b in [sigma.apply(a), tau.apply(a)] {
                if !visited[b] {
                    visited[b] = true;
                    orbit.push(b);
                }
            }
            idx += 1;
        }
        let mut good = 0u64;
        let mut value = vec![usize::MAX; n];
        'points: for p in 0..set.points() {
            for &a in &orbit {
                value[a] = usize::MAX;
            }
            value[start] = p;
            let mut stack = vec![start];
            while let Some(a) = stack.pop() {
                for (b, act) in [(sigma.apply(a), g), (tau.apply(a), h)] {
                    let want = set.act(act, value[a]);
                    if value[b] == usize::MAX {
                        value[b] = want;
                        stack.push(b);
                    } else if value[b] != want {
                        continue 'points;
                    }
                }
            }
            good += 1;
        }
        total *= good;
        if total == 0 {
            break;
        }
    }
    total
}

/// Trace of `h` on `X_{Sym^n ρ}(g)` by averaging over commuting pairs of
/// `S_n`: `(1/n!) Σ_{στ = τσ} #{i : i∘σ = g∘i, i∘τ = h∘i}`.
pub fn burnside_oracle_sym(rep: &PermTwoRep, g: Elem, h: Elem, n: usize) -> Result<BigRational, PowerError> {
    check_commute(rep, g, h)?;
    check_oracle_size(rep, n)?;
    if n == 0 {
        return Ok(BigRational::one());
    }
    let sn = symmetric_group(n).map_err(CocycleError::from)?;
    let sum: u64 = sn
        .commuting_pairs()
        .into_par_iter()
        .map(|(s, t)| count_equivariant_maps(rep, g, h, sn.label(s), sn.label(t)))
        .sum();
    Ok(BigRational::new(BigInt::from(sum), BigInt::from(sn.order())))
}

/// The exterior version: each commuting pair `(σ, τ)` is weighted by the
/// supersymbol `e(σ, τ)` of the sign super 2-representation and counted in
/// the parity of `σ`. Returns `(even, odd)`.
pub fn burnside_oracle_ext(
    rep: &PermTwoRep,
    g: Elem,
    h: Elem,
    n: usize,
) -> Result<(BigRational, BigRational), PowerError> {
    check_commute(rep, g, h)?;
    check_oracle_size(rep, n)?;
    if n == 0 {
        return Ok((BigRational::one(), BigRational::zero()));
    }
    let table = cocycle(n)?;
    let sn = table.group().clone();
    let (even, odd) = sn
        .commuting_pairs()
        .into_par_iter()
        .map(|(s, t)| {
            let count = count_equivariant_maps(rep, g, h, sn.label(s), sn.label(t)) as i64;
            let e = table.supersymbol_elems(s, t).expect("pair commutes") as i64;
            if sn.label(s).is_odd() {
                (0, e * count)
            } else {
                (e * count, 0)
            }
        })
        .reduce(|| (0i64, 0i64), |a, b| (a.0 + b.0, a.1 + b.1));
    let denom = BigInt::from(sn.order());
    Ok((BigRational::new(even.into(), denom.clone()), BigRational::new(odd.into(), denom)))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::groups::{FiniteGroup, GSet};

    fn regular_cyclic(m: usize) -> PermTwoRep {
        PermTwoRep::new(GSet::regular(Arc::new(FiniteGroup::cyclic(m).unwrap())))
    }

    fn ints(s: &RatSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn invariants_examples() {
        let z2 = regular_cyclic(2);
        let inv = cyclic_invariants(&z2, 1, 2, 0).unwrap();
        assert_eq!(inv.orbits.len(), 1);
        assert_eq!(inv.trace, 1);
        let z4 = regular_cyclic(4);
        let gen = z4.group().generators()[0];
        let inv = cyclic_invariants(&z4, gen, 4, 0).unwrap();
        assert_eq!(inv.orbits.len(), 1);
        assert_eq!(inv.orbits[0].len(), 4);
        let point = PermTwoRep::new(GSet::natural(Arc::new(FiniteGroup::trivial(3))));
        assert_eq!(cyclic_invariants(&point, 0, 1, 0).unwrap().trace, 3);
    }

    #[test]
    fn spin_eigenspaces() {
        let z2 = regular_cyclic(2);
        assert_eq!(cyclic_spin_eigenspaces(&z2, 1, 2, 0).unwrap(), (1, 1));
        assert_eq!(cyclic_spin_eigenspaces(&z2, 1, 2, 1).unwrap(), (-1, 1));
        let point = PermTwoRep::new(GSet::natural(Arc::new(FiniteGroup::trivial(1))));
        assert_eq!(cyclic_spin_eigenspaces(&point, 0, 2, 0).unwrap(), (0, 1));
        assert!(matches!(cyclic_spin_eigenspaces(&point, 0, 3, 0), Err(PowerError::KOdd(3))));
    }

    #[test]
    fn sym_series_of_a_point_is_partition_numbers() {
        let point = PermTwoRep::new(GSet::natural(Arc::new(FiniteGroup::trivial(1))));
        let s = sym_character_series(&point, 0, 0, 8).unwrap();
        assert_eq!(ints(&s.even), vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn sym_series_of_free_z2() {
        let z2 = regular_cyclic(2);
        let s = sym_character_series(&z2, 1, 0, 8).unwrap();
        assert_eq!(ints(&s.even), vec![1, 0, 1, 0, 2, 0, 3, 0, 5]);
        assert_eq!(burnside_oracle_sym(&z2, 1, 0, 2).unwrap(), BigRational::one());
    }

    #[test]
    fn ext_series_of_a_point_is_strict_partitions() {
        let point = PermTwoRep::new(GSet::natural(Arc::new(FiniteGroup::trivial(1))));
        let s = ext_character_series(&point, 0, 0, 8).unwrap();
        assert_eq!(ints(&s.total()), vec![1, 1, 1, 2, 2, 3, 4, 5, 6]);
        let (e, o) = burnside_oracle_ext(&point, 0, 0, 3).unwrap();
        assert_eq!(e + o, rat(2));
    }

    #[test]
    fn oracle_caps() {
        let z2 = regular_cyclic(2);
        assert!(matches!(burnside_oracle_sym(&z2, 1, 0, 7), Err(PowerError::TooLarge(_))));
        assert!(matches!(sym_character_series(&z2, 1, 0, 13), Err(PowerError::TooLarge(_))));
    }
}
