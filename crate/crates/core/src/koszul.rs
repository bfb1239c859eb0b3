//! Grothendieck-group model of the categorical Koszul complexes.
//!
//! In bidegree `(p, q)` with `n = p + q`, let `H = S_p × S_q ⊂ S_n`, where
//! `S_p` permutes positions `1..p` and carries the sign twist and `S_q`
//! permutes `p+1..n` plainly. A class is a formal combination of symbols
//! `[w]`, one per coset `wH`, subject to `[wu] = sgn(u_p) [w]` for
//! `u = (u_p, u_q) ∈ H`. The canonical representative sorts the images of
//! each block increasingly, so symbols are indexed by the `p`-subset
//! `w({1..p})`.
//!
//! `[w]` corresponds to the twisted-invariant element `N_H w⁻¹` of `ℚ[S_n]`,
//! `N_H = Σ_{u∈H} sgn(u_p) u`. The maps
//!
//! * `D a = a + Σ_{j=1}^{q} (p, p+j) a` from `(p, q)` to `(p-1, q+1)`,
//! * `Δ a = a - Σ_{i=1}^{p} (i, p+1) a` from `(p, q)` to `(p+1, q-1)`
//!
//! act by left multiplication and become, on symbols,
//!
//! * `D[w] = [w] - Σ_{i=1}^{p-1} [w (i, p)]`,
//! * `Δ[w] = [w] + Σ_{j=2}^{q} [w (p+1, p+j)]`.
//!
//! Both routes are implemented and compared in the tests.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::groups::{symmetric_group, Permutation};
use crate::partitions::{euler_phi_series, IntSeries, Parity, PartitionError};
use crate::super_k::{ext_k_dim, sym_k_dim, SuperKError};

pub const MAX_HOMOTOPY_DEGREE: usize = 8;
pub const MAX_EXACTNESS_DEGREE: usize = 6;
pub const MAX_RECIPROCITY_ORDER: usize = 30;
/// Largest `n` for which elements of `ℚ[S_n]` are built explicitly.
pub const MAX_GROUP_ALGEBRA_DEGREE: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KoszulError {
    #[error("bidegree ({p}, {q}) has no {map}")]
    BidegreeUnderflow { p: usize, q: usize, map: &'static str },
    #[error("vector has bidegree ({0}, {1}), expected ({2}, {3})")]
    BidegreeMismatch(usize, usize, usize, usize),
    #[error("{what} {value} exceeds the cap of {cap}")]
    TooLarge { what: &'static str, value: usize, cap: usize },
    #[error("element of the group algebra is not twisted-invariant")]
    NotInvariant,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    SuperK(#[from] SuperKError),
}

/// How the symbolic maps are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolConvention {
    /// Right multiplication by the coset representatives of the other block,
    /// as derived from left multiplication on `N_H w⁻¹`.
    Derived,
    /// `D[w] = [w] + Σ_j [(p, p+j) w]` and `Δ[w] = [w] - Σ_i [(i, p+1) w]`,
    /// left multiplication applied to the symbol directly. It does not satisfy
    /// the homotopy identity and is kept for comparison.
    LeftLiteral,
}

/// Canonical representative of a coset `wH`: image lists sorted within each
/// block.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedCosetSymbol {
    rep: Permutation,
}

impl SignedCosetSymbol {
    pub fn rep(&self) -> &Permutation {
        &self.rep
    }
}

impl fmt::Debug for SignedCosetSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]", self.rep.images())
    }
}

fn inversions(xs: &[usize]) -> usize {
    let mut count = 0;
    for a in 0..xs.len() {
        for b in a + 1..xs.len() {
            if xs[a] > xs[b] {
                count += 1;
            }
        }
    }
    count
}

/// Brings `w` (with `Π`-parity `parity`) to its canonical coset
/// representative in bidegree `(p, q)`; the returned sign is
/// `(-1)^parity · sgn(u_p)` where `w = rep · u`.
pub fn normalize(p: usize, q: usize, w: &Permutation, parity: Parity) -> (SignedCosetSymbol, i8) {
    assert_eq!(w.degree(), p + q, "permutation degree must be p + q");
    let mut images = w.images().to_vec();
    let mut sign = if inversions(&images[..p]) % 2 == 0 { 1 } else { -1 };
    if parity == Parity::Odd {
        sign = -sign;
    }
    images[..p].sort_unstable();
    images[p..].sort_unstable();
    let rep = Permutation::from_images(images).expect("block sort keeps a bijection");
    (SignedCosetSymbol { rep }, sign)
}

/// A formal integer combination of symbols in a fixed bidegree.
#[derive(Clone, PartialEq, Eq)]
pub struct KoszulVector {
    p: usize,
    q: usize,
    terms: BTreeMap<SignedCosetSymbol, BigInt>,
}

impl KoszulVector {
    pub fn zero(p: usize, q: usize) -> Self {
        KoszulVector { p, q, terms: BTreeMap::new() }
    }

    /// The class of `⟨ρ(w) V⟩`.
    pub fn generator(p: usize, q: usize, w: &Permutation) -> Self {
        let mut v = Self::zero(p, q);
        v.add_permutation(w, &BigInt::one());
        v
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedCosetSymbol, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &SignedCosetSymbol) -> BigInt {
        self.terms.get(s).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_symbol(&mut self, s: SignedCosetSymbol, c: BigInt) {
        let entry = self.terms.entry(s).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Adds `c · [w]`, normalizing `w` first.
    pub fn add_permutation(&mut self, w: &Permutation, c: &BigInt) {
        let (s, sign) = normalize(self.p, self.q, w, Parity::Even);
        self.add_symbol(s, c * BigInt::from(sign));
    }

    pub fn add(&self, other: &KoszulVector) -> Result<KoszulVector, KoszulError> {
        if self.bidegree() != other.bidegree() {
            return Err(KoszulError::BidegreeMismatch(other.p, other.q, self.p, self.q));
        }
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_symbol(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> KoszulVector {
        let mut out = KoszulVector::zero(self.p, self.q);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(s, v)| (s.clone(), v * c)).collect();
        }
        out
    }
}

impl fmt::Debug for KoszulVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) {{", self.p, self.q)?;
        for (i, (s, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}·{s:?}")?;
        }
        write!(f, "}}")
    }
}

/// The transposition of 1-based positions `a` and `b` in `S_n`.
fn swap(n: usize, a: usize, b: usize) -> Permutation {
    Permutation::transposition(n, a - 1, b - 1)
}

pub fn apply_d(v: &KoszulVector) -> Result<KoszulVector, KoszulError> {
    apply_d_with(v, SymbolConvention::Derived)
}

pub fn apply_delta(v: &KoszulVector) -> Result<KoszulVector, KoszulError> {
    apply_delta_with(v, SymbolConvention::Derived)
}

/// `D : (p, q) → (p-1, q+1)`.
pub fn apply_d_with(v: &KoszulVector, convention: SymbolConvention) -> Result<KoszulVector, KoszulError> {
    let (p, q) = v.bidegree();
    if p == 0 {
        return Err(KoszulError::BidegreeUnderflow { p, q, map: "D" });
    }
    let n = p + q;
    let mut out = KoszulVector::zero(p - 1, q + 1);
    for (s, c) in v.terms() {
        let w = s.rep();
        out.add_permutation(w, c);
        match convention {
            SymbolConvention::Derived => {
                for i in 1..p {
                    out.add_permutation(&w.compose(&swap(n, i, p)), &-c);
                }
            }
            SymbolConvention::LeftLiteral => {
                for j in 1..=q {
                    out.add_permutation(&swap(n, p, p + j).compose(w), c);
                }
            }
        }
    }
    Ok(out)
}

/// `Δ : (p, q) → (p+1, q-1)`.
pub fn apply_delta_with(v: &KoszulVector, convention: SymbolConvention) -> Result<KoszulVector, KoszulError> {
    let (p, q) = v.bidegree();
    if q == 0 {
        return Err(KoszulError::BidegreeUnderflow { p, q, map: "Δ" });
    }
    let n = p + q;
    let mut out = KoszulVector::zero(p + 1, q - 1);
    for (s, c) in v.terms() {
        let w = s.rep();
        out.add_permutation(w, c);
        match convention {
            SymbolConvention::Derived => {
                for j in 2..=q {
                    out.add_permutation(&w.compose(&swap(n, p + 1, p + j)), c);
                }
            }
            SymbolConvention::LeftLiteral => {
                for i in 1..=p {
                    out.add_permutation(&swap(n, i, p + 1).compose(w), &-c);
                }
            }
        }
    }
    Ok(out)
}

/// All canonical symbols of bidegree `(p, q)`, in increasing order.
pub fn basis(p: usize, q: usize) -> Vec<SignedCosetSymbol> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, chosen: &mut Vec<usize>, out: &mut Vec<SignedCosetSymbol>) {
        if chosen.len() == p {
            let mut images = chosen.clone();
            images.extend((0..n).filter(|x| !chosen.contains(x)));
            out.push(SignedCosetSymbol { rep: Permutation::from_images(images).expect("subset split is a bijection") });
            return;
        }
        for x in start..n {
            chosen.push(x);
            rec(x + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    rec(0, n, p, &mut chosen, &mut out);
    out.sort();
    out
}

fn basis_vector(p: usize, q: usize, s: &SignedCosetSymbol) -> KoszulVector {
    let mut v = KoszulVector::zero(p, q);
    v.terms.insert(s.clone(), BigInt::one());
    v
}

/// One failed identity, with the symbol it failed on and the offending value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomotopyFailure {
    pub p: usize,
    pub q: usize,
    pub identity: &'static str,
    pub symbol: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomotopyReport {
    pub n: usize,
    pub convention: SymbolConvention,
    pub checks: usize,
    pub failures: Vec<HomotopyFailure>,
}

impl HomotopyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `D∘D = 0`, `Δ∘Δ = 0` and `Δ∘D + D∘Δ = n·id` on every basis symbol
/// of every bidegree with `p + q = n`. Compositions that leave the range of
/// bidegrees count as zero.
pub fn verify_homotopy_identity(n: usize) -> Result<HomotopyReport, KoszulError> {
    verify_homotopy_identity_with(n, SymbolConvention::Derived)
}

pub fn verify_homotopy_identity_with(n: usize, convention: SymbolConvention) -> Result<HomotopyReport, KoszulError> {
    if n > MAX_HOMOTOPY_DEGREE {
        return Err(KoszulError::TooLarge { what: "degree", value: n, cap: MAX_HOMOTOPY_DEGREE });
    }
    let d = |v: &KoszulVector| apply_d_with(v, convention);
    let delta = |v: &KoszulVector| apply_delta_with(v, convention);
    let results: Vec<(usize, Vec<HomotopyFailure>)> = (0..=n)
        .into_par_iter()
        .map(|p| {
            let q = n - p;
            let mut checks = 0;
            let mut failures = Vec::new();
            let mut record = |identity: &'static str, s: &SignedCosetSymbol, v: &KoszulVector| {
                failures.push(HomotopyFailure {
                    p,
                    q,
                    identity,
                    symbol: s.rep().images().to_vec(),
                    value: format!("{v:?}"),
                });
            };
            for s in basis(p, q) {
                let v = basis_vector(p, q, &s);
                if p >= 2 {
                    checks += 1;
                    let dd = d(&d(&v).expect("p ≥ 1")).expect("p ≥ 2");
                    if !dd.is_zero() {
                        record("D∘D = 0", &s, &dd);
                    }
                }
                if q >= 2 {
                    checks += 1;
                    let ee = delta(&delta(&v).expect("q ≥ 1")).expect("q ≥ 2");
                    if !ee.is_zero() {
                        record("Δ∘Δ = 0", &s, &ee);
                    }
                }
                checks += 1;
                let mut sum = KoszulVector::zero(p, q);
                if p >= 1 {
                    sum = sum.add(&delta(&d(&v).expect("p ≥ 1")).expect("q + 1 ≥ 1")).expect("same bidegree");
                }
                if q >= 1 {
                    sum = sum.add(&d(&delta(&v).expect("q ≥ 1")).expect("p + 1 ≥ 1")).expect("same bidegree");
                }
                let expected = v.scale(&BigInt::from(n));
                if sum != expected {
                    record("Δ∘D + D∘Δ = n·id", &s, &sum);
                }
            }
            (checks, failures)
        })
        .collect();
    let checks = results.iter().map(|(c, _)| c).sum();
    let failures = results.into_iter().flat_map(|(_, f)| f).collect();
    Ok(HomotopyReport { n, convention, checks, failures })
}

/// Matrix of a map between bidegrees in the canonical bases; rows index the
/// target basis.
fn map_matrix<F>(src: (usize, usize), dst: (usize, usize), f: F) -> Vec<Vec<BigRational>>
where
    F: Fn(&KoszulVector) -> KoszulVector,
{
    let src_basis = basis(src.0, src.1);
    let dst_basis = basis(dst.0, dst.1);
    let mut m = vec![vec![BigRational::zero(); src_basis.len()]; dst_basis.len()];
    for (col, s) in src_basis.iter().enumerate() {
        let image = f(&basis_vector(src.0, src.1, s));
        for (t, c) in image.terms() {
            let row = dst_basis.binary_search(t).expect("normalized symbol is in the basis");
            m[row][col] = BigRational::from_integer(c.clone());
        }
    }
    m
}

/// Rank over `ℚ` by Gaussian elimination.
pub fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for c in col..cols {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Homology of one complex, listed by the bidegree `(p, n - p)` of each term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexHomology {
    pub dims: Vec<usize>,
    pub ranks: Vec<usize>,
    pub homology: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub n: usize,
    /// `M_{n,0} → M_{n-1,1} → … → M_{0,n}` under `D`, indexed by `p`.
    pub d_complex: ComplexHomology,
    /// `M_{0,n} → M_{1,n-1} → … → M_{n,0}` under `Δ`, indexed by `p`.
    pub delta_complex: ComplexHomology,
}

impl ExactnessReport {
    pub fn acyclic(&self) -> bool {
        self.d_complex.homology.iter().chain(&self.delta_complex.homology).all(|&h| h == 0)
    }
}

/// Ranks of the assembled complexes over `ℚ` and the homology at each term.
pub fn exactness_report(n: usize) -> Result<ExactnessReport, KoszulError> {
    if n > MAX_EXACTNESS_DEGREE {
        return Err(KoszulError::TooLarge { what: "degree", value: n, cap: MAX_EXACTNESS_DEGREE });
    }
    let dims: Vec<usize> = (0..=n).map(|p| basis(p, n - p).len()).collect();
    // d_rank[p] = rank of D out of (p, n-p); delta_rank[p] = rank of Δ out of (p, n-p)
    let d_rank: Vec<usize> = (0..=n)
        .map(|p| {
            if p == 0 {
                0
            } else {
                rational_rank(map_matrix((p, n - p), (p - 1, n - p + 1), |v| apply_d(v).expect("p ≥ 1")))
            }
        })
        .collect();
    let delta_rank: Vec<usize> = (0..=n)
        .map(|p| {
            if p == n {
                0
            } else {
                rational_rank(map_matrix((p, n - p), (p + 1, n - p - 1), |v| apply_delta(v).expect("q ≥ 1")))
            }
        })
        .collect();
    let d_homology = (0..=n)
        .map(|p| {
            let incoming = if p < n { d_rank[p + 1] } else { 0 };
            dims[p] - d_rank[p] - incoming
        })
        .collect();
    let delta_homology = (0..=n)
        .map(|p| {
            let incoming = if p > 0 { delta_rank[p - 1] } else { 0 };
            dims[p] - delta_rank[p] - incoming
        })
        .collect();
    Ok(ExactnessReport {
        n,
        d_complex: ComplexHomology { dims: dims.clone(), ranks: d_rank, homology: d_homology },
        delta_complex: ComplexHomology { dims, ranks: delta_rank, homology: delta_homology },
    })
}

/// Which numbers of the K-groups enter the reciprocity series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DimensionReading {
    /// `d0 - d1`.
    Superdimension,
    /// `d0 + d1`.
    Total,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReciprocityReport {
    pub order: usize,
    pub d: usize,
    pub reading: DimensionReading,
    pub passed: bool,
    /// Coefficients of `A·B - 1` as decimal strings.
    pub residual: Vec<String>,
    /// Smallest degree with a nonzero residual coefficient.
    pub first_failure: Option<usize>,
}

fn power_series(order: usize, reading: DimensionReading, ext: bool) -> Result<IntSeries, KoszulError> {
    let mut s = IntSeries::zero(order);
    for n in 0..=order {
        let k = if ext { ext_k_dim(n)? } else { sym_k_dim(n)? };
        let value = match reading {
            DimensionReading::Superdimension => k.sdim(),
            DimensionReading::Total => k.total() as i64,
        };
        let sign = if ext && n % 2 == 1 { -1 } else { 1 };
        s.set_coeff(n, BigInt::from(sign * value));
    }
    Ok(s)
}

/// Checks `(Σ_n dim Sym^n · q^n)^d · (Σ_n dim Λ^n · (-q)^n)^d = 1` modulo
/// `q^(order+1)`, where the symmetric side for `d` points is `1/φ(q)^d`.
pub fn reciprocity_check(order: usize, d: usize, reading: DimensionReading) -> Result<ReciprocityReport, KoszulError> {
    if order > MAX_RECIPROCITY_ORDER {
        return Err(KoszulError::TooLarge { what: "truncation order", value: order, cap: MAX_RECIPROCITY_ORDER });
    }
    let a = power_series(order, reading, false)?.pow(d as u32);
    let b = power_series(order, reading, true)?.pow(d as u32);
    let residual = a.mul(&b)?.sub(&IntSeries::one(order))?;
    let first_failure = residual.coeffs().iter().position(|c| !c.is_zero());
    Ok(ReciprocityReport {
        order,
        d,
        reading,
        passed: first_failure.is_none(),
        residual: residual.to_decimal_strings(),
        first_failure,
    })
}

/// `Σ_n sdim Λ^n (-q)^n`, which the reciprocity identifies with `φ(q)`.
pub fn signed_exterior_series(order: usize) -> Result<IntSeries, KoszulError> {
    power_series(order, DimensionReading::Superdimension, true)
}

/// Whether the signed exterior series equals `φ(q)` coefficientwise.
pub fn exterior_series_is_phi(order: usize) -> Result<bool, KoszulError> {
    Ok(signed_exterior_series(order)? == euler_phi_series(order)?)
}

/// Elements of `ℚ[S_n]` as dense integer vectors indexed like
/// [`symmetric_group`].
pub mod group_algebra {
    use super::*;
    use crate::groups::FiniteGroup;

    pub struct GroupAlgebra {
        group: FiniteGroup,
        n: usize,
    }

    impl GroupAlgebra {
        pub fn new(n: usize) -> Result<Self, KoszulError> {
            if n > MAX_GROUP_ALGEBRA_DEGREE || n == 0 {
                return Err(KoszulError::TooLarge { what: "degree", value: n, cap: MAX_GROUP_ALGEBRA_DEGREE });
            }
            let group = symmetric_group(n).expect("n within cap");
            Ok(GroupAlgebra { group, n })
        }

        fn idx(&self, p: &Permutation) -> usize {
            self.group.index_of(p).expect("permutation of degree n")
        }

        /// `N_H w⁻¹ = Σ_{u∈H} sgn(u_p) u w⁻¹`.
        pub fn embed(&self, p: usize, s: &SignedCosetSymbol) -> Vec<i64> {
            let mut out = vec![0i64; self.group.order()];
            let w_inv = s.rep().inverse();
            for u in self.group.elements() {
                let perm = self.group.label(u);
                if let Some(sign) = block_sign(perm, p) {
                    out[self.idx(&perm.compose(&w_inv))] += sign;
                }
            }
            out
        }

        pub fn embed_vector(&self, v: &KoszulVector) -> Vec<i64> {
            let (p, _) = v.bidegree();
            let mut out = vec![0i64; self.group.order()];
            for (s, c) in v.terms() {
                let c: i64 = c.try_into().expect("small coefficients");
                for (slot, x) in out.iter_mut().zip(self.embed(p, s)) {
                    *slot += c * x;
                }
            }
            out
        }

        /// `x · a` for a permutation `x`.
        pub fn left_mul(&self, x: &Permutation, a: &[i64]) -> Vec<i64> {
            let xi = self.idx(x);
            let mut out = vec![0i64; a.len()];
            for (y, &c) in a.iter().enumerate() {
                if c != 0 {
                    out[self.group.mul(xi, y)] += c;
                }
            }
            out
        }

        /// `D a = a + Σ_{j=1}^{q} (p, p+j) a`.
        pub fn literal_d(&self, p: usize, a: &[i64]) -> Vec<i64> {
            let mut out = a.to_vec();
            for j in 1..=self.n - p {
                for (o, x) in out.iter_mut().zip(self.left_mul(&swap(self.n, p, p + j), a)) {
                    *o += x;
                }
            }
            out
        }

        /// `Δ a = a - Σ_{i=1}^{p} (i, p+1) a`.
        pub fn literal_delta(&self, p: usize, a: &[i64]) -> Vec<i64> {
            let mut out = a.to_vec();
            for i in 1..=p {
                for (o, x) in out.iter_mut().zip(self.left_mul(&swap(self.n, i, p + 1), a)) {
                    *o -= x;
                }
            }
            out
        }

        /// Reads a twisted-invariant element back as a combination of symbols:
        /// `[w]` gets the coefficient of `w⁻¹`. Fails if `a` is not invariant.
        pub fn decompose(&self, p: usize, a: &[i64]) -> Result<KoszulVector, KoszulError> {
            let q = self.n - p;
            let mut v = KoszulVector::zero(p, q);
            for s in basis(p, q) {
                let c = a[self.idx(&s.rep().inverse())];
                if c != 0 {
                    v.add_symbol(s, BigInt::from(c));
                }
            }
            if self.embed_vector(&v) != a {
                return Err(KoszulError::NotInvariant);
            }
            Ok(v)
        }
    }

    /// `sgn(u_p)` if `u` preserves the blocks `{0..p-1}` and `{p..n-1}`.
    fn block_sign(u: &Permutation, p: usize) -> Option<i64> {
        let img = u.images();
        if img[..p].iter().any(|&x| x >= p) {
            return None;
        }
        Some(if inversions(&img[..p]) % 2 == 0 { 1 } else { -1 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(p: usize, q: usize) -> KoszulVector {
        KoszulVector::generator(p, q, &Permutation::identity(p + q))
    }

    #[test]
    fn normalize_examples() {
        let (s, sign) = normalize(2, 0, &Permutation::elementary(2, 1), Parity::Even);
        assert_eq!(s.rep(), &Permutation::identity(2));
        assert_eq!(sign, -1);
        let (_, sign) = normalize(0, 3, &Permutation::from_images(vec![2, 0, 1]).unwrap(), Parity::Even);
        assert_eq!(sign, 1);
        let (_, sign) = normalize(1, 1, &Permutation::identity(2), Parity::Odd);
        assert_eq!(sign, -1);
    }

    #[test]
    fn small_maps() {
        assert_eq!(apply_d(&gen(1, 0)).unwrap(), gen(0, 1));
        assert_eq!(apply_delta(&gen(0, 1)).unwrap(), gen(1, 0));
        assert!(apply_d(&gen(2, 0)).and_then(|v| apply_d(&v)).unwrap().is_zero());
        assert!(apply_delta(&gen(0, 2)).and_then(|v| apply_delta(&v)).unwrap().is_zero());
        assert!(matches!(apply_d(&gen(0, 2)), Err(KoszulError::BidegreeUnderflow { .. })));
    }

    #[test]
    fn homotopy_at_one_one() {
        let v = gen(1, 1);
        let a = apply_delta(&apply_d(&v).unwrap()).unwrap();
        let b = apply_d(&apply_delta(&v).unwrap()).unwrap();
        assert_eq!(a.add(&b).unwrap(), v.scale(&BigInt::from(2)));
    }

    #[test]
    fn basis_sizes_are_binomial() {
        assert_eq!(basis(2, 2).len(), 6);
        assert_eq!(basis(0, 3).len(), 1);
        assert_eq!(basis(0, 0).len(), 1);
    }

    #[test]
    fn rank_of_small_matrices() {
        let r = |v: Vec<Vec<i64>>| {
            rational_rank(v.into_iter().map(|row| row.into_iter().map(|x| BigRational::from_integer(x.into())).collect()).collect())
        };
        assert_eq!(r(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(r(vec![vec![0, 1], vec![1, 0]]), 2);
        assert_eq!(r(vec![]), 0);
    }

    #[test]
    fn exactness_at_zero_and_one() {
        let r0 = exactness_report(0).unwrap();
        assert_eq!(r0.d_complex.homology, vec![1]);
        let r1 = exactness_report(1).unwrap();
        assert!(r1.acyclic());
    }

    #[test]
    fn reciprocity_small() {
        assert!(reciprocity_check(16, 1, DimensionReading::Superdimension).unwrap().passed);
        let neg = reciprocity_check(16, 1, DimensionReading::Total).unwrap();
        assert_eq!(neg.first_failure, Some(2));
        assert_eq!(neg.residual[2], "2");
    }
}
