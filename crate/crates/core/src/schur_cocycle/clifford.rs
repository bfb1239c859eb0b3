//! Exact arithmetic in the complex Clifford algebra with `e_i^2 = 1` and
//! `e_i e_j = -e_j e_i`. Coefficients are Gaussian integers; every element
//! carries a shared factor `2^(-k/2)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

/// `re + im * i` with `i^2 = -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };
    pub const I: GaussianInt = GaussianInt { re: 0, im: 1 };

    pub fn new(re: i64, im: i64) -> Self {
        GaussianInt { re, im }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    fn is_even(self) -> bool {
        self.re % 2 == 0 && self.im % 2 == 0
    }

    fn halve(self) -> Self {
        GaussianInt { re: self.re / 2, im: self.im / 2 }
    }

    fn scale(self, s: i64) -> Self {
        GaussianInt { re: self.re * s, im: self.im * s }
    }

    pub fn conj(self) -> Self {
        GaussianInt { re: self.re, im: -self.im }
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: GaussianInt) -> GaussianInt {
        GaussianInt { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt { re: -self.re, im: -self.im }
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: GaussianInt) -> GaussianInt {
        GaussianInt { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (r, 0) => write!(f, "{r}"),
            (0, m) => write!(f, "{m}i"),
            (r, m) if m < 0 => write!(f, "({r}-{}i)", -m),
            (r, m) => write!(f, "({r}+{m}i)"),
        }
    }
}

/// Sign of `e_A e_B = ± e_{A xor B}` for blades given as bit masks.
fn blade_sign(a: u32, b: u32) -> i64 {
    // count pairs (x in A, y in B) with x > y
    let mut swaps = 0u32;
    let mut rest = a >> 1;
    while rest != 0 {
        swaps += (rest & b).count_ones();
        rest >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// An element `2^(-k/2) * Σ_A c_A e_A`.
#[derive(Clone, PartialEq, Eq)]
pub struct CliffordElement {
    terms: BTreeMap<u32, GaussianInt>,
    sqrt2_exponent: u32,
}

impl CliffordElement {
    pub fn scalar(c: GaussianInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        CliffordElement { terms, sqrt2_exponent: 0 }
    }

    pub fn one() -> Self {
        Self::scalar(GaussianInt::ONE)
    }

    /// The generator `e_j` for `j ≥ 1`.
    pub fn basis_vector(j: usize) -> Self {
        assert!((1..=32).contains(&j));
        let mut terms = BTreeMap::new();
        terms.insert(1u32 << (j - 1), GaussianInt::ONE);
        CliffordElement { terms, sqrt2_exponent: 0 }
    }

    /// `ŝ_i = i (e_i - e_{i+1}) / √2`, the lift of the `i`-th simple transposition.
    pub fn simple_lift(i: usize) -> Self {
        assert!((1..32).contains(&i));
        let mut terms = BTreeMap::new();
        terms.insert(1u32 << (i - 1), GaussianInt::I);
        terms.insert(1u32 << i, -GaussianInt::I);
        CliffordElement { terms, sqrt2_exponent: 1 }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, GaussianInt)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn sqrt2_exponent(&self) -> u32 {
        self.sqrt2_exponent
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        while self.sqrt2_exponent >= 2 && self.terms.values().all(|c| c.is_even()) {
            for c in self.terms.values_mut() {
                *c = c.halve();
            }
            self.sqrt2_exponent -= 2;
        }
        if self.terms.is_empty() {
            self.sqrt2_exponent = 0;
        }
        self
    }

    /// Coefficients rescaled to the exponent `k`, which must be at least the
    /// current one and of the same parity.
    fn coefficients_at(&self, k: u32) -> Option<BTreeMap<u32, GaussianInt>> {
        if k < self.sqrt2_exponent || (k - self.sqrt2_exponent) % 2 != 0 {
            return None;
        }
        let factor = 1i64 << ((k - self.sqrt2_exponent) / 2);
        Some(self.terms.iter().map(|(&m, &c)| (m, c.scale(factor))).collect())
    }

    /// Sum of two elements; `None` when their `√2` exponents differ in parity.
    pub fn add(&self, other: &CliffordElement) -> Option<CliffordElement> {
        let k = self.sqrt2_exponent.max(other.sqrt2_exponent);
        let mut terms = self.coefficients_at(k)?;
        for (m, c) in other.coefficients_at(k)? {
            let e = terms.entry(m).or_insert(GaussianInt::ZERO);
            *e = *e + c;
        }
        Some(CliffordElement { terms, sqrt2_exponent: k }.normalized())
    }

    pub fn mul(&self, other: &CliffordElement) -> CliffordElement {
        let mut terms: BTreeMap<u32, GaussianInt> = BTreeMap::new();
        for (&a, &x) in &self.terms {
            for (&b, &y) in &other.terms {
                let c = (x * y).scale(blade_sign(a, b));
                let e = terms.entry(a ^ b).or_insert(GaussianInt::ZERO);
                *e = *e + c;
            }
        }
        CliffordElement { terms, sqrt2_exponent: self.sqrt2_exponent + other.sqrt2_exponent }.normalized()
    }

    pub fn neg(&self) -> CliffordElement {
        CliffordElement {
            terms: self.terms.iter().map(|(&m, &c)| (m, -c)).collect(),
            sqrt2_exponent: self.sqrt2_exponent,
        }
    }

    /// Reverses the order of generators in every blade and conjugates the
    /// coefficients.
    pub fn reversed_conjugate(&self) -> CliffordElement {
        let terms = self
            .terms
            .iter()
            .map(|(&m, &c)| {
                let g = m.count_ones() as i64;
                let sign = if (g * (g - 1) / 2) % 2 == 0 { 1 } else { -1 };
                (m, c.conj().scale(sign))
            })
            .collect();
        CliffordElement { terms, sqrt2_exponent: self.sqrt2_exponent }
    }

    /// If `self = s * other` for `s ∈ {+1, -1}`, returns `s`.
    pub fn sign_relative_to(&self, other: &CliffordElement) -> Option<i8> {
        let k = self.sqrt2_exponent.max(other.sqrt2_exponent);
        let a = self.coefficients_at(k)?;
        let b = other.coefficients_at(k)?;
        if a.is_empty() || a.len() != b.len() {
            return None;
        }
        if a.iter().zip(&b).all(|((ma, ca), (mb, cb))| ma == mb && ca == cb) {
            Some(1)
        } else if a.iter().zip(&b).all(|((ma, ca), (mb, cb))| ma == mb && *ca == -*cb) {
            Some(-1)
        } else {
            None
        }
    }

    /// Returns `Some(c)` when the element is the scalar `c` (exponent zero).
    pub fn as_integer_scalar(&self) -> Option<GaussianInt> {
        if self.terms.is_empty() {
            return Some(GaussianInt::ZERO);
        }
        if self.sqrt2_exponent != 0 || self.terms.len() != 1 {
            return None;
        }
        self.terms.get(&0).copied()
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&m, c)| {
                if m == 0 {
                    c.to_string()
                } else {
                    let idx: Vec<String> = (0..32).filter(|b| m >> b & 1 == 1).map(|b| (b + 1).to_string()).collect();
                    format!("{c}e{}", idx.join("_"))
                }
            })
            .collect();
        write!(f, "2^(-{}/2)[{}]", self.sqrt2_exponent, parts.join(" + "))
    }
}
