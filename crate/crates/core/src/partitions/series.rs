use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

use super::PartitionError;

/// A power series in `q` kept modulo `q^(N+1)`, where `N` is the truncation
/// order. Binary operations insist on equal orders.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T = BigInt> {
    coeffs: Vec<T>,
}

pub type IntSeries = TruncatedSeries<BigInt>;
pub type RatSeries = TruncatedSeries<BigRational>;

impl<T: Clone + Num> TruncatedSeries<T> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![T::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// `c * q^k`, which is zero when `k` exceeds the order.
    pub fn monomial(order: usize, k: usize, c: T) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Takes the first `order + 1` coefficients, padding with zeros.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn set_coeff(&mut self, k: usize, c: T) {
        if k <= self.order() {
            self.coeffs[k] = c;
        }
    }

    fn check_order(&self, other: &Self) -> Result<(), PartitionError> {
        if self.order() != other.order() {
            return Err(PartitionError::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PartitionError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PartitionError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PartitionError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same order");
            }
            base = base.mul(&base).expect("same order");
            k >>= 1;
        }
        acc
    }

    /// Substitutes `q -> q^k`.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > self.order() {
                break;
            }
            out.coeffs[i * k] = c.clone();
        }
        out
    }

    /// Multiplicative inverse; the constant term must be a unit of `T`.
    pub fn inverse(&self) -> Result<Self, PartitionError> {
        let a0 = self.coeffs[0].clone();
        if a0.is_zero() {
            return Err(PartitionError::NotInvertible);
        }
        let b0 = T::one() / a0.clone();
        if b0.clone() * a0 != T::one() {
            return Err(PartitionError::NotInvertible);
        }
        let n = self.order();
        let mut b = vec![T::zero(); n + 1];
        b[0] = b0.clone();
        for m in 1..=n {
            let mut acc = T::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc + self.coeffs[k].clone() * b[m - k].clone();
                }
            }
            b[m] = T::zero() - b0.clone() * acc;
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}

impl RatSeries {
    /// `exp(f)` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self, PartitionError> {
        if !self.coeffs[0].is_zero() {
            return Err(PartitionError::NonzeroConstant);
        }
        let n = self.order();
        let mut e = vec![BigRational::zero(); n + 1];
        e[0] = BigRational::one();
        // m e_m = sum_k k f_k e_{m-k}
        for m in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += BigRational::from_integer(BigInt::from(k)) * &self.coeffs[k] * &e[m - k];
                }
            }
            e[m] = acc / BigRational::from_integer(BigInt::from(m));
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// The integer coefficients, or `None` if some coefficient is fractional.
    pub fn to_integers(&self) -> Option<IntSeries> {
        let coeffs: Option<Vec<BigInt>> =
            self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect();
        coeffs.map(|coeffs| TruncatedSeries { coeffs })
    }
}

impl IntSeries {
    pub fn to_rational(&self) -> RatSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect() }
    }

    /// Coefficients as decimal strings, safe for any precision.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_i64(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|&c| BigInt::from(c)))
    }
}

impl<T: Clone + Num + fmt::Display> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c}q^{k}"))
            .collect();
        write!(f, "[{}] + O(q^{})", terms.join(" + "), self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_mismatch_is_an_error() {
        let a = IntSeries::one(3);
        let b = IntSeries::one(4);
        assert_eq!(a.mul(&b), Err(PartitionError::OrderMismatch { left: 3, right: 4 }));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let s = IntSeries::from_i64(5, &[1, -1]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv, IntSeries::from_i64(5, &[1, 1, 1, 1, 1, 1]));
        assert!(IntSeries::from_i64(3, &[2, 1]).inverse().is_err());
    }

    #[test]
    fn exp_of_q_is_factorial_series() {
        let q = RatSeries::monomial(4, 1, BigRational::one());
        let e = q.exp().unwrap();
        assert_eq!(e.coeff(4), BigRational::new(1.into(), 24.into()));
    }

    #[test]
    fn dilate_spreads_coefficients() {
        let s = IntSeries::from_i64(6, &[1, 2, 3, 4]);
        assert_eq!(s.dilate(2), IntSeries::from_i64(6, &[1, 0, 2, 0, 3, 0, 4]));
    }
}
