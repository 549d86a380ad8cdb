//! Truncated formal power series in one commuting variable `z`.
//!
//! A series of order `n` stores coefficients of `z^0 .. z^n` and all
//! arithmetic silently drops higher terms. This is the carrier for the
//! `B`- and `M`-transforms of the scalar calculus, where products of
//! transforms encode convolution identities coefficient by coefficient.

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Coefficients `c[0] + c[1] z + ... + c[n] z^n`, truncation order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> TruncatedSeries<T> {
    /// Series from explicit coefficients; `coeffs[k]` multiplies `z^k`.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput(
                "series needs at least the constant coefficient".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// The zero series truncated at `z^order`.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    /// The constant series `1`, truncated at `z^order`.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// Truncation order (largest retained power of `z`).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient-wise sum; orders must agree.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.require_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    /// Cauchy product, truncated back to the common order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.require_order(other)?;
        let n = self.order();
        let mut out = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiply by `z`: shifts every coefficient up one slot, dropping the
    /// top one; the order is preserved.
    pub fn mul_z(&self) -> Self {
        let n = self.order();
        let mut out = vec![T::zero(); n + 1];
        for k in 0..n {
            out[k + 1] = self.coeffs[k].clone();
        }
        TruncatedSeries { coeffs: out }
    }

    fn require_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    fn s(vals: &[(i64, i64)]) -> TruncatedSeries<Rat> {
        TruncatedSeries::new(vals.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    #[test]
    fn product_truncates() {
        // (1 + z)(1 + z) = 1 + 2z + z^2, truncated at order 1 keeps 1 + 2z.
        let a = s(&[(1, 1), (1, 1)]);
        let p = a.checked_mul(&a).unwrap();
        assert_eq!(p, s(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn product_matches_hand_expansion() {
        // (1 + 2z + 3z^2)(2 - z + z^2) = 2 + 3z + 5z^2 + ...
        let a = s(&[(1, 1), (2, 1), (3, 1)]);
        let b = s(&[(2, 1), (-1, 1), (1, 1)]);
        assert_eq!(a.checked_mul(&b).unwrap(), s(&[(2, 1), (3, 1), (5, 1)]));
    }

    #[test]
    fn one_is_neutral() {
        let a = s(&[(5, 3), (-1, 2), (7, 1)]);
        let one = TruncatedSeries::one(2);
        assert_eq!(a.checked_mul(&one).unwrap(), a);
    }

    #[test]
    fn mul_z_shifts() {
        let a = s(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(a.mul_z(), s(&[(0, 1), (1, 1), (2, 1)]));
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let a = s(&[(1, 1), (1, 1)]);
        let b = s(&[(1, 1)]);
        assert_eq!(
            a.checked_add(&b),
            Err(Error::OrderMismatch { left: 1, right: 0 })
        );
    }
}
