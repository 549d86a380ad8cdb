//! Scalar bounds for the coefficient ring.
//!
//! Every identity in this crate is a polynomial identity with integer
//! coefficients, so the calculus only needs ring operations: addition,
//! subtraction, multiplication, and the constants 0 and 1. Division never
//! appears in a recurrence. [`Ring`] packages exactly those bounds;
//! [`Field`] adds exact division for the few places an inverse is wanted.

use num::{One, Zero};
use std::ops::{Div, Neg, Sub};

/// A commutative coefficient ring with decidable equality.
pub trait Ring:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

/// A ring with exact division by nonzero elements.
pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = Self> {}

/// `x` summed `k` times, by binary doubling. Used to scale ring elements by
/// binomial coefficients without requiring a conversion from integers.
pub fn nat_mul<T: Ring>(x: &T, k: u128) -> T {
    let mut acc = T::zero();
    let mut base = x.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc + base.clone();
        }
        k >>= 1;
        if k > 0 {
            base = base.clone() + base;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn nat_mul_matches_repeated_addition() {
        let x = rat(3, 7);
        let mut acc = rat(0, 1);
        for k in 0..=25u128 {
            assert_eq!(nat_mul(&x, k), acc);
            acc = acc + x.clone();
        }
    }
}
