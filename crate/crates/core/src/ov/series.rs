//! Multilinear function series: the operator-valued analogue of a
//! truncated power series.
//!
//! A series of order `N` stores components `F_0 .. F_{N-1}`, where `F_j`
//! is a multilinear map of arity `j` (`F_0` is a plain matrix). Sum is
//! componentwise; the formal product is
//!
//! ```text
//! (FG)_n(f_1,...,f_n) = sum_{k=0}^{n} F_k(f_1,...,f_k) G_{n-k}(f_{k+1},...,f_n)
//! ```
//!
//! computed here on basis tuples, with everything above arity `N-1`
//! dropped. The product is genuinely non-commutative: both the argument
//! split and the matrix product preserve order.
//!
//! The cumulant series of a variable `X` lives here with `F_j` the
//! cumulant of order `j+1` (so `F_0` is `Phi(X)`), and likewise for
//! moment series; that indexing is what makes the series identity
//! `M = B(1 + I M)` and the product rule for shifted cumulant series
//! come out as stated.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ov::multilinear::{basis_tuples, MultilinearMap};
use crate::ring::Ring;

/// Series of multilinear maps; component `j` has arity `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulSeries<T> {
    dim: usize,
    components: Vec<MultilinearMap<T>>,
}

impl<T: Ring> MulSeries<T> {
    /// The zero series with `order` components.
    pub fn zero(dim: usize, order: usize) -> Self {
        assert!(order >= 1, "series needs at least one component");
        MulSeries {
            dim,
            components: (0..order).map(|j| MultilinearMap::zero(dim, j)).collect(),
        }
    }

    /// The constant series `1`: component 0 is the unit matrix, the rest
    /// vanish.
    pub fn one(dim: usize, order: usize) -> Self {
        let mut s = Self::zero(dim, order);
        s.components[0] = MultilinearMap::constant(Matrix::identity(dim));
        s
    }

    /// The identity-function series `I`: component 1 is the identity map
    /// `f -> f`, the rest vanish. Requires `order >= 2`.
    pub fn identity_series(dim: usize, order: usize) -> Self {
        assert!(order >= 2, "identity series needs arity-1 component");
        let mut s = Self::zero(dim, order);
        s.components[1] = MultilinearMap::identity_map(dim);
        s
    }

    /// Assemble from explicit components; component `j` must have arity
    /// `j` and all dims must agree.
    pub fn from_components(components: Vec<MultilinearMap<T>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyEntries);
        }
        let dim = components[0].dim();
        for (j, c) in components.iter().enumerate() {
            if c.arity() != j {
                return Err(Error::ArityMismatch {
                    expected: j,
                    got: c.arity(),
                });
            }
            if c.dim() != dim {
                return Err(Error::DimMismatch {
                    left: dim,
                    right: c.dim(),
                });
            }
        }
        Ok(MulSeries { dim, components })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of stored components (`F_0 .. F_{order-1}`).
    pub fn order(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, j: usize) -> &MultilinearMap<T> {
        &self.components[j]
    }

    pub fn components(&self) -> &[MultilinearMap<T>] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MultilinearMap::is_zero)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.require_shape(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(MulSeries {
            dim: self.dim,
            components,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.require_shape(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.checked_sub(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(MulSeries {
            dim: self.dim,
            components,
        })
    }

    /// Formal product, truncated to the common order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.require_shape(other)?;
        let d2 = self.dim * self.dim;
        let n_comp = self.components.len();
        let mut components = Vec::with_capacity(n_comp);
        for n in 0..n_comp {
            let mut out = MultilinearMap::zero(self.dim, n);
            for tuple in basis_tuples(d2, n) {
                let mut acc = Matrix::zero(self.dim);
                for k in 0..=n {
                    let left = self.components[k].get(&tuple[..k]);
                    if left.is_zero() {
                        continue;
                    }
                    let right = other.components[n - k].get(&tuple[k..]);
                    if right.is_zero() {
                        continue;
                    }
                    acc = &acc + &(left * right);
                }
                out.set(&tuple, acc);
            }
            components.push(out);
        }
        Ok(MulSeries {
            dim: self.dim,
            components,
        })
    }

    fn require_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }
}
