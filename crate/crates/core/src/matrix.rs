//! Dense square matrices over an exact coefficient ring.
//!
//! These realize the base algebra for the operator-valued calculus. The
//! ring is genuinely non-commutative for `dim > 1`, and nothing in this
//! crate ever assumes otherwise. At `dim == 1` a matrix is a boxed scalar,
//! which is what the dimension-collapse tests lean on.

use crate::error::{Error, Result};
use crate::ring::Ring;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Square matrix, row-major, entrywise exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    /// The zero matrix of size `dim`.
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        Matrix {
            dim,
            entries: vec![T::zero(); dim * dim],
        }
    }

    /// The identity matrix of size `dim`.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, T::one());
        }
        m
    }

    /// The matrix unit with a single 1 in row `i`, column `j`.
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(dim);
        m.set(i, j, T::one());
        m
    }

    /// Build from nested rows; every row must have the same length as the
    /// number of rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidInput("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimMismatch {
                    left: dim,
                    right: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Rows as nested vectors, for serialization.
    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// Entrywise sum, rejecting a dimension mismatch.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.require_dim(other)?;
        Ok(self + other)
    }

    /// Entrywise difference, rejecting a dimension mismatch.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.require_dim(other)?;
        Ok(self - other)
    }

    /// Matrix product, rejecting a dimension mismatch.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.require_dim(other)?;
        Ok(self * other)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|e| e.clone() * c.clone())
                .collect(),
        }
    }

    fn require_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl<T: Ring> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Ring> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Ring> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let d = self.dim;
        let mut out = Matrix::<T>::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }
}

impl<T: Ring> Mul for Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Matrix<T>) -> Matrix<T> {
        &self * &rhs
    }
}

impl<T: Ring> Add for Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Matrix<T>) -> Matrix<T> {
        &self + &rhs
    }
}
