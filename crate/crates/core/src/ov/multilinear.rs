//! Multilinear maps on a matrix algebra, stored as dense basis tensors.
//!
//! A map of arity `n` over `d x d` matrices is determined by its values
//! on all `n`-tuples of matrix units, i.e. by `(d^2)^n` matrix entries.
//! Storing those values makes equality of maps decidable — two
//! multilinear maps agree iff their tensors agree — which is what the
//! identity checks in this crate rely on.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;

/// Basis index `p` encodes the matrix unit `E_{i,j}` with `p = i*d + j`.
pub fn basis_matrix<T: Ring>(dim: usize, p: usize) -> Matrix<T> {
    Matrix::unit(dim, p / dim, p % dim)
}

/// All tuples of the given length over `0..range`, in lexicographic
/// order (first slot most significant).
pub fn basis_tuples(range: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(range.pow(len as u32));
    let mut cur = vec![0usize; len];
    loop {
        out.push(cur.clone());
        // Odometer increment, least-significant slot last.
        let mut slot = len;
        loop {
            if slot == 0 {
                return out;
            }
            slot -= 1;
            cur[slot] += 1;
            if cur[slot] < range {
                break;
            }
            cur[slot] = 0;
        }
    }
}

/// Multilinear map `B^n -> B` over `d x d` matrices, as a dense tensor
/// of values on matrix-unit tuples. Arity 0 is a single matrix value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearMap<T> {
    dim: usize,
    arity: usize,
    table: Vec<Matrix<T>>,
}

impl<T: Ring> MultilinearMap<T> {
    pub fn zero(dim: usize, arity: usize) -> Self {
        let size = (dim * dim).pow(arity as u32);
        MultilinearMap {
            dim,
            arity,
            table: vec![Matrix::zero(dim); size],
        }
    }

    /// Arity-0 map holding a single value.
    pub fn constant(value: Matrix<T>) -> Self {
        MultilinearMap {
            dim: value.dim(),
            arity: 0,
            table: vec![value],
        }
    }

    /// The identity map `f -> f` (arity 1).
    pub fn identity_map(dim: usize) -> Self {
        let mut m = Self::zero(dim, 1);
        for p in 0..dim * dim {
            m.set(&[p], basis_matrix(dim, p));
        }
        m
    }

    /// Build from a function of the basis tuple.
    pub fn from_fn(
        dim: usize,
        arity: usize,
        mut f: impl FnMut(&[usize]) -> Result<Matrix<T>>,
    ) -> Result<Self> {
        let mut out = Self::zero(dim, arity);
        for tuple in basis_tuples(dim * dim, arity) {
            let v = f(&tuple)?;
            if v.dim() != dim {
                return Err(Error::DimMismatch {
                    left: dim,
                    right: v.dim(),
                });
            }
            out.set(&tuple, v);
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    fn index(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.arity, "basis tuple length mismatch");
        let d2 = self.dim * self.dim;
        let mut idx = 0;
        for &p in tuple {
            assert!(p < d2, "basis index out of range");
            idx = idx * d2 + p;
        }
        idx
    }

    /// Value on the tuple of matrix units encoded by `tuple`.
    pub fn get(&self, tuple: &[usize]) -> &Matrix<T> {
        &self.table[self.index(tuple)]
    }

    pub fn set(&mut self, tuple: &[usize], value: Matrix<T>) {
        let idx = self.index(tuple);
        self.table[idx] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Matrix::is_zero)
    }

    /// Tuples and values, in lexicographic tuple order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &Matrix<T>)> {
        basis_tuples(self.dim * self.dim, self.arity)
            .into_iter()
            .zip(self.table.iter())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.require_shape(other)?;
        Ok(MultilinearMap {
            dim: self.dim,
            arity: self.arity,
            table: self
                .table
                .iter()
                .zip(&other.table)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.require_shape(other)?;
        Ok(MultilinearMap {
            dim: self.dim,
            arity: self.arity,
            table: self
                .table
                .iter()
                .zip(&other.table)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Evaluate on arbitrary matrices by multilinear expansion in the
    /// matrix-unit basis: coordinates are just matrix entries, and slots
    /// whose coordinate vanishes are skipped.
    pub fn eval(&self, args: &[Matrix<T>]) -> Result<Matrix<T>> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        for a in args {
            if a.dim() != self.dim {
                return Err(Error::DimMismatch {
                    left: self.dim,
                    right: a.dim(),
                });
            }
        }
        let mut acc = Matrix::zero(self.dim);
        self.eval_rec(args, 0, 0, &T::one(), &mut acc);
        Ok(acc)
    }

    fn eval_rec(&self, args: &[Matrix<T>], slot: usize, idx: usize, coeff: &T, acc: &mut Matrix<T>) {
        if slot == self.arity {
            let term = self.table[idx].scale(coeff);
            *acc = &*acc + &term;
            return;
        }
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let c = args[slot].get(i, j);
                if c.is_zero() {
                    continue;
                }
                let next = idx * (d * d) + (i * d + j);
                let coeff = coeff.clone() * c.clone();
                self.eval_rec(args, slot + 1, next, &coeff, acc);
            }
        }
    }

    fn require_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: other.arity,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix<Rat> {
        Matrix::from_rows(vec![vec![rat(a, 1), rat(b, 1)], vec![rat(c, 1), rat(d, 1)]]).unwrap()
    }

    #[test]
    fn identity_map_returns_argument() {
        let id = MultilinearMap::<Rat>::identity_map(2);
        let f = m2(3, -1, 2, 5);
        assert_eq!(id.eval(&[f.clone()]).unwrap(), f);
    }

    #[test]
    fn eval_at_basis_reads_the_table() {
        let mut map = MultilinearMap::<Rat>::zero(2, 2);
        map.set(&[1, 2], m2(0, 0, 7, 0));
        for p in 0..4 {
            for q in 0..4 {
                let got = map
                    .eval(&[basis_matrix(2, p), basis_matrix(2, q)])
                    .unwrap();
                assert_eq!(&got, map.get(&[p, q]));
            }
        }
    }

    #[test]
    fn eval_is_multilinear() {
        let map = MultilinearMap::from_fn(2, 2, |t| {
            Ok(m2(
                (t[0] * 3 + t[1]) as i64,
                1,
                -(t[1] as i64),
                (t[0] * t[1]) as i64,
            ))
        })
        .unwrap();
        let f = m2(1, 2, 0, -1);
        let g = m2(3, 0, 5, 1);
        let h = m2(-2, 4, 1, 1);
        let a = rat(2, 3);
        let b = rat(-5, 1);
        let combo = &f.scale(&a) + &g.scale(&b);
        let lhs = map.eval(&[combo, h.clone()]).unwrap();
        let rhs = &map.eval(&[f, h.clone()]).unwrap().scale(&a)
            + &map.eval(&[g, h]).unwrap().scale(&b);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn arity_zero_is_a_single_value() {
        let c = MultilinearMap::constant(m2(1, 2, 3, 4));
        assert_eq!(c.eval(&[]).unwrap(), m2(1, 2, 3, 4));
        assert_eq!(
            c.eval(&[m2(1, 0, 0, 1)]),
            Err(Error::ArityMismatch {
                expected: 0,
                got: 1
            })
        );
    }

    #[test]
    fn tuple_enumeration_is_lexicographic() {
        assert_eq!(
            basis_tuples(2, 2),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(basis_tuples(4, 0), vec![Vec::<usize>::new()]);
    }
}
