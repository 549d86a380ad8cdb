//! Operator-valued distributions and the moment/cumulant recurrence.
//!
//! The distribution of a variable `X` over the matrix algebra is the
//! family of moment maps `m^n(f_1,...,f_{n-1}) = Phi(X f_1 X ... f_{n-1} X)`,
//! one map of arity `n-1` per order `n`. The cumulant family `b^n`
//! is defined by the triangular recurrence
//!
//! ```text
//! m^n(f_1..f_{n-1}) = sum_{k=1}^{n} b^k(f_1..f_{k-1}) * f_k * m^{n-k}(f_{k+1}..f_{n-1})
//! ```
//!
//! (the `k = n` term is bare `b^n`). Both directions are solved here on
//! basis tuples, which suffices by multilinearity and keeps everything
//! exact.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ov::multilinear::{basis_matrix, basis_tuples, MultilinearMap};
use crate::ov::series::MulSeries;
use crate::partitions::IntervalPartition;
use crate::ring::Ring;

/// Moment maps `m^1 .. m^N` of one variable; `maps[k]` is the map of
/// order `k+1` (arity `k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OVDistribution<T> {
    dim: usize,
    maps: Vec<MultilinearMap<T>>,
}

impl<T: Ring> OVDistribution<T> {
    pub fn new(maps: Vec<MultilinearMap<T>>) -> Result<Self> {
        let series = MulSeries::from_components(maps)?;
        Ok(OVDistribution {
            dim: series.dim(),
            maps: series.components().to_vec(),
        })
    }

    /// The zero distribution.
    pub fn zero(dim: usize, order: usize) -> Self {
        OVDistribution {
            dim,
            maps: (0..order).map(|k| MultilinearMap::zero(dim, k)).collect(),
        }
    }

    /// Embed a scalar moment sequence at `dim = 1`.
    pub fn from_scalar_moments(m: &[T]) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::EmptyEntries);
        }
        let maps = m
            .iter()
            .enumerate()
            .map(|(k, v)| {
                MultilinearMap::from_fn(1, k, |_| {
                    let mut mat = Matrix::zero(1);
                    mat.set(0, 0, v.clone());
                    Ok(mat)
                })
                .expect("dim 1 table")
            })
            .collect();
        Ok(OVDistribution { dim: 1, maps })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    /// Moment map of order `n` (arity `n-1`), `1 <= n <= order`.
    pub fn map(&self, n: usize) -> &MultilinearMap<T> {
        &self.maps[n - 1]
    }

    pub fn maps(&self) -> &[MultilinearMap<T>] {
        &self.maps
    }

    /// The moment series `M` (component `j` is the moment map of order
    /// `j+1`).
    pub fn to_series(&self) -> MulSeries<T> {
        MulSeries::from_components(self.maps.clone()).expect("validated at construction")
    }

    pub fn from_series(series: &MulSeries<T>) -> Self {
        OVDistribution {
            dim: series.dim(),
            maps: series.components().to_vec(),
        }
    }
}

/// Cumulant series from moment maps: the recurrence solved triangularly
/// per basis tuple. Component `j` of the result is the cumulant map of
/// order `j+1`, so component 0 is `Phi(X)`.
pub fn ov_moments_to_cumulants<T: Ring>(dist: &OVDistribution<T>) -> MulSeries<T> {
    let dim = dist.dim();
    let d2 = dim * dim;
    let order = dist.order();
    let mut cumulants: Vec<MultilinearMap<T>> = Vec::with_capacity(order);
    for n in 1..=order {
        let mut comp = MultilinearMap::zero(dim, n - 1);
        for tuple in basis_tuples(d2, n - 1) {
            // b^n(e) = m^n(e) - sum_{k=1}^{n-1} b^k(e_1..e_{k-1}) E_k m^{n-k}(e_{k+1}..e_{n-1})
            let mut acc = dist.map(n).get(&tuple).clone();
            for k in 1..n {
                let left = cumulants[k - 1].get(&tuple[..k - 1]);
                if left.is_zero() {
                    continue;
                }
                let mid = basis_matrix::<T>(dim, tuple[k - 1]);
                let right = dist.map(n - k).get(&tuple[k..]);
                if right.is_zero() {
                    continue;
                }
                acc = &acc - &(&(left * &mid) * right);
            }
            comp.set(&tuple, acc);
        }
        cumulants.push(comp);
    }
    MulSeries::from_components(cumulants).expect("arities by construction")
}

/// Moment maps from a cumulant series: the recurrence run forward.
/// Exact inverse of [`ov_moments_to_cumulants`]; the result is also
/// checked against the series identity `M = B(1 + I M)`.
pub fn ov_cumulants_to_moments<T: Ring>(cumulants: &MulSeries<T>) -> OVDistribution<T> {
    let dim = cumulants.dim();
    let d2 = dim * dim;
    let order = cumulants.order();
    let mut maps: Vec<MultilinearMap<T>> = Vec::with_capacity(order);
    for n in 1..=order {
        let mut comp = MultilinearMap::zero(dim, n - 1);
        for tuple in basis_tuples(d2, n - 1) {
            let mut acc = cumulants.component(n - 1).get(&tuple).clone();
            for k in 1..n {
                let left = cumulants.component(k - 1).get(&tuple[..k - 1]);
                if left.is_zero() {
                    continue;
                }
                let mid = basis_matrix::<T>(dim, tuple[k - 1]);
                let right = &maps[n - k - 1].get(&tuple[k..]);
                if right.is_zero() {
                    continue;
                }
                acc = &acc + &(&(left * &mid) * right);
            }
            comp.set(&tuple, acc);
        }
        maps.push(comp);
    }
    let dist = OVDistribution { dim, maps };
    debug_assert!(
        ov_series_identity_holds(&dist, cumulants).unwrap_or(false),
        "series identity violated by the forward recurrence"
    );
    dist
}

/// Check the series identity `M = B (1 + I M)` exactly, where `1` is the
/// constant series at the unit matrix and `I` the identity-function
/// series.
pub fn ov_series_identity_holds<T: Ring>(
    dist: &OVDistribution<T>,
    cumulants: &MulSeries<T>,
) -> Result<bool> {
    let m = dist.to_series();
    let order = m.order();
    if order < 2 {
        // No room for the I M term; the identity degenerates to M = B.
        return Ok(m == *cumulants);
    }
    let one = MulSeries::one(dist.dim(), order);
    let i = MulSeries::identity_series(dist.dim(), order);
    let rhs = cumulants.checked_mul(&one.checked_add(&i.checked_mul(&m)?)?)?;
    Ok(m == rhs)
}

/// Cumulant series of `1 + X` from the cumulant series of `X`:
/// the first component gains the unit matrix, and for `n >= 2`
///
/// ```text
/// b^n_{1+X}(f_1..f_{n-1}) = sum over interval partitions of {1..n-1}
///                           of b^{|blocks|+1}_X(blockwise products)
/// ```
pub fn ov_shift_one<T: Ring>(cumulants: &MulSeries<T>) -> Result<MulSeries<T>> {
    let dim = cumulants.dim();
    let order = cumulants.order();
    let mut components: Vec<MultilinearMap<T>> = Vec::with_capacity(order);
    let unit = MultilinearMap::constant(Matrix::identity(dim));
    components.push(cumulants.component(0).checked_add(&unit)?);
    for n in 2..=order {
        let partitions = IntervalPartition::enumerate(n - 1)?;
        let comp = MultilinearMap::from_fn(dim, n - 1, |tuple| {
            let args: Vec<Matrix<T>> = tuple.iter().map(|&p| basis_matrix(dim, p)).collect();
            let mut acc = Matrix::zero(dim);
            for gamma in &partitions {
                let blocks = gamma.apply(&args, |a, b| a * b)?;
                let q = gamma.num_blocks();
                acc = &acc + &cumulants.component(q).eval(&blocks)?;
            }
            Ok(acc)
        })?;
        components.push(comp);
    }
    MulSeries::from_components(components)
}
