//! Scalar boolean cumulant calculus.
//!
//! Moment sequences are stored as `m[0..N]` with `m[i]` the moment of
//! order `i+1`; cumulant sequences likewise. The defining recurrence is
//!
//! ```text
//! m_n = sum_{k=1}^{n} b_k * m_{n-k},   with m_0 := 1,
//! ```
//!
//! which is triangular and division-free in both directions, so every
//! conversion here is exact over any commutative coefficient ring.

use crate::error::{Error, Result};
use crate::partitions::IntervalPartition;
use crate::ring::{nat_mul, Ring};
use crate::series::TruncatedSeries;

/// Binomial coefficient, exact in `u128`. Large enough for every
/// coefficient appearing at the sequence orders this crate targets.
pub fn binom_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Cumulants `b_1..b_N` from moments `m_1..m_N`: the unique solution of
/// the defining recurrence, solved triangularly.
pub fn moments_to_cumulants<T: Ring>(m: &[T]) -> Vec<T> {
    let n = m.len();
    let mut b: Vec<T> = Vec::with_capacity(n);
    for i in 0..n {
        // b_{i+1} = m_{i+1} - sum_{k=1}^{i} b_k m_{i+1-k}
        let mut acc = m[i].clone();
        for (k, bk) in b.iter().enumerate() {
            // term b_{k+1} * m_{i-k-1+1}; the k = i case pairs with m_0 = 1
            // and is the unknown itself, hence excluded here.
            acc = acc - bk.clone() * m[i - k - 1].clone();
        }
        b.push(acc);
    }
    b
}

/// Moments `m_1..m_N` from cumulants `b_1..b_N`: the recurrence run
/// forward. Exact inverse of [`moments_to_cumulants`].
pub fn cumulants_to_moments<T: Ring>(b: &[T]) -> Vec<T> {
    let n = b.len();
    let mut m: Vec<T> = Vec::with_capacity(n);
    for i in 0..n {
        // m_{i+1} = sum_{k=1}^{i+1} b_k m_{i+1-k}, m_0 = 1
        let mut acc = b[i].clone();
        for k in 0..i {
            acc = acc + b[k].clone() * m[i - k - 1].clone();
        }
        m.push(acc);
    }
    m
}

/// The moment of order `n` as the interval-partition sum
/// `sum over compositions (k_1,...,k_q) of n` of `b_{k_1} ... b_{k_q}`.
/// Independent oracle for [`cumulants_to_moments`]; exponential in `n`.
pub fn moments_via_compositions<T: Ring>(b: &[T], n: usize) -> Result<T> {
    if n == 0 || n > b.len() {
        return Err(Error::IndexOutOfRange {
            index: n,
            order: b.len(),
        });
    }
    let mut acc = T::zero();
    for gamma in IntervalPartition::enumerate(n)? {
        let mut term = T::one();
        for &s in gamma.sizes() {
            term = term * b[s - 1].clone();
        }
        acc = acc + term;
    }
    Ok(acc)
}

/// Cumulants of `1 + X` from cumulants of `X`:
/// `b^1 -> 1 + b^1` and, for `n >= 2`,
/// `b^n_{1+X} = sum_{k=0}^{n-2} C(n-2,k) b^{k+2}_X`.
pub fn shift_one<T: Ring>(b: &[T]) -> Vec<T> {
    let n = b.len();
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    out.push(T::one() + b[0].clone());
    for order in 2..=n {
        let mut acc = T::zero();
        for k in 0..=order - 2 {
            acc = acc + nat_mul(&b[k + 1], binom_u128(order - 2, k));
        }
        out.push(acc);
    }
    out
}

/// Cumulants of `1 + X` as an interval-partition sum,
/// `b^n_{1+X} = sum_{gamma in I(n-1)} b^{|gamma|+1}_X` for `n >= 2`.
/// Equivalent to [`shift_one`] (blocks of a composition of `n-1` are
/// counted by their number alone); kept as an independent cross-check.
pub fn shift_one_via_partitions<T: Ring>(b: &[T]) -> Result<Vec<T>> {
    let n = b.len();
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return Ok(out);
    }
    out.push(T::one() + b[0].clone());
    for order in 2..=n {
        let mut acc = T::zero();
        for gamma in IntervalPartition::enumerate(order - 1)? {
            acc = acc + b[gamma.num_blocks()].clone();
        }
        out.push(acc);
    }
    Ok(out)
}

/// Moments of `1 + X` by binomial expansion of `(1+X)^n`:
/// `sum_{k=0}^{n} C(n,k) m_k` with `m_0 = 1`. Oracle for [`shift_one`].
pub fn moments_of_shift<T: Ring>(m: &[T]) -> Vec<T> {
    let n = m.len();
    let mut out = Vec::with_capacity(n);
    for order in 1..=n {
        let mut acc = nat_mul(&T::one(), binom_u128(order, 0));
        for k in 1..=order {
            acc = acc + nat_mul(&m[k - 1], binom_u128(order, k));
        }
        out.push(acc);
    }
    out
}

/// Moments of `X + Y` for boolean independent `X`, `Y`: cumulants add.
pub fn bconv_add<T: Ring>(m_x: &[T], m_y: &[T]) -> Result<Vec<T>> {
    if m_x.len() != m_y.len() {
        return Err(Error::OrderMismatch {
            left: m_x.len(),
            right: m_y.len(),
        });
    }
    let bx = moments_to_cumulants(m_x);
    let by = moments_to_cumulants(m_y);
    let bz: Vec<T> = bx
        .into_iter()
        .zip(by)
        .map(|(x, y)| x + y)
        .collect();
    Ok(cumulants_to_moments(&bz))
}

/// Cumulants of `Z = X + Y + XY` for boolean independent `X`, `Y`:
/// `b^n_Z = b^n_X + b^n_Y + sum_{k=1}^{n} b^k_X b^{n-k+1}_Y`.
pub fn mul_cumulants<T: Ring>(b_x: &[T], b_y: &[T]) -> Result<Vec<T>> {
    if b_x.len() != b_y.len() {
        return Err(Error::OrderMismatch {
            left: b_x.len(),
            right: b_y.len(),
        });
    }
    let n = b_x.len();
    let mut out = Vec::with_capacity(n);
    for order in 1..=n {
        let mut acc = b_x[order - 1].clone() + b_y[order - 1].clone();
        for k in 1..=order {
            acc = acc + b_x[k - 1].clone() * b_y[order - k].clone();
        }
        out.push(acc);
    }
    Ok(out)
}

/// Moments of `Z = X + Y + XY` (so `1 + Z = (1+X)(1+Y)`) for boolean
/// independent `X`, `Y`, computed in cumulant coordinates.
pub fn bconv_mul<T: Ring>(m_x: &[T], m_y: &[T]) -> Result<Vec<T>> {
    let bx = moments_to_cumulants(m_x);
    let by = moments_to_cumulants(m_y);
    let bz = mul_cumulants(&bx, &by)?;
    Ok(cumulants_to_moments(&bz))
}

/// Cumulant generating series `B(z) = sum b_n z^{n-1}` of the variable
/// with moments `m_1..m_N`; `N` coefficients.
pub fn b_transform<T: Ring>(m: &[T]) -> TruncatedSeries<T> {
    TruncatedSeries::new(moments_to_cumulants(m)).expect("nonempty moments")
}

/// Moment generating series `M(z) = sum m_n z^{n-1}`; `N` coefficients.
pub fn m_transform<T: Ring>(m: &[T]) -> TruncatedSeries<T> {
    TruncatedSeries::new(m.to_vec()).expect("nonempty moments")
}

/// Outcome of the multiplicativity check `B_{(1+X)(1+Y)} = B_{1+X} B_{1+Y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativeCheck<T> {
    /// `B`-transform of `(1+X)(1+Y)`, via the product-cumulant formula.
    pub lhs: TruncatedSeries<T>,
    /// Series product of the two shifted transforms.
    pub rhs: TruncatedSeries<T>,
    /// Index of the first differing coefficient, if any.
    pub first_mismatch: Option<usize>,
}

impl<T> MultiplicativeCheck<T> {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compare the `B`-transform of `(1+X)(1+Y)` (shift of the `bconv_mul`
/// cumulants) with the series product `B_{1+X}(z) B_{1+Y}(z)`, exactly,
/// coefficient by coefficient.
pub fn check_multiplicative<T: Ring>(m_x: &[T], m_y: &[T]) -> Result<MultiplicativeCheck<T>> {
    if m_x.len() != m_y.len() {
        return Err(Error::OrderMismatch {
            left: m_x.len(),
            right: m_y.len(),
        });
    }
    if m_x.is_empty() {
        return Err(Error::EmptyEntries);
    }
    let bx = moments_to_cumulants(m_x);
    let by = moments_to_cumulants(m_y);
    let bz = mul_cumulants(&bx, &by)?;
    let lhs = TruncatedSeries::new(shift_one(&bz))?;
    let sx = TruncatedSeries::new(shift_one(&bx))?;
    let sy = TruncatedSeries::new(shift_one(&by))?;
    let rhs = sx.checked_mul(&sy)?;
    let first_mismatch = (0..=lhs.order()).find(|&k| lhs.coeff(k) != rhs.coeff(k));
    Ok(MultiplicativeCheck {
        lhs,
        rhs,
        first_mismatch,
    })
}

/// Check `sum_{k=a}^{n-b} C(k,a) C(n-k,b) = C(n+1, a+b+1)` with exact
/// integers.
pub fn binomial_identity_check(n: usize, a: usize, b: usize) -> Result<bool> {
    if a + b > n {
        return Err(Error::InvalidInput(format!(
            "need a + b <= n, got a={a}, b={b}, n={n}"
        )));
    }
    use num::BigInt;
    let big = |x: usize| BigInt::from(x);
    let choose = |n: &BigInt, k: &BigInt| num::integer::binomial(n.clone(), k.clone());
    let mut lhs = BigInt::from(0u32);
    for k in a..=n - b {
        lhs += choose(&big(k), &big(a)) * choose(&big(n - k), &big(b));
    }
    let rhs = choose(&big(n + 1), &big(a + b + 1));
    Ok(lhs == rhs)
}
