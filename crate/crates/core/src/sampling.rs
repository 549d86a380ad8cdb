//! Seeded random data for the verification sweeps.
//!
//! Everything here is driven by a caller-supplied [`Rng`] so identical
//! seeds reproduce identical inputs exactly. Values are small rationals:
//! the identities under test are formal, so realizability constraints
//! would only narrow coverage, while small numerators keep the exact
//! arithmetic fast.

use crate::matrix::Matrix;
use crate::model::{AlgElement, EntryPool, JointState, Letter};
use crate::ov::joint::{OVJointState, OvPool};
use crate::ov::multilinear::MultilinearMap;
use crate::ov::distribution::OVDistribution;
use crate::ov::word::OvElement;
use crate::scalar::{rat, Rat};
use num::Zero;
use rand::Rng;
use Letter::{X, Y};

pub fn rand_rat<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    rat(rng.random_range(-9..=9), rng.random_range(1..=4))
}

pub fn rand_nonzero_rat<R: Rng + ?Sized>(rng: &mut R) -> Rat {
    loop {
        let r = rand_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Moments `m_1..m_order` of a formal "variable".
pub fn rand_moment_seq<R: Rng + ?Sized>(order: usize, rng: &mut R) -> Vec<Rat> {
    (0..order).map(|_| rand_rat(rng)).collect()
}

pub fn rand_joint_state<R: Rng + ?Sized>(order: usize, rng: &mut R) -> JointState<Rat> {
    JointState::new(rand_moment_seq(order, rng), rand_moment_seq(order, rng))
        .expect("equal lengths by construction")
}

/// The structured entry pool extended with random rational combinations,
/// so sweeps also exercise multilinearity.
pub fn rand_entry_pool<R: Rng + ?Sized>(rng: &mut R) -> EntryPool<Rat> {
    let mut pool = EntryPool::structured();
    let x = AlgElement::letter(X);
    let y = AlgElement::letter(Y);
    let xx = AlgElement::word(vec![X, X]);
    let yy = AlgElement::word(vec![Y, Y]);
    pool.pure_x
        .push(x.scale(&rand_nonzero_rat(rng)).add(&xx.scale(&rand_rat(rng))));
    pool.pure_y
        .push(y.scale(&rand_nonzero_rat(rng)).add(&yy.scale(&rand_rat(rng))));
    let mut combo = AlgElement::zero();
    for w in [vec![X], vec![Y], vec![X, Y], vec![Y, X]] {
        combo = combo.add(&AlgElement::word(w).scale(&rand_rat(rng)));
    }
    pool.mixed.push(combo);
    pool
}

pub fn rand_matrix<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Matrix<Rat> {
    let mut m = Matrix::zero(dim);
    for i in 0..dim {
        for j in 0..dim {
            m.set(i, j, rand_rat(rng));
        }
    }
    m
}

pub fn rand_multilinear<R: Rng + ?Sized>(
    dim: usize,
    arity: usize,
    rng: &mut R,
) -> MultilinearMap<Rat> {
    MultilinearMap::from_fn(dim, arity, |_| Ok(rand_matrix(dim, rng)))
        .expect("sampling cannot fail")
}

/// Moment maps `m^1..m^order`, arity `n-1` each, with independent small
/// rational entries.
pub fn rand_ov_distribution<R: Rng + ?Sized>(
    dim: usize,
    order: usize,
    rng: &mut R,
) -> OVDistribution<Rat> {
    let maps = (0..order).map(|j| rand_multilinear(dim, j, rng)).collect();
    OVDistribution::new(maps).expect("arities match by construction")
}

pub fn rand_ov_joint_state<R: Rng + ?Sized>(
    dim: usize,
    order: usize,
    rng: &mut R,
) -> OVJointState<Rat> {
    OVJointState::new(
        rand_ov_distribution(dim, order, rng),
        rand_ov_distribution(dim, order, rng),
    )
    .expect("equal shapes by construction")
}

/// Entry pool for the operator-valued sweeps. Generator entries are kept
/// at degree one (dressed with random base-algebra coefficients) so the
/// runs appearing inside a sweep of length `n` never need marginal
/// moments beyond order `n`; one degree-two element exercises longer
/// runs where the sweeps stay short.
pub fn rand_ov_pool<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> OvPool<Rat> {
    let x = OvElement::letter(X, dim);
    let y = OvElement::letter(Y, dim);
    let f = rand_matrix(dim, rng);
    let g = rand_matrix(dim, rng);
    let h = rand_matrix(dim, rng);
    OvPool {
        pure_x: vec![
            x.clone(),
            x.left_mul(&f).right_mul(&g),
            x.add(&x.left_mul(&h)),
        ],
        pure_y: vec![y.clone(), y.left_mul(&g).right_mul(&h)],
        mixed: vec![
            x.clone(),
            y.clone(),
            x.add(&y.left_mul(&f)),
            x.right_mul(&g),
            y.right_mul(&f).mul(&x),
        ],
        matrices: vec![
            Matrix::identity(dim),
            f,
            g,
            h,
            rand_matrix(dim, rng),
        ],
    }
}
