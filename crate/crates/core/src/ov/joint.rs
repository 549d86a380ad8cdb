//! Operator-valued joint model of a boolean independent pair.
//!
//! As in the scalar case, the conditional expectation is *defined* by
//! run factorization: a word `h_0 L_1 h_1 ... L_r h_r` splits at every
//! change of generator, each maximal run of one generator evaluates
//! through that generator's marginal moment maps (the matrices interior
//! to the run become the map's arguments), and the matrices at run
//! boundaries multiply in between. That rule is a conditional
//! expectation onto the base algebra and makes the two generated
//! algebras boolean independent over it, so the section-4 identities can
//! be checked against it exactly, tensor entry by tensor entry.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::model::{CheckReport, Letter};
use crate::ov::distribution::{ov_moments_to_cumulants, OVDistribution};
use crate::ov::multilinear::{basis_matrix, MultilinearMap};
use crate::ov::series::MulSeries;
use crate::ov::word::{OvElement, OvWord};
use crate::ring::Ring;
use rand::Rng;

/// Boolean independent pair over the matrix algebra, given by marginal
/// operator-valued distributions of equal dimension and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OVJointState<T> {
    dist_x: OVDistribution<T>,
    dist_y: OVDistribution<T>,
}

impl<T: Ring> OVJointState<T> {
    pub fn new(dist_x: OVDistribution<T>, dist_y: OVDistribution<T>) -> Result<Self> {
        if dist_x.dim() != dist_y.dim() {
            return Err(Error::DimMismatch {
                left: dist_x.dim(),
                right: dist_y.dim(),
            });
        }
        if dist_x.order() != dist_y.order() {
            return Err(Error::OrderMismatch {
                left: dist_x.order(),
                right: dist_y.order(),
            });
        }
        Ok(OVJointState { dist_x, dist_y })
    }

    /// Embed a scalar joint state at `dim = 1`.
    pub fn from_scalar(m_x: &[T], m_y: &[T]) -> Result<Self> {
        Self::new(
            OVDistribution::from_scalar_moments(m_x)?,
            OVDistribution::from_scalar_moments(m_y)?,
        )
    }

    pub fn dim(&self) -> usize {
        self.dist_x.dim()
    }

    pub fn order(&self) -> usize {
        self.dist_x.order()
    }

    pub fn dist_x(&self) -> &OVDistribution<T> {
        &self.dist_x
    }

    pub fn dist_y(&self) -> &OVDistribution<T> {
        &self.dist_y
    }

    fn marginal(&self, l: Letter) -> &OVDistribution<T> {
        match l {
            Letter::X => &self.dist_x,
            Letter::Y => &self.dist_y,
        }
    }

    /// The conditional expectation on one word: split into maximal runs
    /// of one generator; each run of length `r` with interior matrices
    /// `g_1..g_{r-1}` contributes the marginal value `m^r(g_1,...,g_{r-1})`,
    /// and the boundary matrices multiply between contributions.
    pub fn phi_word(&self, w: &OvWord<T>) -> Result<Matrix<T>> {
        let tail = w.tail();
        let mut acc = w.head().clone();
        let mut i = 0;
        while i < tail.len() {
            let mut j = i + 1;
            while j < tail.len() && tail[j].0 == tail[i].0 {
                j += 1;
            }
            let run = j - i;
            let dist = self.marginal(tail[i].0);
            if run > dist.order() {
                return Err(Error::MomentOrderExceeded {
                    needed: run,
                    available: dist.order(),
                });
            }
            let interior: Vec<Matrix<T>> =
                tail[i..j - 1].iter().map(|(_, m)| m.clone()).collect();
            let value = dist.map(run).eval(&interior)?;
            acc = &(&acc * &value) * &tail[j - 1].1;
            i = j;
        }
        Ok(acc)
    }

    /// Linear extension to elements.
    pub fn phi_elem(&self, e: &OvElement<T>) -> Result<Matrix<T>> {
        let mut acc = Matrix::zero(self.dim());
        for w in e.words() {
            acc = &acc + &self.phi_word(w)?;
        }
        Ok(acc)
    }

    /// Mixed operator-valued cumulant with general lower entries,
    /// evaluated at arbitrary upper arguments, by the defining
    /// triangular recurrence.
    pub fn mixed_cumulant(
        &self,
        lower: &[OvElement<T>],
        upper: &[Matrix<T>],
    ) -> Result<Matrix<T>> {
        let n = lower.len();
        if n == 0 {
            return Err(Error::EmptyEntries);
        }
        if upper.len() != n - 1 {
            return Err(Error::TupleLengthMismatch {
                expected: n - 1,
                got: upper.len(),
            });
        }
        // phi of every interleaved range product.
        let mut phi = vec![vec![Matrix::zero(self.dim()); n]; n];
        for i in 0..n {
            let mut prod = lower[i].clone();
            phi[i][i] = self.phi_elem(&prod)?;
            for j in i + 1..n {
                prod = prod.right_mul(&upper[j - 1]).mul(&lower[j]);
                phi[i][j] = self.phi_elem(&prod)?;
            }
        }
        // Prefix cumulants: c[m] = phi[0][m] - sum_{i<m} c[i] f_{i+1} phi[i+1][m].
        let mut c: Vec<Matrix<T>> = Vec::with_capacity(n);
        for m in 0..n {
            let mut acc = phi[0][m].clone();
            for i in 0..m {
                acc = &acc - &(&(&c[i] * &upper[i]) * &phi[i + 1][m]);
            }
            c.push(acc);
        }
        Ok(c.pop().expect("n >= 1"))
    }

    /// The cumulant with the given lower entries as a tensor over all
    /// basis upper arguments. By multilinearity in the upper argument,
    /// this tensor vanishing is equivalent to the cumulant vanishing for
    /// every upper argument.
    pub fn mixed_cumulant_tensor(&self, lower: &[OvElement<T>]) -> Result<MultilinearMap<T>> {
        let n = lower.len();
        if n == 0 {
            return Err(Error::EmptyEntries);
        }
        let dim = self.dim();
        MultilinearMap::from_fn(dim, n - 1, |tuple| {
            let upper: Vec<Matrix<T>> = tuple.iter().map(|&p| basis_matrix(dim, p)).collect();
            self.mixed_cumulant(lower, &upper)
        })
    }

    /// Mixed cumulant of the functional itself (no upper arguments
    /// interleaved): the plain triangular recurrence applied to the
    /// matrix-valued moments of the products. Used as the independent
    /// side of the flattening identities.
    pub fn functional_cumulant(&self, entries: &[OvElement<T>]) -> Result<Matrix<T>> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::EmptyEntries);
        }
        let mut phi = vec![vec![Matrix::zero(self.dim()); n]; n];
        for i in 0..n {
            let mut prod = entries[i].clone();
            phi[i][i] = self.phi_elem(&prod)?;
            for j in i + 1..n {
                prod = prod.mul(&entries[j]);
                phi[i][j] = self.phi_elem(&prod)?;
            }
        }
        let mut c: Vec<Matrix<T>> = Vec::with_capacity(n);
        for m in 0..n {
            let mut acc = phi[0][m].clone();
            for i in 0..m {
                acc = &acc - &(&c[i] * &phi[i + 1][m]);
            }
            c.push(acc);
        }
        Ok(c.pop().expect("n >= 1"))
    }

    /// Operator-valued distribution of an arbitrary element: the moment
    /// map of order `n` is evaluated on all basis tuples by expanding
    /// `e E_{p_1} e E_{p_2} ... e` through the conditional expectation.
    pub fn distribution_of(&self, e: &OvElement<T>, order: usize) -> Result<OVDistribution<T>> {
        let dim = self.dim();
        let d2 = dim * dim;
        let mut maps = Vec::with_capacity(order);
        for n in 1..=order {
            let mut map = MultilinearMap::zero(dim, n - 1);
            // Depth-first over basis tuples, sharing product prefixes.
            let mut stack: Vec<(OvElement<T>, Vec<usize>)> = vec![(e.clone(), vec![])];
            while let Some((prod, tuple)) = stack.pop() {
                if tuple.len() == n - 1 {
                    map.set(&tuple, self.phi_elem(&prod)?);
                    continue;
                }
                for p in 0..d2 {
                    let next = prod
                        .right_mul(&basis_matrix(dim, p))
                        .mul(e);
                    let mut t = tuple.clone();
                    t.push(p);
                    stack.push((next, t));
                }
            }
            maps.push(map);
        }
        OVDistribution::new(maps)
    }

    /// Cumulant series of `X + Y`: cumulants add for boolean independent
    /// variables, so this is the sum of the marginal cumulant series.
    pub fn bconv_add(&self) -> Result<MulSeries<T>> {
        let bx = ov_moments_to_cumulants(&self.dist_x);
        let by = ov_moments_to_cumulants(&self.dist_y);
        bx.checked_add(&by)
    }

    /// Cumulant series of `Z = X + Y + XY` (so `1 + Z = (1+X)(1+Y)`),
    /// computed from the joint model: expand the moments of `Z` through
    /// the conditional expectation, then convert.
    pub fn bconv_mul(&self) -> Result<MulSeries<T>> {
        let dim = self.dim();
        let x = OvElement::letter(Letter::X, dim);
        let y = OvElement::letter(Letter::Y, dim);
        let z = x.add(&y).add(&x.mul(&y));
        let dz = self.distribution_of(&z, self.order())?;
        Ok(ov_moments_to_cumulants(&dz))
    }
}

/// Entry pools for the operator-valued sweeps: generator words dressed
/// with base-algebra coefficients, plus a set of plain matrices used as
/// base-algebra entries and upper arguments.
#[derive(Debug, Clone)]
pub struct OvPool<T> {
    pub pure_x: Vec<OvElement<T>>,
    pub pure_y: Vec<OvElement<T>>,
    pub mixed: Vec<OvElement<T>>,
    pub matrices: Vec<Matrix<T>>,
}

fn pick<'a, R: Rng + ?Sized, V>(pool: &'a [V], rng: &mut R) -> &'a V {
    &pool[rng.random_range(0..pool.len())]
}

fn tuple_string(tuple: &[usize]) -> String {
    let parts: Vec<String> = tuple.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Sweep: cumulants with an adjacent pure-`X`, pure-`Y` pair of lower
/// entries vanish identically (all basis upper arguments).
pub fn verify_ov_vanishing<T, R>(
    state: &OVJointState<T>,
    before: usize,
    after: usize,
    pool: &OvPool<T>,
    samples: usize,
    rng: &mut R,
) -> Result<CheckReport>
where
    T: Ring + std::fmt::Display,
    R: Rng + ?Sized,
{
    let mut report = CheckReport::default();
    for _ in 0..samples {
        let mut lower: Vec<OvElement<T>> = Vec::with_capacity(before + after + 2);
        for _ in 0..before {
            lower.push(pick(&pool.mixed, rng).clone());
        }
        lower.push(pick(&pool.pure_x, rng).clone());
        lower.push(pick(&pool.pure_y, rng).clone());
        for _ in 0..after {
            lower.push(pick(&pool.mixed, rng).clone());
        }
        let tensor = state.mixed_cumulant_tensor(&lower)?;
        for (tuple, value) in tensor.entries() {
            report.record_check(
                value.is_zero(),
                || {
                    format!(
                        "ov cumulant of order {} with X,Y adjacent at {},{}; upper basis {}",
                        before + after + 2,
                        before + 1,
                        before + 2,
                        tuple_string(&tuple)
                    )
                },
                || value.to_string(),
            );
        }
    }
    Ok(report)
}

/// Sweep: a base-algebra element as first or last lower entry kills the
/// cumulant; an interior one merges into the adjacent upper argument.
pub fn verify_ov_b_entry_rules<T, R>(
    state: &OVJointState<T>,
    n: usize,
    pool: &OvPool<T>,
    samples: usize,
    rng: &mut R,
) -> Result<CheckReport>
where
    T: Ring + std::fmt::Display,
    R: Rng + ?Sized,
{
    let dim = state.dim();
    let mut report = CheckReport::default();
    for _ in 0..samples {
        let base: Vec<OvElement<T>> = (0..n)
            .map(|_| pick(&pool.mixed, rng).clone())
            .collect();
        let f = pick(&pool.matrices, rng).clone();
        let f_elem = OvElement::scalar(f.clone());
        for k in 0..=n {
            let mut lower = base.clone();
            lower.insert(k, f_elem.clone());
            let tensor = state.mixed_cumulant_tensor(&lower)?;
            for (tuple, value) in tensor.entries() {
                if k == 0 || k == n {
                    report.record_check(
                        value.is_zero(),
                        || {
                            format!(
                                "ov cumulant of order {} with base entry at boundary {}; upper basis {}",
                                n + 1,
                                k + 1,
                                tuple_string(&tuple)
                            )
                        },
                        || value.to_string(),
                    );
                } else {
                    // Merge: upper slot k-1 and k fuse through f.
                    let mut upper: Vec<Matrix<T>> =
                        tuple.iter().map(|&p| basis_matrix(dim, p)).collect();
                    let merged = &(&upper[k - 1] * &f) * &upper[k];
                    upper[k - 1] = merged;
                    upper.remove(k);
                    let expect = state.mixed_cumulant(&base, &upper)?;
                    report.record_check(
                        value == &expect,
                        || {
                            format!(
                                "ov cumulant of order {} with interior base entry at {}; upper basis {}",
                                n + 1,
                                k + 1,
                                tuple_string(&tuple)
                            )
                        },
                        || format!("{} vs {}", value, expect),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Sweep: a product entry `A B` (pure-`X` times pure-`Y`) splits the
/// cumulant into a product of two cumulants at the split position.
pub fn verify_ov_product_rule<T, R>(
    state: &OVJointState<T>,
    n: usize,
    pool: &OvPool<T>,
    samples: usize,
    rng: &mut R,
) -> Result<CheckReport>
where
    T: Ring + std::fmt::Display,
    R: Rng + ?Sized,
{
    let dim = state.dim();
    let mut report = CheckReport::default();
    for _ in 0..samples {
        let a = pick(&pool.pure_x, rng).clone();
        let b = pick(&pool.pure_y, rng).clone();
        let ab = a.mul(&b);
        let base: Vec<OvElement<T>> = (0..n)
            .map(|_| pick(&pool.mixed, rng).clone())
            .collect();
        for k in 0..=n {
            let mut lower = base.clone();
            lower.insert(k, ab.clone());
            let tensor = state.mixed_cumulant_tensor(&lower)?;
            let mut left_entries: Vec<OvElement<T>> = base[..k].to_vec();
            left_entries.push(a.clone());
            let mut right_entries: Vec<OvElement<T>> = vec![b.clone()];
            right_entries.extend_from_slice(&base[k..]);
            for (tuple, value) in tensor.entries() {
                let units: Vec<Matrix<T>> =
                    tuple.iter().map(|&p| basis_matrix(dim, p)).collect();
                let left = state.mixed_cumulant(&left_entries, &units[..k])?;
                let right = state.mixed_cumulant(&right_entries, &units[k..])?;
                let expect = &left * &right;
                report.record_check(
                    value == &expect,
                    || {
                        format!(
                            "ov cumulant of order {} with product entry at {}; upper basis {}",
                            n + 1,
                            k + 1,
                            tuple_string(&tuple)
                        )
                    },
                    || format!("{} vs {}", value, expect),
                );
            }
        }
    }
    Ok(report)
}

/// Sweep: evaluating the operator-valued cumulant at all-unit upper
/// arguments reproduces the plain cumulant of the functional.
pub fn verify_flattening_units<T, R>(
    state: &OVJointState<T>,
    n: usize,
    pool: &OvPool<T>,
    samples: usize,
    rng: &mut R,
) -> Result<CheckReport>
where
    T: Ring + std::fmt::Display,
    R: Rng + ?Sized,
{
    let dim = state.dim();
    let mut report = CheckReport::default();
    for _ in 0..samples {
        let lower: Vec<OvElement<T>> = (0..n)
            .map(|_| pick(&pool.mixed, rng).clone())
            .collect();
        let units = vec![Matrix::identity(dim); n - 1];
        let via_upper = state.mixed_cumulant(&lower, &units)?;
        let via_functional = state.functional_cumulant(&lower)?;
        report.record_check(
            via_upper == via_functional,
            || format!("all-unit upper arguments at order {n}"),
            || format!("{} vs {}", via_upper, via_functional),
        );
    }
    Ok(report)
}

/// Sweep: dressing the lower entries with base-algebra coefficients is
/// the same as splitting those coefficients into the upper arguments:
/// `f_0 [b^n_{X_1..X_n}(h_1 f_1, ..., h_{n-1} f_{n-1})] h_n` equals the
/// functional cumulant of `(f_0 X_1 h_1, f_1 X_2 h_2, ..., f_{n-1} X_n h_n)`.
pub fn verify_flattening_dressed<T, R>(
    state: &OVJointState<T>,
    n: usize,
    pool: &OvPool<T>,
    samples: usize,
    rng: &mut R,
) -> Result<CheckReport>
where
    T: Ring + std::fmt::Display,
    R: Rng + ?Sized,
{
    let mut report = CheckReport::default();
    for _ in 0..samples {
        let lower: Vec<OvElement<T>> = (0..n)
            .map(|_| pick(&pool.mixed, rng).clone())
            .collect();
        let f: Vec<Matrix<T>> = (0..n)
            .map(|_| pick(&pool.matrices, rng).clone())
            .collect();
        let h: Vec<Matrix<T>> = (0..n)
            .map(|_| pick(&pool.matrices, rng).clone())
            .collect();
        // Upper arguments h_k f_k for k = 1..n-1 (0-based: h[k] f[k]).
        let upper: Vec<Matrix<T>> = (1..n).map(|k| &h[k - 1] * &f[k]).collect();
        let lhs = &(&f[0] * &state.mixed_cumulant(&lower, &upper)?) * &h[n - 1];
        let dressed: Vec<OvElement<T>> = (0..n)
            .map(|k| lower[k].left_mul(&f[k]).right_mul(&h[k]))
            .collect();
        let rhs = state.functional_cumulant(&dressed)?;
        report.record_check(
            lhs == rhs,
            || format!("dressed lower entries at order {n}"),
            || format!("{} vs {}", lhs, rhs),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::JointState;
    use crate::ov::distribution::ov_shift_one;
    use crate::scalar::{rat, Rat};
    use Letter::{X, Y};

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix<Rat> {
        Matrix::from_rows(vec![vec![rat(a, 1), rat(b, 1)], vec![rat(c, 1), rat(d, 1)]]).unwrap()
    }

    fn dist_like(dim: usize, order: usize, salt: i64) -> OVDistribution<Rat> {
        let maps = (0..order)
            .map(|j| {
                MultilinearMap::from_fn(dim, j, |t| {
                    let mut m = Matrix::zero(dim);
                    for i in 0..dim {
                        for k in 0..dim {
                            let mut v = salt + 2 * (i as i64) - (k as i64) + 3 * j as i64;
                            for (pos, &p) in t.iter().enumerate() {
                                v += (p as i64 + 2) * (pos as i64 + 1);
                            }
                            m.set(i, k, rat(v % 9 - 4, 2));
                        }
                    }
                    Ok(m)
                })
                .unwrap()
            })
            .collect();
        OVDistribution::new(maps).unwrap()
    }

    fn state(order: usize) -> OVJointState<Rat> {
        OVJointState::new(dist_like(2, order, 3), dist_like(2, order, -5)).unwrap()
    }

    fn pool(dim: usize) -> OvPool<Rat> {
        let x = OvElement::letter(X, dim);
        let y = OvElement::letter(Y, dim);
        let f = m2(1, 2, 0, -1);
        let g = m2(0, 1, 3, 1);
        OvPool {
            pure_x: vec![x.clone(), x.left_mul(&f).right_mul(&g)],
            pure_y: vec![y.clone(), y.left_mul(&g)],
            mixed: vec![
                x.clone(),
                y.clone(),
                x.add(&y),
                x.right_mul(&f).mul(&y),
                y.left_mul(&m2(2, 0, 1, 1)),
            ],
            matrices: vec![f, g, m2(1, 0, 0, 1), m2(-1, 1, 2, 0)],
        }
    }

    #[test]
    fn single_letters_factor_with_boundary_matrices() {
        let s = state(4);
        let f = m2(1, 3, -2, 0);
        // Phi(X f Y) = Phi(X) f Phi(Y).
        let w = OvWord::letter(X, 2).right_mul(&f).mul(&OvWord::letter(Y, 2));
        let expect = &(s.dist_x().map(1).get(&[]) * &f) * s.dist_y().map(1).get(&[]);
        assert_eq!(s.phi_word(&w).unwrap(), expect);
    }

    #[test]
    fn runs_feed_the_moment_maps() {
        let s = state(4);
        let f1 = m2(2, 1, 1, 0);
        let f2 = m2(0, 1, -1, 3);
        // Phi(X f1 X f2 Y) = m^2_X(f1) f2 m^1_Y.
        let w = OvWord::letter(X, 2)
            .right_mul(&f1)
            .mul(&OvWord::letter(X, 2))
            .right_mul(&f2)
            .mul(&OvWord::letter(Y, 2));
        let expect = &(&s.dist_x().map(2).eval(&[f1]).unwrap() * &f2)
            * s.dist_y().map(1).get(&[]);
        assert_eq!(s.phi_word(&w).unwrap(), expect);
        // Runs longer than the stored order are rejected.
        let long = OvElement::letter(X, 2).power(5, 2);
        assert_eq!(
            s.phi_elem(&long),
            Err(Error::MomentOrderExceeded {
                needed: 5,
                available: 4
            })
        );
    }

    #[test]
    fn conditional_expectation_is_a_bimodule_map() {
        let s = state(4);
        let f = m2(1, -1, 0, 2);
        let g = m2(3, 0, 1, 1);
        let w = OvElement::letter(X, 2)
            .mul(&OvElement::letter(Y, 2))
            .mul(&OvElement::letter(X, 2));
        let framed = w.left_mul(&f).right_mul(&g);
        let expect = &(&f * &s.phi_elem(&w).unwrap()) * &g;
        assert_eq!(s.phi_elem(&framed).unwrap(), expect);
        // On the base algebra, Phi is the identity.
        assert_eq!(s.phi_elem(&OvElement::scalar(f.clone())).unwrap(), f);
    }

    #[test]
    fn moments_of_the_generator_are_the_marginals() {
        let s = state(4);
        let x = OvElement::letter(X, 2);
        let d = s.distribution_of(&x, 4).unwrap();
        assert_eq!(&d, s.dist_x());
    }

    #[test]
    fn first_cumulant_is_phi_of_the_entry() {
        let s = state(4);
        let e = OvElement::letter(X, 2).add(&OvElement::letter(Y, 2));
        assert_eq!(
            s.mixed_cumulant(&[e.clone()], &[]).unwrap(),
            s.phi_elem(&e).unwrap()
        );
    }

    #[test]
    fn adjacent_generators_vanish_for_all_upper_arguments() {
        let s = state(4);
        let lower = [OvElement::letter(X, 2), OvElement::letter(Y, 2)];
        let tensor = s.mixed_cumulant_tensor(&lower).unwrap();
        assert!(tensor.is_zero());
        // The same-algebra pair does not vanish: the hypothesis matters.
        let same = [OvElement::letter(X, 2), OvElement::letter(X, 2)];
        assert!(!s.mixed_cumulant_tensor(&same).unwrap().is_zero());
    }

    #[test]
    fn product_entry_splits_at_order_one() {
        let s = state(4);
        let xy = OvElement::letter(X, 2).mul(&OvElement::letter(Y, 2));
        let whole = s.mixed_cumulant(&[xy], &[]).unwrap();
        let split = &s.mixed_cumulant(&[OvElement::letter(X, 2)], &[]).unwrap()
            * &s.mixed_cumulant(&[OvElement::letter(Y, 2)], &[]).unwrap();
        assert_eq!(whole, split);
    }

    #[test]
    fn sweeps_pass_on_fixed_states() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let s = state(7);
        let pool = pool(2);
        let mut total = CheckReport::default();
        for before in 0..=1 {
            for after in 0..=1 {
                total.merge(
                    verify_ov_vanishing(&s, before, after, &pool, 2, &mut rng).unwrap(),
                );
            }
        }
        for n in 1..=3 {
            total.merge(verify_ov_b_entry_rules(&s, n, &pool, 2, &mut rng).unwrap());
            total.merge(verify_ov_product_rule(&s, n, &pool, 1, &mut rng).unwrap());
            total.merge(verify_flattening_units(&s, n, &pool, 2, &mut rng).unwrap());
            total.merge(verify_flattening_dressed(&s, n, &pool, 2, &mut rng).unwrap());
        }
        assert!(
            total.passed(),
            "violations: {:?}",
            &total.violations[..total.violations.len().min(3)]
        );
        assert!(total.checks > 200);
    }

    #[test]
    fn additive_convolution_matches_the_model() {
        let s = state(4);
        let formula = s.bconv_add().unwrap();
        let x_plus_y = OvElement::letter(X, 2).add(&OvElement::letter(Y, 2));
        let oracle = ov_moments_to_cumulants(&s.distribution_of(&x_plus_y, 4).unwrap());
        assert_eq!(formula, oracle);
    }

    #[test]
    fn multiplicative_convolution_matches_the_shifted_product() {
        let s = state(4);
        let bz = s.bconv_mul().unwrap();
        let lhs = ov_shift_one(&bz).unwrap();
        let bx = ov_moments_to_cumulants(s.dist_x());
        let by = ov_moments_to_cumulants(s.dist_y());
        let rhs = ov_shift_one(&bx)
            .unwrap()
            .checked_mul(&ov_shift_one(&by).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dim_one_collapses_to_the_scalar_model() {
        let m_x: Vec<Rat> = vec![rat(1, 2), rat(-2, 1), rat(3, 4), rat(5, 1)];
        let m_y: Vec<Rat> = vec![rat(2, 3), rat(1, 1), rat(-1, 2), rat(2, 1)];
        let ov = OVJointState::from_scalar(&m_x, &m_y).unwrap();
        let scalar = JointState::new(m_x.clone(), m_y.clone()).unwrap();
        use crate::model::AlgElement;
        let words: [&[Letter]; 5] = [&[X], &[X, Y], &[X, X, Y, X], &[Y, Y], &[Y, X, Y]];
        for w in words {
            let ov_word = w.iter().fold(OvElement::unit(1), |acc, &l| {
                acc.mul(&OvElement::letter(l, 1))
            });
            assert_eq!(
                ov.phi_elem(&ov_word).unwrap().get(0, 0),
                &scalar.phi_word(w).unwrap()
            );
        }
        // Mixed cumulants collapse too.
        let ov_entries = [
            OvElement::letter(X, 1),
            OvElement::letter(X, 1).mul(&OvElement::letter(Y, 1)),
            OvElement::letter(Y, 1),
        ];
        let scalar_entries = [
            AlgElement::letter(X),
            AlgElement::word(vec![X, Y]),
            AlgElement::letter(Y),
        ];
        let ones = vec![Matrix::identity(1); 2];
        assert_eq!(
            ov.mixed_cumulant(&ov_entries, &ones).unwrap().get(0, 0),
            &scalar.mixed_cumulant(&scalar_entries).unwrap()
        );
    }
}
