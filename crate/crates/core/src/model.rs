//! Brute-force model of a boolean independent pair.
//!
//! Given marginal moment sequences for two variables `X` and `Y`, the
//! functional here is *defined* by the factorization rule: a word in the
//! letters `X`, `Y` splits into maximal runs of equal letters, and its
//! value is the product of the marginal moments of the run lengths. That
//! rule is exactly what makes the two generated algebras boolean
//! independent, so everything the calculus in [`crate::boolean`] claims
//! can be re-derived here from first principles and compared bit for bit.
//!
//! Elements of the generated algebra (non-commutative polynomials in
//! `X`, `Y` with a unit) are [`AlgElement`]s; mixed cumulants with such
//! entries are evaluated by the defining triangular recurrence.

use crate::error::{Error, Result};
use crate::ring::Ring;
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt;

/// Generator of one of the two independent subalgebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X => write!(f, "X"),
            Letter::Y => write!(f, "Y"),
        }
    }
}

/// Word in the generators; the empty word is the unit.
pub type Word = Vec<Letter>;

fn word_string(w: &[Letter]) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(Letter::to_string).collect()
    }
}

/// Element of the unital algebra generated by `X` and `Y`: a finite
/// linear combination of words. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElement<T> {
    terms: BTreeMap<Word, T>,
}

impl<T: Ring> AlgElement<T> {
    pub fn zero() -> Self {
        AlgElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn unit() -> Self {
        Self::word(vec![])
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(vec![l])
    }

    pub fn word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, T::one());
        AlgElement { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Word, T)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in pairs {
            out.add_term(w, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &T)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Word, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            None => {
                self.terms.insert(w, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(w, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (w, coeff) in &self.terms {
            out.add_term(w.clone(), coeff.clone() * c.clone());
        }
        out
    }

    /// Product in the free algebra: words concatenate (the unit is the
    /// empty word, so it is absorbed), coefficients multiply.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn power(&self, n: usize) -> Self {
        let mut out = Self::unit();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

impl<T: Ring + fmt::Display> fmt::Display for AlgElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{}", c, word_string(w))?;
        }
        Ok(())
    }
}

/// Boolean independent pair with prescribed marginal moments; `m_x[i]`
/// and `m_y[i]` are the order-`i+1` moments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointState<T> {
    m_x: Vec<T>,
    m_y: Vec<T>,
}

impl<T: Ring> JointState<T> {
    pub fn new(m_x: Vec<T>, m_y: Vec<T>) -> Result<Self> {
        if m_x.len() != m_y.len() {
            return Err(Error::OrderMismatch {
                left: m_x.len(),
                right: m_y.len(),
            });
        }
        if m_x.is_empty() {
            return Err(Error::EmptyEntries);
        }
        Ok(JointState { m_x, m_y })
    }

    pub fn order(&self) -> usize {
        self.m_x.len()
    }

    pub fn moments_x(&self) -> &[T] {
        &self.m_x
    }

    pub fn moments_y(&self) -> &[T] {
        &self.m_y
    }

    fn marginal(&self, l: Letter, run: usize) -> Result<T> {
        let m = match l {
            Letter::X => &self.m_x,
            Letter::Y => &self.m_y,
        };
        m.get(run - 1).cloned().ok_or(Error::MomentOrderExceeded {
            needed: run,
            available: m.len(),
        })
    }

    /// The factorization functional: split into maximal runs of equal
    /// letters and multiply the marginal moments of the run lengths.
    /// The empty word evaluates to 1.
    pub fn phi_word(&self, w: &[Letter]) -> Result<T> {
        let mut acc = T::one();
        let mut i = 0;
        while i < w.len() {
            let mut j = i + 1;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            acc = acc * self.marginal(w[i], j - i)?;
            i = j;
        }
        Ok(acc)
    }

    /// Linear extension of [`phi_word`] to algebra elements.
    pub fn phi_elem(&self, a: &AlgElement<T>) -> Result<T> {
        let mut acc = T::zero();
        for (w, c) in &a.terms {
            acc = acc + c.clone() * self.phi_word(w)?;
        }
        Ok(acc)
    }

    /// Moment sequence `phi(a), phi(a^2), ..., phi(a^order)` of an
    /// arbitrary element — the oracle the convolution formulas are
    /// checked against.
    pub fn moments_of(&self, a: &AlgElement<T>, order: usize) -> Result<Vec<T>> {
        let mut out = Vec::with_capacity(order);
        let mut p = AlgElement::unit();
        for _ in 0..order {
            p = p.mul(a);
            out.push(self.phi_elem(&p)?);
        }
        Ok(out)
    }

    /// Mixed boolean cumulant `b^n(a_1, ..., a_n)` by the defining
    /// triangular recurrence
    /// `b^n(a_1..a_n) = phi(a_1...a_n) - sum_{k<n} b^k(a_1..a_k) phi(a_{k+1}...a_n)`.
    pub fn mixed_cumulant(&self, entries: &[AlgElement<T>]) -> Result<T> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::EmptyEntries);
        }
        // phi of every contiguous range product; products built
        // incrementally so each pair is multiplied once.
        let mut phi = vec![vec![T::zero(); n]; n];
        for i in 0..n {
            let mut prod = entries[i].clone();
            phi[i][i] = self.phi_elem(&prod)?;
            for j in i + 1..n {
                prod = prod.mul(&entries[j]);
                phi[i][j] = self.phi_elem(&prod)?;
            }
        }
        // Prefix cumulants c[k] = b^{k+1}(a_1..a_{k+1}).
        let mut c: Vec<T> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = phi[0][k].clone();
            for (j, cj) in c.iter().enumerate().take(k) {
                acc = acc - cj.clone() * phi[j + 1][k].clone();
            }
            c.push(acc);
        }
        Ok(c.pop().expect("n >= 1"))
    }
}

/// Entry pools the verification sweeps draw from.
///
/// `pure_x` / `pure_y` hold elements of the respective generated
/// subalgebra (polynomials without constant term); `mixed` holds general
/// elements of the joint algebra.
#[derive(Debug, Clone)]
pub struct EntryPool<T> {
    pub pure_x: Vec<AlgElement<T>>,
    pub pure_y: Vec<AlgElement<T>>,
    pub mixed: Vec<AlgElement<T>>,
}

impl<T: Ring> EntryPool<T> {
    /// The structured pool: generators, their squares, the short products
    /// and sums the propositions single out, and the unit.
    pub fn structured() -> Self {
        use Letter::{X, Y};
        let x = AlgElement::letter(X);
        let y = AlgElement::letter(Y);
        let xx = AlgElement::word(vec![X, X]);
        let yy = AlgElement::word(vec![Y, Y]);
        EntryPool {
            pure_x: vec![x.clone(), xx.clone()],
            pure_y: vec![y.clone(), yy],
            mixed: vec![
                x.clone(),
                y.clone(),
                AlgElement::word(vec![X, Y]),
                AlgElement::word(vec![Y, X]),
                x.add(&y),
                xx,
                AlgElement::unit(),
            ],
        }
    }

    fn pick<'a, R: Rng + ?Sized>(pool: &'a [AlgElement<T>], rng: &mut R) -> &'a AlgElement<T> {
        &pool[rng.random_range(0..pool.len())]
    }
}

/// A single failed check: what was evaluated and the nonzero (or
/// mismatched) value it produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub context: String,
    pub value: String,
}

/// Outcome of a verification sweep: how many equalities were checked and
/// every violation found (none, if the theorems hold).
#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub checks: u64,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }

    /// Count one check; on failure, record the lazily-built witness.
    pub fn record_check(
        &mut self,
        ok: bool,
        context: impl FnOnce() -> String,
        value: impl FnOnce() -> String,
    ) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                context: context(),
                value: value(),
            });
        }
    }

    fn record<T: Ring + fmt::Display>(&mut self, value: &T, context: impl Fn() -> String) {
        let ok = value.is_zero();
        self.record_check(ok, context, || value.to_string());
    }
}

fn entries_string<T: Ring + fmt::Display>(entries: &[AlgElement<T>]) -> String {
    let parts: Vec<String> = entries.iter().map(|e| format!("({e})")).collect();
    parts.join(", ")
}

/// Sweep for the vanishing of cumulants with an adjacent pure-`X`,
/// pure-`Y` pair: checks `b^{n+m+2}(a_1..a_n, A, B, a_{n+3}..) = 0` with
/// `A` pure in `X`, `B` pure in `Y`, and `samples` random draws of the
/// surrounding entries.
pub fn verify_vanishing<T, R>(
    state: &JointState<T>,
    n: usize,
    m: usize,
    pool: &EntryPool<T>,
    samples: usize,
    rng: &mut R,
) -> Result<CheckReport>
where
    T: Ring + fmt::Display,
    R: Rng + ?Sized,
{
    let mut report = CheckReport::default();
    for _ in 0..samples {
        let a = EntryPool::pick(&pool.pure_x, rng).clone();
        let b = EntryPool::pick(&pool.pure_y, rng).clone();
        let mut entries: Vec<AlgElement<T>> = Vec::with_capacity(n + m + 2);
        for _ in 0..n {
            entries.push(EntryPool::pick(&pool.mixed, rng).clone());
        }
        entries.push(a);
        entries.push(b);
        for _ in 0..m {
            entries.push(EntryPool::pick(&pool.mixed, rng).clone());
        }
        let value = state.mixed_cumulant(&entries)?;
        report.record(&value, || {
            format!(
                "b^{}[{}] with X,Y adjacent at positions {},{}",
                n + m + 2,
                entries_string(&entries),
                n + 1,
                n + 2
            )
        });
    }
    Ok(report)
}

/// Sweep for the unit rules: a leading or trailing unit entry makes the
/// cumulant vanish, and an interior unit entry drops out.
pub fn verify_unit_rules<T, R>(
    state: &JointState<T>,
    n: usize,
    pool: &EntryPool<T>,
    samples: usize,
    rng: &mut R,
) -> Result<CheckReport>
where
    T: Ring + fmt::Display,
    R: Rng + ?Sized,
{
    let mut report = CheckReport::default();
    let unit = AlgElement::unit();
    for _ in 0..samples {
        let base: Vec<AlgElement<T>> = (0..n)
            .map(|_| EntryPool::pick(&pool.mixed, rng).clone())
            .collect();
        let reference = state.mixed_cumulant(&base)?;
        for k in 0..=n {
            let mut entries = base.clone();
            entries.insert(k, unit.clone());
            let value = state.mixed_cumulant(&entries)?;
            // Boundary insertions vanish; interior ones drop the unit.
            let expected = if k == 0 || k == n {
                T::zero()
            } else {
                reference.clone()
            };
            let diff = value - expected;
            report.record(&diff, || {
                format!(
                    "b^{}[{}] with unit inserted at position {}",
                    n + 1,
                    entries_string(&entries),
                    k + 1
                )
            });
        }
    }
    Ok(report)
}

/// Sweep for the product rules: an entry `A·B` (pure-`X` times pure-`Y`)
/// splits the cumulant as
/// `b^{n+1}(a_1..a_k, AB, ..) = b^{k+1}(a_1..a_k, A) b^{n-k+1}(B, ..)`,
/// and the degenerate adjacent patterns `AB,AB` / `B',AB` / `AB,A'`
/// vanish.
pub fn verify_product_rules<T, R>(
    state: &JointState<T>,
    n: usize,
    pool: &EntryPool<T>,
    samples: usize,
    rng: &mut R,
) -> Result<CheckReport>
where
    T: Ring + fmt::Display,
    R: Rng + ?Sized,
{
    let mut report = CheckReport::default();
    for _ in 0..samples {
        let a = EntryPool::pick(&pool.pure_x, rng).clone();
        let b = EntryPool::pick(&pool.pure_y, rng).clone();
        let ab = a.mul(&b);
        let base: Vec<AlgElement<T>> = (0..n)
            .map(|_| EntryPool::pick(&pool.mixed, rng).clone())
            .collect();
        for k in 0..=n {
            // (i) factorization at the product entry.
            let mut entries = base.clone();
            entries.insert(k, ab.clone());
            let whole = state.mixed_cumulant(&entries)?;
            let mut left: Vec<AlgElement<T>> = base[..k].to_vec();
            left.push(a.clone());
            let mut right: Vec<AlgElement<T>> = vec![b.clone()];
            right.extend_from_slice(&base[k..]);
            let split = state.mixed_cumulant(&left)? * state.mixed_cumulant(&right)?;
            let diff = whole - split;
            report.record(&diff, || {
                format!(
                    "b^{}[{}]: product entry at position {} fails to split",
                    n + 1,
                    entries_string(&entries),
                    k + 1
                )
            });

            // (ii)-(iv) degenerate adjacent patterns vanish.
            let second_x = EntryPool::pick(&pool.pure_x, rng).clone();
            let second_y = EntryPool::pick(&pool.pure_y, rng).clone();
            let patterns: [(&str, AlgElement<T>, AlgElement<T>); 3] = [
                ("AB,AB", ab.clone(), ab.clone()),
                ("B',AB", second_y, ab.clone()),
                ("AB,A'", ab.clone(), second_x),
            ];
            for (label, first, second) in patterns {
                let mut entries = base.clone();
                entries.insert(k, second);
                entries.insert(k, first);
                let value = state.mixed_cumulant(&entries)?;
                report.record(&value, || {
                    format!(
                        "b^{}[{}]: adjacent {} at positions {},{}",
                        n + 2,
                        entries_string(&entries),
                        label,
                        k + 1,
                        k + 2
                    )
                });
            }
        }
    }
    Ok(report)
}
