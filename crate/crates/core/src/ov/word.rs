//! Words and algebra elements over the matrix base algebra.
//!
//! An [`OvWord`] is a product `h_0 L_1 h_1 L_2 ... L_r h_r` where the
//! `L_i` are generators (`X` or `Y`) and the `h_i` are matrices; the
//! letterless case is a plain matrix. An [`OvElement`] is a formal sum
//! of such words — an element of the algebra generated by `X`, `Y` and
//! the base algebra. No simplification across words is attempted beyond
//! dropping words containing a zero matrix factor.

use crate::matrix::Matrix;
pub use crate::model::Letter;
use crate::ring::Ring;

/// Product `head * (L_1 * m_1) * (L_2 * m_2) * ...`: each tail entry is
/// a generator followed by the matrix standing to its right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OvWord<T> {
    head: Matrix<T>,
    tail: Vec<(Letter, Matrix<T>)>,
}

impl<T: Ring> OvWord<T> {
    /// A letterless word: a plain matrix.
    pub fn scalar(head: Matrix<T>) -> Self {
        OvWord { head, tail: vec![] }
    }

    /// The bare generator `l`.
    pub fn letter(l: Letter, dim: usize) -> Self {
        OvWord {
            head: Matrix::identity(dim),
            tail: vec![(l, Matrix::identity(dim))],
        }
    }

    pub fn dim(&self) -> usize {
        self.head.dim()
    }

    pub fn head(&self) -> &Matrix<T> {
        &self.head
    }

    pub fn tail(&self) -> &[(Letter, Matrix<T>)] {
        &self.tail
    }

    /// Number of generator letters.
    pub fn len(&self) -> usize {
        self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tail.is_empty()
    }

    /// True if some matrix factor is zero (the word is the zero element).
    pub fn has_zero_factor(&self) -> bool {
        self.head.is_zero() || self.tail.iter().any(|(_, m)| m.is_zero())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        match out.tail.last_mut() {
            None => out.head = &out.head * &other.head,
            Some((_, m)) => *m = &*m * &other.head,
        }
        out.tail.extend(other.tail.iter().cloned());
        out
    }

    pub fn left_mul(&self, m: &Matrix<T>) -> Self {
        let mut out = self.clone();
        out.head = m * &out.head;
        out
    }

    pub fn right_mul(&self, m: &Matrix<T>) -> Self {
        let mut out = self.clone();
        match out.tail.last_mut() {
            None => out.head = &out.head * m,
            Some((_, last)) => *last = &*last * m,
        }
        out
    }
}

/// Formal sum of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OvElement<T> {
    words: Vec<OvWord<T>>,
}

impl<T: Ring> OvElement<T> {
    pub fn zero() -> Self {
        OvElement { words: vec![] }
    }

    pub fn unit(dim: usize) -> Self {
        Self::from_word(OvWord::scalar(Matrix::identity(dim)))
    }

    /// A plain base-algebra element.
    pub fn scalar(m: Matrix<T>) -> Self {
        Self::from_word(OvWord::scalar(m))
    }

    pub fn letter(l: Letter, dim: usize) -> Self {
        Self::from_word(OvWord::letter(l, dim))
    }

    pub fn from_word(w: OvWord<T>) -> Self {
        let mut out = Self::zero();
        out.push(w);
        out
    }

    pub fn words(&self) -> &[OvWord<T>] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    fn push(&mut self, w: OvWord<T>) {
        if !w.has_zero_factor() {
            self.words.push(w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for w in &other.words {
            out.push(w.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for a in &self.words {
            for b in &other.words {
                out.push(a.mul(b));
            }
        }
        out
    }

    pub fn left_mul(&self, m: &Matrix<T>) -> Self {
        let mut out = Self::zero();
        for w in &self.words {
            out.push(w.left_mul(m));
        }
        out
    }

    pub fn right_mul(&self, m: &Matrix<T>) -> Self {
        let mut out = Self::zero();
        for w in &self.words {
            out.push(w.right_mul(m));
        }
        out
    }

    pub fn power(&self, n: usize, dim: usize) -> Self {
        let mut out = Self::unit(dim);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}
