//! Interval partitions of `{1, ..., n}`.
//!
//! An interval partition splits the ground set into consecutive blocks, so
//! it is determined by the composition of `n` given by its block sizes.
//! There are exactly `2^(n-1)` of them. Enumeration order is lexicographic
//! on the size tuple: `(1,1,1) < (1,2) < (2,1) < (3)`.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::Range;

/// Interval partition, stored as its block sizes in left-to-right order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalPartition {
    sizes: Vec<usize>,
}

impl IntervalPartition {
    /// Build from block sizes; every block must be nonempty.
    pub fn from_sizes(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidInput("empty block in partition".into()));
        }
        Ok(IntervalPartition { sizes })
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Number of blocks.
    pub fn num_blocks(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Blocks as 0-based index ranges, left to right.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut out = Vec::with_capacity(self.sizes.len());
        let mut start = 0;
        for &s in &self.sizes {
            out.push(start..start + s);
            start += s;
        }
        out
    }

    /// All interval partitions of `{1, ..., n}` in lexicographic order of
    /// their size tuples.
    pub fn enumerate(n: usize) -> Result<Vec<IntervalPartition>> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut out = Vec::with_capacity(1usize << (n - 1).min(62));
        let mut prefix = Vec::new();
        fill(n, &mut prefix, &mut out);
        Ok(out)
    }

    /// Number of interval partitions of `{1, ..., n}`.
    pub fn count(n: usize) -> Result<u128> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(1u128 << (n - 1))
    }

    /// Fuse the blockwise products of `items` under `mul`: block `{i..j}`
    /// contributes `items[i] * ... * items[j-1]`. Returns one value per
    /// block. The item count must match the ground-set size.
    pub fn apply<T: Clone>(&self, items: &[T], mut mul: impl FnMut(&T, &T) -> T) -> Result<Vec<T>> {
        if items.len() != self.n() {
            return Err(Error::TupleLengthMismatch {
                expected: self.n(),
                got: items.len(),
            });
        }
        let mut out = Vec::with_capacity(self.num_blocks());
        for range in self.blocks() {
            let mut acc = items[range.start].clone();
            for item in &items[range.start + 1..range.end] {
                acc = mul(&acc, item);
            }
            out.push(acc);
        }
        Ok(out)
    }
}

fn fill(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<IntervalPartition>) {
    if rest == 0 {
        out.push(IntervalPartition {
            sizes: prefix.clone(),
        });
        return;
    }
    for first in 1..=rest {
        prefix.push(first);
        fill(rest - first, prefix, out);
        prefix.pop();
    }
}

impl fmt::Display for IntervalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(sizes: &[usize]) -> IntervalPartition {
        IntervalPartition::from_sizes(sizes.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_three_in_lex_order() {
        let got = IntervalPartition::enumerate(3).unwrap();
        let want = vec![ip(&[1, 1, 1]), ip(&[1, 2]), ip(&[2, 1]), ip(&[3])];
        assert_eq!(got, want);
    }

    #[test]
    fn empty_ground_set_is_rejected() {
        assert_eq!(
            IntervalPartition::enumerate(0).unwrap_err(),
            Error::EmptyGroundSet
        );
        assert_eq!(
            IntervalPartition::from_sizes(vec![]).unwrap_err(),
            Error::EmptyGroundSet
        );
        assert!(IntervalPartition::from_sizes(vec![1, 0, 2]).is_err());
    }

    #[test]
    fn blocks_are_consecutive_ranges() {
        assert_eq!(ip(&[2, 1, 3]).blocks(), vec![0..2, 2..3, 3..6]);
        assert_eq!(ip(&[2, 1, 3]).n(), 6);
        assert_eq!(ip(&[2, 1, 3]).num_blocks(), 3);
    }

    #[test]
    fn apply_respects_order() {
        // String concatenation is order-sensitive, so this pins down which
        // elements land in which block and in what order.
        let items = ["a", "b", "c", "d"].map(String::from);
        let got = ip(&[1, 3]).apply(&items, |x, y| format!("{x}{y}")).unwrap();
        assert_eq!(got, vec!["a".to_string(), "bcd".to_string()]);
    }

    #[test]
    fn apply_rejects_wrong_length() {
        let items = ["a", "b"].map(String::from);
        assert_eq!(
            ip(&[1, 2]).apply(&items, |x, y| format!("{x}{y}")),
            Err(Error::TupleLengthMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    proptest! {
        #[test]
        fn enumeration_is_complete_and_sorted(n in 1usize..=12) {
            let all = IntervalPartition::enumerate(n).unwrap();
            prop_assert_eq!(all.len() as u128, IntervalPartition::count(n).unwrap());
            for p in &all {
                prop_assert_eq!(p.n(), n);
            }
            // Strictly increasing lexicographically: the order is canonical
            // and there are no duplicates.
            for w in all.windows(2) {
                prop_assert!(w[0].sizes() < w[1].sizes());
            }
        }
    }
}
