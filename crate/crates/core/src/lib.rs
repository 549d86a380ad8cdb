//! Exact calculus for boolean cumulants.
//!
//! The library computes with moment and cumulant sequences of a single
//! non-commutative random variable, and with pairs of boolean independent
//! variables, in two settings:
//!
//! * **scalar** — moments are exact rationals ([`Rat`]); conversions,
//!   additive and multiplicative boolean convolution, and the `B`/`M`
//!   generating series live in [`boolean`], with a brute-force joint
//!   model in [`model`] serving as an independent oracle;
//! * **operator-valued** — moments are multilinear maps over a square
//!   matrix base algebra; series arithmetic, the cumulant recurrence,
//!   and the shift/convolution identities live in [`ov`].
//!
//! All arithmetic is exact: the computational core is generic over any
//! ring implementing [`ring::Ring`], and the concrete aliases exported
//! here fix arbitrary-precision rationals.

pub mod boolean;
pub mod error;
pub mod json;
pub mod matrix;
pub mod model;
pub mod ov;
pub mod partitions;
pub mod ring;
pub mod sampling;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use partitions::IntervalPartition;
pub use scalar::{int, rat, Int, Rat};
pub use series::TruncatedSeries;

/// Moment sequence over exact rationals; entry `i` is the moment of
/// order `i + 1`.
pub type MomentSeq = Vec<Rat>;

/// Cumulant sequence over exact rationals; entry `i` is the cumulant of
/// order `i + 1`.
pub type CumulantSeq = Vec<Rat>;

/// Square matrix over exact rationals — the base algebra of the
/// operator-valued calculus.
pub type MatrixB = Matrix<Rat>;
