//! Operator-valued layer: moment and cumulant data become multilinear
//! maps on a matrix algebra, formal series of such maps multiply by the
//! convolution rule, and the joint model furnishes a conditional
//! expectation to check every identity against.

pub mod distribution;
pub mod joint;
pub mod multilinear;
pub mod series;
pub mod word;

pub use distribution::{
    ov_cumulants_to_moments, ov_moments_to_cumulants, ov_series_identity_holds, ov_shift_one,
    OVDistribution,
};
pub use joint::{
    verify_flattening_dressed, verify_flattening_units, verify_ov_b_entry_rules,
    verify_ov_product_rule, verify_ov_vanishing, OVJointState, OvPool,
};
pub use multilinear::{basis_matrix, basis_tuples, MultilinearMap};
pub use series::MulSeries;
pub use word::{OvElement, OvWord};
