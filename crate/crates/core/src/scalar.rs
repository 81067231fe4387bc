use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed};

/// Exact signed scalar usable as a matrix entry or expansion coefficient.
///
/// Implemented for every type with exact ring arithmetic: `i32`, `i64`,
/// `i128` and [`num_bigint::BigInt`]. Floats are excluded by the `Ord` bound.
pub trait Coefficient:
    Clone + Signed + FromPrimitive + Ord + Display + Debug + FromStr + Send + Sync + 'static
{
    fn from_count(count: usize) -> Self {
        Self::from_usize(count).expect("count fits the coefficient type")
    }

    fn from_sign(sign: i32) -> Self {
        Self::from_i32(sign).expect("sign fits the coefficient type")
    }
}

impl<T> Coefficient for T where
    T: Clone + Signed + FromPrimitive + Ord + Display + Debug + FromStr + Send + Sync + 'static
{
}
