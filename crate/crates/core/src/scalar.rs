//! Scalar abstraction for the exact integer arithmetic.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable by every computation in the crate.
///
/// Implemented for the primitive signed integers and for
/// [`num_bigint::BigInt`]. Primitive types overflow silently on large
/// inputs; use [`crate::Int`] unless the inputs are known to be small.
pub trait ExactInt:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync
{
    /// Lossless conversion from `i64`.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("value does not fit the scalar type")
    }
}

impl<T> ExactInt for T where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync
{
}
