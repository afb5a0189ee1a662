//! Scalar abstractions.
//!
//! Geometry, forms and characters are written against [`Real`], so the same
//! code runs in `f32` or `f64`. The exact linear algebra is written against
//! [`IntScalar`], which is implemented by machine integers and by
//! [`num_bigint::BigInt`].

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_integer::Integer;
use num_traits::{Float, FloatConst, FromPrimitive, Signed, ToPrimitive};

/// Floating point scalar: f32 or f64.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Sum + Send + Sync + 'static
{
    /// Converts an `f64` literal, panicking only for non-representable input.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }

    #[inline]
    fn two_pi() -> Self {
        Self::TAU()
    }
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Sum + Send + Sync + 'static
{
}

/// Exact integer ring element with Euclidean division.
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync
{
}

impl<T> IntScalar for T where
    T: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync
{
}
