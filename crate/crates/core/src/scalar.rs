//! Scalar abstraction for the floating-point parts of the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar the spectral routines are generic over.
///
/// Implemented by `f32` and `f64`; everything integer- or rational-valued in
/// the crate stays exact and does not go through this trait.
pub trait Scalar:
    Float + NumAssign + FromPrimitive + Sum<Self> + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + NumAssign + FromPrimitive + Sum<Self> + Debug + Display + Send + Sync + 'static
{
}

/// Lossless at desk scale: vertex counts and degrees fit any `Scalar`.
pub(crate) fn from_usize<F: Scalar>(x: usize) -> F {
    F::from_usize(x).expect("usize value representable in scalar type")
}

pub(crate) fn from_f64<F: Scalar>(x: f64) -> F {
    F::from_f64(x).expect("f64 constant representable in scalar type")
}
