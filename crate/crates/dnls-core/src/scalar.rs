//! Scalar abstraction for the lattice-side math.
//!
//! The grids, fields, functionals, rearrangement machinery and the heat
//! kernel series are generic over any float; the solver and spectra
//! lanes are pinned to `f64` by their LAPACK backends.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar, implemented for `f32` and `f64`.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + Sum
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Lossless-enough conversion from an `f64` constant.
    fn real(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant must convert to scalar")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
