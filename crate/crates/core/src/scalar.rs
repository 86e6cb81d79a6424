//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Complex amplitude over a real scalar.
pub type C<T> = Complex<T>;

/// Real floating-point scalar the simulator and solver are generic over.
///
/// The two tolerance constants are scaled to the precision of the type:
/// `EXACT_TOL` bounds exact-algebra identities (unitarity, reconstruction),
/// `PIPELINE_TOL` bounds results that pass through several composed steps.
pub trait Real:
    Float
    + NumAssign
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    const EXACT_TOL: f64;
    const PIPELINE_TOL: f64;

    /// Converts an `f64` literal. Every `f64` is representable (possibly rounded) in `Self`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("real scalar converts to f64")
    }

    #[inline]
    fn exact_tol() -> Self {
        Self::lit(Self::EXACT_TOL)
    }

    #[inline]
    fn pipeline_tol() -> Self {
        Self::lit(Self::PIPELINE_TOL)
    }
}

impl Real for f64 {
    const EXACT_TOL: f64 = 1e-12;
    const PIPELINE_TOL: f64 = 1e-10;
}

impl Real for f32 {
    const EXACT_TOL: f64 = 2e-5;
    const PIPELINE_TOL: f64 = 1e-4;
}

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn cr<T: Real>(re: f64) -> C<T> {
    Complex::new(T::lit(re), T::zero())
}
