//! Scalar abstraction for the exact (deterministic) layer.
//!
//! Everything deterministic is generic over [`Scalar`] so the same formulas
//! run in `f32` or `f64`; the Monte Carlo layer is pinned to `f64`. Concrete
//! aliases live at the crate root.

use nalgebra::RealField;
use num_traits::{FromPrimitive, ToPrimitive};

/// Floating point scalar usable in all deterministic kernels: real field
/// operations, conversions from literals, and FFT support for the circulant
/// torus kernels.
pub trait Scalar:
    RealField + FromPrimitive + ToPrimitive + rustfft::FftNum + Copy + Default
{
    /// Lift an `f64` literal into the scalar type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal not representable in scalar type")
    }

    /// Lossy view as `f64`, for reporting and for handing exact values to the
    /// `f64` Monte Carlo layer.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar not representable as f64")
    }

    fn usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize not representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
