//! Scalar abstraction: every numerical routine in this crate is generic over
//! the floating-point type through [`Real`].

use num_traits::{FromPrimitive, ToPrimitive};

/// Floating-point scalar, `f32` or `f64`.
///
/// `nalgebra::RealField` supplies the field operations and the standard
/// constants (`pi()`, `two_pi()`, ...); the two conversion helpers keep
/// tolerance constants readable at call sites.
pub trait Real: nalgebra::RealField + FromPrimitive + ToPrimitive + Copy {
    /// Convert an `f64` constant (tolerance, coefficient) into `Self`.
    fn num(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("finite f64 constant")
    }

    /// Widen to `f64` for reporting.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("finite scalar")
    }
}

impl Real for f32 {}
impl Real for f64 {}
