//! Scalar abstraction shared by every numerical routine.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type the interpolation routines are generic over.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Converts a count or frequency.
    fn of(n: usize) -> Self {
        Self::from_usize(n).expect("integer representable")
    }

    /// Rescales a tolerance stated for binary64 to this type's precision,
    /// so that it represents the same number of units in the last place.
    fn scaled_tol(tol64: f64) -> Self {
        let ratio = Self::epsilon().to_f64().unwrap_or(f64::EPSILON) / f64::EPSILON;
        Self::lit(tol64 * ratio.max(1.0))
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_scales_with_precision() {
        assert_eq!(f64::scaled_tol(1e-10), 1e-10);
        let t32 = f32::scaled_tol(1e-10);
        assert!(t32 > 1e-3 && t32 < 1e-1);
    }
}
