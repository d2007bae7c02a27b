//! Exact arithmetic substrate: arbitrary-precision rationals, the real
//! field Q(√2, √5), quaternions over it, and rational eigenvalue angles.

mod angle;
mod quad;
mod quaternion;

pub use angle::RationalAngle;
pub use quad::QuadField;
pub use quaternion::Quaternion;

/// Arbitrary-precision rational number, kept in lowest terms with a
/// positive denominator.
pub type Rational = num::BigRational;

/// Shorthand for a small rational constant.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
