use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::fmt;

use num::integer::gcd;

use super::QuadField;
use crate::error::{Error, Result};

/// A reduced fraction k/m in [0, 1/2] encoding the eigenvalue pair
/// {e^{2πik/m}, e^{−2πik/m}} of a group element in Sp(2, C).
///
/// The pair is unordered, so k and m−k label the same spectrum; the
/// constructor folds into [0, 1/2] and reduces, making equality a valid
/// class key.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    k: u64,
    m: u64,
}

impl RationalAngle {
    pub fn new(k: u64, m: u64) -> Self {
        assert!(m > 0, "angle denominator must be positive");
        let mut k = k % m;
        if 2 * k > m {
            k = m - k;
        }
        let g = gcd(k, m);
        RationalAngle { k: k / g, m: m / g }
    }

    /// The identity spectrum {1, 1}.
    pub fn zero() -> Self {
        RationalAngle { k: 0, m: 1 }
    }

    /// The spectrum {−1, −1}.
    pub fn half() -> Self {
        RationalAngle { k: 1, m: 2 }
    }

    pub fn numerator(&self) -> u64 {
        self.k
    }

    pub fn denominator(&self) -> u64 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.k == 0
    }

    pub fn is_half(&self) -> bool {
        (self.k, self.m) == (1, 2)
    }

    /// Exact 2cos(2πk/m) for the angles arising in the five families of
    /// finite subgroups of Sp(2, C). Cyclic and dihedral classes of
    /// general order carry their angle symbolically and never call this.
    pub fn two_cos(&self) -> Result<QuadField> {
        let q = QuadField::from_integer;
        let half = |a: i64, c: i64| {
            QuadField::new(
                super::ratio(a, 2),
                super::ratio(0, 1),
                super::ratio(c, 2),
                super::ratio(0, 1),
            )
        };
        match (self.k, self.m) {
            (0, 1) => Ok(q(2)),
            (1, 2) => Ok(q(-2)),
            (1, 3) => Ok(q(-1)),
            (1, 4) => Ok(q(0)),
            (1, 6) => Ok(q(1)),
            // 2cos(2π/5) = (√5−1)/2, 2cos(4π/5) = −(√5+1)/2
            (1, 5) => Ok(half(-1, 1)),
            (2, 5) => Ok(half(-1, -1)),
            (1, 8) => Ok(QuadField::sqrt2_times(1, 1)),
            (3, 8) => Ok(QuadField::sqrt2_times(-1, 1)),
            // 2cos(π/5) = (1+√5)/2, 2cos(3π/5) = (1−√5)/2
            (1, 10) => Ok(half(1, 1)),
            (3, 10) => Ok(half(1, -1)),
            (k, m) => Err(Error::UnsupportedAngle { k, m }),
        }
    }

    /// Floating cos(2πk/m), valid for every angle.
    pub fn cos_f64(&self) -> f64 {
        (TAU * self.k as f64 / self.m as f64).cos()
    }
}

impl PartialOrd for RationalAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        // compare k1/m1 with k2/m2 by cross-multiplication
        let lhs = self.k as u128 * other.m as u128;
        let rhs = other.k as u128 * self.m as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.m)
    }
}

impl fmt::Debug for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.m)
    }
}
