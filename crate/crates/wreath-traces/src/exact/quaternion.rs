use std::fmt;
use std::ops::Mul;

use num::integer::gcd;

use super::{ratio, QuadField, RationalAngle};
use crate::error::{Error, Result};

/// Iteration cap for finite-order detection; every element handled here
/// lies in a group of order at most 120.
const ORDER_CAP: u32 = 240;

/// A quaternion w + xi + yj + zk with coordinates in Q(√2, √5).
///
/// Group elements are unit quaternions; the corresponding SU(2) matrix
/// [[w+xi, y+zi], [−y+zi, w−xi]] has determinant 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: QuadField,
    pub x: QuadField,
    pub y: QuadField,
    pub z: QuadField,
}

impl Quaternion {
    pub fn new(w: QuadField, x: QuadField, y: QuadField, z: QuadField) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn one() -> Self {
        Quaternion::new(
            QuadField::one(),
            QuadField::zero(),
            QuadField::zero(),
            QuadField::zero(),
        )
    }

    pub fn minus_one() -> Self {
        Quaternion::new(
            QuadField::from_integer(-1),
            QuadField::zero(),
            QuadField::zero(),
            QuadField::zero(),
        )
    }

    pub fn i() -> Self {
        Quaternion::new(
            QuadField::zero(),
            QuadField::one(),
            QuadField::zero(),
            QuadField::zero(),
        )
    }

    pub fn j() -> Self {
        Quaternion::new(
            QuadField::zero(),
            QuadField::zero(),
            QuadField::one(),
            QuadField::zero(),
        )
    }

    pub fn k() -> Self {
        Quaternion::new(
            QuadField::zero(),
            QuadField::zero(),
            QuadField::zero(),
            QuadField::one(),
        )
    }

    /// Quaternion with all four coordinates equal to num/den.
    pub fn diagonal(num: i64, den: i64) -> Self {
        let c = || QuadField::from_rational(ratio(num, den));
        Quaternion::new(c(), c(), c(), c())
    }

    pub fn is_one(&self) -> bool {
        *self == Quaternion::one()
    }

    pub fn conjugate(&self) -> Self {
        Quaternion::new(
            self.w.clone(),
            -&self.x,
            -&self.y,
            -&self.z,
        )
    }

    pub fn norm_sq(&self) -> QuadField {
        &(&(&self.w * &self.w) + &(&self.x * &self.x))
            + &(&(&self.y * &self.y) + &(&self.z * &self.z))
    }

    /// Smallest m ≥ 1 with self^m = 1.
    pub fn order(&self) -> Result<u32> {
        let mut power = self.clone();
        for m in 1..=ORDER_CAP {
            if power.is_one() {
                return Ok(m);
            }
            power = &power * self;
        }
        Err(Error::NotFiniteOrder { cap: ORDER_CAP })
    }

    /// Eigenangle k/m of the SU(2) realization: the unique reduced k/m in
    /// [0, 1/2] with denominator equal to the element order and
    /// 2cos(2πk/m) equal to twice the real part.
    pub fn eigenangle(&self) -> Result<RationalAngle> {
        let m = self.order()? as u64;
        let two_w = &QuadField::from_integer(2) * &self.w;
        for k in 0..=m / 2 {
            if gcd(k, m) != 1 {
                continue;
            }
            match RationalAngle::new(k, m).two_cos() {
                Ok(tc) if tc == two_w => return Ok(RationalAngle::new(k, m)),
                Ok(_) => continue,
                // order outside the exact-cosine table; cannot occur for
                // elements of the five families
                Err(_) => break,
            }
        }
        Err(Error::UnsupportedOrder { order: m })
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        Quaternion {
            w: &(&(w1 * w2) - &(x1 * x2)) - &(&(y1 * y2) + &(z1 * z2)),
            x: &(&(w1 * x2) + &(x1 * w2)) + &(&(y1 * z2) - &(z1 * y2)),
            y: &(&(w1 * y2) - &(x1 * z2)) + &(&(y1 * w2) + &(z1 * x2)),
            z: &(&(w1 * z2) + &(x1 * y2)) - &(&(y1 * x2) - &(z1 * w2)),
        }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        &self * &rhs
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + ({})i + ({})j + ({})k",
            self.w, self.x, self.y, self.z
        )
    }
}
