use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{traits::ToPrimitive, Zero};

use super::{ratio, Rational};
use crate::error::{Error, Result};

/// An element a + b√2 + c√5 + d√10 of the real field Q(√2, √5).
///
/// The basis {1, √2, √5, √10} is linearly independent over Q, so the
/// representation is unique and equality is componentwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadField {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl QuadField {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        QuadField { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadField {
            a,
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(ratio(n, 1))
    }

    /// num/den · √2
    pub fn sqrt2_times(num: i64, den: i64) -> Self {
        QuadField {
            a: Rational::zero(),
            b: ratio(num, den),
            c: Rational::zero(),
            d: Rational::zero(),
        }
    }

    /// num/den · √5
    pub fn sqrt5_times(num: i64, den: i64) -> Self {
        QuadField {
            a: Rational::zero(),
            b: Rational::zero(),
            c: ratio(num, den),
            d: Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Galois conjugate sending √2 ↦ −√2 (fixes √5).
    fn conj_sqrt2(&self) -> Self {
        QuadField {
            a: self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
            d: -self.d.clone(),
        }
    }

    /// Galois conjugate sending √5 ↦ −√5 (fixes √2).
    fn conj_sqrt5(&self) -> Self {
        QuadField {
            a: self.a.clone(),
            b: self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }

    /// Multiplicative inverse, by rationalizing with the three Galois
    /// conjugates: x · σ₂(x) lies in Q(√5), and multiplying that by its
    /// √5-conjugate lands in Q.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let partial = self * &self.conj_sqrt2();
        let norm = &partial * &partial.conj_sqrt5();
        debug_assert!(norm.is_rational(), "field norm must be rational");
        let scale = QuadField::from_rational(norm.a.recip());
        Ok(&(&self.conj_sqrt2() * &partial.conj_sqrt5()) * &scale)
    }

    /// Floating approximation a + b√2 + c√5 + d√10.
    pub fn to_f64(&self) -> f64 {
        let r = |x: &Rational| x.to_f64().expect("rational fits in f64 range");
        r(&self.a) + r(&self.b) * 2f64.sqrt() + r(&self.c) * 5f64.sqrt() + r(&self.d) * 10f64.sqrt()
    }
}

impl Add for &QuadField {
    type Output = QuadField;
    fn add(self, rhs: &QuadField) -> QuadField {
        QuadField {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

impl Sub for &QuadField {
    type Output = QuadField;
    fn sub(self, rhs: &QuadField) -> QuadField {
        QuadField {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
        }
    }
}

impl Neg for &QuadField {
    type Output = QuadField;
    fn neg(self) -> QuadField {
        QuadField {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }
}

// Reduction to basis form uses √2·√5 = √10, √2·√10 = 2√5, √5·√10 = 5√2.
impl Mul for &QuadField {
    type Output = QuadField;
    fn mul(self, rhs: &QuadField) -> QuadField {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        let two = ratio(2, 1);
        let five = ratio(5, 1);
        let ten = ratio(10, 1);
        QuadField {
            a: a1 * a2 + &two * &(b1 * b2) + &five * &(c1 * c2) + &ten * &(d1 * d2),
            b: a1 * b2 + b1 * a2 + &five * &(c1 * d2 + d1 * c2),
            c: a1 * c2 + c1 * a2 + &two * &(b1 * d2 + d1 * b2),
            d: a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        }
    }
}

impl Mul for QuadField {
    type Output = QuadField;
    fn mul(self, rhs: QuadField) -> QuadField {
        &self * &rhs
    }
}

impl Add for QuadField {
    type Output = QuadField;
    fn add(self, rhs: QuadField) -> QuadField {
        &self + &rhs
    }
}

impl Sub for QuadField {
    type Output = QuadField;
    fn sub(self, rhs: QuadField) -> QuadField {
        &self - &rhs
    }
}

impl fmt::Debug for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}√2 + {}√5 + {}√10)", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (coeff, symbol) in [
            (&self.a, ""),
            (&self.b, "√2"),
            (&self.c, "√5"),
            (&self.d, "√10"),
        ] {
            if !coeff.is_zero() {
                terms.push(format!("{coeff}{symbol}"));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
