use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::scalar::Real;

/// Element of R/Z, stored as a representative in [0, 1).
///
/// Equality is tolerance-aware: two values are equal when their distance on
/// the circle is below `tol`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CircleValue<T> {
    value: T,
    tol: T,
}

/// Distance from `x` to the nearest integer.
pub fn distance_to_integer<T: Real>(x: T) -> T {
    (x - x.round()).abs()
}

impl<T: Real> CircleValue<T> {
    pub fn new(x: T, tol: T) -> Self {
        let mut value = x - x.floor();
        if value >= T::one() {
            value = value - T::one();
        }
        Self { value, tol }
    }

    pub fn value(&self) -> T {
        self.value
    }

    pub fn tol(&self) -> T {
        self.tol
    }

    /// Distance on the circle, in [0, 1/2].
    pub fn distance(&self, other: &Self) -> T {
        distance_to_integer(self.value - other.value)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.distance(other) < self.tol
    }
}

impl<T: Real> PartialEq for CircleValue<T> {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

impl<T: Real> Add for CircleValue<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.value + o.value, self.tol.max(o.tol))
    }
}

impl<T: Real> Sub for CircleValue<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.value - o.value, self.tol.max(o.tol))
    }
}

impl<T: Real> Neg for CircleValue<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value, self.tol)
    }
}

impl<T: Real> fmt::Display for CircleValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 1", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_wraparound() {
        let a = CircleValue::new(-0.5f64, 1e-9);
        assert!((a.value() - 0.5).abs() < 1e-15);
        let b = CircleValue::new(0.999_999_999_9f64, 1e-9);
        let z = CircleValue::new(0.0f64, 1e-9);
        assert_eq!(b, z);
        assert!((CircleValue::new(0.3_f64, 1e-9).distance(&CircleValue::new(0.7, 1e-9)) - 0.4).abs() < 1e-12);
        assert_eq!(CircleValue::new(0.3, 1e-9) + CircleValue::new(0.8, 1e-9), CircleValue::new(0.1, 1e-9));
    }

    #[test]
    fn integer_distance() {
        assert!((distance_to_integer(0.6f64) - 0.4).abs() < 1e-15);
        assert!((distance_to_integer(-2.0f64)).abs() < 1e-15);
        assert!((distance_to_integer(1.4f64) - 0.4).abs() < 1e-15);
    }
}
