//! Points in R³ and spherical-triangle geometry.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Point3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    pub fn dot(&self, o: &Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: &Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(&self) -> T {
        self.dot(self).sqrt()
    }

    pub fn normalized(&self) -> Self {
        *self * self.norm().recip()
    }

    /// Distance from the z-axis.
    pub fn rho(&self) -> T {
        self.x.hypot(self.y)
    }

    /// Azimuth in (-π, π].
    pub fn azimuth(&self) -> T {
        self.y.atan2(self.x)
    }

    /// Polar angle measured from +z, in [0, π].
    pub fn colatitude(&self) -> T {
        self.rho().atan2(self.z)
    }

    pub fn cast<U: Real>(&self) -> Point3<U> {
        Point3::new(
            U::lit(self.x.to_f64().unwrap_or(f64::NAN)),
            U::lit(self.y.to_f64().unwrap_or(f64::NAN)),
            U::lit(self.z.to_f64().unwrap_or(f64::NAN)),
        )
    }
}

impl<T: Real> Add for Point3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Real> Sub for Point3<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Real> Mul<T> for Point3<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

impl<T: Real> Neg for Point3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

/// Scalar triple product a · (b × c).
pub fn triple<T: Real>(a: &Point3<T>, b: &Point3<T>, c: &Point3<T>) -> T {
    a.dot(&b.cross(c))
}

/// Signed solid angle subtended at the origin by the triangle (a, b, c).
///
/// Van Oosterom–Strackee: tan(Ω/2) = a·(b×c) / (|a||b||c| + (a·b)|c| + (a·c)|b| + (b·c)|a|).
/// Positive when (a, b, c) is counterclockwise seen from outside.
pub fn solid_angle<T: Real>(a: &Point3<T>, b: &Point3<T>, c: &Point3<T>) -> T {
    let (la, lb, lc) = (a.norm(), b.norm(), c.norm());
    let num = triple(a, b, c);
    let den = la * lb * lc + a.dot(b) * lc + a.dot(c) * lb + b.dot(c) * la;
    T::lit(2.0) * num.atan2(den)
}

/// Point at parameter `t ∈ [0,1]` on the great-circle arc from `a` to `b`,
/// together with its derivative in `t`. Both endpoints are taken on the
/// sphere through `a` (radius interpolated linearly for unequal radii).
pub fn great_arc<T: Real>(a: &Point3<T>, b: &Point3<T>, t: T) -> (Point3<T>, Point3<T>) {
    let (ra, rb) = (a.norm(), b.norm());
    let (ua, ub) = (*a * ra.recip(), *b * rb.recip());
    let cos = ua.dot(&ub).max(-T::one()).min(T::one());
    let sin = ua.cross(&ub).norm();
    let theta = sin.atan2(cos);
    let r = ra + (rb - ra) * t;
    let dr = rb - ra;
    if theta <= T::epsilon() {
        // Radial or degenerate segment: straight line.
        let p = *a + (*b - *a) * t;
        return (p, *b - *a);
    }
    let s = theta.sin();
    let wa = ((T::one() - t) * theta).sin() / s;
    let wb = (t * theta).sin() / s;
    let dwa = -theta * ((T::one() - t) * theta).cos() / s;
    let dwb = theta * (t * theta).cos() / s;
    let u = ua * wa + ub * wb;
    let du = ua * dwa + ub * dwb;
    (u * r, du * r + u * dr)
}

/// Angular distance from direction `s` to the great-circle arc between
/// directions `a` and `b`.
pub fn arc_angular_distance<T: Real>(a: &Point3<T>, b: &Point3<T>, s: &Point3<T>) -> T {
    let (ua, ub, us) = (a.normalized(), b.normalized(), s.normalized());
    let angle = |p: &Point3<T>, q: &Point3<T>| p.cross(q).norm().atan2(p.dot(q));
    let end = angle(&ua, &us).min(angle(&ub, &us));
    let n = ua.cross(&ub);
    let nn = n.norm();
    if nn <= T::epsilon() {
        return end;
    }
    let n = n * nn.recip();
    // Project s into the arc's plane and check whether it falls between a and b.
    let proj = us - n * us.dot(&n);
    if proj.norm() <= T::epsilon() {
        return end;
    }
    let proj = proj.normalized();
    let total = angle(&ua, &ub);
    if (angle(&ua, &proj) + angle(&proj, &ub) - total).abs() <= T::lit(1e-12).max(T::epsilon()) {
        us.dot(&n).abs().min(T::one()).asin().min(end)
    } else {
        end
    }
}

/// Azimuth increment from `a` to `b`, wrapped to (-π, π].
pub fn azimuth_increment<T: Real>(a: &Point3<T>, b: &Point3<T>) -> T {
    let pi = T::PI();
    let mut d = b.azimuth() - a.azimuth();
    while d > pi {
        d = d - T::two_pi();
    }
    while d <= -pi {
        d = d + T::two_pi();
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    type P = Point3<f64>;

    #[test]
    fn octant_solid_angle_is_half_pi() {
        let a = P::new(1.0, 0.0, 0.0);
        let b = P::new(0.0, 1.0, 0.0);
        let c = P::new(0.0, 0.0, 1.0);
        assert!((solid_angle(&a, &b, &c) - PI / 2.0).abs() < 1e-15);
        assert!((solid_angle(&a, &c, &b) + PI / 2.0).abs() < 1e-15);
        // scale invariant
        assert!((solid_angle(&(a * 3.0), &(b * 0.5), &c) - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn great_arc_stays_on_sphere() {
        let a = P::new(1.0, 0.0, 0.0);
        let b = P::new(0.0, 0.6, 0.8);
        for i in 0..=10 {
            let t = i as f64 / 10.0;
            let (p, dp) = great_arc(&a, &b, t);
            assert!((p.norm() - 1.0).abs() < 1e-14);
            assert!(p.dot(&dp).abs() < 1e-14);
        }
        let (p, _) = great_arc(&a, &b, 1.0);
        assert!((p - b).norm() < 1e-14);
    }

    #[test]
    fn arc_distance_to_pole() {
        let a = P::new(1.0, 0.0, 0.0);
        let b = P::new(-1.0, 1e-3, 0.0).normalized();
        let s = P::new(0.0, 0.0, -1.0);
        assert!((arc_angular_distance(&a, &b, &s) - PI / 2.0).abs() < 1e-12);
        let a = P::new(1.0, 0.0, -1.0).normalized();
        let b = P::new(-1.0, 0.0, -1.0).normalized();
        assert!(arc_angular_distance(&a, &b, &s) < 1e-12);
    }

    #[test]
    fn azimuth_increment_wraps() {
        let a = P::new(-1.0, 0.01, 0.0);
        let b = P::new(-1.0, -0.01, 0.0);
        assert!((azimuth_increment(&a, &b) - 0.02).abs() < 1e-4);
    }

    #[test]
    fn works_in_single_precision() {
        let a = Point3::<f32>::new(1.0, 0.0, 0.0);
        let b = Point3::<f32>::new(0.0, 1.0, 0.0);
        let c = Point3::<f32>::new(0.0, 0.0, 1.0);
        assert!((solid_angle(&a, &b, &c) - std::f32::consts::FRAC_PI_2).abs() < 1e-6);
    }
}
