//! Points, rigid motions and similarities of the plane.

use core::ops::{Add, Mul, Neg, Sub};

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::{hypot, sin_cos};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn norm(self) -> f64 {
        hypot(self.x, self.y)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 2D cross product.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// `M = T(h,k) ∘ S^reflect ∘ R(rotation_angle)`, where `S` reflects across
/// the x-axis. Every reflection of the plane is `S ∘ R(ψ)` for some ψ, so
/// fixing the axis loses nothing.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct RigidMotion {
    pub rotation_angle: f64,
    pub reflect: bool,
    pub translation: (f64, f64),
}

impl RigidMotion {
    pub const IDENTITY: RigidMotion = RigidMotion {
        rotation_angle: 0.0,
        reflect: false,
        translation: (0.0, 0.0),
    };

    pub fn new(rotation_angle: f64, reflect: bool, translation: (f64, f64)) -> Self {
        RigidMotion {
            rotation_angle,
            reflect,
            translation,
        }
    }

    pub fn rotation(angle: f64) -> Self {
        RigidMotion::new(angle, false, (0.0, 0.0))
    }

    pub fn translation(h: f64, k: f64) -> Self {
        RigidMotion::new(0.0, false, (h, k))
    }

    /// The linear part `S^ε ∘ R` applied to a vector.
    #[inline]
    pub fn apply_linear(&self, v: Point) -> Point {
        let (s, c) = sin_cos(self.rotation_angle);
        let rotated = Point::new(c * v.x - s * v.y, s * v.x + c * v.y);
        if self.reflect {
            Point::new(rotated.x, -rotated.y)
        } else {
            rotated
        }
    }

    #[inline]
    pub fn apply(&self, p: Point) -> Point {
        let q = self.apply_linear(p);
        Point::new(q.x + self.translation.0, q.y + self.translation.1)
    }

    pub fn is_finite(&self) -> bool {
        self.rotation_angle.is_finite()
            && self.translation.0.is_finite()
            && self.translation.1.is_finite()
    }
}

/// `p ↦ λ · M(p)` with `λ > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Similarity {
    pub motion: RigidMotion,
    pub scale: f64,
}

impl Default for Similarity {
    fn default() -> Self {
        Similarity::IDENTITY
    }
}

impl Similarity {
    pub const IDENTITY: Similarity = Similarity {
        motion: RigidMotion::IDENTITY,
        scale: 1.0,
    };

    pub fn new(motion: RigidMotion, scale: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::domain(
                "similarity scale must be positive and finite",
            ));
        }
        if !motion.is_finite() {
            return Err(Error::domain("rigid motion parameters must be finite"));
        }
        Ok(Similarity { motion, scale })
    }

    /// Pure scaling `L_λ` about the origin.
    pub fn scaling(scale: f64) -> Result<Self> {
        Similarity::new(RigidMotion::IDENTITY, scale)
    }

    pub fn from_motion(motion: RigidMotion) -> Self {
        Similarity { motion, scale: 1.0 }
    }

    #[inline]
    pub fn apply(&self, p: Point) -> Point {
        self.motion.apply(p) * self.scale
    }

    /// Linear part applied to a tangent vector.
    #[inline]
    pub fn apply_vector(&self, v: Point) -> Point {
        self.motion.apply_linear(v) * self.scale
    }

    #[inline]
    pub fn reverses_orientation(&self) -> bool {
        self.motion.reflect
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Similarity) -> Similarity {
        let outer = &self.motion;
        let (reflect, angle) = if inner.motion.reflect {
            (
                !outer.reflect,
                inner.motion.rotation_angle - outer.rotation_angle,
            )
        } else {
            (
                outer.reflect,
                outer.rotation_angle + inner.motion.rotation_angle,
            )
        };
        let t1 = Point::new(inner.motion.translation.0, inner.motion.translation.1);
        let t2 = Point::new(outer.translation.0, outer.translation.1);
        let t = outer.apply_linear(t1) + t2 * (1.0 / inner.scale);
        Similarity {
            motion: RigidMotion::new(angle, reflect, (t.x, t.y)),
            scale: self.scale * inner.scale,
        }
    }
}
