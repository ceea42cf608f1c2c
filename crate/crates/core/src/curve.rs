//! Curve pieces with exact derivatives.
//!
//! Each piece is a continuously differentiable map from a parameter interval
//! into the plane. Lengths and the Green line integral `∮ x dy − y dx` are
//! exact for segments, polylines and circular arcs; the other kinds go
//! through adaptive quadrature.

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geometry::{Point, Similarity};
use crate::math::{cos, sin, sin_cos, PI};
use crate::quadrature::{integrate, QuadConfig};

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum CurvePiece {
    LineSegment {
        start: Point,
        end: Point,
    },
    /// `center + radius·(cos θ, sin θ)` for θ from `angle_start` to `angle_end`.
    CircularArc {
        center: Point,
        radius: f64,
        angle_start: f64,
        angle_end: f64,
    },
    /// `center + R(rotation)·(a cos t, b sin t)`.
    EllipticalArc {
        center: Point,
        semi_axes: (f64, f64),
        rotation: f64,
        t_start: f64,
        t_end: f64,
    },
    /// `frame(x, αx² + βx + γ)` for x from `x_start` to `x_end`.
    ParabolicArc {
        alpha: f64,
        beta: f64,
        gamma: f64,
        x_start: f64,
        x_end: f64,
        frame: Similarity,
    },
    /// `frame(2t/(1+t²), (1−t²)/(1+t²))`: a trig-free circle parameterization;
    /// `t ∈ [−1, 1]` traces the upper unit half circle from (−1, 0) to (1, 0).
    RationalPoint {
        t_start: f64,
        t_end: f64,
        frame: Similarity,
    },
    Polyline {
        vertices: Vec<Point>,
    },
}

const MAX_SWEEP: f64 = 2.0 * PI * (1.0 + 1e-12);

fn frame_ok(frame: &Similarity) -> bool {
    frame.scale > 0.0 && frame.scale.is_finite() && frame.motion.is_finite()
}

impl CurvePiece {
    pub fn line(start: Point, end: Point) -> Self {
        CurvePiece::LineSegment { start, end }
    }

    pub fn arc(center: Point, radius: f64, angle_start: f64, angle_end: f64) -> Self {
        CurvePiece::CircularArc {
            center,
            radius,
            angle_start,
            angle_end,
        }
    }

    pub fn polyline(vertices: Vec<Point>) -> Self {
        CurvePiece::Polyline { vertices }
    }

    /// Checks the construction invariants; returns a short reason on failure.
    pub fn validate(&self) -> core::result::Result<(), &'static str> {
        use CurvePiece::*;
        match self {
            LineSegment { start, end } => {
                if !(start.is_finite() && end.is_finite()) {
                    return Err("non-finite endpoint");
                }
                if start == end {
                    return Err("zero-length segment");
                }
            }
            CircularArc {
                center,
                radius,
                angle_start,
                angle_end,
            } => {
                if !(center.is_finite() && angle_start.is_finite() && angle_end.is_finite()) {
                    return Err("non-finite arc data");
                }
                if !(*radius > 0.0 && radius.is_finite()) {
                    return Err("arc radius must be positive");
                }
                let sweep = (angle_end - angle_start).abs();
                if sweep == 0.0 {
                    return Err("zero-length arc");
                }
                if sweep > MAX_SWEEP {
                    return Err("arc sweeps more than a full turn");
                }
            }
            EllipticalArc {
                center,
                semi_axes: (a, b),
                rotation,
                t_start,
                t_end,
            } => {
                if !(center.is_finite()
                    && rotation.is_finite()
                    && t_start.is_finite()
                    && t_end.is_finite())
                {
                    return Err("non-finite ellipse data");
                }
                if !(*a > 0.0 && *b > 0.0 && a.is_finite() && b.is_finite()) {
                    return Err("ellipse semi-axes must be positive");
                }
                let sweep = (t_end - t_start).abs();
                if sweep == 0.0 {
                    return Err("zero-length elliptical arc");
                }
                if sweep > MAX_SWEEP {
                    return Err("elliptical arc sweeps more than a full turn");
                }
            }
            ParabolicArc {
                alpha,
                beta,
                gamma,
                x_start,
                x_end,
                frame,
            } => {
                if ![alpha, beta, gamma, x_start, x_end]
                    .iter()
                    .all(|v| v.is_finite())
                {
                    return Err("non-finite parabola data");
                }
                if x_start == x_end {
                    return Err("zero-length parabolic arc");
                }
                if !frame_ok(frame) {
                    return Err("invalid parabola frame");
                }
            }
            RationalPoint {
                t_start,
                t_end,
                frame,
            } => {
                if !(t_start.is_finite() && t_end.is_finite()) {
                    return Err("non-finite rational parameter");
                }
                if t_start == t_end {
                    return Err("zero-length rational arc");
                }
                if !frame_ok(frame) {
                    return Err("invalid rational-arc frame");
                }
            }
            Polyline { vertices } => {
                if vertices.len() < 2 {
                    return Err("polyline needs at least two vertices");
                }
                if !vertices.iter().all(|p| p.is_finite()) {
                    return Err("non-finite polyline vertex");
                }
                if vertices.windows(2).any(|w| w[0] == w[1]) {
                    return Err("repeated consecutive polyline vertex");
                }
            }
        }
        Ok(())
    }

    /// Parameter interval `(t_start, t_end)`; `t_end < t_start` is allowed.
    /// A polyline with `n` vertices is parameterized over `[0, n−1]`.
    pub fn param_range(&self) -> (f64, f64) {
        use CurvePiece::*;
        match self {
            LineSegment { .. } => (0.0, 1.0),
            CircularArc {
                angle_start,
                angle_end,
                ..
            } => (*angle_start, *angle_end),
            EllipticalArc { t_start, t_end, .. } => (*t_start, *t_end),
            ParabolicArc { x_start, x_end, .. } => (*x_start, *x_end),
            RationalPoint { t_start, t_end, .. } => (*t_start, *t_end),
            Polyline { vertices } => (0.0, (vertices.len() - 1) as f64),
        }
    }

    pub fn start(&self) -> Point {
        match self {
            CurvePiece::LineSegment { start, .. } => *start,
            CurvePiece::Polyline { vertices } => vertices[0],
            _ => self.point(self.param_range().0),
        }
    }

    pub fn end(&self) -> Point {
        match self {
            CurvePiece::LineSegment { end, .. } => *end,
            CurvePiece::Polyline { vertices } => vertices[vertices.len() - 1],
            _ => self.point(self.param_range().1),
        }
    }

    fn polyline_segment(vertices: &[Point], t: f64) -> (Point, Point, f64) {
        let last = vertices.len() - 2;
        let i = if t <= 0.0 {
            0
        } else {
            (libm::floor(t) as usize).min(last)
        };
        (vertices[i], vertices[i + 1], t - i as f64)
    }

    pub fn point(&self, t: f64) -> Point {
        use CurvePiece::*;
        match self {
            LineSegment { start, end } => *start + (*end - *start) * t,
            CircularArc { center, radius, .. } => {
                let (s, c) = sin_cos(t);
                Point::new(center.x + radius * c, center.y + radius * s)
            }
            EllipticalArc {
                center,
                semi_axes: (a, b),
                rotation,
                ..
            } => {
                let (s, c) = sin_cos(t);
                let (sr, cr) = sin_cos(*rotation);
                let (lx, ly) = (a * c, b * s);
                Point::new(center.x + cr * lx - sr * ly, center.y + sr * lx + cr * ly)
            }
            ParabolicArc {
                alpha,
                beta,
                gamma,
                frame,
                ..
            } => frame.apply(Point::new(t, (alpha * t + beta) * t + gamma)),
            RationalPoint { frame, .. } => {
                let d = 1.0 + t * t;
                frame.apply(Point::new(2.0 * t / d, (1.0 - t * t) / d))
            }
            Polyline { vertices } => {
                let (p, q, u) = Self::polyline_segment(vertices, t);
                p + (q - p) * u
            }
        }
    }

    /// Derivative with respect to the piece parameter.
    pub fn derivative(&self, t: f64) -> Point {
        use CurvePiece::*;
        match self {
            LineSegment { start, end } => *end - *start,
            CircularArc { radius, .. } => {
                let (s, c) = sin_cos(t);
                Point::new(-radius * s, radius * c)
            }
            EllipticalArc {
                semi_axes: (a, b),
                rotation,
                ..
            } => {
                let (s, c) = sin_cos(t);
                let (sr, cr) = sin_cos(*rotation);
                let (lx, ly) = (-a * s, b * c);
                Point::new(cr * lx - sr * ly, sr * lx + cr * ly)
            }
            ParabolicArc {
                alpha, beta, frame, ..
            } => frame.apply_vector(Point::new(1.0, 2.0 * alpha * t + beta)),
            RationalPoint { frame, .. } => {
                let d = 1.0 + t * t;
                let d2 = d * d;
                frame.apply_vector(Point::new(2.0 * (1.0 - t * t) / d2, -4.0 * t / d2))
            }
            Polyline { vertices } => {
                let (p, q, _) = Self::polyline_segment(vertices, t);
                q - p
            }
        }
    }

    /// Arc length, exact where a closed form exists.
    pub fn length(&self, cfg: &QuadConfig) -> Result<f64> {
        use CurvePiece::*;
        match self {
            LineSegment { start, end } => Ok(start.distance(*end)),
            Polyline { vertices } => Ok(vertices.windows(2).map(|w| w[0].distance(w[1])).sum()),
            CircularArc {
                radius,
                angle_start,
                angle_end,
                ..
            } => Ok(radius * (angle_end - angle_start).abs()),
            _ => self.length_by_quadrature(cfg),
        }
    }

    /// `∫ (x − o.x) dy − (y − o.y) dx` along the piece, exact where possible.
    /// Summed over a closed chain this is twice the signed enclosed area for
    /// any reference point `o`.
    pub fn green_integral(&self, origin: Point, cfg: &QuadConfig) -> Result<f64> {
        use CurvePiece::*;
        match self {
            LineSegment { start, end } => Ok((*start - origin).cross(*end - origin)),
            Polyline { vertices } => Ok(vertices
                .windows(2)
                .map(|w| (w[0] - origin).cross(w[1] - origin))
                .sum()),
            CircularArc {
                center,
                radius,
                angle_start,
                angle_end,
            } => {
                let c = *center - origin;
                let r = *radius;
                Ok(r * r * (angle_end - angle_start)
                    + r * (c.x * (sin(*angle_end) - sin(*angle_start))
                        - c.y * (cos(*angle_end) - cos(*angle_start))))
            }
            _ => self.green_by_quadrature(origin, cfg),
        }
    }

    fn quadrature_spans(&self) -> Vec<(f64, f64)> {
        match self {
            CurvePiece::Polyline { vertices } => (0..vertices.len() - 1)
                .map(|i| (i as f64, (i + 1) as f64))
                .collect(),
            _ => alloc::vec![self.param_range()],
        }
    }

    /// Arc length from `∫ |p′(t)| dt`, regardless of piece kind.
    pub fn length_by_quadrature(&self, cfg: &QuadConfig) -> Result<f64> {
        let mut total = 0.0;
        for (a, b) in self.quadrature_spans() {
            let q = integrate(|t| self.derivative(t).norm(), a, b, cfg)?;
            total += q.value.abs();
        }
        Ok(total)
    }

    /// Green integral from quadrature, regardless of piece kind.
    pub fn green_by_quadrature(&self, origin: Point, cfg: &QuadConfig) -> Result<f64> {
        let mut total = 0.0;
        for (a, b) in self.quadrature_spans() {
            let q = integrate(
                |t| (self.point(t) - origin).cross(self.derivative(t)),
                a,
                b,
                cfg,
            )?;
            total += q.value;
        }
        Ok(total)
    }

    /// Same curve traversed in the opposite direction.
    pub fn reversed(&self) -> CurvePiece {
        use CurvePiece::*;
        match self.clone() {
            LineSegment { start, end } => LineSegment {
                start: end,
                end: start,
            },
            CircularArc {
                center,
                radius,
                angle_start,
                angle_end,
            } => CircularArc {
                center,
                radius,
                angle_start: angle_end,
                angle_end: angle_start,
            },
            EllipticalArc {
                center,
                semi_axes,
                rotation,
                t_start,
                t_end,
            } => EllipticalArc {
                center,
                semi_axes,
                rotation,
                t_start: t_end,
                t_end: t_start,
            },
            ParabolicArc {
                alpha,
                beta,
                gamma,
                x_start,
                x_end,
                frame,
            } => ParabolicArc {
                alpha,
                beta,
                gamma,
                x_start: x_end,
                x_end: x_start,
                frame,
            },
            RationalPoint {
                t_start,
                t_end,
                frame,
            } => RationalPoint {
                t_start: t_end,
                t_end: t_start,
                frame,
            },
            Polyline { mut vertices } => {
                vertices.reverse();
                Polyline { vertices }
            }
        }
    }

    /// Image of the piece under `s`; the piece kind is preserved.
    pub fn transformed(&self, s: &Similarity) -> CurvePiece {
        use CurvePiece::*;
        let phi = s.motion.rotation_angle;
        let reflect = s.motion.reflect;
        match self {
            LineSegment { start, end } => LineSegment {
                start: s.apply(*start),
                end: s.apply(*end),
            },
            Polyline { vertices } => Polyline {
                vertices: vertices.iter().map(|p| s.apply(*p)).collect(),
            },
            CircularArc {
                center,
                radius,
                angle_start,
                angle_end,
            } => {
                // S reflects across the x-axis: S·u(θ) = u(−θ).
                let map = |a: f64| if reflect { -(a + phi) } else { a + phi };
                CircularArc {
                    center: s.apply(*center),
                    radius: radius * s.scale,
                    angle_start: map(*angle_start),
                    angle_end: map(*angle_end),
                }
            }
            EllipticalArc {
                center,
                semi_axes: (a, b),
                rotation,
                t_start,
                t_end,
            } => {
                let (rotation, sign) = if reflect {
                    (-(rotation + phi), -1.0)
                } else {
                    (rotation + phi, 1.0)
                };
                EllipticalArc {
                    center: s.apply(*center),
                    semi_axes: (a * s.scale, b * s.scale),
                    rotation,
                    t_start: sign * t_start,
                    t_end: sign * t_end,
                }
            }
            ParabolicArc {
                alpha,
                beta,
                gamma,
                x_start,
                x_end,
                frame,
            } => ParabolicArc {
                alpha: *alpha,
                beta: *beta,
                gamma: *gamma,
                x_start: *x_start,
                x_end: *x_end,
                frame: s.compose(frame),
            },
            RationalPoint {
                t_start,
                t_end,
                frame,
            } => RationalPoint {
                t_start: *t_start,
                t_end: *t_end,
                frame: s.compose(frame),
            },
        }
    }

    /// Center and radius when the piece lies on a circle.
    pub fn supporting_circle(&self) -> Option<(Point, f64)> {
        match self {
            CurvePiece::CircularArc { center, radius, .. } => Some((*center, *radius)),
            CurvePiece::RationalPoint { frame, .. } => {
                Some((frame.apply(Point::ORIGIN), frame.scale))
            }
            CurvePiece::EllipticalArc {
                center,
                semi_axes: (a, b),
                ..
            } if a == b => Some((*center, *a)),
            _ => None,
        }
    }

    /// Lengths of the straight edges (one per polyline segment) or the arc
    /// length of a curved piece.
    pub fn edge_lengths(&self, cfg: &QuadConfig, out: &mut Vec<f64>) -> Result<()> {
        match self {
            CurvePiece::Polyline { vertices } => {
                out.extend(vertices.windows(2).map(|w| w[0].distance(w[1])));
                Ok(())
            }
            _ => {
                out.push(self.length(cfg)?);
                Ok(())
            }
        }
    }

    /// Largest coordinate magnitude among the piece's defining points.
    pub(crate) fn extent(&self) -> f64 {
        let m = |p: Point| p.x.abs().max(p.y.abs());
        match self {
            CurvePiece::Polyline { vertices } => vertices.iter().map(|p| m(*p)).fold(0.0, f64::max),
            CurvePiece::CircularArc { center, radius, .. } => m(*center) + radius,
            CurvePiece::EllipticalArc {
                center,
                semi_axes: (a, b),
                ..
            } => m(*center) + a.max(*b),
            _ => m(self.start()).max(m(self.end())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RigidMotion;
    use crate::math::FRAC_PI_2;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn rational_half_circle_endpoints_and_length() {
        let p = CurvePiece::RationalPoint {
            t_start: -1.0,
            t_end: 1.0,
            frame: Similarity::IDENTITY,
        };
        assert_eq!(p.start(), Point::new(-1.0, 0.0));
        assert_eq!(p.end(), Point::new(1.0, 0.0));
        assert_eq!(p.point(0.0), Point::new(0.0, 1.0));
        let len = p.length(&cfg()).unwrap();
        assert!((len - PI).abs() < 1e-12);
    }

    #[test]
    fn arc_exact_matches_quadrature() {
        let arc = CurvePiece::arc(Point::new(0.3, -1.2), 2.5, -0.4, 2.9);
        let o = Point::new(0.1, 0.2);
        let exact = arc.green_integral(o, &cfg()).unwrap();
        let quad = arc.green_by_quadrature(o, &cfg()).unwrap();
        assert!((exact - quad).abs() <= 1e-10 * exact.abs());
        let le = arc.length(&cfg()).unwrap();
        let lq = arc.length_by_quadrature(&cfg()).unwrap();
        assert!((le - lq).abs() <= 1e-10 * le);
    }

    #[test]
    fn polyline_parameterization_hits_vertices() {
        let pl = CurvePiece::polyline(alloc::vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 2.0)
        ]);
        assert_eq!(pl.point(1.0), Point::new(1.0, 0.0));
        assert_eq!(pl.point(2.0), Point::new(1.0, 2.0));
        assert_eq!(pl.derivative(1.5), Point::new(0.0, 2.0));
        let lq = pl.length_by_quadrature(&cfg()).unwrap();
        assert!((lq - 3.0).abs() < 1e-12);
    }

    #[test]
    fn transformed_pieces_follow_their_points() {
        let s = Similarity::new(RigidMotion::new(0.9, true, (0.4, -0.7)), 1.8).unwrap();
        let pieces = [
            CurvePiece::arc(Point::new(0.5, 0.5), 1.0, 0.2, 2.0),
            CurvePiece::EllipticalArc {
                center: Point::new(-0.3, 0.1),
                semi_axes: (2.0, 0.7),
                rotation: 0.3,
                t_start: 0.1,
                t_end: 1.9,
            },
            CurvePiece::ParabolicArc {
                alpha: -0.5,
                beta: 0.2,
                gamma: 1.0,
                x_start: -1.0,
                x_end: 1.0,
                frame: Similarity::from_motion(RigidMotion::translation(0.0, 0.5)),
            },
            CurvePiece::RationalPoint {
                t_start: -0.5,
                t_end: 0.8,
                frame: Similarity::IDENTITY,
            },
        ];
        for piece in pieces {
            let moved = piece.transformed(&s);
            let (a, b) = piece.param_range();
            let (c, d) = moved.param_range();
            for k in 0..=4 {
                let u = k as f64 / 4.0;
                let p = s.apply(piece.point(a + (b - a) * u));
                let q = moved.point(c + (d - c) * u);
                assert!(p.distance(q) < 1e-12, "{piece:?}: {p:?} vs {q:?}");
            }
        }
    }

    #[test]
    fn degenerate_pieces_rejected() {
        assert!(CurvePiece::line(Point::ORIGIN, Point::ORIGIN)
            .validate()
            .is_err());
        assert!(CurvePiece::arc(Point::ORIGIN, 0.0, 0.0, 1.0)
            .validate()
            .is_err());
        assert!(CurvePiece::arc(Point::ORIGIN, 1.0, 1.0, 1.0)
            .validate()
            .is_err());
        assert!(CurvePiece::arc(Point::ORIGIN, 1.0, 0.0, 7.0)
            .validate()
            .is_err());
        assert!(CurvePiece::polyline(alloc::vec![Point::ORIGIN])
            .validate()
            .is_err());
        assert!(CurvePiece::arc(Point::ORIGIN, 1.0, 0.0, FRAC_PI_2)
            .validate()
            .is_ok());
    }
}
