//! Closed piecewise-smooth curves and their area and perimeter.

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::curve::CurvePiece;
use crate::error::{Error, Result};
use crate::geometry::{Point, Similarity};
use crate::math::{rel_close, PI};
use crate::quadrature::QuadConfig;

/// Default join tolerance between consecutive pieces. Applied relative to the
/// shape's coordinate extent once that exceeds 1.
pub const JOIN_TOLERANCE: f64 = 1e-12;

/// A closed chain of curve pieces, oriented counterclockwise.
///
/// Simplicity (no self-intersection) is a precondition for arbitrary input;
/// the catalog builders produce simple shapes by construction.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "ShapeDoc", into = "ShapeDoc"))]
pub struct Shape {
    pieces: Vec<CurvePiece>,
}

#[cfg(feature = "serde")]
#[derive(Serialize, Deserialize)]
struct ShapeDoc {
    pieces: Vec<CurvePiece>,
}

#[cfg(feature = "serde")]
impl TryFrom<ShapeDoc> for Shape {
    type Error = Error;
    fn try_from(doc: ShapeDoc) -> Result<Self> {
        Shape::new(doc.pieces)
    }
}

#[cfg(feature = "serde")]
impl From<Shape> for ShapeDoc {
    fn from(s: Shape) -> Self {
        ShapeDoc { pieces: s.pieces }
    }
}

impl Shape {
    pub fn new(pieces: Vec<CurvePiece>) -> Result<Self> {
        Shape::with_join_tolerance(pieces, JOIN_TOLERANCE)
    }

    /// Validates the pieces, checks closure and normalizes the orientation to
    /// counterclockwise.
    pub fn with_join_tolerance(pieces: Vec<CurvePiece>, tolerance: f64) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::Empty);
        }
        for (index, piece) in pieces.iter().enumerate() {
            piece
                .validate()
                .map_err(|reason| Error::InvalidPiece { index, reason })?;
        }
        let extent = pieces.iter().map(CurvePiece::extent).fold(1.0, f64::max);
        let tol = tolerance * extent;
        let n = pieces.len();
        for i in 0..n {
            let gap = pieces[i].end().distance(pieces[(i + 1) % n].start());
            if gap > tol || gap.is_nan() {
                return Err(Error::OpenChain { index: i, gap });
            }
        }
        let shape = Shape { pieces };
        let signed = shape.signed_area()?;
        if signed == 0.0 || !signed.is_finite() {
            return Err(Error::ZeroArea);
        }
        Ok(if signed < 0.0 {
            shape.reversed()
        } else {
            shape
        })
    }

    /// Closed polygon through `vertices` (the closing edge is implied).
    pub fn polygon(vertices: &[Point]) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::domain("a polygon needs at least three vertices"));
        }
        let mut v = vertices.to_vec();
        if v.first() != v.last() {
            v.push(vertices[0]);
        }
        Shape::new(alloc::vec![CurvePiece::polyline(v)])
    }

    pub fn circle(center: Point, radius: f64) -> Result<Self> {
        Shape::new(alloc::vec![CurvePiece::arc(center, radius, 0.0, 2.0 * PI)])
    }

    /// Ellipse `center + R(rotation)(a cos t, b sin t)`.
    pub fn ellipse(center: Point, a: f64, b: f64, rotation: f64) -> Result<Self> {
        Shape::new(alloc::vec![CurvePiece::EllipticalArc {
            center,
            semi_axes: (a, b),
            rotation,
            t_start: 0.0,
            t_end: 2.0 * PI,
        }])
    }

    /// Unit circle from two rational half-circle pieces; no trigonometric
    /// function enters the piece definitions.
    pub fn rational_unit_circle() -> Self {
        use crate::geometry::RigidMotion;
        let upper = CurvePiece::RationalPoint {
            t_start: -1.0,
            t_end: 1.0,
            frame: Similarity::IDENTITY,
        };
        let lower = CurvePiece::RationalPoint {
            t_start: 1.0,
            t_end: -1.0,
            frame: Similarity::from_motion(RigidMotion::new(0.0, true, (0.0, 0.0))),
        };
        Shape::new(alloc::vec![upper, lower]).expect("rational circle is a valid shape")
    }

    pub fn pieces(&self) -> &[CurvePiece] {
        &self.pieces
    }

    pub fn into_pieces(self) -> Vec<CurvePiece> {
        self.pieces
    }

    fn reversed(self) -> Shape {
        Shape {
            pieces: self.pieces.iter().rev().map(CurvePiece::reversed).collect(),
        }
    }

    /// Image under `λ·M`. A reflecting motion flips the traversal, which is
    /// re-normalized to counterclockwise.
    pub fn apply_similarity(&self, s: &Similarity) -> Shape {
        let moved = Shape {
            pieces: self.pieces.iter().map(|p| p.transformed(s)).collect(),
        };
        if s.reverses_orientation() {
            moved.reversed()
        } else {
            moved
        }
    }

    /// `L_λ(self)`: uniform scaling about the origin.
    pub fn scaled(&self, lambda: f64) -> Result<Shape> {
        Ok(self.apply_similarity(&Similarity::scaling(lambda)?))
    }

    pub fn signed_area_with(&self, cfg: &QuadConfig) -> Result<f64> {
        let origin = self.pieces[0].start();
        let mut twice = 0.0;
        for piece in &self.pieces {
            twice += piece.green_integral(origin, cfg)?;
        }
        Ok(0.5 * twice)
    }

    /// `½ ∮ x dy − y dx`; positive for every constructed shape.
    pub fn signed_area(&self) -> Result<f64> {
        self.signed_area_with(&QuadConfig::default())
    }

    pub fn area(&self) -> Result<f64> {
        self.signed_area().map(f64::abs)
    }

    pub fn area_with(&self, cfg: &QuadConfig) -> Result<f64> {
        self.signed_area_with(cfg).map(f64::abs)
    }

    pub fn perimeter_with(&self, cfg: &QuadConfig) -> Result<f64> {
        let mut total = 0.0;
        for piece in &self.pieces {
            total += piece.length(cfg)?;
        }
        Ok(total)
    }

    pub fn perimeter(&self) -> Result<f64> {
        self.perimeter_with(&QuadConfig::default())
    }

    pub fn semiperimeter(&self) -> Result<f64> {
        self.perimeter().map(|p| 0.5 * p)
    }

    pub fn semiperimeter_with(&self, cfg: &QuadConfig) -> Result<f64> {
        self.perimeter_with(cfg).map(|p| 0.5 * p)
    }

    /// Area and semiperimeter computed only by quadrature, ignoring the
    /// closed forms available for lines and circular arcs.
    pub fn measures_by_quadrature(&self, cfg: &QuadConfig) -> Result<(f64, f64)> {
        let origin = self.pieces[0].start();
        let mut twice = 0.0;
        let mut length = 0.0;
        for piece in &self.pieces {
            twice += piece.green_by_quadrature(origin, cfg)?;
            length += piece.length_by_quadrature(cfg)?;
        }
        Ok((0.5 * twice.abs(), 0.5 * length))
    }

    /// Whether every piece lies on one common circle. A simple closed chain
    /// of such pieces is that whole circle.
    pub fn is_circle(&self) -> bool {
        let mut circles = self.pieces.iter().map(CurvePiece::supporting_circle);
        let Some(Some((c0, r0))) = circles.next() else {
            return false;
        };
        circles.all(|c| match c {
            Some((c, r)) => rel_close(r, r0, 1e-9) && c.distance(c0) <= 1e-9 * r0,
            None => false,
        })
    }

    /// Vertices (without the closing repeat) when every piece is straight.
    pub fn polygon_vertices(&self) -> Option<Vec<Point>> {
        let mut out = Vec::new();
        for piece in &self.pieces {
            match piece {
                CurvePiece::LineSegment { start, .. } => out.push(*start),
                CurvePiece::Polyline { vertices } => {
                    out.extend_from_slice(&vertices[..vertices.len() - 1])
                }
                _ => return None,
            }
        }
        Some(out)
    }

    /// Edge lengths sorted ascending: straight edges individually, curved
    /// pieces by arc length. Congruent shapes share this multiset.
    pub fn edge_length_signature(&self) -> Result<Vec<f64>> {
        let cfg = QuadConfig::default();
        let mut out = Vec::new();
        for piece in &self.pieces {
            piece.edge_lengths(&cfg, &mut out)?;
        }
        out.sort_by(f64::total_cmp);
        Ok(out)
    }
}

fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

fn segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on = |a: Point, b: Point, p: Point, d: f64| {
        d == 0.0
            && p.x >= a.x.min(b.x)
            && p.x <= a.x.max(b.x)
            && p.y >= a.y.min(b.y)
            && p.y <= a.y.max(b.y)
    };
    on(q1, q2, p1, d1) || on(q1, q2, p2, d2) || on(p1, p2, q1, d3) || on(p1, p2, q2, d4)
}

/// Whether the closed polygon through `vertices` has no self-intersections
/// (non-adjacent edges disjoint, no repeated vertices).
pub fn is_simple_polygon(vertices: &[Point]) -> bool {
    let n = vertices.len();
    if n < 3 {
        return false;
    }
    let edge = |i: usize| (vertices[i], vertices[(i + 1) % n]);
    for i in 0..n {
        let (a, b) = edge(i);
        if a == b {
            return false;
        }
        for j in (i + 1)..n {
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            let (c, d) = edge(j);
            if segments_intersect(a, b, c, d) {
                return false;
            }
        }
    }
    // Adjacent edges folding back onto each other.
    (0..n).all(|i| {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let c = vertices[(i + 2) % n];
        orient(a, b, c) != 0.0 || (b - a).dot(c - b) > 0.0
    })
}
