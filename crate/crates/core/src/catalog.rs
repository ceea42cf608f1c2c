//! Closed-form fundamental measures and unit-shape builders for the standard
//! families: right triangles, general triangles, rectangles, rhombi,
//! parallelograms, ellipses and unit-apothem regular polygons.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::curve::CurvePiece;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::math::{cos, powf, rel_diff, sin, sin_cos, sqrt, tan, FRAC_PI_2, PI};
use crate::quadrature::integrate_default;
use crate::shape::Shape;
use crate::verify::VerificationReport;

/// Parameter tagging one member of a shape family.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(
    feature = "serde",
    serde(
        tag = "family",
        rename_all = "snake_case",
        try_from = "FamilyParamDoc",
        into = "FamilyParamDoc"
    )
)]
pub enum FamilyParam {
    /// Right triangle with acute angle `theta` adjacent to the base leg.
    RightTriangle { theta: f64 },
    /// Triangle with sides `r·c`, `s·c` and longest side `c`.
    Triangle { r: f64, s: f64 },
    /// Rectangle with height/length ratio `r`.
    Rectangle { r: f64 },
    /// Rhombus with interior angle `theta`.
    Rhombus { theta: f64 },
    /// Parallelogram with interior angle `theta` between sides `b` and `r·b`.
    Parallelogram { theta: f64, r: f64 },
    /// Ellipse with semi-minor/semi-major ratio `r`.
    Ellipse { r: f64 },
    /// Regular `m`-gon with unit apothem.
    RegularPolygon { m: u32 },
}

#[cfg(feature = "serde")]
#[derive(Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
enum FamilyParamDoc {
    RightTriangle { theta: f64 },
    Triangle { r: f64, s: f64 },
    Rectangle { r: f64 },
    Rhombus { theta: f64 },
    Parallelogram { theta: f64, r: f64 },
    Ellipse { r: f64 },
    RegularPolygon { m: u32 },
}

#[cfg(feature = "serde")]
impl TryFrom<FamilyParamDoc> for FamilyParam {
    type Error = Error;
    fn try_from(d: FamilyParamDoc) -> Result<Self> {
        let p = match d {
            FamilyParamDoc::RightTriangle { theta } => FamilyParam::RightTriangle { theta },
            FamilyParamDoc::Triangle { r, s } => FamilyParam::Triangle { r, s },
            FamilyParamDoc::Rectangle { r } => FamilyParam::Rectangle { r },
            FamilyParamDoc::Rhombus { theta } => FamilyParam::Rhombus { theta },
            FamilyParamDoc::Parallelogram { theta, r } => FamilyParam::Parallelogram { theta, r },
            FamilyParamDoc::Ellipse { r } => FamilyParam::Ellipse { r },
            FamilyParamDoc::RegularPolygon { m } => FamilyParam::RegularPolygon { m },
        };
        p.validate()?;
        Ok(p)
    }
}

#[cfg(feature = "serde")]
impl From<FamilyParam> for FamilyParamDoc {
    fn from(p: FamilyParam) -> Self {
        match p {
            FamilyParam::RightTriangle { theta } => FamilyParamDoc::RightTriangle { theta },
            FamilyParam::Triangle { r, s } => FamilyParamDoc::Triangle { r, s },
            FamilyParam::Rectangle { r } => FamilyParamDoc::Rectangle { r },
            FamilyParam::Rhombus { theta } => FamilyParamDoc::Rhombus { theta },
            FamilyParam::Parallelogram { theta, r } => FamilyParamDoc::Parallelogram { theta, r },
            FamilyParam::Ellipse { r } => FamilyParamDoc::Ellipse { r },
            FamilyParam::RegularPolygon { m } => FamilyParamDoc::RegularPolygon { m },
        }
    }
}

/// Family tag without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    RightTriangle,
    Triangle,
    Rectangle,
    Rhombus,
    Parallelogram,
    Ellipse,
    RegularPolygon,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::RightTriangle,
        FamilyKind::Triangle,
        FamilyKind::Rectangle,
        FamilyKind::Rhombus,
        FamilyKind::Parallelogram,
        FamilyKind::Ellipse,
        FamilyKind::RegularPolygon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::RightTriangle => "right_triangle",
            FamilyKind::Triangle => "triangle",
            FamilyKind::Rectangle => "rectangle",
            FamilyKind::Rhombus => "rhombus",
            FamilyKind::Parallelogram => "parallelogram",
            FamilyKind::Ellipse => "ellipse",
            FamilyKind::RegularPolygon => "regular_polygon",
        }
    }

    /// Accepts snake_case or kebab-case names.
    pub fn from_name(name: &str) -> Option<FamilyKind> {
        let norm: String = name
            .chars()
            .map(|c| if c == '-' { '_' } else { c })
            .collect();
        FamilyKind::ALL.into_iter().find(|k| k.name() == norm)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn angle_in(theta: f64, hi: f64, what: &str) -> Result<()> {
    if theta > 0.0 && theta < hi {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{what}: angle {theta} outside (0, {hi})"
        )))
    }
}

fn positive(r: f64, what: &str) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{what}: ratio {r} must be positive and finite"
        )))
    }
}

impl FamilyParam {
    pub fn right_triangle(theta: f64) -> Result<Self> {
        FamilyParam::RightTriangle { theta }.validated()
    }
    pub fn triangle(r: f64, s: f64) -> Result<Self> {
        FamilyParam::Triangle { r, s }.validated()
    }
    pub fn rectangle(r: f64) -> Result<Self> {
        FamilyParam::Rectangle { r }.validated()
    }
    pub fn rhombus(theta: f64) -> Result<Self> {
        FamilyParam::Rhombus { theta }.validated()
    }
    pub fn parallelogram(theta: f64, r: f64) -> Result<Self> {
        FamilyParam::Parallelogram { theta, r }.validated()
    }
    pub fn ellipse(r: f64) -> Result<Self> {
        FamilyParam::Ellipse { r }.validated()
    }
    pub fn regular_polygon(m: u32) -> Result<Self> {
        FamilyParam::RegularPolygon { m }.validated()
    }

    fn validated(self) -> Result<Self> {
        self.validate().map(|_| self)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilyParam::RightTriangle { theta } => angle_in(theta, FRAC_PI_2, "right triangle"),
            FamilyParam::Triangle { r, s } => {
                positive(r, "triangle")?;
                positive(s, "triangle")?;
                if r <= 1.0 && s <= 1.0 && r + s > 1.0 {
                    Ok(())
                } else {
                    Err(Error::domain(format!(
                        "triangle: ({r}, {s}) is not triangle-friendly (need r <= 1, s <= 1, r + s > 1)"
                    )))
                }
            }
            FamilyParam::Rectangle { r } => positive(r, "rectangle"),
            FamilyParam::Rhombus { theta } => angle_in(theta, PI, "rhombus"),
            FamilyParam::Parallelogram { theta, r } => {
                angle_in(theta, PI, "parallelogram")?;
                positive(r, "parallelogram")
            }
            FamilyParam::Ellipse { r } => {
                if r > 0.0 && r < 1.0 {
                    Ok(())
                } else {
                    Err(Error::domain(format!("ellipse: ratio {r} outside (0, 1)")))
                }
            }
            FamilyParam::RegularPolygon { m } => {
                if m >= 3 {
                    Ok(())
                } else {
                    Err(Error::domain(format!("regular polygon: m = {m} < 3")))
                }
            }
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilyParam::RightTriangle { .. } => FamilyKind::RightTriangle,
            FamilyParam::Triangle { .. } => FamilyKind::Triangle,
            FamilyParam::Rectangle { .. } => FamilyKind::Rectangle,
            FamilyParam::Rhombus { .. } => FamilyKind::Rhombus,
            FamilyParam::Parallelogram { .. } => FamilyKind::Parallelogram,
            FamilyParam::Ellipse { .. } => FamilyKind::Ellipse,
            FamilyParam::RegularPolygon { .. } => FamilyKind::RegularPolygon,
        }
    }

    /// Parameters as `name=value` pairs joined by `;`.
    pub fn params_string(&self) -> String {
        match *self {
            FamilyParam::RightTriangle { theta } | FamilyParam::Rhombus { theta } => {
                format!("theta={theta}")
            }
            FamilyParam::Triangle { r, s } => format!("r={r};s={s}"),
            FamilyParam::Rectangle { r } | FamilyParam::Ellipse { r } => format!("r={r}"),
            FamilyParam::Parallelogram { theta, r } => format!("theta={theta};r={r}"),
            FamilyParam::RegularPolygon { m } => format!("m={m}"),
        }
    }
}

/// `∫₀^π √(1 + (r² − 1) cos² t) dt`, computed over `[0, π/2]` by symmetry.
pub fn ellipse_integral(r: f64) -> Result<f64> {
    let k = r * r - 1.0;
    let half = integrate_default(
        |t| {
            let c = cos(t);
            sqrt(1.0 + k * c * c)
        },
        0.0,
        FRAC_PI_2,
    )?;
    Ok(2.0 * half)
}

/// `ρ_m = m·tan(π/m)`.
pub fn rho(m: u32) -> f64 {
    let m = m as f64;
    m * tan(PI / m)
}

/// Closed-form fundamental measure `Π` of the family member.
pub fn fundamental_measure(p: &FamilyParam) -> Result<f64> {
    p.validate()?;
    Ok(match *p {
        FamilyParam::RightTriangle { theta } => {
            let (s, c) = sin_cos(theta);
            (1.0 + 1.0 / c) * (1.0 + 1.0 / s)
        }
        FamilyParam::Triangle { r, s } => {
            let sum = r + s + 1.0;
            powf(sum, 1.5) / sqrt((-r + s + 1.0) * (r - s + 1.0) * (r + s - 1.0))
        }
        FamilyParam::Rectangle { r } => (1.0 + r) * (1.0 + r) / r,
        FamilyParam::Rhombus { theta } => 4.0 / sin(theta),
        FamilyParam::Parallelogram { theta, r } => (1.0 + r) * (1.0 + r) / (r * sin(theta)),
        FamilyParam::Ellipse { r } => {
            let i = ellipse_integral(r)?;
            i * i / (PI * r)
        }
        FamilyParam::RegularPolygon { m } => rho(m),
    })
}

/// Semi-minor axis `a(r) = (1/π)∫₀^π √(1 + (r² − 1)cos² t) dt` of the unit
/// ellipse; it lies strictly between `2/π` and 1.
pub fn ellipse_semi_minor(r: f64) -> Result<f64> {
    FamilyParam::ellipse(r)?;
    Ok(ellipse_integral(r)? / PI)
}

/// Mean-radius quantity of the unit ellipse (numerically the same integral
/// as its semi-minor axis).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct EllipseMeanRadius {
    pub r: f64,
    pub value: f64,
}

impl EllipseMeanRadius {
    pub fn new(r: f64) -> Result<Self> {
        Ok(EllipseMeanRadius {
            r,
            value: ellipse_semi_minor(r)?,
        })
    }
}

/// Shortest diagonal of the unit rhombus with interior angle `theta`:
/// `4 csc θ · min(sin θ/2, cos θ/2)`.
pub fn rhombus_short_diagonal(theta: f64) -> Result<f64> {
    FamilyParam::rhombus(theta)?;
    let (s, c) = sin_cos(0.5 * theta);
    Ok(4.0 / sin(theta) * s.min(c))
}

fn parallelogram(base: f64, side: f64, theta: f64) -> Result<Shape> {
    let (s, c) = sin_cos(theta);
    let v = Point::new(side * c, side * s);
    Shape::polygon(&[
        Point::ORIGIN,
        Point::new(base, 0.0),
        Point::new(base + v.x, v.y),
        v,
    ])
}

/// Concrete unit shape of the family member, in a canonical pose.
pub fn build_unit_shape(p: &FamilyParam) -> Result<Shape> {
    p.validate()?;
    match *p {
        FamilyParam::RightTriangle { theta } => {
            let b = 1.0 + 1.0 / tan(theta) + 1.0 / sin(theta);
            Shape::polygon(&[
                Point::ORIGIN,
                Point::new(b, 0.0),
                Point::new(b, b * tan(theta)),
            ])
        }
        FamilyParam::Triangle { r, s } => {
            let c = 2.0 * sqrt((r + s + 1.0) / ((-r + s + 1.0) * (r - s + 1.0) * (r + s - 1.0)));
            let (a, b) = (r * c, s * c);
            let x = (b * b + c * c - a * a) / (2.0 * c);
            let y = sqrt((b * b - x * x).max(0.0));
            Shape::polygon(&[Point::ORIGIN, Point::new(c, 0.0), Point::new(x, y)])
        }
        FamilyParam::Rectangle { r } => {
            let (l, h) = (1.0 + 1.0 / r, 1.0 + r);
            Shape::polygon(&[
                Point::ORIGIN,
                Point::new(l, 0.0),
                Point::new(l, h),
                Point::new(0.0, h),
            ])
        }
        FamilyParam::Rhombus { theta } => {
            let side = 2.0 / sin(theta);
            parallelogram(side, side, theta)
        }
        FamilyParam::Parallelogram { theta, r } => {
            let b = (1.0 + r) / (r * sin(theta));
            parallelogram(b, r * b, theta)
        }
        FamilyParam::Ellipse { r } => {
            let semi_minor = ellipse_integral(r)? / PI;
            Shape::new(alloc::vec![CurvePiece::EllipticalArc {
                center: Point::ORIGIN,
                semi_axes: (semi_minor / r, semi_minor),
                rotation: 0.0,
                t_start: 0.0,
                t_end: 2.0 * PI,
            }])
        }
        FamilyParam::RegularPolygon { m } => {
            let mf = m as f64;
            let circumradius = 1.0 / cos(PI / mf);
            let vertices: Vec<Point> = (0..m)
                .map(|k| {
                    let angle = -FRAC_PI_2 - PI / mf + 2.0 * PI * k as f64 / mf;
                    let (s, c) = sin_cos(angle);
                    Point::new(circumradius * c, circumradius * s)
                })
                .collect();
            Shape::polygon(&vertices)
        }
    }
}

/// Representative members used for catalog tables.
pub fn standard_members() -> Vec<FamilyParam> {
    let golden = (1.0 + sqrt(5.0)) / 2.0;
    let mut out = alloc::vec![
        FamilyParam::RightTriangle { theta: PI / 4.0 },
        FamilyParam::RightTriangle { theta: PI / 6.0 },
        FamilyParam::Triangle { r: 1.0, s: 1.0 },
        FamilyParam::Triangle { r: 0.8, s: 0.6 },
        FamilyParam::Rectangle { r: 1.0 },
        FamilyParam::Rectangle { r: golden },
        FamilyParam::Rhombus { theta: FRAC_PI_2 },
        FamilyParam::Rhombus { theta: PI / 6.0 },
        FamilyParam::Parallelogram {
            theta: PI / 4.0,
            r: 1.0
        },
        FamilyParam::Parallelogram {
            theta: FRAC_PI_2,
            r: 2.0
        },
        FamilyParam::Ellipse { r: 0.5 },
        FamilyParam::Ellipse { r: 0.999 },
    ];
    out.extend((3..=12).map(|m| FamilyParam::RegularPolygon { m }));
    out
}

pub const CONCILIATION_TOLERANCE: f64 = 1e-10;
const CONCILIATION_GRID: usize = 2000;

fn grid_check(
    claim: &str,
    n: usize,
    sample: impl Fn(usize) -> (String, Result<f64>, Result<f64>),
) -> VerificationReport {
    let mut report = VerificationReport::new(claim);
    for k in 0..n {
        let (label, lhs, rhs) = sample(k);
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => {
                let gap = rel_diff(a, b);
                report.record(gap, gap <= CONCILIATION_TOLERANCE, || {
                    format!("{label}: {a} vs {b}")
                });
            }
            (Err(e), _) | (_, Err(e)) => {
                report.record(f64::INFINITY, false, || format!("{label}: {e}"))
            }
        }
    }
    report
}

/// Dense-grid agreement of the family formulas where families overlap:
/// right triangles inside general triangles (hypotenuse as the longest side,
/// `(r, s) = (sin θ, cos θ)`), rectangles and rhombi inside parallelograms.
pub fn conciliation_checks() -> Vec<VerificationReport> {
    let n = CONCILIATION_GRID;
    let right = grid_check("conciliation.right_triangle_vs_triangle", n, |k| {
        let theta = (k as f64 + 0.5) / n as f64 * FRAC_PI_2;
        let (s, c) = sin_cos(theta);
        (
            format!("theta={theta}"),
            fundamental_measure(&FamilyParam::Triangle { r: s, s: c }),
            fundamental_measure(&FamilyParam::RightTriangle { theta }),
        )
    });
    let rect = grid_check("conciliation.parallelogram_vs_rectangle", n, |k| {
        let r = powf(10.0, -3.0 + 6.0 * k as f64 / (n - 1) as f64);
        (
            format!("r={r}"),
            fundamental_measure(&FamilyParam::Parallelogram {
                theta: FRAC_PI_2,
                r,
            }),
            fundamental_measure(&FamilyParam::Rectangle { r }),
        )
    });
    let rhombus = grid_check("conciliation.parallelogram_vs_rhombus", n, |k| {
        let theta = (k as f64 + 0.5) / n as f64 * PI;
        (
            format!("theta={theta}"),
            fundamental_measure(&FamilyParam::Parallelogram { theta, r: 1.0 }),
            fundamental_measure(&FamilyParam::Rhombus { theta }),
        )
    });
    alloc::vec![right, rect, rhombus]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        rel_diff(a, b)
    }

    #[test]
    fn golden_values() {
        let sqrt2 = sqrt(2.0);
        let sqrt3 = sqrt(3.0);
        let cases = [
            (
                FamilyParam::RightTriangle { theta: PI / 4.0 },
                3.0 + 2.0 * sqrt2,
            ),
            (FamilyParam::Triangle { r: 1.0, s: 1.0 }, 3.0 * sqrt3),
            (FamilyParam::Rectangle { r: 1.0 }, 4.0),
            (FamilyParam::Rhombus { theta: FRAC_PI_2 }, 4.0),
            (FamilyParam::RegularPolygon { m: 4 }, 4.0),
            (FamilyParam::RegularPolygon { m: 6 }, 2.0 * sqrt3),
        ];
        for (p, want) in cases {
            let got = fundamental_measure(&p).unwrap();
            assert!(rel(got, want) <= 1e-12, "{p:?}: {got} vs {want}");
        }
    }

    #[test]
    fn golden_rectangle_is_phi_cubed() {
        let phi = (1.0 + sqrt(5.0)) / 2.0;
        let got = fundamental_measure(&FamilyParam::Rectangle { r: phi }).unwrap();
        assert!(rel(got, phi * phi * phi) <= 1e-14);
        assert!((got - 4.236_068).abs() < 1e-6);
    }

    #[test]
    fn builders_agree_with_closed_forms() {
        for p in standard_members() {
            let shape = build_unit_shape(&p).unwrap();
            let pi = fundamental_measure(&p).unwrap();
            let a = shape.area().unwrap();
            let s = shape.semiperimeter().unwrap();
            assert!(
                rel(a, pi) <= 1e-8 && rel(s, pi) <= 1e-8,
                "{p:?}: A={a} S={s} Π={pi}"
            );
        }
    }

    #[test]
    fn right_isosceles_unit_triangle_legs() {
        let shape = build_unit_shape(&FamilyParam::RightTriangle { theta: PI / 4.0 }).unwrap();
        let v = shape.polygon_vertices().unwrap();
        let leg = 2.0 + sqrt(2.0);
        assert!((v[1].x - leg).abs() < 1e-12);
        assert!((v[2].y - leg).abs() < 1e-12);
    }

    #[test]
    fn domain_errors() {
        assert!(FamilyParam::triangle(0.5, 0.5).is_err());
        assert!(FamilyParam::triangle(1.2, 0.5).is_err());
        assert!(FamilyParam::right_triangle(FRAC_PI_2).is_err());
        assert!(FamilyParam::rhombus(0.0).is_err());
        assert!(FamilyParam::ellipse(1.0).is_err());
        assert!(FamilyParam::rectangle(-1.0).is_err());
        assert!(FamilyParam::regular_polygon(2).is_err());
        assert!(fundamental_measure(&FamilyParam::Triangle { r: 0.4, s: 0.6 }).is_err());
        assert!(ellipse_semi_minor(0.0).is_err());
        assert!(rhombus_short_diagonal(PI).is_err());
    }

    #[test]
    fn short_diagonal_examples() {
        assert!(rel(rhombus_short_diagonal(FRAC_PI_2).unwrap(), 2.0 * sqrt(2.0)) < 1e-15);
        assert!(rel(rhombus_short_diagonal(PI / 3.0).unwrap(), 4.0 / sqrt(3.0)) < 1e-15);
        assert!((rhombus_short_diagonal(1e-6).unwrap() - 2.0).abs() < 1e-9);
        let t = 0.7;
        assert!(
            rel(
                rhombus_short_diagonal(t).unwrap(),
                rhombus_short_diagonal(PI - t).unwrap()
            ) < 1e-14
        );
    }

    #[test]
    fn short_diagonal_matches_built_rhombus() {
        let theta = PI / 3.0;
        let v = build_unit_shape(&FamilyParam::Rhombus { theta })
            .unwrap()
            .polygon_vertices()
            .unwrap();
        let d1 = v[0].distance(v[2]);
        let d2 = v[1].distance(v[3]);
        assert!(rel(d1.min(d2), rhombus_short_diagonal(theta).unwrap()) < 1e-14);
    }

    #[test]
    fn conciliation_passes() {
        for report in conciliation_checks() {
            assert!(report.pass, "{report:?}");
            assert_eq!(report.instances, CONCILIATION_GRID);
        }
        let pp = fundamental_measure(&FamilyParam::Parallelogram {
            theta: FRAC_PI_2,
            r: 2.0,
        })
        .unwrap();
        assert_eq!(pp, 4.5);
        let pq = fundamental_measure(&FamilyParam::Parallelogram {
            theta: PI / 4.0,
            r: 1.0,
        })
        .unwrap();
        assert!(rel(pq, 4.0 * sqrt(2.0)) < 1e-14);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in FamilyKind::ALL {
            assert_eq!(FamilyKind::from_name(k.name()), Some(k));
        }
        assert_eq!(
            FamilyKind::from_name("right-triangle"),
            Some(FamilyKind::RightTriangle)
        );
        assert_eq!(FamilyKind::from_name("hexagon"), None);
    }
}
