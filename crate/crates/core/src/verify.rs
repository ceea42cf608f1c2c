//! Numerical checks of the isoperimetric bounds, the blob Pythagorean
//! relation and the rational circle parameterization.
//!
//! Every check returns a [`VerificationReport`]. `worst_slack` is the
//! smallest margin seen: for inequalities the distance to violation, for
//! identities the negated relative residual.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::catalog::rho;
use crate::curve::CurvePiece;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::math::{rel_diff, PI};
use crate::quadrature::QuadConfig;
use crate::shape::Shape;
use crate::unitizer::{UnitizationResult, UNIT_TOLERANCE};

/// Stored counterexamples are capped; `failed` keeps the full count.
const MAX_COUNTEREXAMPLES: usize = 32;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct VerificationReport {
    pub claim: String,
    pub instances: usize,
    pub worst_slack: f64,
    pub pass: bool,
    pub failed: usize,
    /// Instances where a bound was attained (within tolerance).
    pub equality_cases: usize,
    pub counterexamples: Vec<String>,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>) -> Self {
        VerificationReport {
            claim: claim.into(),
            instances: 0,
            worst_slack: f64::INFINITY,
            pass: true,
            failed: 0,
            equality_cases: 0,
            counterexamples: Vec::new(),
        }
    }

    /// Records one instance. `describe` runs only on failure.
    pub fn record(&mut self, slack: f64, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if slack < self.worst_slack || slack.is_nan() {
            self.worst_slack = slack;
        }
        if !ok {
            self.pass = false;
            self.failed += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(describe());
            }
        }
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.instances += other.instances;
        if other.worst_slack < self.worst_slack || other.worst_slack.is_nan() {
            self.worst_slack = other.worst_slack;
        }
        self.pass &= other.pass;
        self.failed += other.failed;
        self.equality_cases += other.equality_cases;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
    }
}

/// Whether the closed polygon has equal sides and all vertices equidistant
/// from the vertex centroid, both to `tol` relative.
pub fn is_regular_polygon(vertices: &[Point], tol: f64) -> bool {
    let n = vertices.len();
    if n < 3 {
        return false;
    }
    let inv = 1.0 / n as f64;
    let centroid = vertices.iter().fold(Point::ORIGIN, |acc, p| acc + *p * inv);
    let r0 = vertices[0].distance(centroid);
    let s0 = vertices[0].distance(vertices[1]);
    (0..n).all(|i| {
        rel_diff(vertices[i].distance(centroid), r0) <= tol
            && rel_diff(vertices[i].distance(vertices[(i + 1) % n]), s0) <= tol
    })
}

/// Checks with a shared relative tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verifier {
    pub tol: f64,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier {
            tol: DEFAULT_TOLERANCE,
        }
    }
}

impl Verifier {
    pub fn new(tol: f64) -> Self {
        Verifier { tol }
    }

    /// `π·A ≤ S²`, with equality allowed only for circles. Slack is `S² − πA`.
    pub fn isoperimetric(&self, c: &Shape) -> Result<VerificationReport> {
        let a = c.area()?;
        let s = c.semiperimeter()?;
        let mut report = VerificationReport::new("isoperimetric");
        let slack = s * s - PI * a;
        let band = self.tol * s * s;
        let equality = slack.abs() <= band;
        let ok = slack >= -band && (!equality || c.is_circle());
        if equality {
            report.equality_cases += 1;
        }
        report.record(slack, ok, || {
            if slack < -band {
                format!("pi*A = {} exceeds S^2 = {}", PI * a, s * s)
            } else {
                format!("equality (slack {slack:e}) attained by a non-circle")
            }
        });
        Ok(report)
    }

    /// `Π ≥ π`, with equality allowed only when the unit shape is a circle.
    pub fn unit_floor(&self, u: &UnitizationResult) -> VerificationReport {
        let pi_u = u.fundamental_measure;
        let mut report = VerificationReport::new("unit_floor");
        let slack = pi_u - PI;
        let band = self.tol * PI;
        let equality = slack.abs() <= band;
        let ok = slack >= -band && (!equality || u.unit_shape.is_circle());
        if equality {
            report.equality_cases += 1;
        }
        report.record(slack, ok, || {
            if slack < -band {
                format!("fundamental measure {pi_u} below pi")
            } else {
                format!("fundamental measure {pi_u} equals pi for a non-circle")
            }
        });
        report
    }

    /// For a unit shape `u`: `ρ ≤ Π_U` holds exactly when
    /// `ρ·A(L_κ u) ≤ S(L_κ u)²`, checked at every `κ`.
    pub fn scale_equivalence(
        &self,
        u: &Shape,
        rho: f64,
        kappas: &[f64],
    ) -> Result<VerificationReport> {
        if !(rho > 0.0 && rho.is_finite()) {
            return Err(Error::domain(format!("rho = {rho} must be positive")));
        }
        let area = u.area()?;
        let semi = u.semiperimeter()?;
        if rel_diff(area, semi) > UNIT_TOLERANCE {
            return Err(Error::NotUnitShape {
                area,
                semiperimeter: semi,
            });
        }
        let holds = rho <= area * (1.0 + self.tol);
        let mut report = VerificationReport::new("scale_equivalence");
        for &kappa in kappas {
            let scaled = u.scaled(kappa)?;
            let a = scaled.area()?;
            let s = scaled.semiperimeter()?;
            let slack = s * s - rho * a;
            let scaled_holds = slack >= -self.tol * s * s;
            if slack.abs() <= self.tol * s * s {
                report.equality_cases += 1;
            }
            report.record(slack / (s * s), holds == scaled_holds, || {
                format!("kappa={kappa}: rho <= Pi is {holds} but rho*A <= S^2 is {scaled_holds}")
            });
        }
        Ok(report)
    }

    /// `ρ_m·A ≤ S²` for simple `m`-gons, equality only for regular ones.
    pub fn mgon_bound(&self, m: u32, samples: &[Shape]) -> Result<VerificationReport> {
        if m < 3 {
            return Err(Error::domain(format!("m = {m} < 3")));
        }
        let rho_m = rho(m);
        let mut report = VerificationReport::new(format!("mgon_bound.m{m}"));
        for (i, shape) in samples.iter().enumerate() {
            let vertices = shape
                .polygon_vertices()
                .filter(|v| v.len() == m as usize)
                .ok_or_else(|| Error::domain(format!("sample {i} is not a {m}-gon")))?;
            let a = shape.area()?;
            let s = shape.semiperimeter()?;
            let slack = s * s - rho_m * a;
            let band = self.tol * s * s;
            let equality = slack.abs() <= band;
            let ok = slack >= -band && (!equality || is_regular_polygon(&vertices, 1e-6));
            if equality {
                report.equality_cases += 1;
            }
            report.record(slack / (s * s), ok, || {
                format!("sample {i}: rho_m*A = {} vs S^2 = {}", rho_m * a, s * s)
            });
        }
        Ok(report)
    }

    /// `A(L_a C) + A(L_b C) = A(L_c C)` exactly when `a² + b² = c²`.
    pub fn blob_pythagoras(
        &self,
        base: &Shape,
        triple: (f64, f64, f64),
    ) -> Result<VerificationReport> {
        let (a, b, c) = triple;
        let area = |t: f64| base.scaled(t).and_then(|s| s.area());
        let (aa, ab, ac) = (area(a)?, area(b)?, area(c)?);
        let residual = rel_diff(aa + ab, ac);
        let areas_equal = residual <= self.tol;
        let is_triple = (a * a + b * b - c * c).abs() <= 1e-12 * c * c;
        let mut report = VerificationReport::new("blob_pythagoras");
        if areas_equal {
            report.equality_cases += 1;
        }
        report.record(-residual, areas_equal == is_triple, || {
            format!("({a}, {b}, {c}): areas {aa} + {ab} vs {ac}, right triple: {is_triple}")
        });
        Ok(report)
    }

    /// The two-piece rational parameterization of the unit circle encloses
    /// area `π` with semiperimeter `π`, computed by quadrature only; the
    /// upper half closed by its diameter encloses `π/2`; and the result
    /// agrees with the trigonometric circle.
    pub fn rational_circle(&self) -> Result<VerificationReport> {
        let cfg = QuadConfig::default();
        let circle = Shape::rational_unit_circle();
        let (a, s) = circle.measures_by_quadrature(&cfg)?;
        let upper = circle.pieces()[0].clone();
        let half = Shape::new(alloc::vec![
            upper,
            CurvePiece::line(Point::new(1.0, 0.0), Point::new(-1.0, 0.0)),
        ])?;
        let (half_area, _) = half.measures_by_quadrature(&cfg)?;
        let reference = Shape::circle(Point::ORIGIN, 1.0)?;
        let (ra, rs) = (reference.area()?, reference.semiperimeter()?);

        let mut report = VerificationReport::new("rational_circle");
        let checks = [
            ("area", a, PI, self.tol),
            ("semiperimeter", s, PI, self.tol),
            ("half-disk area", half_area, PI / 2.0, self.tol),
            ("area vs trig circle", a, ra, 1e-10),
            ("semiperimeter vs trig circle", s, rs, 1e-10),
        ];
        for (what, got, want, tol) in checks {
            let residual = rel_diff(got, want);
            report.record(-residual, residual <= tol, || {
                format!("{what}: {got} vs {want}")
            });
        }
        Ok(report)
    }
}

pub fn check_isoperimetric(c: &Shape) -> Result<VerificationReport> {
    Verifier::default().isoperimetric(c)
}

pub fn check_unit_floor(u: &UnitizationResult) -> VerificationReport {
    Verifier::default().unit_floor(u)
}

pub fn check_scale_equivalence(u: &Shape, rho: f64, kappas: &[f64]) -> Result<VerificationReport> {
    Verifier::default().scale_equivalence(u, rho, kappas)
}

pub fn check_mgon_bound(m: u32, samples: &[Shape]) -> Result<VerificationReport> {
    Verifier::default().mgon_bound(m, samples)
}

pub fn check_blob_pythagoras(base: &Shape, triple: (f64, f64, f64)) -> Result<VerificationReport> {
    Verifier::default().blob_pythagoras(base, triple)
}

pub fn check_rational_circle() -> Result<VerificationReport> {
    Verifier::default().rational_circle()
}
