//! Tong inradius, canonical unit shapes and fundamental measures.
//!
//! For a shape `C` with area `A` and semiperimeter `S`, scaling by
//! `ϋ = S/A` gives the unique similar shape whose area equals its
//! semiperimeter. That common value `Π = S²/A` depends only on the
//! similarity class.

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::{rel_close, rel_diff};
use crate::shape::Shape;

/// Tolerance for `|A − S| / S` on shapes treated as unit shapes.
pub const UNIT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct UnitizationResult {
    /// `ϋ = S/A` of the input, in reciprocal length units.
    pub tong_inradius_reciprocal: f64,
    /// Common value of area and semiperimeter of the unit shape.
    pub fundamental_measure: f64,
    pub unit_shape: Shape,
}

/// `A/S`, the calculus-friendly indexing parameter of the similarity class.
pub fn tong_inradius(c: &Shape) -> Result<f64> {
    Ok(c.area()? / c.semiperimeter()?)
}

/// Canonical unit shape `L_ϋ(c)` and its fundamental measure.
pub fn unitize(c: &Shape) -> Result<UnitizationResult> {
    let area = c.area()?;
    let semi = c.semiperimeter()?;
    let upsilon = semi / area;
    Ok(UnitizationResult {
        tong_inradius_reciprocal: upsilon,
        fundamental_measure: upsilon * semi,
        unit_shape: c.scaled(upsilon)?,
    })
}

/// Relative unit-property defect `|A − S| / S`.
pub fn unit_defect(c: &Shape) -> Result<f64> {
    let a = c.area()?;
    let s = c.semiperimeter()?;
    Ok((a - s).abs() / s)
}

/// Unitizing a unit shape again must scale by 1 and keep `Π`.
pub fn idempotence_check(c: &Shape) -> bool {
    let run = || -> Result<bool> {
        let first = unitize(c)?;
        let second = unitize(&first.unit_shape)?;
        Ok((second.tong_inradius_reciprocal - 1.0).abs() <= 1e-9
            && rel_close(second.fundamental_measure, first.fundamental_measure, 1e-9))
    };
    run().unwrap_or(false)
}

/// Congruence tested through invariant measures: area, semiperimeter and
/// the sorted edge-length multiset must agree to `tol` (relative).
pub fn congruent_by_measures(a: &Shape, b: &Shape, tol: f64) -> Result<bool> {
    if !rel_close(a.area()?, b.area()?, tol)
        || !rel_close(a.semiperimeter()?, b.semiperimeter()?, tol)
    {
        return Ok(false);
    }
    let ea = a.edge_length_signature()?;
    let eb = b.edge_length_signature()?;
    Ok(ea.len() == eb.len() && ea.iter().zip(&eb).all(|(x, y)| rel_close(*x, *y, tol)))
}

/// A unit shape together with the scale indices at which to probe its
/// standard family `λ ↦ L_λ(U)`.
#[derive(Debug, Clone)]
pub struct IndexedFamilyProbe {
    base: Shape,
    lambdas: Vec<f64>,
}

impl IndexedFamilyProbe {
    pub fn new(base: Shape, lambdas: Vec<f64>) -> Result<Self> {
        let area = base.area()?;
        let semiperimeter = base.semiperimeter()?;
        if (area - semiperimeter).abs() > UNIT_TOLERANCE * semiperimeter {
            return Err(Error::NotUnitShape {
                area,
                semiperimeter,
            });
        }
        if lambdas.iter().any(|l| !(*l > 0.0 && l.is_finite())) {
            return Err(Error::domain("family indices must be positive and finite"));
        }
        Ok(IndexedFamilyProbe { base, lambdas })
    }

    pub fn base(&self) -> &Shape {
        &self.base
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexSample {
    pub lambda: f64,
    pub area: f64,
    pub semiperimeter: f64,
    /// Central difference `[A(λ+h) − A(λ−h)] / 2h` with `h = 1e-5·λ`.
    pub area_derivative: f64,
    /// Relative gap between the difference quotient and `2S(λ)`.
    pub derivative_error: f64,
    /// Relative gap in `ΔA = 2·[(λ + (λ+dλ))/2]·dλ·Π` with `dλ = λ/10`.
    pub increment_error: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalculusFriendlyReport {
    pub fundamental_measure: f64,
    pub samples: Vec<IndexSample>,
    /// Indices at which either identity failed (or measurement failed).
    pub failures: Vec<f64>,
}

impl CalculusFriendlyReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const DERIVATIVE_TOLERANCE: f64 = 1e-5;
pub const INCREMENT_TOLERANCE: f64 = 1e-12;

/// Checks `A′(λ) = 2S(λ)` numerically and the exact strip identity for the
/// area increment at every index of the probe.
pub fn check_calculus_friendly(probe: &IndexedFamilyProbe) -> CalculusFriendlyReport {
    let pi_u = probe.base.area().unwrap_or(f64::NAN);
    let mut samples = Vec::new();
    let mut failures = Vec::new();
    for &lambda in &probe.lambdas {
        let measured = (|| -> Result<IndexSample> {
            let h = 1e-5 * lambda;
            let at = |l: f64| probe.base.scaled(l).and_then(|s| s.area());
            let scaled = probe.base.scaled(lambda)?;
            let area = scaled.area()?;
            let semiperimeter = scaled.semiperimeter()?;
            let area_derivative = (at(lambda + h)? - at(lambda - h)?) / (2.0 * h);
            let derivative_error = rel_diff(area_derivative, 2.0 * semiperimeter);

            let d = 0.1 * lambda;
            let delta = (lambda + d) * (lambda + d) * pi_u - lambda * lambda * pi_u;
            let strip = 2.0 * ((lambda + (lambda + d)) / 2.0) * d * pi_u;
            let increment_error = rel_diff(delta, strip);
            Ok(IndexSample {
                lambda,
                area,
                semiperimeter,
                area_derivative,
                derivative_error,
                increment_error,
                pass: derivative_error <= DERIVATIVE_TOLERANCE
                    && increment_error <= INCREMENT_TOLERANCE,
            })
        })();
        match measured {
            Ok(sample) => {
                if !sample.pass {
                    failures.push(lambda);
                }
                samples.push(sample);
            }
            Err(_) => failures.push(lambda),
        }
    }
    CalculusFriendlyReport {
        fundamental_measure: pi_u,
        samples,
        failures,
    }
}
