//! Seeded verification suites, as run by `unit-shapes verify`.

use unit_shapes_core::catalog::{build_unit_shape, conciliation_checks};
use unit_shapes_core::solids::table_check;
use unit_shapes_core::verify::{VerificationReport, Verifier, DEFAULT_TOLERANCE};
use unit_shapes_core::{unitize, FamilyParam, Result, Shape};

use crate::sampling::Sampler;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Isoperimetric,
    UnitFloor,
    ScaleEquivalence,
    Mgon,
    BlobPythagoras,
    RationalCircle,
    Conciliation,
    Platonic,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Isoperimetric,
        Suite::UnitFloor,
        Suite::ScaleEquivalence,
        Suite::Mgon,
        Suite::BlobPythagoras,
        Suite::RationalCircle,
        Suite::Conciliation,
        Suite::Platonic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Isoperimetric => "isoperimetric",
            Suite::UnitFloor => "unit-floor",
            Suite::ScaleEquivalence => "scale-equivalence",
            Suite::Mgon => "mgon",
            Suite::BlobPythagoras => "blob-pythagoras",
            Suite::RationalCircle => "rational-circle",
            Suite::Conciliation => "conciliation",
            Suite::Platonic => "platonic",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides the per-suite sample counts when set.
    pub samples: Option<usize>,
    pub tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: None,
            tol: DEFAULT_TOLERANCE,
        }
    }
}

impl SuiteConfig {
    fn count(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

/// Random catalog shapes under random similarities, random base shapes,
/// and one circle.
fn mixed_samples(sampler: &mut Sampler, n: usize) -> Vec<Shape> {
    let mut shapes = Vec::with_capacity(n + 1);
    shapes.push(
        Shape::circle(unit_shapes_core::Point::new(0.3, -0.7), 2.5).expect("positive radius"),
    );
    for i in 0..n {
        shapes.push(if i % 2 == 0 {
            sampler.catalog_shape().1
        } else {
            sampler.base_shape()
        });
    }
    shapes
}

fn merged(claim: &str, parts: impl IntoIterator<Item = VerificationReport>) -> VerificationReport {
    let mut report = VerificationReport::new(claim);
    for part in parts {
        report.merge(part);
    }
    report
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let verifier = Verifier::new(cfg.tol);
    let mut sampler = Sampler::new(cfg.seed);
    Ok(match suite {
        Suite::Isoperimetric => {
            let shapes = mixed_samples(&mut sampler, cfg.count(200));
            let parts = shapes
                .iter()
                .map(|s| verifier.isoperimetric(s))
                .collect::<Result<Vec<_>>>()?;
            vec![merged("isoperimetric", parts)]
        }
        Suite::UnitFloor => {
            let shapes = mixed_samples(&mut sampler, cfg.count(200));
            let parts = shapes
                .iter()
                .map(|s| unitize(s).map(|u| verifier.unit_floor(&u)))
                .collect::<Result<Vec<_>>>()?;
            vec![merged("unit_floor", parts)]
        }
        Suite::ScaleEquivalence => {
            let mut parts = Vec::new();
            for _ in 0..cfg.count(40) {
                let unit = build_unit_shape(&sampler.family_param())?;
                let pi = unit.area()?;
                let kappas: Vec<f64> = std::iter::once(1.0)
                    .chain((0..5).map(|_| sampler.log_uniform(0.01, 100.0)))
                    .collect();
                for rho in [pi, 0.5 * pi, 0.999 * pi, 1.001 * pi, 2.0 * pi, 3.0, 3.2] {
                    parts.push(verifier.scale_equivalence(&unit, rho, &kappas)?);
                }
            }
            vec![merged("scale_equivalence", parts)]
        }
        Suite::Mgon => {
            let n = cfg.count(500);
            (3u32..=6)
                .map(|m| {
                    let regular = build_unit_shape(&FamilyParam::RegularPolygon { m })?;
                    let mut samples = vec![
                        regular.scaled(3.0)?,
                        regular.apply_similarity(&sampler.similarity()),
                        regular,
                    ];
                    samples.extend((0..n).map(|_| sampler.simple_polygon(m as usize)));
                    verifier.mgon_bound(m, &samples)
                })
                .collect::<Result<Vec<_>>>()?
        }
        Suite::BlobPythagoras => {
            let mut parts = Vec::new();
            for _ in 0..cfg.count(20) {
                let base = sampler.base_shape();
                let triple = sampler.triple();
                parts.push(verifier.blob_pythagoras(&base, triple)?);
            }
            vec![merged("blob_pythagoras", parts)]
        }
        Suite::RationalCircle => vec![verifier.rational_circle()?],
        Suite::Conciliation => conciliation_checks(),
        Suite::Platonic => vec![table_check()],
    })
}

pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for suite in Suite::ALL {
        out.extend(run_suite(suite, cfg)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_small() {
        let cfg = SuiteConfig {
            seed: 11,
            samples: Some(10),
            tol: DEFAULT_TOLERANCE,
        };
        for report in run_all(&cfg).unwrap() {
            assert!(report.pass, "{report:?}");
            assert!(report.instances > 0);
        }
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
    }
}
