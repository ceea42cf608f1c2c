//! Three-dimensional analogue for the Platonic solids: a unit solid has
//! volume equal to one third of its surface area, which happens exactly when
//! its inscribed sphere has radius 1.
//!
//! All measures come from explicit vertex models. Faces are recovered as the
//! supporting planes through vertex triples.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::{atan2, cos, rel_diff, sin, sqrt, PI};
use crate::verify::VerificationReport;

type V3 = [f64; 3];

fn sub(a: V3, b: V3) -> V3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}
fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}
fn cross(a: V3, b: V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}
fn norm(a: V3) -> f64 {
    sqrt(dot(a, a))
}
fn scale(a: V3, t: f64) -> V3 {
    [a[0] * t, a[1] * t, a[2] * t]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum PlatonicKind {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl PlatonicKind {
    pub const ALL: [PlatonicKind; 5] = [
        PlatonicKind::Tetrahedron,
        PlatonicKind::Cube,
        PlatonicKind::Octahedron,
        PlatonicKind::Dodecahedron,
        PlatonicKind::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PlatonicKind::Tetrahedron => "tetrahedron",
            PlatonicKind::Cube => "cube",
            PlatonicKind::Octahedron => "octahedron",
            PlatonicKind::Dodecahedron => "dodecahedron",
            PlatonicKind::Icosahedron => "icosahedron",
        }
    }

    pub fn from_name(name: &str) -> Option<PlatonicKind> {
        PlatonicKind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Closed-form fundamental measure of the unit solid, written with
    /// `φ = 2cos(π/5)` and `ξ = 2sin(π/5)`.
    pub fn table_value(self) -> f64 {
        let phi = 2.0 * cos(PI / 5.0);
        let xi = 2.0 * sin(PI / 5.0);
        let sqrt3 = sqrt(3.0);
        match self {
            PlatonicKind::Tetrahedron => 8.0 * sqrt3,
            PlatonicKind::Cube => 8.0,
            PlatonicKind::Octahedron => 4.0 * sqrt3,
            PlatonicKind::Dodecahedron => 20.0 * xi / (phi * phi * phi),
            PlatonicKind::Icosahedron => 20.0 * sqrt3 / (phi * phi * phi * phi),
        }
    }

    /// Table entry as printed: `8√3`, `20ξ/φ³`, ...
    pub fn table_symbol(self) -> &'static str {
        match self {
            PlatonicKind::Tetrahedron => "8√3",
            PlatonicKind::Cube => "8",
            PlatonicKind::Octahedron => "4√3",
            PlatonicKind::Dodecahedron => "20ξ/φ³",
            PlatonicKind::Icosahedron => "20√3/φ⁴",
        }
    }

    /// Standard coordinates and their edge length.
    fn model(self) -> (Vec<V3>, f64) {
        let g = (1.0 + sqrt(5.0)) / 2.0;
        let ig = 1.0 / g;
        let signs = [1.0, -1.0];
        let mut v = Vec::new();
        match self {
            PlatonicKind::Tetrahedron => {
                v.extend([
                    [1.0, 1.0, 1.0],
                    [1.0, -1.0, -1.0],
                    [-1.0, 1.0, -1.0],
                    [-1.0, -1.0, 1.0],
                ]);
                (v, 2.0 * sqrt(2.0))
            }
            PlatonicKind::Cube => {
                for a in signs {
                    for b in signs {
                        for c in signs {
                            v.push([a, b, c]);
                        }
                    }
                }
                (v, 2.0)
            }
            PlatonicKind::Octahedron => {
                for s in signs {
                    v.extend([[s, 0.0, 0.0], [0.0, s, 0.0], [0.0, 0.0, s]]);
                }
                (v, sqrt(2.0))
            }
            PlatonicKind::Dodecahedron => {
                for a in signs {
                    for b in signs {
                        for c in signs {
                            v.push([a, b, c]);
                        }
                        v.extend([
                            [0.0, a * ig, b * g],
                            [a * ig, b * g, 0.0],
                            [a * g, 0.0, b * ig],
                        ]);
                    }
                }
                (v, 2.0 * ig)
            }
            PlatonicKind::Icosahedron => {
                for a in signs {
                    for b in signs {
                        v.extend([[0.0, a, b * g], [a, b * g, 0.0], [a * g, 0.0, b]]);
                    }
                }
                (v, 2.0)
            }
        }
    }
}

impl fmt::Display for PlatonicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Convex polyhedron given by vertices and outward-ordered faces.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyhedron {
    pub vertices: Vec<V3>,
    pub faces: Vec<Vec<usize>>,
}

impl Polyhedron {
    /// Recovers the faces of the convex hull of `vertices`, assuming every
    /// vertex is extreme (true for the Platonic models).
    pub fn convex(vertices: Vec<V3>) -> Result<Self> {
        let n = vertices.len();
        let extent = vertices.iter().map(|v| norm(*v)).fold(0.0, f64::max);
        let tol = 1e-9 * extent.max(1.0);
        let centroid = scale(
            vertices.iter().fold([0.0; 3], |acc, v| {
                [acc[0] + v[0], acc[1] + v[1], acc[2] + v[2]]
            }),
            1.0 / n as f64,
        );
        let mut faces: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let normal =
                        cross(sub(vertices[j], vertices[i]), sub(vertices[k], vertices[i]));
                    let len = norm(normal);
                    if len <= tol * extent {
                        continue;
                    }
                    let mut unit = scale(normal, 1.0 / len);
                    if dot(unit, sub(centroid, vertices[i])) > 0.0 {
                        unit = scale(unit, -1.0);
                    }
                    let offset = dot(unit, vertices[i]);
                    if vertices.iter().any(|v| dot(unit, *v) - offset > tol) {
                        continue;
                    }
                    let mut on: Vec<usize> = (0..n)
                        .filter(|&q| (dot(unit, vertices[q]) - offset).abs() <= tol)
                        .collect();
                    if on[0] != i || on[1] != j || on[2] != k {
                        continue;
                    }
                    sort_around(&vertices, &mut on, unit);
                    faces.push(on);
                }
            }
        }
        if faces.len() < 4 {
            return Err(Error::domain("vertices do not span a solid"));
        }
        Ok(Polyhedron { vertices, faces })
    }

    pub fn centroid(&self) -> V3 {
        let inv = 1.0 / self.vertices.len() as f64;
        self.vertices.iter().fold([0.0; 3], |acc, v| {
            [
                acc[0] + v[0] * inv,
                acc[1] + v[1] * inv,
                acc[2] + v[2] * inv,
            ]
        })
    }

    /// Surface area (fan triangulation of each face), volume (tetrahedra
    /// from the vertex centroid) and inradius (least centroid–face distance).
    pub fn measures(&self) -> SolidMeasures {
        let c = self.centroid();
        let mut area = 0.0;
        let mut volume = 0.0;
        let mut inradius = f64::INFINITY;
        for face in &self.faces {
            let p0 = self.vertices[face[0]];
            let mut normal = [0.0; 3];
            for w in face[1..].windows(2) {
                let tri = cross(sub(self.vertices[w[0]], p0), sub(self.vertices[w[1]], p0));
                area += 0.5 * norm(tri);
                volume += dot(sub(p0, c), tri).abs() / 6.0;
                normal = [normal[0] + tri[0], normal[1] + tri[1], normal[2] + tri[2]];
            }
            inradius = inradius.min(dot(sub(p0, c), normal).abs() / norm(normal));
        }
        SolidMeasures {
            volume,
            surface_area: area,
            inradius,
            fundamental_measure: area * area * area / (27.0 * volume * volume),
        }
    }
}

fn sort_around(vertices: &[V3], idx: &mut [usize], normal: V3) {
    let inv = 1.0 / idx.len() as f64;
    let center = idx.iter().fold([0.0; 3], |acc, &i| {
        let v = vertices[i];
        [
            acc[0] + v[0] * inv,
            acc[1] + v[1] * inv,
            acc[2] + v[2] * inv,
        ]
    });
    let u = sub(vertices[idx[0]], center);
    let w = cross(normal, u);
    let angle = |i: usize| {
        let d = sub(vertices[i], center);
        atan2(dot(d, w), dot(d, u))
    };
    idx.sort_by(|&a, &b| angle(a).total_cmp(&angle(b)));
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct SolidMeasures {
    pub volume: f64,
    pub surface_area: f64,
    pub inradius: f64,
    /// `SA³ / (27 V²)`: the volume of the similar unit solid.
    pub fundamental_measure: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct PlatonicSolid {
    pub kind: PlatonicKind,
    pub edge_length: f64,
}

impl PlatonicSolid {
    pub fn new(kind: PlatonicKind, edge_length: f64) -> Result<Self> {
        if edge_length > 0.0 && edge_length.is_finite() {
            Ok(PlatonicSolid { kind, edge_length })
        } else {
            Err(Error::domain(format!(
                "edge length {edge_length} must be positive"
            )))
        }
    }

    pub fn polyhedron(&self) -> Polyhedron {
        let (vertices, model_edge) = self.kind.model();
        let t = self.edge_length / model_edge;
        let vertices = vertices.into_iter().map(|v| scale(v, t)).collect();
        // The models are valid convex solids, so face recovery cannot fail.
        Polyhedron::convex(vertices).expect("Platonic vertex model")
    }

    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        PlatonicSolid::new(self.kind, self.edge_length * lambda)
    }
}

pub fn measures(s: &PlatonicSolid) -> SolidMeasures {
    s.polyhedron().measures()
}

/// Rescales by `SA / (3V)` so that volume is a third of surface area.
pub fn unitize_solid(s: &PlatonicSolid) -> PlatonicSolid {
    let m = measures(s);
    PlatonicSolid {
        kind: s.kind,
        edge_length: s.edge_length * m.surface_area / (3.0 * m.volume),
    }
}

pub const TABLE_TOLERANCE: f64 = 1e-9;

/// Unit-solid fundamental measures from the vertex models against the
/// closed forms; also checks `V = SA/3` and unit inradius.
pub fn table_check() -> VerificationReport {
    let mut report = VerificationReport::new("platonic_table");
    for kind in PlatonicKind::ALL {
        let unit = unitize_solid(&PlatonicSolid {
            kind,
            edge_length: 1.0,
        });
        let m = measures(&unit);
        let want = kind.table_value();
        let residual = rel_diff(m.volume, want)
            .max(rel_diff(m.fundamental_measure, want))
            .max(rel_diff(m.volume, m.surface_area / 3.0))
            .max((m.inradius - 1.0).abs());
        report.record(-residual, residual <= TABLE_TOLERANCE, || {
            format!(
                "{kind}: volume {} vs {} (residual {residual:e})",
                m.volume, want
            )
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        rel_diff(a, b) <= tol
    }

    #[test]
    fn face_counts() {
        let counts = [
            (PlatonicKind::Tetrahedron, 4, 3),
            (PlatonicKind::Cube, 6, 4),
            (PlatonicKind::Octahedron, 8, 3),
            (PlatonicKind::Dodecahedron, 12, 5),
            (PlatonicKind::Icosahedron, 20, 3),
        ];
        for (kind, faces, sides) in counts {
            let p = PlatonicSolid::new(kind, 1.0).unwrap().polyhedron();
            assert_eq!(p.faces.len(), faces, "{kind}");
            assert!(p.faces.iter().all(|f| f.len() == sides));
            for f in &p.faces {
                for w in 0..sides {
                    let d = norm(sub(p.vertices[f[w]], p.vertices[f[(w + 1) % sides]]));
                    assert!(close(d, 1.0, 1e-12), "{kind}: edge {d}");
                }
            }
        }
    }

    #[test]
    fn cube_edge_two() {
        let m = measures(&PlatonicSolid::new(PlatonicKind::Cube, 2.0).unwrap());
        assert!(close(m.volume, 8.0, 1e-14) && close(m.surface_area, 24.0, 1e-14));
        assert!(close(m.inradius, 1.0, 1e-14));
    }

    #[test]
    fn unitize_cube_edge_five() {
        let u = unitize_solid(&PlatonicSolid::new(PlatonicKind::Cube, 5.0).unwrap());
        assert!(close(u.edge_length, 2.0, 1e-14));
        let again = unitize_solid(&u);
        assert!(close(again.edge_length, u.edge_length, 1e-12));
    }

    #[test]
    fn unit_solids_match_table() {
        let r = table_check();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.instances, 5);
        let icosa = unitize_solid(&PlatonicSolid::new(PlatonicKind::Icosahedron, 3.7).unwrap());
        assert!((measures(&icosa).volume - 5.054).abs() < 1e-3);
        assert!((PlatonicKind::Dodecahedron.table_value() - 5.5503).abs() < 1e-4);
    }

    #[test]
    fn table_order_decreasing() {
        let values: Vec<f64> = PlatonicKind::ALL.iter().map(|k| k.table_value()).collect();
        assert!(values.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn rejects_bad_edge() {
        assert!(PlatonicSolid::new(PlatonicKind::Cube, 0.0).is_err());
        assert!(PlatonicSolid::new(PlatonicKind::Cube, f64::NAN).is_err());
        assert_eq!(PlatonicKind::from_name("cube"), Some(PlatonicKind::Cube));
    }
}
