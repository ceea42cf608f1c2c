//! Seeded random shapes, family parameters and similarities.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unit_shapes_core::catalog::build_unit_shape;
use unit_shapes_core::shape::is_simple_polygon;
use unit_shapes_core::{FamilyKind, FamilyParam, Point, RigidMotion, Shape, Similarity};

/// Polygons below this area are rejected.
pub const MIN_POLYGON_AREA: f64 = 1e-6;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    /// Log-uniform on `[lo, hi]`.
    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.uniform(lo.ln(), hi.ln()).exp()
    }

    pub fn family_param(&mut self) -> FamilyParam {
        let kinds = FamilyKind::ALL;
        let kind = kinds[self.rng.random_range(0..kinds.len())];
        self.family_param_of(kind)
    }

    /// Parameters kept a little away from the degenerate boundaries.
    pub fn family_param_of(&mut self, kind: FamilyKind) -> FamilyParam {
        match kind {
            FamilyKind::RightTriangle => FamilyParam::RightTriangle {
                theta: self.uniform(0.02, FRAC_PI_2 - 0.02),
            },
            FamilyKind::Triangle => loop {
                let r = self.uniform(0.1, 1.0);
                let s = self.uniform(0.1, 1.0);
                if r + s > 1.02 {
                    break FamilyParam::Triangle { r, s };
                }
            },
            FamilyKind::Rectangle => FamilyParam::Rectangle {
                r: self.log_uniform(0.02, 50.0),
            },
            FamilyKind::Rhombus => FamilyParam::Rhombus {
                theta: self.uniform(0.02, PI - 0.02),
            },
            FamilyKind::Parallelogram => FamilyParam::Parallelogram {
                theta: self.uniform(0.02, PI - 0.02),
                r: self.log_uniform(0.02, 50.0),
            },
            FamilyKind::Ellipse => FamilyParam::Ellipse {
                r: self.uniform(0.02, 0.999),
            },
            FamilyKind::RegularPolygon => FamilyParam::RegularPolygon {
                m: self.rng.random_range(3..=24),
            },
        }
    }

    /// Rotation, optional reflection, translation in `[-50, 50]²` and a
    /// log-uniform scale in `[0.01, 100]`.
    pub fn similarity(&mut self) -> Similarity {
        let motion = RigidMotion::new(
            self.uniform(-PI, PI),
            self.rng.random_bool(0.5),
            (self.uniform(-50.0, 50.0), self.uniform(-50.0, 50.0)),
        );
        let scale = self.log_uniform(0.01, 100.0);
        Similarity::new(motion, scale).expect("positive finite scale")
    }

    /// A catalog unit shape moved by a random similarity, with its
    /// generating parameter.
    pub fn catalog_shape(&mut self) -> (FamilyParam, Shape) {
        let p = self.family_param();
        let s = self.similarity();
        let shape = build_unit_shape(&p).expect("sampled parameters are in range");
        (p, shape.apply_similarity(&s))
    }

    /// Simple `m`-gon: points uniform in `[-1, 1]²` sorted by angle around a
    /// random center, rejected until simple with area at least
    /// [`MIN_POLYGON_AREA`].
    pub fn simple_polygon(&mut self, m: usize) -> Shape {
        loop {
            let center = Point::new(self.uniform(-0.5, 0.5), self.uniform(-0.5, 0.5));
            let mut pts: Vec<Point> = (0..m)
                .map(|_| Point::new(self.uniform(-1.0, 1.0), self.uniform(-1.0, 1.0)))
                .collect();
            pts.sort_by(|a, b| {
                let ta = (a.y - center.y).atan2(a.x - center.x);
                let tb = (b.y - center.y).atan2(b.x - center.x);
                ta.total_cmp(&tb)
            });
            if !is_simple_polygon(&pts) {
                continue;
            }
            if let Ok(shape) = Shape::polygon(&pts) {
                if shape.area().is_ok_and(|a| a >= MIN_POLYGON_AREA) {
                    return shape;
                }
            }
        }
    }

    /// Circles, ellipses, random polygons or catalog shapes.
    pub fn base_shape(&mut self) -> Shape {
        match self.rng.random_range(0..4) {
            0 => Shape::circle(
                Point::new(self.uniform(-5.0, 5.0), self.uniform(-5.0, 5.0)),
                self.log_uniform(0.1, 10.0),
            )
            .expect("positive radius"),
            1 => Shape::ellipse(
                Point::new(self.uniform(-5.0, 5.0), self.uniform(-5.0, 5.0)),
                self.log_uniform(0.1, 10.0),
                self.log_uniform(0.1, 10.0),
                self.uniform(-PI, PI),
            )
            .expect("positive semi-axes"),
            2 => {
                let m = self.rng.random_range(3..=9);
                self.simple_polygon(m)
            }
            _ => self.catalog_shape().1,
        }
    }

    /// Right triple `(a, b, √(a² + b²))` or, with probability one half, a
    /// triple whose `c` is pushed off the hypotenuse by 1–50 %.
    pub fn triple(&mut self) -> (f64, f64, f64) {
        let a = self.log_uniform(0.1, 10.0);
        let b = self.log_uniform(0.1, 10.0);
        let c = a.hypot(b);
        if self.rng.random_bool(0.5) {
            (a, b, c)
        } else {
            let sign = if self.rng.random_bool(0.5) { 1.0 } else { -1.0 };
            (a, b, c * (1.0 + sign * self.uniform(0.01, 0.5)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..20 {
            assert_eq!(a.family_param(), b.family_param());
            assert_eq!(a.simple_polygon(5), b.simple_polygon(5));
        }
    }

    #[test]
    fn polygons_are_simple() {
        let mut s = Sampler::new(1);
        for m in 3..8 {
            let p = s.simple_polygon(m);
            let v = p.polygon_vertices().unwrap();
            assert_eq!(v.len(), m);
            assert!(is_simple_polygon(&v));
        }
    }

    #[test]
    fn params_are_valid() {
        let mut s = Sampler::new(3);
        for _ in 0..200 {
            assert!(s.family_param().validate().is_ok());
        }
    }
}
