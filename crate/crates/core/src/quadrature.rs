//! Globally adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimate meets `max(abs_tol, rel_tol * |I|)`. A floor of a few ulps of
//! `∫|f|` keeps integrals that cancel to nearly zero from chasing roundoff.

#![allow(clippy::excessive_precision)]

use alloc::vec::Vec;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Tolerances and limits for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Maximum bisection depth of any subinterval.
    pub max_depth: u32,
    /// Maximum number of live subintervals.
    pub max_intervals: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            rel_tol: 1e-10,
            abs_tol: 0.0,
            max_depth: 60,
            max_intervals: 10_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Summed Gauss/Kronrod discrepancy over all subintervals.
    pub error: f64,
    /// Kronrod estimate of `∫|f|`.
    pub abs_value: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    abs_value: f64,
    depth: u32,
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut abs = WGK[7] * fc.abs();
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        kronrod += WGK[j] * (f1 + f2);
        abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let scale = half.abs();
    (
        kronrod * half,
        ((kronrod - gauss) * half).abs(),
        abs * scale,
    )
}

/// Integrates `f` over `[a, b]`. `b < a` yields the negated integral.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadConfig) -> Result<Quadrature> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("integration limits must be finite"));
    }
    if a == b {
        return Ok(Quadrature {
            value: 0.0,
            error: 0.0,
            abs_value: 0.0,
            evaluations: 0,
        });
    }

    let make = |a: f64, b: f64, depth: u32| {
        let (value, error, abs_value) = gk15(&f, a, b);
        Segment {
            a,
            b,
            value,
            error,
            abs_value,
            depth,
        }
    };

    let mut segments: Vec<Segment> = Vec::with_capacity(64);
    segments.push(make(a, b, 0));
    let mut evaluations = 15;

    loop {
        let value: f64 = segments.iter().map(|s| s.value).sum();
        let error: f64 = segments.iter().map(|s| s.error).sum();
        let abs_value: f64 = segments.iter().map(|s| s.abs_value).sum();
        if !value.is_finite() || !error.is_finite() {
            return Err(Error::QuadratureFailure {
                estimate: value,
                error,
                tolerance: 0.0,
            });
        }
        let tolerance = cfg
            .abs_tol
            .max(cfg.rel_tol * value.abs())
            .max(50.0 * f64::EPSILON * abs_value);
        if error <= tolerance {
            return Ok(Quadrature {
                value,
                error,
                abs_value,
                evaluations,
            });
        }

        let (worst, _) = segments
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, s)| {
                if s.error > acc.1 {
                    (i, s.error)
                } else {
                    acc
                }
            });
        let seg = segments[worst];
        if seg.depth >= cfg.max_depth || segments.len() >= cfg.max_intervals {
            return Err(Error::QuadratureFailure {
                estimate: value,
                error,
                tolerance,
            });
        }
        let mid = 0.5 * (seg.a + seg.b);
        segments[worst] = make(seg.a, mid, seg.depth + 1);
        segments.push(make(mid, seg.b, seg.depth + 1));
        evaluations += 30;
    }
}

/// [`integrate`] with the default configuration.
pub fn integrate_default<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> Result<f64> {
    integrate(f, a, b, &QuadConfig::default()).map(|q| q.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{sqrt, PI};

    #[test]
    fn polynomial_is_exact() {
        let q = integrate_default(|x| x * x * x - 2.0 * x + 1.0, -1.0, 3.0).unwrap();
        // x^4/4 - x^2 + x on [-1, 3] = (81/4 - 9 + 3) - (1/4 - 1 - 1)
        assert!((q - 16.0).abs() < 1e-12);
    }

    #[test]
    fn reversed_limits_negate() {
        let fwd = integrate_default(libm::sin, 0.0, 2.0).unwrap();
        let back = integrate_default(libm::sin, 2.0, 0.0).unwrap();
        assert_eq!(fwd, -back);
    }

    #[test]
    fn sharp_peak_needs_subdivision() {
        let cfg = QuadConfig::default();
        let q = integrate(|x| 1.0 / (1e-4 + x * x), -1.0, 1.0, &cfg).unwrap();
        let exact = 2.0 * libm::atan(100.0) / 1e-2;
        assert!((q.value - exact).abs() <= 1e-10 * exact);
        assert!(q.evaluations > 15);
    }

    #[test]
    fn endpoint_sqrt_singularity() {
        // ∫_0^1 sqrt(1 - x^2) dx = π/4
        let q = integrate_default(|x| sqrt((1.0 - x * x).max(0.0)), 0.0, 1.0).unwrap();
        assert!((q - PI / 4.0).abs() < 1e-9);
    }

    #[test]
    fn non_integrable_reports_failure() {
        let err = integrate_default(|x| 1.0 / x, 0.0, 1.0).unwrap_err();
        assert!(matches!(err, Error::QuadratureFailure { .. }));
    }

    #[test]
    fn zero_width() {
        assert_eq!(integrate_default(|x| x, 1.5, 1.5).unwrap(), 0.0);
    }
}
