//! Minimization of the fundamental measure over family parameters, and
//! uniform-grid scans of the related one-parameter quantities.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::catalog::{
    ellipse_semi_minor, fundamental_measure, rhombus_short_diagonal, FamilyKind, FamilyParam,
};
use crate::error::{Error, Result};
use crate::math::{sqrt, FRAC_PI_2, PI};

pub const GOLDEN_TOLERANCE: f64 = 1e-10;
pub const GOLDEN_MAX_ITERATIONS: usize = 200;
pub const SIMPLEX_TOLERANCE: f64 = 1e-8;
pub const SIMPLEX_MAX_ITERATIONS: usize = 5000;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct MinimizationResult {
    pub argmin: Vec<f64>,
    pub min_value: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Set when the search ran into the end of its bracket: the infimum
    /// there is a limit, not an attained interior minimum.
    pub boundary_infimum: Option<f64>,
}

/// One-parameter families with a golden-section search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family1d {
    RightTriangle,
    Rectangle,
    Rhombus,
    Ellipse,
}

impl Family1d {
    pub fn param(self, x: f64) -> FamilyParam {
        match self {
            Family1d::RightTriangle => FamilyParam::RightTriangle { theta: x },
            Family1d::Rectangle => FamilyParam::Rectangle { r: x },
            Family1d::Rhombus => FamilyParam::Rhombus { theta: x },
            Family1d::Ellipse => FamilyParam::Ellipse { r: x },
        }
    }

    pub fn kind(self) -> FamilyKind {
        self.param(0.5).kind()
    }

    pub fn from_kind(kind: FamilyKind) -> Option<Family1d> {
        match kind {
            FamilyKind::RightTriangle => Some(Family1d::RightTriangle),
            FamilyKind::Rectangle => Some(Family1d::Rectangle),
            FamilyKind::Rhombus => Some(Family1d::Rhombus),
            FamilyKind::Ellipse => Some(Family1d::Ellipse),
            _ => None,
        }
    }

    /// Bracket used when none is given.
    pub fn default_bracket(self) -> (f64, f64) {
        match self {
            Family1d::RightTriangle => (0.01, FRAC_PI_2 - 0.01),
            Family1d::Rectangle => (0.01, 100.0),
            Family1d::Rhombus => (0.01, PI - 0.01),
            Family1d::Ellipse => (0.01, 0.99),
        }
    }

    pub fn objective(self, x: f64) -> Result<f64> {
        fundamental_measure(&self.param(x))
    }
}

/// Two-parameter families with a multi-start simplex search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family2d {
    /// Parameters `(r, s)`.
    Triangle,
    /// Parameters `(theta, r)`.
    Parallelogram,
}

impl Family2d {
    pub fn param(self, x: [f64; 2]) -> FamilyParam {
        match self {
            Family2d::Triangle => FamilyParam::Triangle { r: x[0], s: x[1] },
            Family2d::Parallelogram => FamilyParam::Parallelogram {
                theta: x[0],
                r: x[1],
            },
        }
    }

    pub fn from_kind(kind: FamilyKind) -> Option<Family2d> {
        match kind {
            FamilyKind::Triangle => Some(Family2d::Triangle),
            FamilyKind::Parallelogram => Some(Family2d::Parallelogram),
            _ => None,
        }
    }

    /// Fixed multi-start seeds, all strictly feasible except the
    /// equilateral corner `(1, 1)`, which is feasible and optimal.
    pub fn seeds(self) -> [[f64; 2]; 5] {
        match self {
            Family2d::Triangle => [[1.0, 1.0], [0.9, 0.8], [0.6, 0.7], [0.95, 0.3], [0.7, 0.5]],
            Family2d::Parallelogram => [[1.0, 0.5], [2.0, 2.0], [0.5, 3.0], [2.5, 0.3], [1.2, 1.5]],
        }
    }

    /// Objective with `+∞` outside the domain.
    pub fn penalized(self, x: [f64; 2]) -> f64 {
        fundamental_measure(&self.param(x)).unwrap_or(f64::INFINITY)
    }
}

fn check_bracket(family: Family1d, lo: f64, hi: f64) -> Result<()> {
    if lo >= hi || lo.is_nan() || hi.is_nan() {
        return Err(Error::domain(format!("empty bracket ({lo}, {hi})")));
    }
    family.param(lo).validate()?;
    family.param(hi).validate()
}

/// Golden-section search for the minimum of the family's fundamental
/// measure over `[lo, hi]`, to parameter tolerance `1e-10`.
pub fn minimize_1d(family: Family1d, bracket: (f64, f64)) -> Result<MinimizationResult> {
    let (lo, hi) = bracket;
    check_bracket(family, lo, hi)?;
    let f = |x: f64| family.objective(x);
    let inv_phi = (sqrt(5.0) - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    let mut iterations = 0;
    while b - a > GOLDEN_TOLERANCE * (1.0f64).max(a.abs().max(b.abs())) {
        if iterations == GOLDEN_MAX_ITERATIONS {
            return Err(Error::NotConverged { iterations });
        }
        iterations += 1;
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    let mut x = 0.5 * (a + b);
    let mut value = f(x)?;
    let edge = 1e-8 * (hi - lo);
    let at_lo = x - lo <= edge;
    let at_hi = hi - x <= edge;
    let mut boundary_infimum = None;
    if at_lo || at_hi {
        x = if at_lo { lo } else { hi };
        value = f(x)?;
        // Π_E decreases toward the circle, whose measure is π.
        boundary_infimum = Some(if family == Family1d::Ellipse && at_hi {
            PI
        } else {
            value
        });
    }
    Ok(MinimizationResult {
        argmin: vec![x],
        min_value: value,
        iterations,
        converged: boundary_infimum.is_none(),
        boundary_infimum,
    })
}

struct SimplexRun {
    best: [f64; 2],
    value: f64,
    iterations: usize,
    converged: bool,
}

fn initial_simplex(f: &impl Fn([f64; 2]) -> f64, x0: [f64; 2]) -> [[f64; 2]; 3] {
    let mut simplex = [x0; 3];
    for i in 0..2 {
        let mut step = 0.1 * x0[i].abs().max(0.1);
        'search: for _ in 0..40 {
            for sign in [1.0, -1.0] {
                let mut v = x0;
                v[i] += sign * step;
                if f(v).is_finite() {
                    simplex[i + 1] = v;
                    break 'search;
                }
            }
            step *= 0.5;
        }
    }
    simplex
}

fn nelder_mead(f: impl Fn([f64; 2]) -> f64, x0: [f64; 2]) -> SimplexRun {
    let mut pts = initial_simplex(&f, x0);
    let mut vals = pts.map(&f);
    let lerp =
        |a: [f64; 2], b: [f64; 2], t: f64| [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < SIMPLEX_MAX_ITERATIONS {
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| vals[i].total_cmp(&vals[j]));
        pts = order.map(|i| pts[i]);
        vals = order.map(|i| vals[i]);
        let best = pts[0];
        let scale = (1.0f64).max(best[0].abs().max(best[1].abs()));
        let diameter = pts[1..]
            .iter()
            .map(|p| (p[0] - best[0]).abs().max((p[1] - best[1]).abs()))
            .fold(0.0, f64::max);
        if diameter <= SIMPLEX_TOLERANCE * scale {
            converged = true;
            break;
        }
        iterations += 1;
        let centroid = lerp(pts[0], pts[1], 0.5);
        let reflected = lerp(centroid, pts[2], -1.0);
        let fr = f(reflected);
        if fr < vals[0] {
            let expanded = lerp(centroid, pts[2], -2.0);
            let fe = f(expanded);
            if fe < fr {
                (pts[2], vals[2]) = (expanded, fe);
            } else {
                (pts[2], vals[2]) = (reflected, fr);
            }
        } else if fr < vals[1] {
            (pts[2], vals[2]) = (reflected, fr);
        } else {
            let (target, ft) = if fr < vals[2] {
                (reflected, fr)
            } else {
                (pts[2], vals[2])
            };
            let contracted = lerp(centroid, target, 0.5);
            let fcon = f(contracted);
            if fcon <= ft {
                (pts[2], vals[2]) = (contracted, fcon);
            } else {
                for k in 1..3 {
                    pts[k] = lerp(pts[0], pts[k], 0.5);
                    vals[k] = f(pts[k]);
                }
            }
        }
    }
    let k = (0..3)
        .min_by(|&i, &j| vals[i].total_cmp(&vals[j]))
        .unwrap_or(0);
    SimplexRun {
        best: pts[k],
        value: vals[k],
        iterations,
        converged,
    }
}

/// Nelder–Mead from each fixed seed of the family; returns the best run.
pub fn minimize_2d(family: Family2d) -> Result<MinimizationResult> {
    minimize_2d_from(family, &family.seeds())
}

/// Nelder–Mead from the given feasible seeds; returns the best converged run.
pub fn minimize_2d_from(family: Family2d, seeds: &[[f64; 2]]) -> Result<MinimizationResult> {
    if seeds.is_empty() {
        return Err(Error::domain("no seeds given"));
    }
    for seed in seeds {
        family.param(*seed).validate()?;
    }
    let f = |x: [f64; 2]| family.penalized(x);
    let mut best: Option<SimplexRun> = None;
    let mut total = 0;
    for seed in seeds {
        let run = nelder_mead(f, *seed);
        total += run.iterations;
        if run.converged && best.as_ref().is_none_or(|b| run.value < b.value) {
            best = Some(run);
        }
    }
    let run = best.ok_or(Error::NotConverged { iterations: total })?;
    Ok(MinimizationResult {
        argmin: run.best.to_vec(),
        min_value: run.value,
        iterations: run.iterations,
        converged: true,
        boundary_infimum: None,
    })
}

/// Quantity swept by [`scan`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanObjective {
    /// Fundamental measure of a one-parameter family.
    Pi(Family1d),
    /// Semi-minor axis `a(r)` of the unit ellipse.
    SemiMinor,
    /// Shortest diagonal `h(θ)` of the unit rhombus.
    ShortDiagonal,
}

impl ScanObjective {
    pub fn name(self) -> String {
        match self {
            ScanObjective::Pi(f) => format!("Pi[{}]", f.kind()),
            ScanObjective::SemiMinor => "ellipse_semi_minor".into(),
            ScanObjective::ShortDiagonal => "rhombus_short_diagonal".into(),
        }
    }

    pub fn eval(self, x: f64) -> Result<f64> {
        match self {
            ScanObjective::Pi(f) => f.objective(x),
            ScanObjective::SemiMinor => ellipse_semi_minor(x),
            ScanObjective::ShortDiagonal => rhombus_short_diagonal(x),
        }
    }

    /// Limits at the lower and upper ends of the parameter domain;
    /// `None` where the quantity diverges.
    pub fn domain_limits(self) -> (Option<f64>, Option<f64>) {
        match self {
            ScanObjective::Pi(Family1d::Ellipse) => (None, Some(PI)),
            ScanObjective::Pi(_) => (None, None),
            ScanObjective::SemiMinor => (Some(2.0 / PI), Some(1.0)),
            ScanObjective::ShortDiagonal => (Some(2.0), Some(2.0)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ScanRow {
    pub x: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Trend {
    Increasing,
    Decreasing,
    Flat,
}

/// Maximal index range `[start, end]` over which consecutive values move
/// in one direction.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct MonotoneRun {
    pub start: usize,
    pub end: usize,
    pub trend: Trend,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ScanTable {
    pub objective: String,
    pub rows: Vec<ScanRow>,
    pub runs: Vec<MonotoneRun>,
    pub min: ScanRow,
    pub max: ScanRow,
    pub lower_limit: Option<f64>,
    pub upper_limit: Option<f64>,
}

impl ScanTable {
    pub fn strictly_increasing(&self) -> bool {
        matches!(self.runs.as_slice(), [r] if r.trend == Trend::Increasing)
    }

    pub fn strictly_decreasing(&self) -> bool {
        matches!(self.runs.as_slice(), [r] if r.trend == Trend::Decreasing)
    }
}

/// Evaluates the objective on `n` uniform points covering `[lo, hi]`.
pub fn scan(objective: ScanObjective, lo: f64, hi: f64, n: usize) -> Result<ScanTable> {
    if n < 2 {
        return Err(Error::domain(format!("scan needs n >= 2, got {n}")));
    }
    if lo >= hi || lo.is_nan() || hi.is_nan() {
        return Err(Error::domain(format!("empty range ({lo}, {hi})")));
    }
    let step = (hi - lo) / (n - 1) as f64;
    let rows = (0..n)
        .map(|i| {
            let x = if i == n - 1 { hi } else { lo + step * i as f64 };
            objective.eval(x).map(|value| ScanRow { x, value })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut runs: Vec<MonotoneRun> = Vec::new();
    for i in 1..n {
        let diff = rows[i].value - rows[i - 1].value;
        let trend = if diff > 0.0 {
            Trend::Increasing
        } else if diff < 0.0 {
            Trend::Decreasing
        } else {
            Trend::Flat
        };
        match runs.last_mut() {
            Some(run) if run.trend == trend => run.end = i,
            _ => runs.push(MonotoneRun {
                start: i - 1,
                end: i,
                trend,
            }),
        }
    }
    let pick = |better: fn(f64, f64) -> bool| {
        rows.iter()
            .copied()
            .reduce(|acc, r| if better(r.value, acc.value) { r } else { acc })
            .unwrap_or(rows[0])
    };
    let (lower_limit, upper_limit) = objective.domain_limits();
    Ok(ScanTable {
        objective: objective.name(),
        min: pick(|a, b| a < b),
        max: pick(|a, b| a > b),
        rows,
        runs,
        lower_limit,
        upper_limit,
    })
}
