//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion. Reference
//! values come from closed forms or from oracles written here (composite
//! Simpson rules, shoelace sums, dense grids), not from the library code
//! under test.

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::ExitCode;
use std::time::Instant;

use unit_shapes::sampling::Sampler;
use unit_shapes_core::catalog::{build_unit_shape, ellipse_semi_minor, fundamental_measure};
use unit_shapes_core::optimize::{
    minimize_1d, minimize_2d, scan, Family1d, Family2d, ScanObjective,
};
use unit_shapes_core::solids::{measures, unitize_solid, PlatonicKind, PlatonicSolid};
use unit_shapes_core::unitizer::{check_calculus_friendly, IndexedFamilyProbe};
use unit_shapes_core::verify::{check_blob_pythagoras, check_mgon_bound, check_rational_circle};
use unit_shapes_core::{unitize, FamilyKind, FamilyParam, Point, Shape};

const SEED: u64 = 20240901;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type Objective<'a> = &'a dyn Fn(f64) -> f64;

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Composite Simpson rule with `n` (even) subintervals.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + h * i as f64);
    }
    sum * h / 3.0
}

/// `∫₀^π √(1 + (r² − 1)cos² t) dt` by Simpson.
fn ellipse_integral_oracle(r: f64, n: usize) -> f64 {
    simpson(
        |t| (1.0 + (r * r - 1.0) * t.cos().powi(2)).sqrt(),
        0.0,
        PI,
        n,
    )
}

fn shoelace(v: &[Point]) -> f64 {
    let n = v.len();
    0.5 * (0..n)
        .map(|i| v[i].x * v[(i + 1) % n].y - v[(i + 1) % n].x * v[i].y)
        .sum::<f64>()
        .abs()
}

fn half_perimeter(v: &[Point]) -> f64 {
    let n = v.len();
    0.5 * (0..n).map(|i| v[i].distance(v[(i + 1) % n])).sum::<f64>()
}

fn representative(kind: FamilyKind) -> FamilyParam {
    match kind {
        FamilyKind::RightTriangle => FamilyParam::RightTriangle { theta: 0.6 },
        FamilyKind::Triangle => FamilyParam::Triangle { r: 0.7, s: 0.9 },
        FamilyKind::Rectangle => FamilyParam::Rectangle { r: 2.5 },
        FamilyKind::Rhombus => FamilyParam::Rhombus { theta: 1.1 },
        FamilyKind::Parallelogram => FamilyParam::Parallelogram { theta: 0.8, r: 0.4 },
        FamilyKind::Ellipse => FamilyParam::Ellipse { r: 0.3 },
        FamilyKind::RegularPolygon => FamilyParam::RegularPolygon { m: 7 },
    }
}

fn golden_values() -> Outcome {
    let sqrt2 = 2f64.sqrt();
    let sqrt3 = 3f64.sqrt();
    let mut cases = vec![
        (
            "right triangle pi/4",
            FamilyParam::RightTriangle { theta: PI / 4.0 },
            3.0 + 2.0 * sqrt2,
        ),
        (
            "equilateral",
            FamilyParam::Triangle { r: 1.0, s: 1.0 },
            3.0 * sqrt3,
        ),
        (
            "square as rectangle",
            FamilyParam::Rectangle { r: 1.0 },
            4.0,
        ),
        (
            "square as rhombus",
            FamilyParam::Rhombus { theta: FRAC_PI_2 },
            4.0,
        ),
    ];
    for m in 3..=12u32 {
        cases.push((
            "regular polygon",
            FamilyParam::RegularPolygon { m },
            m as f64 * (PI / m as f64).tan(),
        ));
    }
    let (mut worst_closed, mut worst_kernel) = (0.0f64, 0.0f64);
    for (name, p, want) in &cases {
        let got = fundamental_measure(p).map_err(err)?;
        let d = rel(got, *want);
        worst_closed = worst_closed.max(d);
        ensure(d <= 1e-12, || {
            format!("{name} {p:?}: closed form {got} vs {want}")
        })?;
        let shape = build_unit_shape(p).map_err(err)?;
        let (a, s) = (
            shape.area().map_err(err)?,
            shape.semiperimeter().map_err(err)?,
        );
        let dk = rel(a, *want).max(rel(s, *want));
        worst_kernel = worst_kernel.max(dk);
        ensure(dk <= 1e-8, || {
            format!("{name} {p:?}: kernel A={a} S={s} vs {want}")
        })?;
    }
    Ok(format!("{} values; closed-form residual {worst_closed:.1e} (<=1e-12), kernel {worst_kernel:.1e} (<=1e-8)", cases.len()))
}

fn unit_property() -> Outcome {
    let mut sampler = Sampler::new(SEED);
    let n = 120;
    let (mut worst_defect, mut worst_idem) = (0.0f64, 0.0f64);
    for _ in 0..n {
        let (p, shape) = sampler.catalog_shape();
        let u = unitize(&shape).map_err(err)?;
        let a = u.unit_shape.area().map_err(err)?;
        let s = u.unit_shape.semiperimeter().map_err(err)?;
        let defect = (a - s).abs() / s;
        worst_defect = worst_defect.max(defect);
        ensure(defect <= 1e-8, || format!("{p:?}: |A-S|/S = {defect:e}"))?;
        let again = unitize(&u.unit_shape).map_err(err)?;
        let idem = (again.tong_inradius_reciprocal - 1.0).abs();
        worst_idem = worst_idem.max(idem);
        ensure(idem <= 1e-9, || {
            format!(
                "{p:?}: re-unitizing scale {}",
                again.tong_inradius_reciprocal
            )
        })?;
    }
    Ok(format!("{n} shapes; worst |A-S|/S {worst_defect:.1e} (<=1e-8), worst |scale-1| {worst_idem:.1e} (<=1e-9)"))
}

fn calculus_friendly() -> Outcome {
    let lambdas = [0.5, 1.0, 2.0];
    let mut worst = 0.0f64;
    for kind in FamilyKind::ALL {
        let unit = build_unit_shape(&representative(kind)).map_err(err)?;
        for &lambda in &lambdas {
            let h = 1e-5 * lambda;
            let area = |t: f64| unit.scaled(t).and_then(|c| c.area());
            let derivative =
                (area(lambda + h).map_err(err)? - area(lambda - h).map_err(err)?) / (2.0 * h);
            let twice_s = 2.0
                * unit
                    .scaled(lambda)
                    .and_then(|c| c.semiperimeter())
                    .map_err(err)?;
            let d = rel(derivative, twice_s);
            worst = worst.max(d);
            ensure(d <= 1e-5, || {
                format!("{kind} at lambda={lambda}: A'={derivative} vs 2S={twice_s}")
            })?;
        }
        let probe = IndexedFamilyProbe::new(unit, lambdas.to_vec()).map_err(err)?;
        let report = check_calculus_friendly(&probe);
        ensure(report.pass(), || {
            format!("{kind}: library probe failed: {:?}", report.failures)
        })?;
    }
    Ok(format!(
        "{} families x 3 indices; worst relative gap {worst:.1e} (<=1e-5)",
        FamilyKind::ALL.len()
    ))
}

fn isoperimetric_floor() -> Outcome {
    let mut sampler = Sampler::new(SEED ^ 0x5eed);
    let mut lowest = f64::INFINITY;
    let n = 300;
    for i in 0..n {
        let shape = if i % 2 == 0 {
            sampler.catalog_shape().1
        } else {
            sampler.base_shape()
        };
        let pi_u = unitize(&shape).map_err(err)?.fundamental_measure;
        lowest = lowest.min(pi_u);
        ensure(pi_u >= PI - 1e-9, || {
            format!("sample {i}: Pi = {pi_u} below pi")
        })?;
    }
    let r = 0.999;
    let got = fundamental_measure(&FamilyParam::Ellipse { r }).map_err(err)?;
    let i = ellipse_integral_oracle(r, 2000);
    let oracle = i * i / (PI * r);
    ensure(rel(got, oracle) <= 1e-9, || {
        format!("Pi_E(0.999) = {got} vs Simpson {oracle}")
    })?;
    let gap = got - PI;
    ensure(gap > 0.0 && gap <= 1e-3, || {
        format!("Pi_E(0.999) - pi = {gap:e}")
    })?;
    Ok(format!(
        "{n} unitized samples, lowest Pi {lowest:.12}; Pi_E(0.999) - pi = {gap:.3e}"
    ))
}

fn mgon_bound() -> Outcome {
    let mut sampler = Sampler::new(SEED.wrapping_mul(3));
    let mut tightest = f64::INFINITY;
    for m in 3..=6usize {
        let rho = m as f64 * (PI / m as f64).tan();
        let samples: Vec<Shape> = (0..500).map(|_| sampler.simple_polygon(m)).collect();
        for (i, shape) in samples.iter().enumerate() {
            let v = shape.polygon_vertices().ok_or("sample is not a polygon")?;
            let (a, s) = (shoelace(&v), half_perimeter(&v));
            let slack = (s * s - rho * a) / (s * s);
            tightest = tightest.min(slack);
            ensure(slack >= 0.0, || {
                format!("m={m} sample {i}: rho*A={} > S^2={}", rho * a, s * s)
            })?;
        }
        let report = check_mgon_bound(m as u32, &samples).map_err(err)?;
        ensure(report.pass && report.equality_cases == 0, || {
            format!("m={m}: library report {report:?}")
        })?;

        let regular =
            build_unit_shape(&FamilyParam::RegularPolygon { m: m as u32 }).map_err(err)?;
        let v = regular
            .polygon_vertices()
            .ok_or("regular polygon has curved pieces")?;
        let (a, s) = (shoelace(&v), half_perimeter(&v));
        ensure(rel(a, rho) <= 1e-9 && rel(s, rho) <= 1e-9, || {
            format!("m={m}: regular A={a} S={s} vs {rho}")
        })?;
        ensure(rel(rho * a, s * s) <= 1e-9, || {
            format!("m={m}: regular polygon misses equality")
        })?;
        let eq = check_mgon_bound(m as u32, &[regular.scaled(4.2).map_err(err)?, regular])
            .map_err(err)?;
        ensure(eq.pass && eq.equality_cases == 2, || {
            format!("m={m}: equality report {eq:?}")
        })?;
    }
    Ok(format!(
        "4 x 500 random m-gons, tightest relative slack {tightest:.3e}; regular equality to 1e-9"
    ))
}

fn blob_pythagoras() -> Outcome {
    let mut sampler = Sampler::new(SEED + 6);
    let mut right = 0;
    for i in 0..20 {
        let base = sampler.base_shape();
        let a = sampler.log_uniform(0.1, 10.0);
        let b = sampler.log_uniform(0.1, 10.0);
        let hyp = a.hypot(b);
        let off = hyp * (1.0 + sampler.uniform(0.01, 0.3));
        for (c, is_right) in [(hyp, true), (off, false)] {
            let area = |t: f64| base.scaled(t).and_then(|s| s.area());
            let (aa, ab, ac) = (
                area(a).map_err(err)?,
                area(b).map_err(err)?,
                area(c).map_err(err)?,
            );
            let equal = rel(aa + ab, ac) <= 1e-9;
            ensure(equal == is_right, || {
                format!("base {i}, ({a}, {b}, {c}): areas {aa} + {ab} vs {ac}")
            })?;
            let report = check_blob_pythagoras(&base, (a, b, c)).map_err(err)?;
            ensure(
                report.pass && (report.equality_cases == 1) == is_right,
                || format!("base {i}: {report:?}"),
            )?;
            right += is_right as usize;
        }
    }
    Ok(format!(
        "20 bases x (right, non-right) triples; equality in exactly the {right} right cases"
    ))
}

fn optimizer_vs_oracle() -> Outcome {
    // Closed forms restated here for the grid oracles.
    let right = |t: f64| (1.0 + 1.0 / t.cos()) * (1.0 + 1.0 / t.sin());
    let rect = |r: f64| (1.0 + r).powi(2) / r;
    let rhomb = |t: f64| 4.0 / t.sin();
    let ellipse = |r: f64| {
        let i = ellipse_integral_oracle(r, 200);
        i * i / (PI * r)
    };
    let grid_min = |f: Objective, lo: f64, hi: f64, n: usize| {
        (0..n)
            .map(|i| f(lo + (hi - lo) * i as f64 / (n - 1) as f64))
            .fold(f64::INFINITY, f64::min)
    };
    let one_d: [(Family1d, Objective, usize); 4] = [
        (Family1d::RightTriangle, &right, 1_000_000),
        (Family1d::Rectangle, &rect, 1_000_000),
        (Family1d::Rhombus, &rhomb, 1_000_000),
        (Family1d::Ellipse, &ellipse, 10_000),
    ];
    let mut worst = 0.0f64;
    for (family, f, n) in one_d {
        let (lo, hi) = family.default_bracket();
        let res = minimize_1d(family, (lo, hi)).map_err(err)?;
        let oracle = grid_min(f, lo, hi, n);
        let d = (res.min_value - oracle).abs();
        worst = worst.max(d);
        ensure(d <= 1e-6, || {
            format!("{family:?}: {} vs grid {oracle}", res.min_value)
        })?;
        ensure(res.min_value >= PI - 1e-9, || {
            format!("{family:?}: below pi")
        })?;
    }
    let ell = minimize_1d(Family1d::Ellipse, Family1d::Ellipse.default_bracket()).map_err(err)?;
    ensure(!ell.converged && ell.boundary_infimum == Some(PI), || {
        format!("ellipse: {ell:?}")
    })?;

    let n = 2000;
    let tri = |r: f64, s: f64| {
        let d = (-r + s + 1.0) * (r - s + 1.0) * (r + s - 1.0);
        if r + s > 1.0 {
            (r + s + 1.0).powf(1.5) / d.sqrt()
        } else {
            f64::INFINITY
        }
    };
    let mut tri_min = f64::INFINITY;
    for i in 1..=n {
        for j in 1..=n {
            tri_min = tri_min.min(tri(i as f64 / n as f64, j as f64 / n as f64));
        }
    }
    let par = |t: f64, r: f64| (1.0 + r).powi(2) / (r * t.sin());
    let mut par_min = f64::INFINITY;
    for i in 1..n {
        for j in 1..=n {
            par_min = par_min.min(par(PI * i as f64 / n as f64, 5.0 * j as f64 / n as f64));
        }
    }
    let t = minimize_2d(Family2d::Triangle).map_err(err)?;
    let p = minimize_2d(Family2d::Parallelogram).map_err(err)?;
    for (name, res, oracle, target) in [
        ("triangle", &t, tri_min, [1.0, 1.0]),
        ("parallelogram", &p, par_min, [FRAC_PI_2, 1.0]),
    ] {
        let d = (res.min_value - oracle).abs();
        worst = worst.max(d);
        ensure(d <= 1e-6, || {
            format!("{name}: {} vs grid {oracle}", res.min_value)
        })?;
        let off = (res.argmin[0] - target[0])
            .abs()
            .max((res.argmin[1] - target[1]).abs());
        ensure(off <= 1e-6, || {
            format!("{name}: argmin {:?} vs {target:?}", res.argmin)
        })?;
    }
    Ok(format!(
        "4 families (10^6-point grids, ellipse 10^4) + 2 families (2000x2000); worst value gap {worst:.1e}; argmins ({:.8}, {:.8}) and ({:.8}, {:.8})",
        t.argmin[0], t.argmin[1], p.argmin[0], p.argmin[1]
    ))
}

fn ellipse_auxiliaries() -> Outcome {
    let table = scan(ScanObjective::SemiMinor, 0.01, 0.99, 1000).map_err(err)?;
    let values: Vec<f64> = table.rows.iter().map(|r| r.value).collect();
    ensure(values.windows(2).all(|w| w[1] > w[0]), || {
        "a(r) not strictly increasing".into()
    })?;
    ensure(table.strictly_increasing(), || {
        format!("scan reports runs {:?}", table.runs)
    })?;
    let two_over_pi = 2.0 / PI;
    ensure(values.iter().all(|&v| v > two_over_pi && v < 1.0), || {
        "a(r) leaves (2/pi, 1)".into()
    })?;
    let mut worst = 0.0f64;
    for row in table.rows.iter().step_by(10) {
        let oracle = ellipse_integral_oracle(row.x, 2000) / PI;
        worst = worst.max(rel(row.value, oracle));
        ensure(rel(row.value, oracle) <= 1e-9, || {
            format!("a({}) = {} vs Simpson {oracle}", row.x, row.value)
        })?;
    }
    let a_lo = ellipse_semi_minor(0.01).map_err(err)?;
    let a_hi = ellipse_semi_minor(0.99).map_err(err)?;
    ensure((a_lo - two_over_pi).abs() <= 2e-2, || {
        format!("a(0.01) = {a_lo}")
    })?;
    ensure((a_hi - 1.0).abs() <= 2e-2, || format!("a(0.99) = {a_hi}"))?;
    Ok(format!("1000-point grid increasing; a(0.01) = {a_lo:.6}, a(0.99) = {a_hi:.6}; Simpson agreement {worst:.1e}"))
}

fn platonic_table() -> Outcome {
    let phi = 2.0 * (PI / 5.0).cos();
    let xi = 2.0 * (PI / 5.0).sin();
    let s3 = 3f64.sqrt();
    let table = [
        (PlatonicKind::Tetrahedron, 8.0 * s3),
        (PlatonicKind::Cube, 8.0),
        (PlatonicKind::Octahedron, 4.0 * s3),
        (PlatonicKind::Dodecahedron, 20.0 * xi / phi.powi(3)),
        (PlatonicKind::Icosahedron, 20.0 * s3 / phi.powi(4)),
    ];
    let mut worst = 0.0f64;
    for (kind, want) in table {
        let unit = unitize_solid(&PlatonicSolid::new(kind, 1.7).map_err(err)?);
        let m = measures(&unit);
        let d = rel(m.volume, want)
            .max(rel(m.fundamental_measure, want))
            .max(rel(m.volume, m.surface_area / 3.0));
        worst = worst.max(d);
        ensure(d <= 1e-9, || {
            format!(
                "{kind}: V={} Pi={} SA/3={} vs {want}",
                m.volume,
                m.fundamental_measure,
                m.surface_area / 3.0
            )
        })?;
        ensure((m.inradius - 1.0).abs() <= 1e-9, || {
            format!("{kind}: inradius {}", m.inradius)
        })?;
    }
    Ok(format!(
        "5 solids from vertex models; worst relative residual {worst:.1e} (<=1e-9)"
    ))
}

fn rational_circle() -> Outcome {
    let report = check_rational_circle().map_err(err)?;
    ensure(report.pass, || format!("{report:?}"))?;
    let (a, s) = Shape::rational_unit_circle()
        .measures_by_quadrature(&Default::default())
        .map_err(err)?;
    ensure(rel(a, PI) <= 1e-9 && rel(s, PI) <= 1e-9, || {
        format!("A={a} S={s}")
    })?;
    Ok(format!("A - pi = {:.1e}, S - pi = {:.1e}", a - PI, s - PI))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("catalog golden values", golden_values),
        ("unit property and idempotence", unit_property),
        ("calculus-friendly indexing", calculus_friendly),
        ("isoperimetric floor", isoperimetric_floor),
        ("m-gon bound", mgon_bound),
        ("blob Pythagoras", blob_pythagoras),
        ("optimizer vs grid oracle", optimizer_vs_oracle),
        ("ellipse auxiliaries", ellipse_auxiliaries),
        ("Platonic table", platonic_table),
        ("rational circle", rational_circle),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2}. {name}: {detail} ({secs:.2}s)", i + 1),
            Err(reason) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name}: {reason} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
