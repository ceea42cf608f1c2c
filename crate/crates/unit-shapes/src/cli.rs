//! The `unit-shapes` command line.
//!
//! Exit codes: 0 on success, 1 when a verification report fails, 2 on usage
//! or domain errors.

use std::f64::consts::PI;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use unit_shapes_core::catalog::{build_unit_shape, fundamental_measure, standard_members};
use unit_shapes_core::optimize::{
    minimize_1d, minimize_2d, scan, Family1d, Family2d, MinimizationResult, ScanObjective,
    ScanTable,
};
use unit_shapes_core::verify::{VerificationReport, DEFAULT_TOLERANCE};
use unit_shapes_core::{unitize, FamilyKind, FamilyParam, UnitizationResult};

use crate::export::{self, SolidRow};
use crate::io::load_shape;
use crate::suites::{run_all, run_suite, Suite, SuiteConfig};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Layout {
    /// One row per solid.
    Long,
    /// Solids as columns.
    Wide,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// Fundamental measure of a one-parameter family.
    Pi,
    /// Semi-minor axis of the unit ellipse, as a function of r.
    SemiMinor,
    /// Shortest diagonal of the unit rhombus, as a function of theta.
    ShortDiagonal,
}

#[derive(Debug, Parser)]
#[command(
    name = "unit-shapes",
    version,
    about = "Unit shapes, fundamental measures and isoperimetric checks"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    pub format: Format,
    /// Read angles (theta, and angle brackets) in degrees.
    #[arg(long, global = true)]
    pub degrees: bool,
    /// Relative tolerance for verification checks.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tol: Option<f64>,
    /// Seed for random sampling.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// right-triangle, triangle, rectangle, rhombus, parallelogram, ellipse or regular-polygon.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long = "r")]
    pub r: Option<f64>,
    #[arg(long = "s")]
    pub s: Option<f64>,
    #[arg(long)]
    pub theta: Option<f64>,
    #[arg(long = "m")]
    pub m: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fundamental measures of catalog families (a standard table without --family).
    Catalog(FamilyArgs),
    /// Tong inradius, unit shape and fundamental measure of a shape.
    Unitize {
        /// JSON shape file, or `-` for stdin.
        #[arg(long, conflicts_with = "family")]
        input: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Minimize the fundamental measure over a family's parameters.
    Minimize {
        #[arg(long)]
        family: String,
        #[arg(long, allow_negative_numbers = true)]
        lo: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        hi: Option<f64>,
    },
    /// Evaluate a quantity on a uniform grid.
    Scan {
        #[arg(long, value_enum, default_value_t = Quantity::Pi)]
        objective: Quantity,
        /// Family for `--objective pi`.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        lo: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        hi: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        n: usize,
    },
    /// Run verification suites; one report per claim.
    Verify {
        /// isoperimetric, unit-floor, scale-equivalence, mgon, blob-pythagoras,
        /// rational-circle, conciliation, platonic or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Override per-suite sample counts.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Unit Platonic solids and their fundamental measures.
    Solids {
        #[arg(long, value_enum, default_value_t = Layout::Long)]
        layout: Layout,
    },
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn family_kind(name: &str) -> Result<FamilyKind, CliError> {
    FamilyKind::from_name(name).ok_or_else(|| usage(format!("unknown family `{name}`")))
}

struct Ctx {
    format: Format,
    degrees: bool,
}

impl Ctx {
    fn angle(&self, x: f64) -> f64 {
        if self.degrees {
            x.to_radians()
        } else {
            x
        }
    }
}

fn need<T>(v: Option<T>, flag: &str, kind: FamilyKind) -> Result<T, CliError> {
    v.ok_or_else(|| usage(format!("family {kind} needs --{flag}")))
}

fn family_param(ctx: &Ctx, args: &FamilyArgs, kind: FamilyKind) -> Result<FamilyParam, CliError> {
    let theta = || need(args.theta, "theta", kind).map(|t| ctx.angle(t));
    let r = || need(args.r, "r", kind);
    let p = match kind {
        FamilyKind::RightTriangle => FamilyParam::right_triangle(theta()?),
        FamilyKind::Triangle => FamilyParam::triangle(r()?, need(args.s, "s", kind)?),
        FamilyKind::Rectangle => FamilyParam::rectangle(r()?),
        FamilyKind::Rhombus => FamilyParam::rhombus(theta()?),
        FamilyKind::Parallelogram => FamilyParam::parallelogram(theta()?, r()?),
        FamilyKind::Ellipse => FamilyParam::ellipse(r()?),
        FamilyKind::RegularPolygon => FamilyParam::regular_polygon(need(args.m, "m", kind)?),
    };
    Ok(p?)
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct CatalogEntry {
    #[serde(flatten)]
    param: FamilyParam,
    #[serde(rename = "Pi")]
    pi: f64,
    area: f64,
    semiperimeter: f64,
}

fn catalog_entry(p: FamilyParam) -> Result<CatalogEntry, CliError> {
    let shape = build_unit_shape(&p)?;
    Ok(CatalogEntry {
        param: p,
        pi: fundamental_measure(&p)?,
        area: shape.area()?,
        semiperimeter: shape.semiperimeter()?,
    })
}

fn cmd_catalog(ctx: &Ctx, args: &FamilyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let params = match &args.family {
        Some(name) => vec![family_param(ctx, args, family_kind(name)?)?],
        None => standard_members(),
    };
    let entries = params
        .into_iter()
        .map(catalog_entry)
        .collect::<Result<Vec<_>, _>>()?;
    match ctx.format {
        Format::Json if entries.len() == 1 => json_line(out, &entries[0])?,
        Format::Json => json_line(out, &entries)?,
        Format::Csv => {
            let rows: Vec<_> = entries.iter().map(|e| (e.param, e.pi)).collect();
            export::write_catalog(out, &rows)?;
        }
        Format::Pretty => {
            writeln!(
                out,
                "{:<16} {:<32} {:>20} {:>20}",
                "family", "params", "Pi", "unit-shape area"
            )?;
            for e in &entries {
                writeln!(
                    out,
                    "{:<16} {:<32} {:>20.15} {:>20.15}",
                    e.param.kind().name(),
                    e.param.params_string(),
                    e.pi,
                    e.area
                )?;
            }
        }
    }
    Ok(0)
}

fn cmd_unitize(
    ctx: &Ctx,
    input: &Option<PathBuf>,
    family: &FamilyArgs,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let shape = match (input, &family.family) {
        (Some(path), _) => load_shape(path)?,
        (None, Some(name)) => build_unit_shape(&family_param(ctx, family, family_kind(name)?)?)?,
        (None, None) => return Err(usage("unitize needs --input or --family")),
    };
    let result: UnitizationResult = unitize(&shape)?;
    match ctx.format {
        Format::Json => json_line(out, &result)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["tong_inradius", "unitizing_scale", "fundamental_measure"])?;
            w.write_record([
                (1.0 / result.tong_inradius_reciprocal).to_string(),
                result.tong_inradius_reciprocal.to_string(),
                result.fundamental_measure.to_string(),
            ])?;
            w.flush()?;
        }
        Format::Pretty => {
            writeln!(
                out,
                "tong inradius:       {}",
                1.0 / result.tong_inradius_reciprocal
            )?;
            writeln!(
                out,
                "unitizing scale:     {}",
                result.tong_inradius_reciprocal
            )?;
            writeln!(out, "fundamental measure: {}", result.fundamental_measure)?;
            writeln!(
                out,
                "unit shape pieces:   {}",
                result.unit_shape.pieces().len()
            )?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct MinimizeOutput<'a> {
    family: &'a str,
    #[serde(flatten)]
    result: MinimizationResult,
}

fn cmd_minimize(
    ctx: &Ctx,
    family: &str,
    lo: Option<f64>,
    hi: Option<f64>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let kind = family_kind(family)?;
    let result = if let Some(f) = Family1d::from_kind(kind) {
        let (dlo, dhi) = f.default_bracket();
        let angle = matches!(f, Family1d::RightTriangle | Family1d::Rhombus);
        let conv = |x: f64| if angle { ctx.angle(x) } else { x };
        minimize_1d(
            f,
            (lo.map(conv).unwrap_or(dlo), hi.map(conv).unwrap_or(dhi)),
        )?
    } else if let Some(f) = Family2d::from_kind(kind) {
        if lo.is_some() || hi.is_some() {
            return Err(usage("--lo/--hi apply only to one-parameter families"));
        }
        minimize_2d(f)?
    } else {
        return Err(usage(format!(
            "family {kind} has no continuous parameter to minimize over"
        )));
    };
    let output = MinimizeOutput {
        family: kind.name(),
        result,
    };
    let r = &output.result;
    let argmin = r
        .argmin
        .iter()
        .map(f64::to_string)
        .collect::<Vec<_>>()
        .join(";");
    match ctx.format {
        Format::Json => json_line(out, &output)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "family",
                "argmin",
                "min_value",
                "iterations",
                "converged",
                "boundary_infimum",
            ])?;
            w.write_record([
                kind.name().to_string(),
                argmin,
                r.min_value.to_string(),
                r.iterations.to_string(),
                r.converged.to_string(),
                r.boundary_infimum
                    .map(|b| b.to_string())
                    .unwrap_or_default(),
            ])?;
            w.flush()?;
        }
        Format::Pretty => {
            writeln!(out, "family:     {}", kind.name())?;
            writeln!(out, "argmin:     ({})", argmin.replace(';', ", "))?;
            writeln!(out, "min value:  {}", r.min_value)?;
            writeln!(out, "iterations: {}", r.iterations)?;
            writeln!(out, "converged:  {}", r.converged)?;
            if let Some(b) = r.boundary_infimum {
                writeln!(
                    out,
                    "boundary infimum: {b} (approached at the end of the bracket)"
                )?;
            }
        }
    }
    Ok(0)
}

fn cmd_scan(
    ctx: &Ctx,
    quantity: Quantity,
    family: &Option<String>,
    lo: Option<f64>,
    hi: Option<f64>,
    n: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let (objective, (dlo, dhi), angle) = match quantity {
        Quantity::Pi => {
            let name = family
                .as_deref()
                .ok_or_else(|| usage("--objective pi needs --family"))?;
            let kind = family_kind(name)?;
            let f = Family1d::from_kind(kind).ok_or_else(|| {
                usage(format!(
                    "scan covers one-parameter families; {kind} has two"
                ))
            })?;
            let angle = matches!(f, Family1d::RightTriangle | Family1d::Rhombus);
            (ScanObjective::Pi(f), f.default_bracket(), angle)
        }
        Quantity::SemiMinor => (ScanObjective::SemiMinor, (0.01, 0.99), false),
        Quantity::ShortDiagonal => (ScanObjective::ShortDiagonal, (0.01, PI - 0.01), true),
    };
    let conv = |x: f64| if angle { ctx.angle(x) } else { x };
    let table: ScanTable = scan(
        objective,
        lo.map(conv).unwrap_or(dlo),
        hi.map(conv).unwrap_or(dhi),
        n,
    )?;
    match ctx.format {
        Format::Json => json_line(out, &table)?,
        Format::Csv => export::write_scan(out, &table)?,
        Format::Pretty => {
            writeln!(out, "objective: {}", table.objective)?;
            writeln!(out, "points:    {}", table.rows.len())?;
            for run in &table.runs {
                writeln!(
                    out,
                    "  {:?} on [{}, {}]",
                    run.trend, table.rows[run.start].x, table.rows[run.end].x
                )?;
            }
            writeln!(out, "min: {} at {}", table.min.value, table.min.x)?;
            writeln!(out, "max: {} at {}", table.max.value, table.max.x)?;
            let limit = |l: Option<f64>| {
                l.map(|v| v.to_string())
                    .unwrap_or_else(|| "diverges".into())
            };
            writeln!(
                out,
                "domain-end limits: {} / {}",
                limit(table.lower_limit),
                limit(table.upper_limit)
            )?;
        }
    }
    Ok(0)
}

fn cmd_verify(
    ctx: &Ctx,
    suite: &str,
    cfg: &SuiteConfig,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let reports: Vec<VerificationReport> = if suite == "all" {
        run_all(cfg)?
    } else {
        let s = Suite::from_name(suite).ok_or_else(|| usage(format!("unknown suite `{suite}`")))?;
        run_suite(s, cfg)?
    };
    match ctx.format {
        Format::Json => {
            for r in &reports {
                json_line(out, r)?;
            }
        }
        Format::Csv => export::write_reports(out, &reports)?,
        Format::Pretty => {
            for r in &reports {
                writeln!(
                    out,
                    "[{}] {}: {} instances, worst slack {:e}, {} equality cases",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.claim,
                    r.instances,
                    r.worst_slack,
                    r.equality_cases
                )?;
                for c in &r.counterexamples {
                    writeln!(out, "    {c}")?;
                }
            }
        }
    }
    Ok(if reports.iter().all(|r| r.pass) { 0 } else { 1 })
}

fn cmd_solids(ctx: &Ctx, layout: Layout, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows: Vec<SolidRow> = export::solid_rows();
    match (ctx.format, layout) {
        (Format::Json, _) => json_line(out, &rows)?,
        (Format::Csv, Layout::Long) => export::write_solids_long(out, &rows)?,
        (Format::Csv, Layout::Wide) => export::write_solids_wide(out, &rows)?,
        (Format::Pretty, _) => {
            writeln!(
                out,
                "{:<14} {:>20} {:>10} {:>20}",
                "solid", "fundamental measure", "table", "table value"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:<14} {:>20.15} {:>10} {:>20.15}",
                    r.solid.name(),
                    r.fundamental_measure,
                    r.closed_form,
                    r.closed_form_value
                )?;
            }
        }
    }
    Ok(0)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let ctx = Ctx {
        format: cli.format,
        degrees: cli.degrees,
    };
    match &cli.command {
        Command::Catalog(args) => cmd_catalog(&ctx, args, out),
        Command::Unitize { input, family } => cmd_unitize(&ctx, input, family, out),
        Command::Minimize { family, lo, hi } => cmd_minimize(&ctx, family, *lo, *hi, out),
        Command::Scan {
            objective,
            family,
            lo,
            hi,
            n,
        } => cmd_scan(&ctx, *objective, family, *lo, *hi, *n, out),
        Command::Verify { suite, samples } => {
            let tol = cli.tol.unwrap_or(DEFAULT_TOLERANCE);
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(usage(format!("--tol {tol} must be positive")));
            }
            let cfg = SuiteConfig {
                seed: cli.seed,
                samples: *samples,
                tol,
            };
            cmd_verify(&ctx, suite, &cfg, out)
        }
        Command::Solids { layout } => cmd_solids(&ctx, *layout, out),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
