//! CSV tables.

use std::io::Write;

use unit_shapes_core::optimize::ScanTable;
use unit_shapes_core::solids::{measures, unitize_solid, PlatonicKind, PlatonicSolid};
use unit_shapes_core::verify::VerificationReport;
use unit_shapes_core::FamilyParam;

use crate::CliError;

/// Columns `family, params, Pi`.
pub fn write_catalog(out: impl Write, rows: &[(FamilyParam, f64)]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["family", "params", "Pi"])?;
    for (p, pi) in rows {
        w.write_record([
            p.kind().name().to_string(),
            p.params_string(),
            pi.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Columns `x, value`.
pub fn write_scan(out: impl Write, table: &ScanTable) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "value"])?;
    for row in &table.rows {
        w.write_record([row.x.to_string(), row.value.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// One unit Platonic solid with measures from its vertex model.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SolidRow {
    pub solid: PlatonicKind,
    pub edge_length: f64,
    pub volume: f64,
    pub surface_area: f64,
    pub inradius: f64,
    pub fundamental_measure: f64,
    pub closed_form: &'static str,
    pub closed_form_value: f64,
}

pub fn solid_rows() -> Vec<SolidRow> {
    PlatonicKind::ALL
        .into_iter()
        .map(|kind| {
            let unit = unitize_solid(&PlatonicSolid {
                kind,
                edge_length: 1.0,
            });
            let m = measures(&unit);
            SolidRow {
                solid: kind,
                edge_length: unit.edge_length,
                volume: m.volume,
                surface_area: m.surface_area,
                inradius: m.inradius,
                fundamental_measure: m.fundamental_measure,
                closed_form: kind.table_symbol(),
                closed_form_value: kind.table_value(),
            }
        })
        .collect()
}

fn title(kind: PlatonicKind) -> String {
    let name = kind.name();
    name[..1].to_uppercase() + &name[1..]
}

/// One row per solid.
pub fn write_solids_long(out: impl Write, rows: &[SolidRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "solid",
        "fundamental_measure",
        "closed_form",
        "closed_form_value",
        "volume",
        "surface_area",
        "inradius",
    ])?;
    for r in rows {
        w.write_record([
            title(r.solid),
            r.fundamental_measure.to_string(),
            r.closed_form.to_string(),
            r.closed_form_value.to_string(),
            r.volume.to_string(),
            r.surface_area.to_string(),
            r.inradius.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Solids as columns, a single `Fundamental measure` row.
pub fn write_solids_wide(out: impl Write, rows: &[SolidRow]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["Platonic solid".to_string()];
    header.extend(rows.iter().map(|r| title(r.solid)));
    w.write_record(&header)?;
    let mut values = vec!["Fundamental measure".to_string()];
    values.extend(rows.iter().map(|r| r.fundamental_measure.to_string()));
    w.write_record(&values)?;
    w.flush()?;
    Ok(())
}

/// Columns `claim, instances, worst_slack, pass, failed, equality_cases`.
pub fn write_reports(out: impl Write, reports: &[VerificationReport]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "claim",
        "instances",
        "worst_slack",
        "pass",
        "failed",
        "equality_cases",
    ])?;
    for r in reports {
        w.write_record([
            r.claim.clone(),
            r.instances.to_string(),
            r.worst_slack.to_string(),
            r.pass.to_string(),
            r.failed.to_string(),
            r.equality_cases.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
