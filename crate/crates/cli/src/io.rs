use std::fs;
use std::path::Path;

use anyhow::Context;
use matrixcs::corpus::RunReport;
use matrixcs::CMatrix;

use crate::exit::Failure;

pub fn read_matrix(path: &Path) -> Result<CMatrix, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(|e| Failure::usage(format!("{e:#}")))?;
    CMatrix::from_json(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(|e| Failure::usage(format!("{e:#}")))
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub const CSV_HEADER: [&str; 11] =
    ["check_id", "trial", "dim", "seed", "lhs", "rhs", "margin", "pass", "status", "shift", "error"];

/// One row per outcome under [`CSV_HEADER`].
pub fn report_csv(report: &RunReport) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for o in &report.outcomes {
        let status = serde_json::to_value(o.status)?.as_str().unwrap_or_default().to_string();
        w.write_record([
            o.check_id.clone(),
            o.trial.to_string(),
            o.dim.to_string(),
            o.seed.to_string(),
            opt(o.lhs),
            opt(o.rhs),
            opt(o.margin),
            o.pass.to_string(),
            status,
            opt(o.shift),
            o.error.clone().unwrap_or_default(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
