//! Stored example reports under `golden/v1/`, one file per example id.
//!
//! The directory defaults to the copy shipped with the crate sources and
//! can be redirected with `ENGEL_LAB_GOLDEN_DIR`.

use std::path::PathBuf;

use engel_core::lab::ExampleId;
use serde_json::{json, Value};

use crate::{LabError, SCHEMA};

pub const DIR_ENV: &str = "ENGEL_LAB_GOLDEN_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GoldenOutcome {
    Match,
    Mismatch,
    /// No file stored for this id.
    Absent,
}

impl GoldenOutcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Match => "match",
            Self::Mismatch => "mismatch",
            Self::Absent => "absent",
        }
    }
}

pub fn dir() -> PathBuf {
    std::env::var_os(DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/golden/v1")))
}

pub fn file_name(id: ExampleId) -> String {
    match id {
        ExampleId::Dihedral(n) => format!("dihedral-{n}.json"),
        other => format!("{other}.json"),
    }
}

fn document(id: ExampleId, report: &Value) -> Value {
    json!({ "schema": SCHEMA, "example": id.to_string(), "report": report })
}

/// Compares a freshly computed example report with the stored one.
pub fn compare(id: ExampleId, report: &Value) -> Result<GoldenOutcome, LabError> {
    let path = dir().join(file_name(id));
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(GoldenOutcome::Absent),
        Err(source) => return Err(LabError::Golden { path: path.display().to_string(), source }),
    };
    let stored: Value = serde_json::from_str(&text)
        .map_err(|source| LabError::GoldenJson { path: path.display().to_string(), source })?;
    Ok(if stored == document(id, report) { GoldenOutcome::Match } else { GoldenOutcome::Mismatch })
}

pub fn write(id: ExampleId, report: &Value) -> std::io::Result<PathBuf> {
    let dir = dir();
    std::fs::create_dir_all(&dir)?;
    let path = dir.join(file_name(id));
    let mut text = serde_json::to_string_pretty(&document(id, report)).expect("json");
    text.push('\n');
    std::fs::write(&path, text)?;
    Ok(path)
}
