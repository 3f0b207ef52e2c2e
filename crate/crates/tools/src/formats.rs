//! On-disk formats: biquandle tables, diagrams, presentations, count results
//! and batch manifests.
//!
//! Biquandle files are JSON objects `{"order": n, "up": [[…]], "down": [[…]]}`
//! with an optional `"labels"` array; `up[a][b]` is `a ↑ b`. Diagrams and
//! presentations use the text formats parsed by the core crate.

use std::fs;
use std::path::{Path, PathBuf};

use biquandle_core::{
    parse_pd, validate_biquandle, AxiomFailure, Diagram, DiagramError, Kind, FiniteBiquandle, Presentation, PresentationError,
    TableError, ValidationError,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: invalid JSON: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{path}: declared order {declared} but the up table has {rows} rows")]
    OrderMismatch { path: PathBuf, declared: usize, rows: usize },
    #[error("{path}: {source}")]
    Tables { path: PathBuf, source: TableError },
    #[error("{path}: not a biquandle: {source}")]
    Axioms { path: PathBuf, source: ValidationError },
    #[error("{path}: {source}")]
    Diagram { path: PathBuf, source: DiagramError },
    #[error("{path}: {source}")]
    Presentation { path: PathBuf, source: PresentationError },
    #[error("{path}: unknown mode {mode:?}")]
    BadMode { path: PathBuf, mode: String },
}

/// The JSON shape of a biquandle file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiquandleFile {
    pub order: usize,
    pub up: Vec<Vec<usize>>,
    pub down: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl BiquandleFile {
    pub fn from_biquandle(b: &FiniteBiquandle) -> Self {
        BiquandleFile {
            order: b.order(),
            up: b.table(biquandle_core::Op::Up),
            down: b.table(biquandle_core::Op::Down),
            labels: b.labels().map(<[String]>::to_vec),
        }
    }
}

/// `biquandle check --json` output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub valid: bool,
    pub failures: Vec<FailureRecord>,
    /// Present only for valid tables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quandle: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub satisfies_r: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub axiom: String,
    pub witness: Vec<usize>,
    pub left: usize,
    pub right: usize,
}

impl From<&AxiomFailure> for FailureRecord {
    fn from(f: &AxiomFailure) -> Self {
        FailureRecord { axiom: f.axiom.id().into(), witness: f.witness.clone(), left: f.left, right: f.right }
    }
}

/// One counting query's result, emitted as a single JSON object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountResult {
    pub diagram: String,
    pub target: String,
    pub mode: String,
    pub count: u64,
    pub ms: u64,
}

/// A batch of counting queries: every diagram against every target, in
/// every listed mode (both modes when omitted). Relative paths are resolved
/// against the manifest's directory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub diagrams: Vec<PathBuf>,
    pub targets: Vec<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modes: Option<Vec<String>>,
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.into(), source })
}

/// Parse biquandle JSON without checking the axioms.
pub fn parse_biquandle_file(text: &str, path: &Path) -> Result<BiquandleFile, FormatError> {
    let file: BiquandleFile =
        serde_json::from_str(text).map_err(|source| FormatError::Json { path: path.into(), source })?;
    if file.up.len() != file.order {
        return Err(FormatError::OrderMismatch { path: path.into(), declared: file.order, rows: file.up.len() });
    }
    Ok(file)
}

pub fn read_biquandle_file(path: &Path) -> Result<BiquandleFile, FormatError> {
    parse_biquandle_file(&read(path)?, path)
}

/// Read and certify a biquandle file.
pub fn load_biquandle(path: &Path) -> Result<FiniteBiquandle, FormatError> {
    biquandle_from_text(&read(path)?, path)
}

pub fn biquandle_from_text(text: &str, path: &Path) -> Result<FiniteBiquandle, FormatError> {
    let file = parse_biquandle_file(text, path)?;
    let b = validate_biquandle(&file.up, &file.down)
        .map_err(|source| FormatError::Axioms { path: path.into(), source })?;
    match file.labels {
        Some(labels) => b.with_labels(labels).map_err(|source| FormatError::Tables { path: path.into(), source }),
        None => Ok(b),
    }
}

pub fn load_diagram(path: &Path) -> Result<Diagram, FormatError> {
    parse_pd(&read(path)?).map_err(|source| FormatError::Diagram { path: path.into(), source })
}

pub fn load_presentation(path: &Path) -> Result<Presentation, FormatError> {
    Presentation::parse(&read(path)?).map_err(|source| FormatError::Presentation { path: path.into(), source })
}

pub fn load_manifest(path: &Path) -> Result<Manifest, FormatError> {
    let mut m: Manifest =
        serde_json::from_str(&read(path)?).map_err(|source| FormatError::Json { path: path.into(), source })?;
    if let Some(mode) = m.modes.iter().flatten().find(|s| s.parse::<Kind>().is_err()) {
        return Err(FormatError::BadMode { path: path.into(), mode: mode.clone() });
    }
    let dir = path.parent().unwrap_or(Path::new("."));
    for p in m.diagrams.iter_mut().chain(m.targets.iter_mut()) {
        if p.is_relative() {
            *p = dir.join(&*p);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn biquandle_json_round_trip() {
        let shift = FiniteBiquandle::from_fn(3, |a, _| (a + 1) % 3, |a, _| (a + 2) % 3).unwrap();
        let file = BiquandleFile::from_biquandle(&shift);
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(text, r#"{"order":3,"up":[[1,1,1],[2,2,2],[0,0,0]],"down":[[2,2,2],[0,0,0],[1,1,1]]}"#);
        assert_eq!(biquandle_from_text(&text, Path::new("x")).unwrap(), shift);
    }

    #[test]
    fn labels_are_optional_and_checked() {
        let text = r#"{"order":1,"up":[[0]],"down":[[0]],"labels":["e"]}"#;
        let b = biquandle_from_text(text, Path::new("x")).unwrap();
        assert_eq!(b.labels().unwrap(), ["e"]);
        let bad = r#"{"order":1,"up":[[0]],"down":[[0]],"labels":["e","f"]}"#;
        assert!(matches!(biquandle_from_text(bad, Path::new("x")), Err(FormatError::Tables { .. })));
    }

    #[test]
    fn structural_errors() {
        let p = Path::new("t.json");
        assert!(matches!(biquandle_from_text("{", p), Err(FormatError::Json { .. })));
        let short = r#"{"order":2,"up":[[0,0]],"down":[[0,0],[1,1]]}"#;
        assert!(matches!(biquandle_from_text(short, p), Err(FormatError::OrderMismatch { declared: 2, rows: 1, .. })));
        let not = r#"{"order":2,"up":[[0,0],[0,0]],"down":[[0,0],[1,1]]}"#;
        assert!(matches!(biquandle_from_text(not, p), Err(FormatError::Axioms { .. })));
    }

    #[test]
    fn count_result_round_trip() {
        let r = CountResult { diagram: "t.pd".into(), target: "r3.json".into(), mode: "fundamental".into(), count: 9, ms: 0 };
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"diagram":"t.pd","target":"r3.json","mode":"fundamental","count":9,"ms":0}"#);
        assert_eq!(serde_json::from_str::<CountResult>(&text).unwrap(), r);
    }

    #[test]
    fn check_report_round_trip() {
        let r = CheckReport {
            valid: false,
            failures: vec![FailureRecord { axiom: "axiom2-up".into(), witness: vec![0], left: 2, right: 1 }],
            quandle: None,
            satisfies_r: None,
        };
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"valid":false,"failures":[{"axiom":"axiom2-up","witness":[0],"left":2,"right":1}]}"#);
        assert_eq!(serde_json::from_str::<CheckReport>(&text).unwrap(), r);
    }

    #[test]
    fn manifest_round_trip() {
        let m = Manifest { diagrams: vec!["a.pd".into()], targets: vec!["b.json".into()], modes: None };
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<Manifest>(&text).unwrap(), m);
    }
}
