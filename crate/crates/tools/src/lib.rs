//! Std companion to `biquandle-core`: file formats, batch counting and the
//! reproduction suite used by the `biquandle` command-line tool.

pub mod formats;
pub mod verify;

use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::thread;
use std::time::Instant;

use biquandle_core::{count_colorings, oracle_count, Diagram, FiniteBiquandle, Mode};

use crate::formats::{load_biquandle, load_diagram, CountResult, FormatError, Manifest};

/// Environment variable capping the number of counting threads.
pub const WORKERS_VAR: &str = "BIQUANDLE_WORKERS";

/// Worker count: `BIQUANDLE_WORKERS` if set to a positive integer, else the
/// available parallelism.
pub fn workers() -> usize {
    std::env::var(WORKERS_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, usize::from))
}

/// Count one diagram against one target, timing the call.
pub fn count_one(
    diagram: &Diagram,
    diagram_name: &Path,
    target: &FiniteBiquandle,
    target_name: &Path,
    mode: Mode,
    oracle: bool,
) -> CountResult {
    let start = Instant::now();
    let count = if oracle { oracle_count(diagram, target, mode) } else { count_colorings(diagram, target, mode) };
    CountResult {
        diagram: diagram_name.display().to_string(),
        target: target_name.display().to_string(),
        mode: mode.to_string(),
        count,
        ms: start.elapsed().as_millis() as u64,
    }
}

/// Run every query of a manifest. Results come back in manifest order
/// (diagram, then target, then mode) regardless of the worker count.
pub fn run_manifest(m: &Manifest, oracle: bool, workers: usize) -> Result<Vec<CountResult>, FormatError> {
    let diagrams: Vec<(PathBuf, Diagram)> =
        m.diagrams.iter().map(|p| Ok((p.clone(), load_diagram(p)?))).collect::<Result<_, FormatError>>()?;
    let targets: Vec<(PathBuf, FiniteBiquandle)> =
        m.targets.iter().map(|p| Ok((p.clone(), load_biquandle(p)?))).collect::<Result<_, FormatError>>()?;
    let modes: Vec<Mode> = match &m.modes {
        None => vec![Mode::Fundamental, Mode::Topological],
        Some(names) => names
            .iter()
            .map(|s| s.parse::<Mode>().map_err(|_| FormatError::BadMode { path: "manifest".into(), mode: s.clone() }))
            .collect::<Result<_, _>>()?,
    };
    let mut jobs = Vec::new();
    for d in 0..diagrams.len() {
        for t in 0..targets.len() {
            for &mode in &modes {
                jobs.push((d, t, mode));
            }
        }
    }
    let results: Mutex<Vec<Option<CountResult>>> = Mutex::new(vec![None; jobs.len()]);
    let next = Mutex::new(0usize);
    thread::scope(|s| {
        for _ in 0..workers.clamp(1, jobs.len().max(1)) {
            s.spawn(|| loop {
                let k = {
                    let mut n = next.lock().expect("job counter poisoned");
                    let k = *n;
                    *n += 1;
                    k
                };
                let Some(&(d, t, mode)) = jobs.get(k) else { break };
                let (dp, diagram) = &diagrams[d];
                let (tp, target) = &targets[t];
                let r = count_one(diagram, dp, target, tp, mode, oracle);
                results.lock().expect("result table poisoned")[k] = Some(r);
            });
        }
    });
    Ok(results.into_inner().expect("result table poisoned").into_iter().map(|r| r.expect("every job ran")).collect())
}
