//! `biquandle`: check tables, present and count link diagrams, normalize
//! terms and run the reproduction suite.
//!
//! Exit status: 0 on success, 1 on a domain failure (axiom failure, parse
//! error, failed criterion), 2 on a usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use biquandle_core::algebra::check_axioms;
use biquandle_core::{
    enumerate_biquandles, fundamental_presentation, parse_term, separate_terms, tietze_eliminate_keeping,
    topological_presentation, validate_biquandle, FiniteBiquandle, Kind, Mode,
};
use biquandle_tools::formats::{
    load_biquandle, load_diagram, load_manifest, load_presentation, read_biquandle_file, BiquandleFile, CheckReport,
    FailureRecord,
};
use biquandle_tools::verify::{Fixtures, CRITERIA};
use biquandle_tools::{count_one, run_manifest, workers};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "biquandle", version, about = "Finite biquandles and link coloring invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the biquandle axioms for a table file.
    Check {
        file: PathBuf,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the presentation of a diagram.
    Present {
        diagram: PathBuf,
        #[arg(long, default_value = "fundamental", value_parser = parse_kind)]
        kind: Kind,
        /// Run Tietze elimination on the result.
        #[arg(long)]
        simplify: bool,
        /// Generators elimination must keep (comma separated).
        #[arg(long, value_delimiter = ',')]
        keep: Vec<String>,
    },
    /// Count colorings of a diagram by a target, or run a batch manifest.
    Count {
        #[arg(required_unless_present = "manifest")]
        diagram: Option<PathBuf>,
        #[arg(required_unless_present = "manifest")]
        target: Option<PathBuf>,
        #[arg(long, default_value = "fundamental", value_parser = parse_kind)]
        mode: Mode,
        /// Force brute-force enumeration.
        #[arg(long)]
        oracle: bool,
        /// JSON manifest listing diagram and target files.
        #[arg(long, conflicts_with_all = ["diagram", "target"])]
        manifest: Option<PathBuf>,
    },
    /// Print the normal form `base ^[..] _[..]` of a term.
    Normalize { term: String },
    /// Tietze-eliminate a presentation file.
    Simplify {
        presentation: PathBuf,
        #[arg(long, value_delimiter = ',')]
        keep: Vec<String>,
    },
    /// Try to separate two terms in the biquandle a presentation defines.
    Separate {
        presentation: PathBuf,
        t1: String,
        t2: String,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
    },
    /// List every biquandle of an order (at most 4), one JSON object per line.
    Enumerate {
        order: usize,
        /// Print only the number found.
        #[arg(long)]
        count: bool,
    },
    /// Run the reproduction suite.
    VerifyPaper {
        /// List the criteria without running them.
        #[arg(long)]
        list: bool,
        /// Read fixtures from this directory instead of the built-in copies.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Run only these criteria (comma separated ids).
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse()
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn keep_refs(keep: &[String]) -> Vec<&str> {
    keep.iter().map(String::as_str).collect()
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Check { file, json } => {
            let tables = read_biquandle_file(&file).map_err(|e| e.to_string())?;
            let report = check_axioms(&tables.up, &tables.down).map_err(|e| format!("{}: {e}", file.display()))?;
            let valid = report.passed;
            let props = if valid { validate_biquandle(&tables.up, &tables.down).ok() } else { None };
            if json {
                let out = CheckReport {
                    valid,
                    failures: report.failures.iter().map(FailureRecord::from).collect(),
                    quandle: props.as_ref().map(FiniteBiquandle::is_quandle),
                    satisfies_r: props.as_ref().map(FiniteBiquandle::satisfies_r),
                };
                println!("{}", serde_json::to_string(&out).expect("report serializes"));
            } else if let Some(b) = &props {
                let yes = |x: bool| if x { "yes" } else { "no" };
                println!("valid, quandle: {}, satisfies-R: {}", yes(b.is_quandle()), yes(b.satisfies_r()));
            } else {
                println!("invalid");
                for f in &report.failures {
                    println!("  {f}");
                }
            }
            Ok(if valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Present { diagram, kind, simplify, keep } => {
            let d = load_diagram(&diagram).map_err(|e| e.to_string())?;
            let p = match kind {
                Kind::Fundamental => fundamental_presentation(&d),
                Kind::Topological => topological_presentation(&d),
            };
            let p = if simplify || !keep.is_empty() { tietze_eliminate_keeping(&p, &keep_refs(&keep)) } else { p };
            print!("{}", p.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { diagram, target, mode, oracle, manifest } => {
            if let Some(path) = manifest {
                let m = load_manifest(&path).map_err(|e| e.to_string())?;
                for r in run_manifest(&m, oracle, workers()).map_err(|e| e.to_string())? {
                    println!("{}", serde_json::to_string(&r).expect("result serializes"));
                }
                return Ok(ExitCode::SUCCESS);
            }
            let (dp, tp) = (diagram.expect("required by clap"), target.expect("required by clap"));
            let d = load_diagram(&dp).map_err(|e| e.to_string())?;
            let b = load_biquandle(&tp).map_err(|e| e.to_string())?;
            let r = count_one(&d, &dp, &b, &tp, mode, oracle);
            println!("{}", serde_json::to_string(&r).expect("result serializes"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Normalize { term } => {
            let t = parse_term(&term).map_err(|e| e.to_string())?;
            println!("{}", t.normalize());
            Ok(ExitCode::SUCCESS)
        }
        Command::Simplify { presentation, keep } => {
            let p = load_presentation(&presentation).map_err(|e| e.to_string())?;
            print!("{}", tietze_eliminate_keeping(&p, &keep_refs(&keep)).to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Separate { presentation, t1, t2, max_order } => {
            let p = load_presentation(&presentation).map_err(|e| e.to_string())?;
            let t1 = parse_term(&t1).map_err(|e| e.to_string())?;
            let t2 = parse_term(&t2).map_err(|e| e.to_string())?;
            let result = separate_terms(&p, &t1, &t2, max_order).map_err(|e| e.to_string())?;
            println!("{result}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { order, count } => {
            let all = enumerate_biquandles(order).ok_or_else(|| format!("order {order} is outside 1..=4"))?;
            if count {
                println!("{}", all.len());
            } else {
                for b in &all {
                    println!("{}", serde_json::to_string(&BiquandleFile::from_biquandle(b)).expect("tables serialize"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { list, fixtures, only } => {
            if list {
                for c in &CRITERIA {
                    println!("{} {}", c.id, c.name);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let fx = match &fixtures {
                Some(dir) => Fixtures::from_dir(dir),
                None => Fixtures::embedded(),
            };
            let mut failed = 0;
            for c in CRITERIA.iter().filter(|c| only.is_empty() || only.contains(&c.id)) {
                let outcome = c.run(&fx);
                println!("{outcome}");
                failed += usize::from(!outcome.passed);
            }
            Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
