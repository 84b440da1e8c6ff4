//! Command-line driver.
//!
//! Every command writes line-delimited JSON records. Exit status: 0 when
//! nothing failed, 1 when some record has verdict `fails`, 2 for invalid
//! input or configuration, 3 when an enumeration cap was hit.

mod commands;
mod options;

use std::io::Write;

use clap::Parser;
use rayon::prelude::*;
use serde_json::{json, Value};

pub use options::{Cli, Command, Options};

use crate::catalog::load_catalog;
use crate::error::{Error, Result};
use crate::graph::graph6::parse_graph6;
use crate::graph::{parse_family, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// An input graph and where it came from.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub source: Value,
}

fn error_record(e: &Error) -> Value {
    json!({
        "error": e.to_string(),
        "error_kind": if e.is_cap_exceeded() { "cap-exceeded" } else { "invalid" },
    })
}

fn error_status(e: &Error) -> i32 {
    if e.is_cap_exceeded() {
        EXIT_CAP
    } else {
        EXIT_INVALID
    }
}

/// Exit status implied by a finished record stream.
pub fn stream_status(records: &[Value]) -> i32 {
    if records.iter().any(|r| r["verdict"] == "fails") {
        return EXIT_VIOLATION;
    }
    if records.iter().any(|r| r["error_kind"] == "cap-exceeded") {
        return EXIT_CAP;
    }
    if records.iter().any(|r| r.get("error").is_some()) {
        return EXIT_INVALID;
    }
    EXIT_OK
}

fn load_instances(opts: &Options, diagnostics: &mut dyn Write) -> Result<Vec<Instance>> {
    let sources = [opts.family.is_some(), opts.graph6.is_some(), opts.catalog.is_some()];
    match sources.iter().filter(|&&s| s).count() {
        1 => {}
        0 => return Err(Error::Config("give one of --family, --graph6 or --catalog".into())),
        _ => {
            return Err(Error::Config(
                "--family, --graph6 and --catalog are mutually exclusive".into(),
            ))
        }
    }
    if let Some(spec) = &opts.family {
        let family = parse_family(spec)?;
        return Ok(vec![Instance {
            graph: family.build()?,
            source: json!({ "family": family.to_string() }),
        }]);
    }
    if let Some(text) = &opts.graph6 {
        return Ok(vec![Instance {
            graph: parse_graph6(text)?,
            source: json!({}),
        }]);
    }
    let path = opts.catalog.as_ref().expect("one source is set");
    let catalog = load_catalog(path, opts.strict)?;
    for skipped in &catalog.skipped {
        // lenient mode: report and move on
        let _ = writeln!(
            diagnostics,
            "warning: skipping catalog line {}: {}",
            skipped.line, skipped.error
        );
    }
    Ok(catalog
        .entries
        .into_iter()
        .map(|e| Instance {
            graph: e.graph,
            source: json!({ "line": e.line }),
        })
        .collect())
}

/// Runs `work` on every instance on `workers` threads and returns the
/// records in input order, each tagged with its graph and source.
fn map_instances<F>(instances: &[Instance], workers: usize, work: F) -> Result<Vec<Value>>
where
    F: Fn(&Graph) -> Vec<Value> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot start {workers} workers: {e}")))?;
    let per_instance: Vec<Vec<Value>> = pool.install(|| {
        instances
            .par_iter()
            .map(|inst| {
                work(&inst.graph)
                    .into_iter()
                    .map(|mut record| {
                        record["graph6"] = json!(inst.graph.to_graph6());
                        if let Value::Object(src) = &inst.source {
                            for (k, v) in src {
                                record[k] = v.clone();
                            }
                        }
                        record
                    })
                    .collect()
            })
            .collect()
    });
    Ok(per_instance.into_iter().flatten().collect())
}

/// Executes a parsed command line, writing records to `out` (or the
/// `--out` file) and warnings to `diagnostics`. Returns the exit status.
pub fn run(cli: Cli, out: &mut dyn Write, diagnostics: &mut dyn Write) -> i32 {
    match run_inner(cli, out, diagnostics) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(diagnostics, "error: {e}");
            error_status(&e)
        }
    }
}

fn run_inner(cli: Cli, out: &mut dyn Write, diagnostics: &mut dyn Write) -> Result<i32> {
    let opts = cli.options.resolve()?;
    let ctx = commands::Context::new(cli.command, &opts)?;
    let records = match cli.command {
        Command::Sweep => vec![commands::sweep(&opts, &ctx)?],
        command => {
            let instances = load_instances(&opts, diagnostics)?;
            let workers = opts.workers.unwrap_or(1);
            map_instances(&instances, workers, |g| commands::per_graph(command, g, &ctx))?
        }
    };
    let mut file;
    let sink: &mut dyn Write = match &opts.out {
        Some(path) => {
            file = std::io::BufWriter::new(std::fs::File::create(path)?);
            &mut file
        }
        None => out,
    };
    for record in &records {
        serde_json::to_writer(&mut *sink, record)?;
        sink.write_all(b"\n")?;
    }
    sink.flush()?;
    Ok(stream_status(&records))
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let status = run(cli, &mut out, &mut std::io::stderr());
    let _ = out.flush();
    status
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, Vec<Value>) {
        let cli = Cli::try_parse_from(std::iter::once("domcount").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let status = run(cli, &mut out, &mut err);
        let records = String::from_utf8(out)
            .unwrap()
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        (status, records)
    }

    #[test]
    fn count_c4() {
        let (status, records) = run_args(&["count", "--family", "cycle:4", "--structure", "ds"]);
        assert_eq!(status, 0);
        assert_eq!(records.len(), 1);
        assert_eq!(records[0]["value"], "11");
        assert_eq!(records[0]["graph6"], "Cl");
    }

    #[test]
    fn poly_k3() {
        let (status, records) = run_args(&["poly", "--family", "complete:3"]);
        assert_eq!(status, 0);
        assert_eq!(records[0]["coefficients"], json!(["0", "3", "3", "1"]));
    }

    #[test]
    fn tree_sweep() {
        let (status, records) = run_args(&["sweep", "--trees", "6", "--check", "tree-extremal"]);
        assert_eq!(status, 0);
        assert_eq!(records[0]["instances"], 1296);
        assert_eq!(records[0]["violations"], 0);
    }

    #[test]
    fn source_errors() {
        let (status, _) = run_args(&["count"]);
        assert_eq!(status, EXIT_INVALID);
        let (status, _) = run_args(&["count", "--family", "cycle:4", "--graph6", "Cl"]);
        assert_eq!(status, EXIT_INVALID);
        let (status, _) = run_args(&["count", "--family", "cycle:40"]);
        assert_eq!(status, EXIT_CAP);
    }

    #[test]
    fn status_from_records() {
        assert_eq!(stream_status(&[json!({"verdict": "holds"})]), 0);
        assert_eq!(
            stream_status(&[
                json!({"verdict": "fails"}),
                json!({"error": "x", "error_kind": "cap-exceeded"})
            ]),
            1
        );
        assert_eq!(stream_status(&[json!({"error": "x", "error_kind": "cap-exceeded"})]), 3);
        assert_eq!(stream_status(&[json!({"error": "x", "error_kind": "invalid"})]), 2);
    }
}
