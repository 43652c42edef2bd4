use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use tracing::info;
use tracing_subscriber::EnvFilter;

use qcurve_cli::{analyze_batch, parse_records, QuinticRecord};
use qcurve_core::report::{self, VerificationReport, VerifyOptions};
use qcurve_core::Error;

const LOG_ENV: &str = "QCURVE_LOG";

#[derive(Parser)]
#[command(name = "qcurve", version, about = "Exact checks for icosahedral quintics and the Q-curves E_t")]
struct Cli {
    /// Write the JSON output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record wall time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, j-candidates, t and the 5-adic hypothesis for quintics.
    Analyze {
        /// JSON-lines file with {"label"?, "A"?, "B", "C"} per line.
        #[arg(long, conflicts_with_all = ["a", "b", "c"])]
        file: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "c")]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "b")]
        c: Option<String>,
        /// Emit the report and per-quintic records as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run a named suite: icosa, klein-link, qcurve, repn, hecke, localfield, all.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        height: u32,
    },
    /// Recompute the parameters t of the table of principal quintics.
    Table,
}

#[derive(Serialize)]
struct AnalyzeOutput<'a> {
    report: &'a VerificationReport,
    records: &'a [qcurve_cli::Analysis],
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.to_string()),
                _ => Ok(()),
            }
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}

fn usage(e: Error) -> String {
    e.to_string()
}

fn run(cli: Cli) -> Result<bool, String> {
    let start = Instant::now();
    let stamp = |r: &mut VerificationReport| {
        if cli.timing {
            r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
        }
    };
    match cli.command {
        Command::Analyze { file, a, b, c, json } => {
            let records = match (file, b, c) {
                (Some(path), _, _) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    parse_records(&text).map_err(usage)?
                }
                (None, Some(b), Some(c)) => vec![QuinticRecord { label: None, a, b, c }],
                _ => return Err("analyze needs --file or --b and --c".into()),
            };
            info!(records = records.len(), "analyzing");
            let (mut report, analyses) = analyze_batch(&records).map_err(usage)?;
            stamp(&mut report);
            let text = if json {
                to_json(&AnalyzeOutput { report: &report, records: &analyses })
            } else {
                analyses
                    .iter()
                    .map(|a| {
                        let label = a.label.clone().unwrap_or_default();
                        let t = a.t.as_deref().unwrap_or("-");
                        let h = a.hypothesis.map_or("-".to_string(), |h| h.to_string());
                        let err = if a.errors.is_empty() { String::new() } else { format!("  [{}]", a.errors.join("; ")) };
                        format!("{label}\tA={} B={} C={}\tdisc={}\tt={t}\thypothesis={h}{err}", a.a, a.b, a.c, a.disc)
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            emit(&cli.out, &text)?;
            Ok(report.passed())
        }
        Command::Verify { suite, samples, seed, height } => {
            let opts = VerifyOptions { samples, seed, height };
            info!(%suite, samples, seed, height, "verifying");
            let mut r = report::run_suite(&suite, &opts).map_err(usage)?;
            stamp(&mut r);
            emit(&cli.out, &to_json(&r))?;
            Ok(r.passed())
        }
        Command::Table => {
            let mut r = report::table_report();
            stamp(&mut r);
            emit(&cli.out, &to_json(&r))?;
            Ok(r.passed())
        }
    }
}

fn main() -> ExitCode {
    tracing_subscriber::fmt()
        .with_env_filter(EnvFilter::try_from_env(LOG_ENV).unwrap_or_else(|_| EnvFilter::new("warn")))
        .with_writer(std::io::stderr)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
