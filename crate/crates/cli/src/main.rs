mod config;
mod run;

use clap::Parser;
use config::{Cli, Command, Format, OutputArgs};
use run::{CliError, Report};
use std::process::ExitCode;

const THREADS_VAR: &str = "DUPLICIAL_THREADS";

fn init_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var(THREADS_VAR) else { return Ok(()) };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_VAR} must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Usage(e.to_string()))
}

fn render(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => serde_json::to_string_pretty(report)
            .map(|s| s + "\n")
            .map_err(|e| CliError::Output(e.to_string())),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let out = (|| {
                w.write_record(&report.table.header)?;
                for row in &report.table.rows {
                    w.write_record(row)?;
                }
                w.into_inner().map_err(|e| e.into_error().into())
            })();
            let bytes = out.map_err(|e: csv::Error| CliError::Output(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
        }
    }
}

fn emit(report: &Report, out: &OutputArgs) -> Result<(), CliError> {
    let text = render(report, out.format)?;
    match &out.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Output(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = init_threads().and_then(|()| {
        let (report, out) = match &cli.command {
            Command::Check(a) => (run::check(a)?, &a.out),
            Command::Complex(a) => (run::complex(a)?, &a.out),
            Command::Homology(a) => (run::homology(a)?, &a.out),
            Command::Setlab(a) => (run::setlab(a)?, &a.out),
        };
        emit(&report, out)?;
        Ok(report)
    });
    match outcome {
        Ok(r) if r.passed => ExitCode::SUCCESS,
        Ok(r) => {
            for e in r.checks.failures() {
                eprintln!("fail: {}{}", e.name, e.witness.as_ref().map(|w| format!(" ({w})")).unwrap_or_default());
            }
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
