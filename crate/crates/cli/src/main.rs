//! `primex`: JSON front end for the primex library.
//!
//! Every invocation prints one envelope with sorted keys:
//! `{"args", "command", "error", "payload", "status"}`, plus `elapsed_ms` under
//! `--timing`. The exit code is 0 exactly when `status` is `ok`.

mod cli;
mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use cli::{Cli, Command, ExtCommand, GroupCommand, QuarticCommand};
use commands::Failure;

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Group(GroupCommand::Info { .. }) => "group info",
        Command::Group(GroupCommand::Affine { .. }) => "group affine",
        Command::Cohom(_) => "cohom",
        Command::Ext(ExtCommand::Complements { .. }) => "ext complements",
        Command::Enumerate(_) => "enumerate",
        Command::Quartic(QuarticCommand::Classify { .. }) => "quartic classify",
        Command::Quartic(QuarticCommand::Scan { .. }) => "quartic scan",
    }
}

fn envelope(command: Value, args: &[String], outcome: Result<Value, Failure>) -> Value {
    match outcome {
        Ok(payload) => json!({
            "command": command,
            "args": args,
            "status": "ok",
            "payload": payload,
            "error": null,
        }),
        Err(f) => json!({
            "command": command,
            "args": args,
            "status": "error",
            "payload": null,
            "error": { "code": f.code, "message": f.message },
        }),
    }
}

fn emit(v: &Value) {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    // a closed pipe is not reported; the exit code still carries the status
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

/// Caps the global rayon pool at `PRIMEX_THREADS` when set.
fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("PRIMEX_THREADS") else {
        return Ok(());
    };
    let threads = raw
        .trim()
        .parse::<usize>()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure {
            code: "USAGE",
            message: format!("PRIMEX_THREADS must be a positive integer, got `{raw}`"),
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure {
            code: "USAGE",
            message: e.to_string(),
        })
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).filter(|a| a != "--timing").collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let failure = Failure {
                code: "USAGE",
                message: e.kind().to_string(),
            };
            emit(&envelope(Value::Null, &args, Err(failure)));
            eprint!("{e}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let outcome = configure_threads().and_then(|()| commands::run(&cli.command));
    let ok = outcome.is_ok();
    let mut out = envelope(json!(command_name(&cli.command)), &args, outcome);
    if cli.timing {
        out["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
    }
    emit(&out);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
