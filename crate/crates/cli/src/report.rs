use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}:{line}:{column}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{}{message}", context.as_ref().map(|p| format!("{}: ", p.display())).unwrap_or_default())]
    Validation {
        context: Option<PathBuf>,
        message: String,
        /// Partial results to keep in the report, such as a history up to
        /// a failing step.
        partial: Option<Value>,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn parse(path: &Path, err: serde_json::Error) -> Self {
        CliError::Parse {
            path: path.to_owned(),
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }

    pub fn validation(path: Option<&Path>, err: impl std::fmt::Display) -> Self {
        CliError::Validation {
            context: path.map(Path::to_owned),
            message: err.to_string(),
            partial: None,
        }
    }

    pub fn with_partial(self, value: Value) -> Self {
        match self {
            CliError::Validation {
                context, message, ..
            } => CliError::Validation {
                context,
                message,
                partial: Some(value),
            },
            other => other,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation { .. } => 1,
            _ => 2,
        }
    }

    fn to_value(&self) -> Value {
        let (kind, mut extra) = match self {
            CliError::Io { path, .. } => ("io_error", json!({ "file": path })),
            CliError::Parse {
                path, line, column, ..
            } => (
                "parse_error",
                json!({ "file": path, "line": line, "column": column }),
            ),
            CliError::Validation { context, .. } => {
                ("validation_error", json!({ "file": context }))
            }
            CliError::Usage(_) => ("usage_error", json!({})),
        };
        extra["kind"] = json!(kind);
        extra["message"] = json!(self.to_string());
        extra
    }
}

pub fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

/// Builds the report object. `serde_json` maps keep keys sorted, so the
/// rendering is canonical.
pub fn render(
    command: Value,
    seed: u64,
    outcome: &Result<Value, CliError>,
    elapsed: Duration,
) -> String {
    let mut report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "seed": seed,
        "timing": { "elapsed_ms": elapsed.as_secs_f64() * 1e3 },
    });
    match outcome {
        Ok(result) => report["result"] = result.clone(),
        Err(err) => {
            report["error"] = err.to_value();
            if let CliError::Validation {
                partial: Some(p), ..
            } = err
            {
                report["result"] = p.clone();
            }
        }
    }
    crate::input::canonical(&report)
}
