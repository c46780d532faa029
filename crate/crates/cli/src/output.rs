//! Deterministic CSV/JSON emission: fixed header, comma separator, LF line
//! endings, shortest-round-trip float formatting (Rust's default `Display`),
//! data to stdout or a file.

use std::io::Write;
use std::path::PathBuf;

use crate::{CliError, CliResult};

/// A CSV document under construction.
pub struct CsvTable {
    buf: String,
}

impl CsvTable {
    pub fn new(header: &str) -> Self {
        let mut buf = String::with_capacity(4096);
        buf.push_str(header);
        buf.push('\n');
        CsvTable { buf }
    }

    pub fn row(&mut self, fields: &[String]) {
        self.buf.push_str(&fields.join(","));
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

/// A JSON array of row objects.
pub struct JsonRows {
    rows: Vec<serde_json::Value>,
}

impl JsonRows {
    pub fn new() -> Self {
        JsonRows { rows: Vec::new() }
    }

    pub fn push(&mut self, v: serde_json::Value) {
        self.rows.push(v);
    }

    pub fn finish(self) -> String {
        format!("{:#}\n", serde_json::Value::Array(self.rows))
    }
}

/// Write to the given path, or stdout when absent.
pub fn write_output(out: &Option<PathBuf>, content: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Failure(format!("writing {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Failure(format!("writing stdout: {e}")))
        }
    }
}
