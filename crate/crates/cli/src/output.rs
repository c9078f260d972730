use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use qdilog::Error;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    Failed = 1,
    Usage = 2,
    Domain = 3,
    NonConvergence = 4,
}

#[derive(Debug)]
pub struct Failure {
    pub exit: Exit,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            exit: Exit::Usage,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = match e {
            Error::InvalidPrecision { .. } | Error::Parse { .. } => Exit::Usage,
            Error::Pole { .. } | Error::Domain { .. } | Error::UnusableData(_) | Error::NonFinite(_) => Exit::Domain,
            Error::NonConvergence { .. } | Error::Divergence { .. } | Error::UnstableResidue { .. } => {
                Exit::NonConvergence
            }
        };
        Failure {
            exit,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

pub type CmdResult<T> = Result<T, Failure>;

/// Pretty JSON with a trailing newline; re-serializing parsed output reproduces it.
pub fn json_text(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn csv_text(header: &[&str], rows: &[Vec<String>]) -> CmdResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Failure::usage(e.to_string());
    w.write_record(header).map_err(io_err)?;
    for r in rows {
        w.write_record(r).map_err(io_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

pub fn emit(text: &str, out: Option<&Path>) -> CmdResult<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}
