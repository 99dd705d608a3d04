//! Errors, digests and report rendering.

use std::fmt;
use std::path::Path;

use manin_core::{Error, Report};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable, malformed or mismatched input; exit 2.
    Input(String),
    /// A construction's mathematical precondition failed; exit 1.
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Math(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_)
            | Error::PostCheck(_)
            | Error::VerdictDisagreement { .. }
            | Error::DegenerateForm => CliError::Math(e.to_string()),
            Error::Dimension(_)
            | Error::Parse(_)
            | Error::Schema(_)
            | Error::NonSymmetricForm
            | Error::WrongDegree { .. }
            | Error::UnknownEntry(_) => CliError::Input(e.to_string()),
        }
    }
}

pub fn read_input(path: &Path) -> Result<(String, String), CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let digest = sha256_hex(&bytes);
    let text = String::from_utf8(bytes).map_err(|_| CliError::Input(format!("{}: not UTF-8", path.display())))?;
    Ok((text, digest))
}

pub fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Machine-readable result of one command.
#[derive(Serialize)]
pub struct CommandReport<'a> {
    pub report_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_sha256: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputFile>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<&'a Report>,
}

#[derive(Serialize)]
pub struct OutputFile {
    pub path: String,
    pub kind: String,
    pub sha256: String,
}

pub fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
}
