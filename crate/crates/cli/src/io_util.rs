//! Stream and credential helpers shared by the commands.

use std::io::{IsTerminal, Read, Write};
use std::path::{Path, PathBuf};

use crate::{CliError, ExitCode};

/// Decode a `--key`/`--nonce` style flag: inline hex, or `env:NAME` naming an
/// environment variable holding hex. Error messages never echo the value.
pub fn credential_bytes(flag: &str, value: &str) -> Result<Vec<u8>, CliError> {
    let hex_str = match value.strip_prefix("env:") {
        Some(name) => std::env::var(name).map_err(|_| {
            CliError::new(
                ExitCode::Usage,
                format!("--{flag}: environment variable `{name}` is not set"),
            )
        })?,
        None => value.to_string(),
    };
    hex::decode(hex_str.trim())
        .map_err(|_| CliError::new(ExitCode::Usage, format!("--{flag}: invalid hex")))
}

/// Plain hex flag (associated data and similar non-secret values).
pub fn hex_bytes(flag: &str, value: &str) -> Result<Vec<u8>, CliError> {
    hex::decode(value).map_err(|_| CliError::new(ExitCode::Usage, format!("--{flag}: invalid hex")))
}

pub fn read_input(path: Option<&Path>) -> Result<Vec<u8>, CliError> {
    let mut data = Vec::new();
    match path {
        Some(path) => {
            data = std::fs::read(path).map_err(|e| {
                CliError::new(ExitCode::ParseIo, format!("{}: {e}", path.display()))
            })?;
        }
        None => {
            std::io::stdin()
                .read_to_end(&mut data)
                .map_err(|e| CliError::new(ExitCode::ParseIo, format!("stdin: {e}")))?;
        }
    }
    Ok(data)
}

/// Whether byte output on this sink should be hex-encoded.
pub fn want_hex(format: crate::args::DataFormat, output: Option<&PathBuf>) -> bool {
    match format {
        crate::args::DataFormat::Hex => true,
        crate::args::DataFormat::Bin => false,
        crate::args::DataFormat::Auto => output.is_none() && std::io::stdout().is_terminal(),
    }
}

pub fn write_output(path: Option<&Path>, bytes: &[u8], as_hex: bool) -> Result<(), CliError> {
    let rendered;
    let payload = if as_hex {
        rendered = format!("{}\n", hex::encode(bytes));
        rendered.as_bytes()
    } else {
        bytes
    };
    match path {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| CliError::new(ExitCode::ParseIo, format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(payload)
                .and_then(|_| out.flush())
                .map_err(|e| CliError::new(ExitCode::ParseIo, format!("stdout: {e}")))
        }
    }
}

pub fn write_text(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    write_output(path, text.as_bytes(), false)
}
