//! Plaintext datasets: newline-delimited hex, one entry per line.
//!
//! Blank lines and `#` comments are skipped. The generator produces seeded
//! random entries so a dataset can be regenerated bit-identically from its
//! parameters.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("dataset empty")]
    Empty,
    #[error("line {line}: invalid hex entry")]
    BadHex { line: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Parse a dataset from text. Errors carry the 1-based line number.
pub fn parse_dataset(text: &str) -> Result<Vec<Vec<u8>>, DatasetError> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bytes = hex::decode(line).map_err(|_| DatasetError::BadHex { line: idx + 1 })?;
        entries.push(bytes);
    }
    if entries.is_empty() {
        return Err(DatasetError::Empty);
    }
    Ok(entries)
}

pub fn load_dataset(path: &Path) -> Result<Vec<Vec<u8>>, DatasetError> {
    parse_dataset(&std::fs::read_to_string(path)?)
}

/// Generate `count` random entries with sizes drawn uniformly from
/// `min_len..=max_len`, reproducible from `seed`. Entries must be at least
/// one byte: the file format cannot represent empty entries.
pub fn generate_dataset(count: usize, min_len: usize, max_len: usize, seed: u64) -> Vec<Vec<u8>> {
    assert!(min_len >= 1, "entries must be at least one byte");
    assert!(min_len <= max_len, "min_len must not exceed max_len");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.random_range(min_len..=max_len);
            (0..len).map(|_| rng.random()).collect()
        })
        .collect()
}

/// Render entries as hex lines, with a comment header recording the
/// generation parameters when provided.
pub fn render_dataset(entries: &[Vec<u8>], header: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(header) = header {
        out.push_str("# ");
        out.push_str(header);
        out.push('\n');
    }
    for entry in entries {
        out.push_str(&hex::encode(entry));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_hex_lines() {
        let entries = parse_dataset("00\n0102\n").unwrap();
        assert_eq!(entries, vec![vec![0x00], vec![0x01, 0x02]]);
    }

    #[test]
    fn skips_blanks_and_comments() {
        let entries = parse_dataset("# generated\n\n00\n\n  0a0b  \n").unwrap();
        assert_eq!(entries, vec![vec![0x00], vec![0x0a, 0x0b]]);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(parse_dataset(""), Err(DatasetError::Empty)));
        assert!(matches!(
            parse_dataset("# only\n\n"),
            Err(DatasetError::Empty)
        ));
    }

    #[test]
    fn bad_hex_reports_line() {
        match parse_dataset("00\nxyz\n") {
            Err(DatasetError::BadHex { line }) => assert_eq!(line, 2),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn generator_is_reproducible() {
        let a = generate_dataset(50, 4, 64, 1234);
        let b = generate_dataset(50, 4, 64, 1234);
        let c = generate_dataset(50, 4, 64, 1235);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.iter().all(|e| (4..=64).contains(&e.len())));
    }

    #[test]
    fn render_and_parse_roundtrip() {
        let entries = generate_dataset(10, 1, 16, 7);
        let text = render_dataset(&entries, Some("count=10 min=1 max=16 seed=7"));
        assert_eq!(parse_dataset(&text).unwrap(), entries);
    }
}
