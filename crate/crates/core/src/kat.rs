//! Known-answer-test files: parsing and bit-exact replay.
//!
//! Three record layouts are supported, all blank-line separated `Name = hex`
//! groups:
//!
//! - AEAD: `Count`, `Key`, `Nonce`, `PT`, `AD`, `CT` where `CT` is the
//!   ciphertext with the tag appended.
//! - Hash: `Count`, `Msg`, `MD`.
//! - Block cipher: `Key`, `PT`, `CT` (single block).

use std::collections::HashMap;
use std::path::Path;

use thiserror::Error;

use crate::aes128;
use crate::ascon::aead::{self, AeadParams, AuthTag, Nonce, Sealed, SecretKey};
use crate::registry::HashAlgo;

#[derive(Debug, Error)]
pub enum KatError {
    #[error("kat file contains no records")]
    NoRecords,
    #[error("record {record}: missing field {field}")]
    MissingField { record: usize, field: &'static str },
    #[error("line {line}: expected `Name = value`")]
    BadLine { line: usize },
    #[error("line {line}: invalid hex in {field}")]
    BadHex { line: usize, field: String },
    #[error("line {line}: invalid count")]
    BadCount { line: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone)]
pub struct AeadRecord {
    pub count: u64,
    pub key: Vec<u8>,
    pub nonce: Vec<u8>,
    pub pt: Vec<u8>,
    pub ad: Vec<u8>,
    /// Ciphertext with the tag appended.
    pub ct: Vec<u8>,
}

#[derive(Debug, Clone)]
pub struct HashRecord {
    pub count: u64,
    pub msg: Vec<u8>,
    pub md: Vec<u8>,
}

#[derive(Debug, Clone)]
pub struct BlockRecord {
    pub key: Vec<u8>,
    pub pt: Vec<u8>,
    pub ct: Vec<u8>,
}

/// Outcome of replaying one record.
#[derive(Debug, Clone)]
pub struct KatOutcome {
    pub count: u64,
    pub ok: bool,
    pub detail: Option<String>,
}

struct RawRecord {
    index: usize,
    fields: HashMap<String, (usize, String)>,
}

fn split_records(text: &str) -> Result<Vec<RawRecord>, KatError> {
    let mut records = Vec::new();
    let mut current: Option<RawRecord> = None;
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() {
            if let Some(rec) = current.take() {
                records.push(rec);
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let Some((name, value)) = line.split_once('=') else {
            return Err(KatError::BadLine { line: line_no });
        };
        let rec = current.get_or_insert_with(|| RawRecord {
            index: records.len() + 1,
            fields: HashMap::new(),
        });
        rec.fields
            .insert(name.trim().to_string(), (line_no, value.trim().to_string()));
    }
    if let Some(rec) = current.take() {
        records.push(rec);
    }
    if records.is_empty() {
        return Err(KatError::NoRecords);
    }
    Ok(records)
}

impl RawRecord {
    fn hex_field(&self, field: &'static str) -> Result<Vec<u8>, KatError> {
        let (line, value) = self.fields.get(field).ok_or(KatError::MissingField {
            record: self.index,
            field,
        })?;
        hex::decode(value).map_err(|_| KatError::BadHex {
            line: *line,
            field: field.to_string(),
        })
    }

    fn count_field(&self) -> Result<u64, KatError> {
        match self.fields.get("Count") {
            Some((line, value)) => value
                .parse()
                .map_err(|_| KatError::BadCount { line: *line }),
            // Block records carry no Count; number them by position.
            None => Ok(self.index as u64),
        }
    }
}

pub fn parse_aead(text: &str) -> Result<Vec<AeadRecord>, KatError> {
    split_records(text)?
        .iter()
        .map(|rec| {
            Ok(AeadRecord {
                count: rec.count_field()?,
                key: rec.hex_field("Key")?,
                nonce: rec.hex_field("Nonce")?,
                pt: rec.hex_field("PT")?,
                ad: rec.hex_field("AD")?,
                ct: rec.hex_field("CT")?,
            })
        })
        .collect()
}

pub fn parse_hash(text: &str) -> Result<Vec<HashRecord>, KatError> {
    split_records(text)?
        .iter()
        .map(|rec| {
            Ok(HashRecord {
                count: rec.count_field()?,
                msg: rec.hex_field("Msg")?,
                md: rec.hex_field("MD")?,
            })
        })
        .collect()
}

pub fn parse_block(text: &str) -> Result<Vec<BlockRecord>, KatError> {
    split_records(text)?
        .iter()
        .map(|rec| {
            Ok(BlockRecord {
                key: rec.hex_field("Key")?,
                pt: rec.hex_field("PT")?,
                ct: rec.hex_field("CT")?,
            })
        })
        .collect()
}

pub fn load_aead(path: &Path) -> Result<Vec<AeadRecord>, KatError> {
    parse_aead(&std::fs::read_to_string(path)?)
}

pub fn load_hash(path: &Path) -> Result<Vec<HashRecord>, KatError> {
    parse_hash(&std::fs::read_to_string(path)?)
}

pub fn load_block(path: &Path) -> Result<Vec<BlockRecord>, KatError> {
    parse_block(&std::fs::read_to_string(path)?)
}

fn fail(count: u64, detail: String) -> KatOutcome {
    KatOutcome {
        count,
        ok: false,
        detail: Some(detail),
    }
}

fn pass(count: u64) -> KatOutcome {
    KatOutcome {
        count,
        ok: true,
        detail: None,
    }
}

/// Replay AEAD records: seal must reproduce `CT` bit-exactly and open must
/// return the original plaintext.
pub fn verify_aead(records: &[AeadRecord], params: &'static AeadParams) -> Vec<KatOutcome> {
    records
        .iter()
        .map(|rec| {
            let key = match SecretKey::from_slice(&rec.key) {
                Ok(k) => k,
                Err(e) => return fail(rec.count, e.to_string()),
            };
            let nonce = match Nonce::from_slice(&rec.nonce) {
                Ok(n) => n,
                Err(e) => return fail(rec.count, e.to_string()),
            };
            if rec.ct.len() != rec.pt.len() + AuthTag::LEN {
                return fail(
                    rec.count,
                    format!("CT length {} does not fit PT + tag", rec.ct.len()),
                );
            }
            let sealed = aead::seal(&key, &nonce, &rec.ad, &rec.pt, params);
            let mut produced = sealed.ciphertext.clone();
            produced.extend_from_slice(sealed.tag.as_bytes());
            if produced != rec.ct {
                return fail(rec.count, "seal output mismatch".into());
            }
            let (ct, tag) = rec.ct.split_at(rec.pt.len());
            let reopened = aead::open(
                &key,
                &nonce,
                &rec.ad,
                &Sealed {
                    ciphertext: ct.to_vec(),
                    tag: AuthTag::from_slice(tag).expect("length checked"),
                },
                params,
            );
            match reopened {
                Ok(pt) if pt == rec.pt => pass(rec.count),
                Ok(_) => fail(rec.count, "open returned wrong plaintext".into()),
                Err(_) => fail(rec.count, "open rejected a valid seal".into()),
            }
        })
        .collect()
}

/// Replay hash records against a registered variant (XOFs squeeze the
/// record's digest length).
pub fn verify_hash(records: &[HashRecord], algo: &dyn HashAlgo) -> Vec<KatOutcome> {
    records
        .iter()
        .map(|rec| {
            let md = if algo.is_xof() {
                match algo.xof(&rec.msg, rec.md.len()) {
                    Ok(md) => md,
                    Err(e) => return fail(rec.count, e.to_string()),
                }
            } else {
                algo.digest(&rec.msg).to_vec()
            };
            if md == rec.md {
                pass(rec.count)
            } else {
                fail(rec.count, "digest mismatch".into())
            }
        })
        .collect()
}

/// Replay single-block cipher records: encrypt must match `CT` and decrypt
/// must restore `PT`.
pub fn verify_block(records: &[BlockRecord]) -> Vec<KatOutcome> {
    records
        .iter()
        .enumerate()
        .map(|(i, rec)| {
            let count = (i + 1) as u64;
            let schedule = match aes128::expand_key_slice(&rec.key) {
                Ok(s) => s,
                Err(e) => return fail(count, e.to_string()),
            };
            let (Ok(pt), Ok(ct)) = (
                <[u8; 16]>::try_from(rec.pt.as_slice()),
                <[u8; 16]>::try_from(rec.ct.as_slice()),
            ) else {
                return fail(count, "PT/CT must be 16 bytes".into());
            };
            if aes128::encrypt_block(&schedule, pt) != ct {
                return fail(count, "encrypt mismatch".into());
            }
            if aes128::decrypt_block(&schedule, ct) != pt {
                return fail(count, "decrypt mismatch".into());
            }
            pass(count)
        })
        .collect()
}
