//! Wire format for simulated telemetry frames.
//!
//! ```text
//! version(1) cipher_id(1) salt(8) seq(8 BE) header_len(2 BE) tag_len(1)
//! payload_len(4 BE) header payload tag
//! ```
//!
//! The header travels in clear but is authenticated (it is the associated
//! data of the seal). `tag_len` is zero for confidentiality-only backends.

use thiserror::Error;

pub const FRAME_VERSION: u8 = 1;

/// Fixed-size portion preceding the variable fields.
pub const FRAME_OVERHEAD: usize = 1 + 1 + 8 + 8 + 2 + 1 + 4;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FrameError {
    #[error("frame truncated: {got} bytes, need {need}")]
    Truncated { got: usize, need: usize },
    #[error("unsupported frame version {0}")]
    BadVersion(u8),
    #[error("header too long: {0} bytes")]
    HeaderTooLong(usize),
    #[error("declared lengths exceed frame size")]
    LengthMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WireFrame {
    pub version: u8,
    pub cipher_id: u8,
    pub session_salt: [u8; 8],
    pub seq: u64,
    /// Associated data: telemetry type, timestamps, and similar clear fields.
    pub header: Vec<u8>,
    /// Sealed payload bytes.
    pub payload: Vec<u8>,
    /// Authentication tag; empty for unauthenticated backends.
    pub tag: Vec<u8>,
}

impl WireFrame {
    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(
            FRAME_OVERHEAD + self.header.len() + self.payload.len() + self.tag.len(),
        );
        out.push(self.version);
        out.push(self.cipher_id);
        out.extend_from_slice(&self.session_salt);
        out.extend_from_slice(&self.seq.to_be_bytes());
        out.extend_from_slice(&(self.header.len() as u16).to_be_bytes());
        out.push(self.tag.len() as u8);
        out.extend_from_slice(&(self.payload.len() as u32).to_be_bytes());
        out.extend_from_slice(&self.header);
        out.extend_from_slice(&self.payload);
        out.extend_from_slice(&self.tag);
        out
    }

    pub fn decode(bytes: &[u8]) -> Result<WireFrame, FrameError> {
        if bytes.len() < FRAME_OVERHEAD {
            return Err(FrameError::Truncated {
                got: bytes.len(),
                need: FRAME_OVERHEAD,
            });
        }
        let version = bytes[0];
        if version != FRAME_VERSION {
            return Err(FrameError::BadVersion(version));
        }
        let cipher_id = bytes[1];
        let session_salt: [u8; 8] = bytes[2..10].try_into().unwrap();
        let seq = u64::from_be_bytes(bytes[10..18].try_into().unwrap());
        let header_len = u16::from_be_bytes(bytes[18..20].try_into().unwrap()) as usize;
        let tag_len = bytes[20] as usize;
        let payload_len = u32::from_be_bytes(bytes[21..25].try_into().unwrap()) as usize;
        let need = FRAME_OVERHEAD + header_len + payload_len + tag_len;
        if bytes.len() != need {
            return Err(FrameError::LengthMismatch);
        }
        let header = bytes[FRAME_OVERHEAD..FRAME_OVERHEAD + header_len].to_vec();
        let payload =
            bytes[FRAME_OVERHEAD + header_len..FRAME_OVERHEAD + header_len + payload_len].to_vec();
        let tag = bytes[FRAME_OVERHEAD + header_len + payload_len..].to_vec();
        Ok(WireFrame {
            version,
            cipher_id,
            session_salt,
            seq,
            header,
            payload,
            tag,
        })
    }
}
