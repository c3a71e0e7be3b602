//! Simulated telemetry link: a sender/receiver pair exchanging per-packet
//! sealed frames over a configurable lossy channel.
//!
//! Per-packet nonces are `session_salt || seq`, so the never-reuse invariant
//! holds by construction and loss of any packet leaves every other packet
//! independently decryptable. Sender and receiver states are single-owner.

pub mod channel;
pub mod config;
pub mod frame;
pub mod replay;
pub mod scenario;

pub use channel::{Channel, ChannelModel};
pub use config::ScenarioConfig;
pub use frame::{FrameError, WireFrame, FRAME_VERSION};
pub use replay::{ReplayWindow, REPLAY_WINDOW};
pub use scenario::{run_scenario, run_scenario_with_trace, LinkCounts, LinkStats};

use rand::Rng;
use thiserror::Error;

use crate::registry::{cipher_by_id, cipher_names, LinkCipher, Nonce, SecretKey};

#[derive(Debug, Error)]
pub enum SimError {
    #[error("unknown cipher `{name}`; valid: {}", valid.join(", "))]
    UnknownCipher {
        name: String,
        valid: Vec<&'static str>,
    },
    #[error("sequence numbers exhausted for this session")]
    SeqExhausted,
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("invalid scenario: {0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Why a frame was not accepted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReceiveError {
    #[error("malformed frame: {0}")]
    Malformed(#[from] FrameError),
    #[error("authentication failed")]
    AuthFailed,
    #[error("replayed or expired sequence number")]
    Replayed,
}

/// Nonce for one packet. Authenticated backends use the full 64-bit sequence
/// number; counter mode reserves the trailing 32 bits for its block counter,
/// so its sessions cap at 2^32 packets.
fn packet_nonce(cipher: &dyn LinkCipher, salt: &[u8; 8], seq: u64) -> Nonce {
    let mut bytes = [0u8; 16];
    bytes[..8].copy_from_slice(salt);
    if cipher.is_authenticated() {
        bytes[8..].copy_from_slice(&seq.to_be_bytes());
    } else {
        bytes[8..12].copy_from_slice(&(seq as u32).to_be_bytes());
    }
    Nonce::new(bytes)
}

fn seq_limit(cipher: &dyn LinkCipher) -> u64 {
    if cipher.is_authenticated() {
        u64::MAX
    } else {
        1 << 32
    }
}

/// Sending half of a session. `seq` increases strictly; the nonce for packet
/// `k` is always `salt || k`.
pub struct SenderState {
    cipher: &'static dyn LinkCipher,
    key: SecretKey,
    salt: [u8; 8],
    next_seq: u64,
}

impl SenderState {
    pub fn send(&mut self, header: &[u8], payload: &[u8]) -> Result<WireFrame, SimError> {
        if self.next_seq >= seq_limit(self.cipher) {
            return Err(SimError::SeqExhausted);
        }
        if header.len() > u16::MAX as usize {
            return Err(SimError::Invalid(format!(
                "header of {} bytes exceeds the 2-byte length field",
                header.len()
            )));
        }
        if payload.len() > u32::MAX as usize {
            return Err(SimError::Invalid(format!(
                "payload of {} bytes exceeds the 4-byte length field",
                payload.len()
            )));
        }
        let seq = self.next_seq;
        self.next_seq += 1;
        let nonce = packet_nonce(self.cipher, &self.salt, seq);
        let (payload, tag) = self
            .cipher
            .seal(&self.key, &nonce, header, payload)
            .map_err(|e| SimError::Invalid(e.to_string()))?;
        Ok(WireFrame {
            version: FRAME_VERSION,
            cipher_id: self.cipher.cipher_id(),
            session_salt: self.salt,
            seq,
            header: header.to_vec(),
            payload,
            tag,
        })
    }

    pub fn next_seq(&self) -> u64 {
        self.next_seq
    }

    #[cfg(test)]
    fn jump_to_seq(&mut self, seq: u64) {
        self.next_seq = seq;
    }

    pub fn salt(&self) -> [u8; 8] {
        self.salt
    }

    pub fn cipher(&self) -> &'static dyn LinkCipher {
        self.cipher
    }
}

/// Receiving half of a session.
pub struct ReceiverState {
    cipher: &'static dyn LinkCipher,
    key: SecretKey,
    salt: [u8; 8],
    replay: ReplayWindow,
}

impl ReceiverState {
    /// Decode, replay-check, open. The sequence number is marked seen only
    /// after the payload authenticates.
    pub fn receive(&mut self, bytes: &[u8]) -> Result<(Vec<u8>, Vec<u8>), ReceiveError> {
        let frame = WireFrame::decode(bytes)?;
        if frame.cipher_id != self.cipher.cipher_id()
            || frame.session_salt != self.salt
            || frame.tag.len() != self.cipher.tag_len()
        {
            return Err(ReceiveError::AuthFailed);
        }
        if !self.replay.is_fresh(frame.seq) {
            return Err(ReceiveError::Replayed);
        }
        let nonce = packet_nonce(self.cipher, &self.salt, frame.seq);
        let payload = self
            .cipher
            .open(&self.key, &nonce, &frame.header, &frame.payload, &frame.tag)
            .map_err(|_| ReceiveError::AuthFailed)?;
        self.replay.mark_seen(frame.seq);
        Ok((frame.header, payload))
    }
}

/// Open a session with a fresh random salt.
pub fn open_session(
    cipher_id: u8,
    key: SecretKey,
) -> Result<(SenderState, ReceiverState), SimError> {
    let salt: [u8; 8] = rand::rng().random();
    open_session_with_salt(cipher_id, key, salt)
}

/// Open a session with a caller-chosen salt (deterministic scenarios).
pub fn open_session_with_salt(
    cipher_id: u8,
    key: SecretKey,
    salt: [u8; 8],
) -> Result<(SenderState, ReceiverState), SimError> {
    let cipher = cipher_by_id(cipher_id).ok_or_else(|| SimError::UnknownCipher {
        name: format!("id {cipher_id}"),
        valid: cipher_names(),
    })?;
    Ok((
        SenderState {
            cipher,
            key: key.clone(),
            salt,
            next_seq: 0,
        },
        ReceiverState {
            cipher,
            key,
            salt,
            replay: ReplayWindow::new(),
        },
    ))
}
