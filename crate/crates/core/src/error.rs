//! Shared error types for the crypto layer.

use thiserror::Error;

/// A precondition violation on a cryptographic operation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("round count {0} outside 1..=12")]
    Rounds(usize),
    #[error("round index {index} outside schedule of {total} rounds")]
    RoundIndex { index: usize, total: usize },
    #[error("key must be 16 bytes, got {0}")]
    KeyLength(usize),
    #[error("nonce must be 16 bytes, got {0}")]
    NonceLength(usize),
    #[error("tag must be 16 bytes, got {0}")]
    TagLength(usize),
    #[error("xof output length must be at least 1 byte")]
    XofOutputLen,
    #[error("algorithm has a fixed 32-byte output, not extendable")]
    NotExtendable,
    #[error("counter would wrap: {blocks} blocks from initial counter {initial:#010x}")]
    CounterOverflow { blocks: u64, initial: u32 },
    #[error("no timing samples")]
    EmptySamples,
    #[error("total time must be positive, got {0}")]
    NonPositiveTime(f64),
}

/// Authentication failure: the tag did not verify. No plaintext is released
/// and no detail about the mismatch is exposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("authentication failed")]
pub struct AuthError;
