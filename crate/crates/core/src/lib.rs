//! Lightweight cryptography for constrained telemetry links: a sponge-based
//! cipher family (two AEAD variants, two hashes, two XOFs) and AES-128 built
//! from first principles, plus a dataset-driven benchmark harness and a
//! deterministic lossy-link simulator for per-packet authenticated
//! encryption.

pub mod aes128;
pub mod ascon;
pub mod bench;
pub mod error;
pub mod kat;
pub mod registry;
pub mod sim;

pub use error::{AuthError, ParamError};
