//! The sponge cipher family: shared permutation, AEAD modes, and hashing.

pub mod aead;
pub mod hash;
pub mod permutation;
