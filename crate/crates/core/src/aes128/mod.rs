//! AES-128: ten-round block cipher with the four round transformations and
//! their inverses, plus a counter mode for variable-length messages.
//!
//! The 16-byte block is treated as a 4x4 column-major matrix:
//! `state[row][col] = block[row + 4*col]`. The key schedule is immutable
//! after expansion and shareable across threads; all cipher operations are
//! pure given the schedule.

pub mod ctr;

pub use ctr::{ctr_process, ctr_process_traced};

use crate::error::ParamError;

/// A 128-bit cipher block.
pub type Block = [u8; 16];

/// The byte substitution table.
pub const SBOX: [u8; 256] = [
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
];

/// Inverse substitution table, derived at compile time.
pub const INV_SBOX: [u8; 256] = invert_sbox(SBOX);

const fn invert_sbox(table: [u8; 256]) -> [u8; 256] {
    let mut inv = [0u8; 256];
    let mut i = 0;
    while i < 256 {
        inv[table[i] as usize] = i as u8;
        i += 1;
    }
    inv
}

const RCON: [u8; 10] = [0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1b, 0x36];

const ROUNDS: usize = 10;

/// The eleven round keys expanded from a 128-bit key.
#[derive(Clone)]
pub struct KeySchedule {
    round_keys: [[u8; 16]; ROUNDS + 1],
}

impl KeySchedule {
    pub fn round_key(&self, round: usize) -> &[u8; 16] {
        &self.round_keys[round]
    }

    pub const fn num_round_keys(&self) -> usize {
        ROUNDS + 1
    }
}

impl std::fmt::Debug for KeySchedule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("KeySchedule(..)")
    }
}

/// Word-wise key expansion: every fourth word passes through rotate,
/// substitute, and a round-constant XOR.
pub fn expand_key(key: &[u8; 16]) -> KeySchedule {
    let mut w = [[0u8; 4]; 4 * (ROUNDS + 1)];
    for (i, word) in w[..4].iter_mut().enumerate() {
        word.copy_from_slice(&key[4 * i..4 * i + 4]);
    }
    for i in 4..w.len() {
        let mut t = w[i - 1];
        if i % 4 == 0 {
            t.rotate_left(1);
            for b in &mut t {
                *b = SBOX[*b as usize];
            }
            t[0] ^= RCON[i / 4 - 1];
        }
        for (b, prev) in t.iter_mut().zip(&w[i - 4]) {
            *b ^= prev;
        }
        w[i] = t;
    }
    let mut round_keys = [[0u8; 16]; ROUNDS + 1];
    for (r, rk) in round_keys.iter_mut().enumerate() {
        for c in 0..4 {
            rk[4 * c..4 * c + 4].copy_from_slice(&w[4 * r + c]);
        }
    }
    KeySchedule { round_keys }
}

/// [`expand_key`] from a slice, checking the length.
pub fn expand_key_slice(key: &[u8]) -> Result<KeySchedule, ParamError> {
    let key: &[u8; 16] = key
        .try_into()
        .map_err(|_| ParamError::KeyLength(key.len()))?;
    Ok(expand_key(key))
}

pub fn sub_bytes(mut state: Block) -> Block {
    for b in &mut state {
        *b = SBOX[*b as usize];
    }
    state
}

pub fn inv_sub_bytes(mut state: Block) -> Block {
    for b in &mut state {
        *b = INV_SBOX[*b as usize];
    }
    state
}

/// Rotate row `r` left by `r` positions; row 0 stays in place.
pub fn shift_rows(state: Block) -> Block {
    let mut out = [0u8; 16];
    for row in 0..4 {
        for col in 0..4 {
            out[row + 4 * col] = state[row + 4 * ((col + row) % 4)];
        }
    }
    out
}

pub fn inv_shift_rows(state: Block) -> Block {
    let mut out = [0u8; 16];
    for row in 0..4 {
        for col in 0..4 {
            out[row + 4 * ((col + row) % 4)] = state[row + 4 * col];
        }
    }
    out
}

/// Doubling in GF(2^8) modulo x^8 + x^4 + x^3 + x + 1.
#[inline]
fn xtime(x: u8) -> u8 {
    (x << 1) ^ ((x >> 7) * 0x1b)
}

/// Multiply each column by the circulant matrix {02,03,01,01; 01,02,03,01;
/// 01,01,02,03; 03,01,01,02}, in the doubling form.
pub fn mix_columns(mut state: Block) -> Block {
    for col in state.chunks_exact_mut(4) {
        let [a0, a1, a2, a3]: [u8; 4] = (&*col).try_into().unwrap();
        let t = a0 ^ a1 ^ a2 ^ a3;
        col[0] = a0 ^ t ^ xtime(a0 ^ a1);
        col[1] = a1 ^ t ^ xtime(a1 ^ a2);
        col[2] = a2 ^ t ^ xtime(a2 ^ a3);
        col[3] = a3 ^ t ^ xtime(a3 ^ a0);
    }
    state
}

/// Inverse column mix ({0e,0b,0d,09; ...}): precondition with the quadrupled
/// cross terms, then reuse the forward mix.
pub fn inv_mix_columns(mut state: Block) -> Block {
    for col in state.chunks_exact_mut(4) {
        let u = xtime(xtime(col[0] ^ col[2]));
        let v = xtime(xtime(col[1] ^ col[3]));
        col[0] ^= u;
        col[1] ^= v;
        col[2] ^= u;
        col[3] ^= v;
    }
    mix_columns(state)
}

pub fn add_round_key(mut state: Block, round_key: &[u8; 16]) -> Block {
    for (b, k) in state.iter_mut().zip(round_key) {
        *b ^= k;
    }
    state
}

/// Ten-round encryption; the final round skips the column mix.
pub fn encrypt_block(schedule: &KeySchedule, block: Block) -> Block {
    let mut state = add_round_key(block, schedule.round_key(0));
    for round in 1..ROUNDS {
        state = add_round_key(
            mix_columns(shift_rows(sub_bytes(state))),
            schedule.round_key(round),
        );
    }
    add_round_key(shift_rows(sub_bytes(state)), schedule.round_key(ROUNDS))
}

/// Inverse transformations in reverse round order.
pub fn decrypt_block(schedule: &KeySchedule, block: Block) -> Block {
    let mut state = add_round_key(block, schedule.round_key(ROUNDS));
    state = inv_sub_bytes(inv_shift_rows(state));
    for round in (1..ROUNDS).rev() {
        state = add_round_key(state, schedule.round_key(round));
        state = inv_sub_bytes(inv_shift_rows(inv_mix_columns(state)));
    }
    add_round_key(state, schedule.round_key(0))
}
