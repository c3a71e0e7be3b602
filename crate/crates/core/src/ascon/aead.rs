//! Authenticated encryption with associated data over the duplex sponge.
//!
//! Two variants are provided: one absorbing 64-bit blocks with a 256-bit
//! capacity, and a higher-rate one absorbing 128-bit blocks with a 192-bit
//! capacity. Both run the full 12-round permutation at initialization and
//! finalization and the shorter per-block permutation between data blocks.
//!
//! Sealing and opening are pure functions over value inputs; nonce discipline
//! (never reuse a key/nonce pair) is the caller's contract and is enforced by
//! construction in the link simulator.

use crate::error::{AuthError, ParamError};

use super::permutation::{permute_known, PermTrace, State};

/// A 128-bit key.
#[derive(Clone)]
pub struct SecretKey([u8; 16]);

impl SecretKey {
    pub const LEN: usize = 16;

    pub const fn new(bytes: [u8; 16]) -> Self {
        SecretKey(bytes)
    }

    pub fn from_slice(bytes: &[u8]) -> Result<Self, ParamError> {
        bytes
            .try_into()
            .map(SecretKey)
            .map_err(|_| ParamError::KeyLength(bytes.len()))
    }

    pub fn as_bytes(&self) -> &[u8; 16] {
        &self.0
    }

    fn words(&self) -> (u64, u64) {
        (
            u64::from_be_bytes(self.0[..8].try_into().unwrap()),
            u64::from_be_bytes(self.0[8..].try_into().unwrap()),
        )
    }
}

// Key material never appears in debug output.
impl std::fmt::Debug for SecretKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("SecretKey(..)")
    }
}

/// A 128-bit nonce. Must be unique per key; see the module docs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Nonce([u8; 16]);

impl Nonce {
    pub const LEN: usize = 16;

    pub const fn new(bytes: [u8; 16]) -> Self {
        Nonce(bytes)
    }

    pub fn from_slice(bytes: &[u8]) -> Result<Self, ParamError> {
        bytes
            .try_into()
            .map(Nonce)
            .map_err(|_| ParamError::NonceLength(bytes.len()))
    }

    pub fn as_bytes(&self) -> &[u8; 16] {
        &self.0
    }

    fn words(&self) -> (u64, u64) {
        (
            u64::from_be_bytes(self.0[..8].try_into().unwrap()),
            u64::from_be_bytes(self.0[8..].try_into().unwrap()),
        )
    }
}

/// A 128-bit authentication tag.
#[derive(Clone, Copy, Debug)]
pub struct AuthTag([u8; 16]);

impl AuthTag {
    pub const LEN: usize = 16;

    pub const fn new(bytes: [u8; 16]) -> Self {
        AuthTag(bytes)
    }

    pub fn from_slice(bytes: &[u8]) -> Result<Self, ParamError> {
        bytes
            .try_into()
            .map(AuthTag)
            .map_err(|_| ParamError::TagLength(bytes.len()))
    }

    pub fn as_bytes(&self) -> &[u8; 16] {
        &self.0
    }
}

// Tag comparison never early-exits.
impl PartialEq for AuthTag {
    fn eq(&self, other: &Self) -> bool {
        constant_time_eq(&self.0, &other.0)
    }
}

impl Eq for AuthTag {}

pub(crate) fn constant_time_eq(a: &[u8; 16], b: &[u8; 16]) -> bool {
    let mut acc = 0u8;
    for (x, y) in a.iter().zip(b) {
        acc |= x ^ y;
    }
    acc == 0
}

/// Ciphertext plus tag. The ciphertext is exactly as long as the plaintext.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sealed {
    pub ciphertext: Vec<u8>,
    pub tag: AuthTag,
}

/// Per-variant parameters of the AEAD mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AeadParams {
    pub name: &'static str,
    pub key_bits: usize,
    pub rate_bytes: usize,
    pub rounds_a: usize,
    pub rounds_b: usize,
    /// First state word: key size, rate, and round counts each encoded as one
    /// byte, zero-padded.
    pub init_word: u64,
}

impl AeadParams {
    pub const fn rate_bits(&self) -> usize {
        self.rate_bytes * 8
    }

    pub const fn capacity_bits(&self) -> usize {
        320 - self.rate_bits()
    }
}

pub const ASCON128: AeadParams = AeadParams {
    name: "ascon128",
    key_bits: 128,
    rate_bytes: 8,
    rounds_a: 12,
    rounds_b: 6,
    init_word: 0x8040_0c06_0000_0000,
};

pub const ASCON128A: AeadParams = AeadParams {
    name: "ascon128a",
    key_bits: 128,
    rate_bytes: 16,
    rounds_a: 12,
    rounds_b: 8,
    init_word: 0x8080_0c08_0000_0000,
};

/// Duplex driver over the state for one (key, nonce, params) instance.
struct Duplex {
    state: State,
    params: &'static AeadParams,
    k0: u64,
    k1: u64,
    trace: PermTrace,
}

impl Duplex {
    fn permute_a(&mut self) {
        self.state = permute_known(self.state, self.params.rounds_a);
        self.trace.a_calls += 1;
        self.trace.rounds += self.params.rounds_a as u64;
    }

    fn permute_b(&mut self) {
        self.state = permute_known(self.state, self.params.rounds_b);
        self.trace.b_calls += 1;
        self.trace.rounds += self.params.rounds_b as u64;
    }

    fn new(key: &SecretKey, nonce: &Nonce, params: &'static AeadParams) -> Self {
        let (k0, k1) = key.words();
        let (n0, n1) = nonce.words();
        let mut duplex = Duplex {
            state: State::new(params.init_word, k0, k1, n0, n1),
            params,
            k0,
            k1,
            trace: PermTrace::default(),
        };
        duplex.permute_a();
        duplex.state.x[3] ^= k0;
        duplex.state.x[4] ^= k1;
        duplex
    }

    fn rate_bytes(&self) -> [u8; 16] {
        let mut out = [0u8; 16];
        out[..8].copy_from_slice(&self.state.x[0].to_be_bytes());
        out[8..].copy_from_slice(&self.state.x[1].to_be_bytes());
        out
    }

    /// XOR `block` into the rate; `block` may be shorter than the rate, in
    /// which case the remaining rate bytes are untouched.
    fn xor_rate(&mut self, block: &[u8]) {
        debug_assert!(block.len() <= self.params.rate_bytes);
        let mut buf = [0u8; 16];
        buf[..block.len()].copy_from_slice(block);
        self.state.x[0] ^= u64::from_be_bytes(buf[..8].try_into().unwrap());
        if self.params.rate_bytes == 16 {
            self.state.x[1] ^= u64::from_be_bytes(buf[8..].try_into().unwrap());
        }
    }

    /// Overwrite the first `bytes.len()` rate bytes (decrypt direction).
    fn set_rate_prefix(&mut self, bytes: &[u8]) {
        debug_assert!(bytes.len() <= self.params.rate_bytes);
        let mut buf = self.rate_bytes();
        buf[..bytes.len()].copy_from_slice(bytes);
        self.state.x[0] = u64::from_be_bytes(buf[..8].try_into().unwrap());
        if self.params.rate_bytes == 16 {
            self.state.x[1] = u64::from_be_bytes(buf[8..].try_into().unwrap());
        }
    }

    /// XOR the padding bit (a single 1, byte form 0x80) at rate offset `pos`.
    fn xor_pad(&mut self, pos: usize) {
        debug_assert!(pos < self.params.rate_bytes);
        if pos < 8 {
            self.state.x[0] ^= 0x80u64 << (56 - 8 * pos);
        } else {
            self.state.x[1] ^= 0x80u64 << (56 - 8 * (pos - 8));
        }
    }

    /// Absorb associated data and apply the domain-separation bit. The
    /// separation bit is applied even when `ad` is empty.
    fn absorb_ad(&mut self, ad: &[u8]) {
        if !ad.is_empty() {
            let rate = self.params.rate_bytes;
            let mut chunks = ad.chunks_exact(rate);
            for block in &mut chunks {
                self.xor_rate(block);
                self.permute_b();
            }
            let rest = chunks.remainder();
            self.xor_rate(rest);
            self.xor_pad(rest.len());
            self.permute_b();
        }
        self.state.x[4] ^= 1;
    }

    /// Encrypt `plaintext`, appending ciphertext to `out`.
    fn encrypt(&mut self, plaintext: &[u8], out: &mut Vec<u8>) {
        let rate = self.params.rate_bytes;
        let mut chunks = plaintext.chunks_exact(rate);
        for block in &mut chunks {
            self.xor_rate(block);
            out.extend_from_slice(&self.rate_bytes()[..rate]);
            self.permute_b();
        }
        let rest = chunks.remainder();
        self.xor_rate(rest);
        out.extend_from_slice(&self.rate_bytes()[..rest.len()]);
        self.xor_pad(rest.len());
    }

    /// Decrypt `ciphertext`, appending plaintext to `out`.
    fn decrypt(&mut self, ciphertext: &[u8], out: &mut Vec<u8>) {
        let rate = self.params.rate_bytes;
        let mut chunks = ciphertext.chunks_exact(rate);
        for block in &mut chunks {
            let keystream = self.rate_bytes();
            for (c, k) in block.iter().zip(&keystream) {
                out.push(c ^ k);
            }
            self.set_rate_prefix(block);
            self.permute_b();
        }
        let rest = chunks.remainder();
        let keystream = self.rate_bytes();
        for (c, k) in rest.iter().zip(&keystream) {
            out.push(c ^ k);
        }
        self.set_rate_prefix(rest);
        self.xor_pad(rest.len());
    }

    /// XOR the key at the rate boundary, permute, and extract the tag.
    fn finalize(&mut self) -> AuthTag {
        let offset = self.params.rate_bytes / 8;
        self.state.x[offset] ^= self.k0;
        self.state.x[offset + 1] ^= self.k1;
        self.permute_a();
        let mut tag = [0u8; 16];
        tag[..8].copy_from_slice(&(self.state.x[3] ^ self.k0).to_be_bytes());
        tag[8..].copy_from_slice(&(self.state.x[4] ^ self.k1).to_be_bytes());
        AuthTag(tag)
    }
}

/// Seed the state with `IV || K || N`, permute `a` rounds, and re-XOR the key
/// into the capacity.
pub fn initialize(key: &SecretKey, nonce: &Nonce, params: &'static AeadParams) -> State {
    Duplex::new(key, nonce, params).state
}

/// Absorb associated data blocks and apply the domain-separation bit
/// (unconditionally, even for empty `ad`).
pub fn process_associated_data(state: State, ad: &[u8], params: &'static AeadParams) -> State {
    let mut duplex = Duplex {
        state,
        params,
        k0: 0,
        k1: 0,
        trace: PermTrace::default(),
    };
    duplex.absorb_ad(ad);
    duplex.state
}

/// Encrypt and authenticate `plaintext` with `ad` as authenticated-but-clear
/// associated data.
pub fn seal(
    key: &SecretKey,
    nonce: &Nonce,
    ad: &[u8],
    plaintext: &[u8],
    params: &'static AeadParams,
) -> Sealed {
    seal_traced(key, nonce, ad, plaintext, params).0
}

/// [`seal`] plus the permutation-call trace.
pub fn seal_traced(
    key: &SecretKey,
    nonce: &Nonce,
    ad: &[u8],
    plaintext: &[u8],
    params: &'static AeadParams,
) -> (Sealed, PermTrace) {
    let mut duplex = Duplex::new(key, nonce, params);
    duplex.absorb_ad(ad);
    let mut ciphertext = Vec::with_capacity(plaintext.len());
    duplex.encrypt(plaintext, &mut ciphertext);
    let tag = duplex.finalize();
    (Sealed { ciphertext, tag }, duplex.trace)
}

/// Verify and decrypt. On any tag mismatch the plaintext is discarded and
/// only [`AuthError`] is returned.
pub fn open(
    key: &SecretKey,
    nonce: &Nonce,
    ad: &[u8],
    sealed: &Sealed,
    params: &'static AeadParams,
) -> Result<Vec<u8>, AuthError> {
    open_traced(key, nonce, ad, sealed, params).0
}

/// [`open`] plus the permutation-call trace.
pub fn open_traced(
    key: &SecretKey,
    nonce: &Nonce,
    ad: &[u8],
    sealed: &Sealed,
    params: &'static AeadParams,
) -> (Result<Vec<u8>, AuthError>, PermTrace) {
    let mut duplex = Duplex::new(key, nonce, params);
    duplex.absorb_ad(ad);
    let mut plaintext = Vec::with_capacity(sealed.ciphertext.len());
    duplex.decrypt(&sealed.ciphertext, &mut plaintext);
    let tag = duplex.finalize();
    let result = if tag == sealed.tag {
        Ok(plaintext)
    } else {
        Err(AuthError)
    };
    (result, duplex.trace)
}

/// Number of `p^b` calls the plaintext phase issues for an `len`-byte message:
/// one per padded block except the last.
pub fn plaintext_phase_perm_calls(len: usize, params: &AeadParams) -> u64 {
    ((8 * len + 1).div_ceil(params.rate_bits()) - 1) as u64
}
