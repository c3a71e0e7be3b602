//! Runtime algorithm registry.
//!
//! Every cipher backend sits behind [`LinkCipher`] and every hashing variant
//! behind [`HashAlgo`]; both are looked up by name (CLI, config files) or by
//! wire id (frames). The benchmark set groups all seven under
//! [`BenchTarget`].

use crate::aes128;
use crate::ascon::aead::{self, AuthTag, Sealed};
use crate::ascon::hash as sponge_hash;
use crate::error::{AuthError, ParamError};

pub use crate::ascon::aead::{Nonce, SecretKey};

/// A per-packet cipher: seals a payload under a key/nonce with associated
/// data, producing ciphertext and a (possibly empty) tag.
pub trait LinkCipher: Send + Sync {
    /// Registry name, as used on the command line and in config files.
    fn name(&self) -> &'static str;
    /// Human-facing name for tables and reports.
    fn display_name(&self) -> &'static str;
    /// Wire identifier carried in frames.
    fn cipher_id(&self) -> u8;
    /// Tag length in bytes; zero for confidentiality-only backends.
    fn tag_len(&self) -> usize;
    /// Encrypt `plaintext`; returns `(ciphertext, tag)`. Counter-mode
    /// backends reject messages that would wrap their 32-bit block counter.
    fn seal(
        &self,
        key: &SecretKey,
        nonce: &Nonce,
        ad: &[u8],
        plaintext: &[u8],
    ) -> Result<(Vec<u8>, Vec<u8>), ParamError>;
    /// Decrypt and (when a tag is present) verify.
    fn open(
        &self,
        key: &SecretKey,
        nonce: &Nonce,
        ad: &[u8],
        ciphertext: &[u8],
        tag: &[u8],
    ) -> Result<Vec<u8>, AuthError>;

    fn is_authenticated(&self) -> bool {
        self.tag_len() != 0
    }
}

macro_rules! ascon_link {
    ($ty:ident, $name:literal, $display:literal, $id:literal, $params:expr) => {
        pub struct $ty;

        impl LinkCipher for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn display_name(&self) -> &'static str {
                $display
            }

            fn cipher_id(&self) -> u8 {
                $id
            }

            fn tag_len(&self) -> usize {
                AuthTag::LEN
            }

            fn seal(
                &self,
                key: &SecretKey,
                nonce: &Nonce,
                ad: &[u8],
                plaintext: &[u8],
            ) -> Result<(Vec<u8>, Vec<u8>), ParamError> {
                let sealed = aead::seal(key, nonce, ad, plaintext, &$params);
                Ok((sealed.ciphertext, sealed.tag.as_bytes().to_vec()))
            }

            fn open(
                &self,
                key: &SecretKey,
                nonce: &Nonce,
                ad: &[u8],
                ciphertext: &[u8],
                tag: &[u8],
            ) -> Result<Vec<u8>, AuthError> {
                let tag = AuthTag::from_slice(tag).map_err(|_| AuthError)?;
                let sealed = Sealed {
                    ciphertext: ciphertext.to_vec(),
                    tag,
                };
                aead::open(key, nonce, ad, &sealed, &$params)
            }
        }
    };
}

ascon_link!(Ascon128Link, "ascon128", "Ascon-128", 1, aead::ASCON128);
ascon_link!(Ascon128aLink, "ascon128a", "Ascon-128a", 2, aead::ASCON128A);

/// Counter-mode AES-128: confidentiality only, no tag, so associated data is
/// transmitted but not bound to the payload.
pub struct Aes128CtrLink;

impl LinkCipher for Aes128CtrLink {
    fn name(&self) -> &'static str {
        "aes128ctr"
    }

    fn display_name(&self) -> &'static str {
        "AES-128"
    }

    fn cipher_id(&self) -> u8 {
        3
    }

    fn tag_len(&self) -> usize {
        0
    }

    fn seal(
        &self,
        key: &SecretKey,
        nonce: &Nonce,
        _ad: &[u8],
        plaintext: &[u8],
    ) -> Result<(Vec<u8>, Vec<u8>), ParamError> {
        let schedule = aes128::expand_key(key.as_bytes());
        let ct = aes128::ctr_process(&schedule, nonce.as_bytes(), plaintext)?;
        Ok((ct, Vec::new()))
    }

    fn open(
        &self,
        key: &SecretKey,
        nonce: &Nonce,
        _ad: &[u8],
        ciphertext: &[u8],
        _tag: &[u8],
    ) -> Result<Vec<u8>, AuthError> {
        let schedule = aes128::expand_key(key.as_bytes());
        aes128::ctr_process(&schedule, nonce.as_bytes(), ciphertext).map_err(|_| AuthError)
    }
}

/// A hashing variant: fixed 32-byte digest, or extendable output for the XOF
/// variants.
pub trait HashAlgo: Send + Sync {
    fn name(&self) -> &'static str;
    fn display_name(&self) -> &'static str;
    /// Whether the output length is caller-chosen.
    fn is_xof(&self) -> bool;
    /// 32-byte digest (XOF variants squeeze their first 32 bytes).
    fn digest(&self, message: &[u8]) -> [u8; sponge_hash::DIGEST_LEN];
    /// Extendable output; errors on fixed-output variants and on zero length.
    fn xof(&self, message: &[u8], out_len: usize) -> Result<Vec<u8>, ParamError>;
}

struct SpongeHash {
    display: &'static str,
    params: &'static sponge_hash::HashParams,
}

impl HashAlgo for SpongeHash {
    fn name(&self) -> &'static str {
        self.params.name
    }

    fn display_name(&self) -> &'static str {
        self.display
    }

    fn is_xof(&self) -> bool {
        self.params.output_bits.is_none()
    }

    fn digest(&self, message: &[u8]) -> [u8; sponge_hash::DIGEST_LEN] {
        sponge_hash::hash(message, self.params)
    }

    fn xof(&self, message: &[u8], out_len: usize) -> Result<Vec<u8>, ParamError> {
        if !self.is_xof() {
            return Err(ParamError::NotExtendable);
        }
        sponge_hash::xof(message, out_len, self.params)
    }
}

static ASCON_HASH_ALGO: SpongeHash = SpongeHash {
    display: "Ascon-Hash",
    params: &sponge_hash::ASCON_HASH,
};
static ASCON_HASHA_ALGO: SpongeHash = SpongeHash {
    display: "Ascon-Hasha",
    params: &sponge_hash::ASCON_HASHA,
};
static ASCON_XOF_ALGO: SpongeHash = SpongeHash {
    display: "Ascon-Xof",
    params: &sponge_hash::ASCON_XOF,
};
static ASCON_XOFA_ALGO: SpongeHash = SpongeHash {
    display: "Ascon-Xofa",
    params: &sponge_hash::ASCON_XOFA,
};

static CIPHERS: [&dyn LinkCipher; 3] = [&Ascon128Link, &Ascon128aLink, &Aes128CtrLink];

static HASHES: [&dyn HashAlgo; 4] = [
    &ASCON_HASH_ALGO,
    &ASCON_HASHA_ALGO,
    &ASCON_XOF_ALGO,
    &ASCON_XOFA_ALGO,
];

pub fn ciphers() -> &'static [&'static dyn LinkCipher] {
    &CIPHERS
}

pub fn cipher_by_name(name: &str) -> Option<&'static dyn LinkCipher> {
    CIPHERS.iter().copied().find(|c| c.name() == name)
}

pub fn cipher_by_id(id: u8) -> Option<&'static dyn LinkCipher> {
    CIPHERS.iter().copied().find(|c| c.cipher_id() == id)
}

pub fn cipher_names() -> Vec<&'static str> {
    CIPHERS.iter().map(|c| c.name()).collect()
}

pub fn hashes() -> &'static [&'static dyn HashAlgo] {
    &HASHES
}

pub fn hash_by_name(name: &str) -> Option<&'static dyn HashAlgo> {
    HASHES.iter().copied().find(|h| h.name() == name)
}

pub fn hash_names() -> Vec<&'static str> {
    HASHES.iter().map(|h| h.name()).collect()
}

/// One entry of the benchmark comparison set.
#[derive(Clone, Copy)]
pub enum BenchTarget {
    Cipher(&'static dyn LinkCipher),
    Hash(&'static dyn HashAlgo),
}

impl std::fmt::Debug for BenchTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BenchTarget({})", self.name())
    }
}

impl BenchTarget {
    pub fn name(&self) -> &'static str {
        match self {
            BenchTarget::Cipher(c) => c.name(),
            BenchTarget::Hash(h) => h.name(),
        }
    }

    pub fn display_name(&self) -> &'static str {
        match self {
            BenchTarget::Cipher(c) => c.display_name(),
            BenchTarget::Hash(h) => h.display_name(),
        }
    }
}

/// The seven-way comparison set, in report order.
pub fn bench_targets() -> Vec<BenchTarget> {
    vec![
        BenchTarget::Cipher(&Ascon128Link),
        BenchTarget::Cipher(&Ascon128aLink),
        BenchTarget::Hash(&ASCON_HASH_ALGO),
        BenchTarget::Hash(&ASCON_HASHA_ALGO),
        BenchTarget::Hash(&ASCON_XOF_ALGO),
        BenchTarget::Hash(&ASCON_XOFA_ALGO),
        BenchTarget::Cipher(&Aes128CtrLink),
    ]
}

pub fn bench_target_by_name(name: &str) -> Option<BenchTarget> {
    bench_targets().into_iter().find(|t| t.name() == name)
}

pub fn bench_target_names() -> Vec<&'static str> {
    bench_targets().iter().map(|t| t.name()).collect()
}
