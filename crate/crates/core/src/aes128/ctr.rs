//! Counter mode over the block cipher.
//!
//! The 16-byte counter block carries a 96-bit prefix and a 32-bit big-endian
//! block counter in the last four bytes. Keystream blocks are independent, so
//! loss of one message never affects another — the property that motivates
//! this mode for per-packet links. Encryption and decryption are the same
//! operation. Confidentiality only: there is no authentication tag.

use crate::error::ParamError;

use super::{encrypt_block, KeySchedule};

/// XOR `data` with the keystream generated from successive counter blocks.
/// The counter must not wrap within one message.
pub fn ctr_process(
    schedule: &KeySchedule,
    counter_nonce: &[u8; 16],
    data: &[u8],
) -> Result<Vec<u8>, ParamError> {
    ctr_process_traced(schedule, counter_nonce, data).map(|(out, _)| out)
}

/// [`ctr_process`] plus the number of block encryptions performed.
pub fn ctr_process_traced(
    schedule: &KeySchedule,
    counter_nonce: &[u8; 16],
    data: &[u8],
) -> Result<(Vec<u8>, u64), ParamError> {
    let blocks = (data.len() as u64).div_ceil(16);
    let initial = u32::from_be_bytes(counter_nonce[12..].try_into().unwrap());
    // Highest counter used is initial + blocks - 1; it must fit in 32 bits.
    if blocks > (u32::MAX as u64) - (initial as u64) + 1 {
        return Err(ParamError::CounterOverflow { blocks, initial });
    }

    let mut out = Vec::with_capacity(data.len());
    let mut counter_block = *counter_nonce;
    let mut block_count = 0u64;
    for chunk in data.chunks(16) {
        let counter = initial.wrapping_add(block_count as u32);
        counter_block[12..].copy_from_slice(&counter.to_be_bytes());
        let keystream = encrypt_block(schedule, counter_block);
        block_count += 1;
        for (d, k) in chunk.iter().zip(&keystream) {
            out.push(d ^ k);
        }
    }
    Ok((out, block_count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aes128::expand_key;
    use rand::{Rng, SeedableRng};

    #[test]
    fn sp800_38a_f51_vector() {
        let key = [
            0x2b, 0x7e, 0x15, 0x16, 0x28, 0xae, 0xd2, 0xa6, 0xab, 0xf7, 0x15, 0x88, 0x09, 0xcf,
            0x4f, 0x3c,
        ];
        let nonce = [
            0xf0, 0xf1, 0xf2, 0xf3, 0xf4, 0xf5, 0xf6, 0xf7, 0xf8, 0xf9, 0xfa, 0xfb, 0xfc, 0xfd,
            0xfe, 0xff,
        ];
        let pt = hex::decode(
            "6bc1bee22e409f96e93d7e117393172aae2d8a571e03ac9c9eb76fac45af8e51\
             30c81c46a35ce411e5fbc1191a0a52eff69f2445df4f9b17ad2b417be66c3710",
        )
        .unwrap();
        let ks = expand_key(&key);
        let ct = ctr_process(&ks, &nonce, &pt).unwrap();
        assert_eq!(
            hex::encode(&ct),
            "874d6191b620e3261bef6864990db6ce9806f66b7970fdff8617187bb9fffdff\
             5ae4df3edbd5d35e5b4f09020db03eab1e031dda2fbe03d1792170a0f3009cee"
        );
    }

    #[test]
    fn zero_key_counter_one_keystream() {
        let ks = expand_key(&[0u8; 16]);
        let mut nonce = [0u8; 16];
        nonce[15] = 1;
        let out = ctr_process(&ks, &nonce, &[0u8; 32]).unwrap();
        assert_eq!(
            hex::encode(&out),
            "58e2fccefa7e3061367f1d57a4e7455a0388dace60b6a392f328c2b971b2fe78"
        );
    }

    #[test]
    fn same_nonce_is_an_involution() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let ks = expand_key(&rng.random());
        for _ in 0..100 {
            let nonce: [u8; 16] = rng.random();
            let data: Vec<u8> = (0..rng.random_range(0..100))
                .map(|_| rng.random())
                .collect();
            let once = ctr_process(&ks, &nonce, &data).unwrap();
            let twice = ctr_process(&ks, &nonce, &once).unwrap();
            assert_eq!(twice, data);
        }
    }

    #[test]
    fn empty_data_yields_empty_output() {
        let ks = expand_key(&[0u8; 16]);
        let (out, blocks) = ctr_process_traced(&ks, &[0u8; 16], &[]).unwrap();
        assert!(out.is_empty());
        assert_eq!(blocks, 0);
    }

    #[test]
    fn block_consumption_counts() {
        let ks = expand_key(&[0u8; 16]);
        let (_, blocks) = ctr_process_traced(&ks, &[0u8; 16], &[0u8; 32]).unwrap();
        assert_eq!(blocks, 2);
        let (_, blocks) = ctr_process_traced(&ks, &[0u8; 16], &[0u8; 33]).unwrap();
        assert_eq!(blocks, 3);
    }

    #[test]
    fn counter_overflow_is_rejected() {
        let ks = expand_key(&[0u8; 16]);
        let mut nonce = [0u8; 16];
        nonce[12..].copy_from_slice(&0xffff_fffeu32.to_be_bytes());
        // Two blocks end exactly at the counter ceiling.
        assert!(ctr_process(&ks, &nonce, &[0u8; 32]).is_ok());
        // A third block would wrap.
        assert_eq!(
            ctr_process(&ks, &nonce, &[0u8; 33]),
            Err(ParamError::CounterOverflow {
                blocks: 3,
                initial: 0xffff_fffe
            })
        );
    }
}
