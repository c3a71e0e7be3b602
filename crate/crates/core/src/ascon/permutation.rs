//! The 320-bit SPN permutation shared by every sponge mode in this crate.
//!
//! One round is the composition of three steps: a round constant XORed into
//! the third word, a 5-bit S-box applied across the 64 bit-columns of the
//! state, and a per-word linear diffusion of rotated copies. Modes apply the
//! round `a` times (`p^a`, initialization/finalization) or `b` times (`p^b`,
//! per data block); the schedule for `b < 12` rounds is the suffix of the
//! 12-round constant sequence.

use crate::error::ParamError;

/// Round constants, XORed into the low byte of `x2`. A run of `n` rounds
/// consumes the last `n` entries.
pub const ROUND_CONSTANTS: [u8; 12] = [
    0xf0, 0xe1, 0xd2, 0xc3, 0xb4, 0xa5, 0x96, 0x87, 0x78, 0x69, 0x5a, 0x4b,
];

/// The 5-bit substitution table. Column bit order is `x0` down to `x4`, with
/// `x0` holding the most significant bit.
pub const SBOX: [u8; 32] = [
    0x04, 0x0b, 0x1f, 0x14, 0x1a, 0x15, 0x09, 0x02, 0x1b, 0x05, 0x08, 0x12, 0x1d, 0x03, 0x06, 0x1c,
    0x1e, 0x13, 0x07, 0x0e, 0x00, 0x0d, 0x11, 0x18, 0x10, 0x0c, 0x01, 0x19, 0x16, 0x0a, 0x0f, 0x17,
];

/// Inverse of [`SBOX`], derived at compile time.
pub const INV_SBOX: [u8; 32] = invert_sbox(SBOX);

/// Rotate-right offset pairs for the linear layer, indexed by word.
pub const ROTATIONS: [(u32, u32); 5] = [(19, 28), (61, 39), (1, 6), (10, 17), (7, 41)];

/// Maximum number of rounds in the schedule.
pub const MAX_ROUNDS: usize = 12;

const fn invert_sbox(table: [u8; 32]) -> [u8; 32] {
    let mut inv = [0u8; 32];
    let mut i = 0;
    while i < 32 {
        inv[table[i] as usize] = i as u8;
        i += 1;
    }
    inv
}

/// The 320-bit sponge state: five 64-bit words, loaded and stored big-endian.
///
/// For a mode with rate `r`, the first `r` bits (starting at `x0`'s most
/// significant bit) form the rate and the remaining `320 - r` bits the
/// capacity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct State {
    pub x: [u64; 5],
}

impl State {
    pub const fn new(x0: u64, x1: u64, x2: u64, x3: u64, x4: u64) -> Self {
        State {
            x: [x0, x1, x2, x3, x4],
        }
    }

    pub fn to_bytes(self) -> [u8; 40] {
        let mut out = [0u8; 40];
        for (i, w) in self.x.iter().enumerate() {
            out[8 * i..8 * i + 8].copy_from_slice(&w.to_be_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8; 40]) -> Self {
        let mut x = [0u64; 5];
        for (i, w) in x.iter_mut().enumerate() {
            *w = u64::from_be_bytes(bytes[8 * i..8 * i + 8].try_into().unwrap());
        }
        State { x }
    }
}

/// Counts of permutation invocations by role, used to verify the block
/// structure of the sponge modes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PermTrace {
    /// `p^a` invocations (initialization / finalization role).
    pub a_calls: u64,
    /// `p^b` invocations (per-block role).
    pub b_calls: u64,
    /// Total rounds executed across all invocations.
    pub rounds: u64,
}

/// XOR the round constant for `round_index` of a `total_rounds` schedule into
/// `x2`. Constants for a short schedule are the suffix of the 12-round one.
pub fn add_round_constant(
    state: State,
    round_index: usize,
    total_rounds: usize,
) -> Result<State, ParamError> {
    if total_rounds > MAX_ROUNDS {
        return Err(ParamError::Rounds(total_rounds));
    }
    if round_index >= total_rounds {
        return Err(ParamError::RoundIndex {
            index: round_index,
            total: total_rounds,
        });
    }
    let mut s = state;
    s.x[2] ^= ROUND_CONSTANTS[MAX_ROUNDS - total_rounds + round_index] as u64;
    Ok(s)
}

/// Apply the 5-bit S-box to all 64 bit-columns at once (bit-sliced form).
pub fn substitution_layer(state: State) -> State {
    let [mut x0, mut x1, mut x2, mut x3, mut x4] = state.x;

    x0 ^= x4;
    x4 ^= x3;
    x2 ^= x1;

    let t0 = !x0 & x1;
    let t1 = !x1 & x2;
    let t2 = !x2 & x3;
    let t3 = !x3 & x4;
    let t4 = !x4 & x0;

    x0 ^= t1;
    x1 ^= t2;
    x2 ^= t3;
    x3 ^= t4;
    x4 ^= t0;

    x1 ^= x0;
    x0 ^= x4;
    x3 ^= x2;
    x2 = !x2;

    State::new(x0, x1, x2, x3, x4)
}

/// XOR each word with two rotated copies of itself.
pub fn linear_layer(state: State) -> State {
    let mut s = state;
    for (w, (c1, c2)) in s.x.iter_mut().zip(ROTATIONS) {
        *w ^= w.rotate_right(c1) ^ w.rotate_right(c2);
    }
    s
}

/// Run `rounds` rounds of the permutation. `rounds` must be in `1..=12`;
/// zero rounds is a parameter error, not the identity.
pub fn permute(state: State, rounds: usize) -> Result<State, ParamError> {
    if rounds == 0 || rounds > MAX_ROUNDS {
        return Err(ParamError::Rounds(rounds));
    }
    let mut s = state;
    for i in 0..rounds {
        s = add_round_constant(s, i, rounds).expect("validated range");
        s = substitution_layer(s);
        s = linear_layer(s);
    }
    Ok(s)
}

/// `permute` for schedules known valid at the call site (mode-internal use).
pub(crate) fn permute_known(state: State, rounds: usize) -> State {
    debug_assert!((1..=MAX_ROUNDS).contains(&rounds));
    permute(state, rounds).expect("mode parameters keep rounds in 1..=12")
}

#[cfg(test)]
mod tests {
    use super::*;

    // Frozen from the reference-oracle run recorded in testdata/kat (permuting
    // the all-zero state twelve rounds).
    const PERMUTE_ZERO_12: [u64; 5] = [
        0x78ea7ae5cfebb108,
        0x9b9bfb8513b560f7,
        0x6937f83e03d11a50,
        0x3fe53f36f2c1178c,
        0x045d648e4def12c9,
    ];

    const MIXED: State = State::new(
        0x0123456789abcdef,
        0xfedcba9876543210,
        0xdeadbeefcafebabe,
        0x0011223344556677,
        0x8899aabbccddeeff,
    );

    // Oracle values for MIXED: two chained 6-round runs versus one 12-round run.
    const SIX_PLUS_SIX: [u64; 5] = [
        0x6f5443feb62d4bb8,
        0x29267284a0ea1cf0,
        0xcfd7fee55b8b0679,
        0x6050c10b42a7c84f,
        0x08489564e70a79f6,
    ];
    const TWELVE: [u64; 5] = [
        0x617eb323db1c27e4,
        0x6bf6353084e8c797,
        0x895b969c83c68653,
        0xa38a9d732d67ffcb,
        0x5e801ee99487943b,
    ];

    fn rand_state(rng: &mut impl rand::Rng) -> State {
        State::new(
            rng.random(),
            rng.random(),
            rng.random(),
            rng.random(),
            rng.random(),
        )
    }

    fn seeded_rng() -> impl rand::Rng {
        use rand::SeedableRng;
        rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed)
    }

    /// Column-wise table application: the straightforward form of the S-box,
    /// kept as the oracle for the bit-sliced implementation.
    fn substitution_layer_table(state: State, table: &[u8; 32]) -> State {
        let mut out = [0u64; 5];
        for j in 0..64 {
            let mut col = 0usize;
            for w in 0..5 {
                col = (col << 1) | ((state.x[w] >> j) & 1) as usize;
            }
            let sub = table[col] as u64;
            for (w, word) in out.iter_mut().enumerate() {
                *word |= ((sub >> (4 - w)) & 1) << j;
            }
        }
        State { x: out }
    }

    #[test]
    fn sbox_is_bijective_and_maps_zero_to_four() {
        let mut seen = [false; 32];
        for v in SBOX {
            assert!(v < 32);
            assert!(!seen[v as usize], "duplicate S-box output {v}");
            seen[v as usize] = true;
        }
        assert_eq!(SBOX[0], 4);
        for i in 0..32 {
            assert_eq!(INV_SBOX[SBOX[i] as usize] as usize, i);
        }
    }

    #[test]
    fn rotation_offsets_are_in_range() {
        for (c1, c2) in ROTATIONS {
            assert!((1..=63).contains(&c1));
            assert!((1..=63).contains(&c2));
            assert_ne!(c1, c2);
        }
    }

    #[test]
    fn substitution_zero_state_sets_x2_to_all_ones() {
        // S(0) = 4 = 0b00100: only the x2 bit of every column is set.
        let s = substitution_layer(State::default());
        assert_eq!(s.x, [0, 0, u64::MAX, 0, 0]);
    }

    #[test]
    fn bitsliced_matches_table_form() {
        let mut rng = seeded_rng();
        for _ in 0..1000 {
            let s = rand_state(&mut rng);
            assert_eq!(substitution_layer(s), substitution_layer_table(s, &SBOX));
        }
    }

    #[test]
    fn inverse_table_restores_substitution_input() {
        let mut rng = seeded_rng();
        for _ in 0..1000 {
            let s = rand_state(&mut rng);
            let back = substitution_layer_table(substitution_layer(s), &INV_SBOX);
            assert_eq!(back, s);
        }
    }

    #[test]
    fn round_constant_schedule() {
        // Full schedule applied to a zero word, observed in x2's low byte.
        for (i, rc) in ROUND_CONSTANTS.iter().enumerate() {
            let s = add_round_constant(State::default(), i, 12).unwrap();
            assert_eq!(s.x[2], *rc as u64);
        }
        // A 6-round schedule uses the last six constants.
        for i in 0..6 {
            let s = add_round_constant(State::default(), i, 6).unwrap();
            assert_eq!(s.x[2], ROUND_CONSTANTS[6 + i] as u64);
        }
        // First constant of the full schedule.
        let s = add_round_constant(State::default(), 0, 12).unwrap();
        assert_eq!(s.x, [0, 0, 0xf0, 0, 0]);
    }

    #[test]
    fn round_constant_rejects_bad_parameters() {
        assert_eq!(
            add_round_constant(State::default(), 0, 13),
            Err(ParamError::Rounds(13))
        );
        assert_eq!(
            add_round_constant(State::default(), 6, 6),
            Err(ParamError::RoundIndex { index: 6, total: 6 })
        );
    }

    #[test]
    fn linear_layer_fixed_points_and_single_bit() {
        assert_eq!(linear_layer(State::default()), State::default());
        // Bit 0 of x0 spreads to positions 64-19=45 and 64-28=36.
        let s = linear_layer(State::new(1, 0, 0, 0, 0));
        assert_eq!(s.x[0], 1 | (1 << 45) | (1 << 36));
        assert_eq!(&s.x[1..], &[0, 0, 0, 0]);
    }

    #[test]
    fn linear_layer_is_gf2_linear() {
        let mut rng = seeded_rng();
        for _ in 0..1000 {
            let a = rand_state(&mut rng);
            let b = rand_state(&mut rng);
            let xor = State::new(
                a.x[0] ^ b.x[0],
                a.x[1] ^ b.x[1],
                a.x[2] ^ b.x[2],
                a.x[3] ^ b.x[3],
                a.x[4] ^ b.x[4],
            );
            let la = linear_layer(a);
            let lb = linear_layer(b);
            let lx = linear_layer(xor);
            for w in 0..5 {
                assert_eq!(lx.x[w], la.x[w] ^ lb.x[w]);
            }
        }
    }

    /// Rank of the 64x64 GF(2) matrix for a single word's diffusion, computed
    /// by Gaussian elimination over u64 rows.
    fn gf2_rank(rows: [u64; 64]) -> usize {
        let mut rows = rows;
        let mut rank = 0;
        for bit in (0..64).rev() {
            let Some(pivot) = (rank..64).find(|&r| rows[r] >> bit & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            for r in 0..64 {
                if r != rank && rows[r] >> bit & 1 == 1 {
                    rows[r] ^= rows[rank];
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn linear_layer_word_maps_are_invertible() {
        for word in 0..5 {
            let mut rows = [0u64; 64];
            for (bit, row) in rows.iter_mut().enumerate() {
                let mut s = State::default();
                s.x[word] = 1 << bit;
                *row = linear_layer(s).x[word];
            }
            assert_eq!(gf2_rank(rows), 64, "word {word} map is singular");
        }
    }

    #[test]
    fn permute_zero_state_matches_pinned_vector() {
        let s = permute(State::default(), 12).unwrap();
        assert_eq!(s.x, PERMUTE_ZERO_12);
    }

    #[test]
    fn permute_rejects_zero_and_excess_rounds() {
        assert_eq!(permute(MIXED, 0), Err(ParamError::Rounds(0)));
        assert_eq!(permute(MIXED, 13), Err(ParamError::Rounds(13)));
    }

    #[test]
    fn chained_six_round_runs_differ_from_twelve() {
        // Constant indexing depends on the schedule length, so p^6 twice is
        // not p^12.
        let twice = permute(permute(MIXED, 6).unwrap(), 6).unwrap();
        let once = permute(MIXED, 12).unwrap();
        assert_eq!(twice.x, SIX_PLUS_SIX);
        assert_eq!(once.x, TWELVE);
        assert_ne!(twice, once);
    }

    #[test]
    fn state_byte_roundtrip() {
        let mut rng = seeded_rng();
        for _ in 0..100 {
            let s = rand_state(&mut rng);
            assert_eq!(State::from_bytes(&s.to_bytes()), s);
        }
        // Big-endian word order: first byte is x0's top byte.
        let s = State::new(0x0102030405060708, 0, 0, 0, 0);
        assert_eq!(s.to_bytes()[0], 0x01);
        assert_eq!(s.to_bytes()[7], 0x08);
    }
}
