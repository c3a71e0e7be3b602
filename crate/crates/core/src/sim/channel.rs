//! Deterministic lossy channel: drops, independent bit flips, and bounded
//! reordering, all driven by a seeded generator.

use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct ChannelModel {
    /// Probability a frame is dropped entirely.
    pub loss_probability: f64,
    /// Independent flip probability per transmitted bit.
    pub bit_corruption_probability: f64,
    /// Maximum forward displacement, in frames, a delivery can be delayed by.
    pub reorder_window: usize,
    pub seed: u64,
}

impl ChannelModel {
    pub fn validate(&self) -> Result<(), String> {
        for (name, p) in [
            ("loss_p", self.loss_probability),
            ("corrupt_q", self.bit_corruption_probability),
        ] {
            if !(0.0..=1.0).contains(&p) || p.is_nan() {
                return Err(format!("{name} must be within [0, 1], got {p}"));
            }
        }
        Ok(())
    }
}

impl Default for ChannelModel {
    fn default() -> Self {
        ChannelModel {
            loss_probability: 0.0,
            bit_corruption_probability: 0.0,
            reorder_window: 0,
            seed: 0,
        }
    }
}

// Min-heap entry ordered by (release slot, arrival order).
#[derive(PartialEq, Eq)]
struct Pending {
    release_at: u64,
    order: u64,
    frame: Vec<u8>,
}

impl Ord for Pending {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (other.release_at, other.order).cmp(&(self.release_at, self.order))
    }
}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Channel state for one simulated link direction.
pub struct Channel {
    model: ChannelModel,
    rng: ChaCha8Rng,
    pending: BinaryHeap<Pending>,
    next_slot: u64,
    dropped: u64,
}

impl Channel {
    pub fn new(model: ChannelModel) -> Self {
        let rng = ChaCha8Rng::seed_from_u64(model.seed);
        Channel {
            model,
            rng,
            pending: BinaryHeap::new(),
            next_slot: 0,
            dropped: 0,
        }
    }

    /// Select a generator sub-stream, decoupling channel randomness from
    /// other consumers of the same scenario seed.
    pub fn set_stream(&mut self, stream: u64) {
        self.rng.set_stream(stream);
    }

    /// Offer one frame to the channel. Returns whether this frame was
    /// dropped, plus any frames (this one or earlier held ones) released for
    /// delivery at this step.
    pub fn transmit(&mut self, frame: &[u8]) -> (bool, Vec<Vec<u8>>) {
        let slot = self.next_slot;
        self.next_slot += 1;

        let dropped =
            self.model.loss_probability > 0.0 && self.rng.random_bool(self.model.loss_probability);
        if dropped {
            self.dropped += 1;
        } else {
            let frame = self.corrupt(frame.to_vec());
            let delay = if self.model.reorder_window > 0 {
                self.rng.random_range(0..=self.model.reorder_window as u64)
            } else {
                0
            };
            self.pending.push(Pending {
                release_at: slot + delay,
                order: slot,
                frame,
            });
        }
        (dropped, self.release(slot))
    }

    /// Frames whose release slot has arrived.
    fn release(&mut self, now: u64) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        while self.pending.peek().is_some_and(|p| p.release_at <= now) {
            out.push(self.pending.pop().unwrap().frame);
        }
        out
    }

    /// Release everything still held.
    pub fn flush(&mut self) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        while let Some(p) = self.pending.pop() {
            out.push(p.frame);
        }
        out
    }

    fn corrupt(&mut self, mut frame: Vec<u8>) -> Vec<u8> {
        let q = self.model.bit_corruption_probability;
        if q <= 0.0 {
            return frame;
        }
        for byte in &mut frame {
            for bit in 0..8 {
                if self.rng.random_bool(q) {
                    *byte ^= 1 << bit;
                }
            }
        }
        frame
    }

    pub fn dropped(&self) -> u64 {
        self.dropped
    }

    pub fn in_flight(&self) -> u64 {
        self.pending.len() as u64
    }
}
