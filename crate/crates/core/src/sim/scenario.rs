//! Scenario driver: send -> channel -> receive for a configured packet
//! stream, with per-packet outcome accounting and an optional trace.

use std::collections::HashMap;
use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::registry::cipher_by_name;

use super::{open_session_with_salt, Channel, ReceiveError, ScenarioConfig, SimError};

// Sub-stream ids of the scenario seed.
const STREAM_PAYLOAD: u64 = 0;
const STREAM_CHANNEL: u64 = 1;
const STREAM_SALT: u64 = 2;

/// Deterministic outcome counters. `delivered` includes `delivered_corrupt`;
/// the identity `sent = delivered + lost + auth_failed + replayed +
/// in_flight` holds after every scenario.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkCounts {
    pub sent: u64,
    pub delivered: u64,
    /// Accepted frames whose header or payload differ from what was sent.
    /// Always zero for authenticated backends.
    pub delivered_corrupt: u64,
    pub lost: u64,
    pub auth_failed: u64,
    pub replayed: u64,
    /// Frames still held by the channel (zero after the final flush).
    pub in_flight: u64,
    pub accepted_payload_bytes: u64,
}

impl LinkCounts {
    pub fn accounting_holds(&self) -> bool {
        self.sent == self.delivered + self.lost + self.auth_failed + self.replayed + self.in_flight
            && self.delivered_corrupt <= self.delivered
    }
}

/// Full scenario result: deterministic counts plus wall-clock measurements.
#[derive(Debug, Clone, Serialize)]
pub struct LinkStats {
    pub counts: LinkCounts,
    /// Send-call-to-accept wall time per accepted packet, seconds.
    pub latency_s: Vec<f64>,
    pub elapsed_s: f64,
    /// Accepted payload bytes per elapsed second.
    pub goodput_bps: f64,
    /// True when the backend carries no tag.
    pub unauthenticated: bool,
}

impl LinkStats {
    pub fn mean_latency_s(&self) -> Option<f64> {
        if self.latency_s.is_empty() {
            None
        } else {
            Some(self.latency_s.iter().sum::<f64>() / self.latency_s.len() as f64)
        }
    }
}

#[derive(Serialize)]
struct TraceEvent<'a> {
    seq: Option<u64>,
    outcome: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    latency_s: Option<f64>,
    bytes: u64,
}

fn emit(trace: &mut Option<&mut dyn Write>, event: &TraceEvent) -> Result<(), SimError> {
    if let Some(w) = trace.as_deref_mut() {
        serde_json::to_writer(&mut *w, event).map_err(std::io::Error::other)?;
        writeln!(w)?;
    }
    Ok(())
}

pub fn run_scenario(config: &ScenarioConfig) -> Result<LinkStats, SimError> {
    run_scenario_with_trace(config, None)
}

/// Run the scenario, optionally writing one line-delimited record per packet
/// outcome to `trace`.
pub fn run_scenario_with_trace(
    config: &ScenarioConfig,
    mut trace: Option<&mut dyn Write>,
) -> Result<LinkStats, SimError> {
    config.validate()?;
    let cipher = cipher_by_name(&config.cipher).expect("validated");

    let mut payload_rng = ChaCha8Rng::seed_from_u64(config.seed);
    payload_rng.set_stream(STREAM_PAYLOAD);
    let mut salt_rng = ChaCha8Rng::seed_from_u64(config.seed);
    salt_rng.set_stream(STREAM_SALT);
    let mut channel_model = config.channel_model();
    channel_model.seed = config.seed;
    let mut channel = Channel::new(channel_model);
    // The channel keeps its own sub-stream.
    channel.set_stream(STREAM_CHANNEL);

    let salt: [u8; 8] = salt_rng.random();
    let (mut sender, mut receiver) =
        open_session_with_salt(cipher.cipher_id(), config.key.clone(), salt)?;

    // Ground truth per sequence number for corruption checks and latency.
    let mut truth: HashMap<u64, (Vec<u8>, Vec<u8>, Instant)> = HashMap::new();

    let mut counts = LinkCounts::default();
    let mut latency_s = Vec::new();
    let started = Instant::now();

    let deliver = |bytes: &[u8],
                   receiver: &mut super::ReceiverState,
                   counts: &mut LinkCounts,
                   latency_s: &mut Vec<f64>,
                   truth: &HashMap<u64, (Vec<u8>, Vec<u8>, Instant)>,
                   trace: &mut Option<&mut dyn Write>|
     -> Result<(), SimError> {
        let claimed_seq = super::WireFrame::decode(bytes).ok().map(|f| f.seq);
        match receiver.receive(bytes) {
            Ok((header, payload)) => {
                counts.delivered += 1;
                counts.accepted_payload_bytes += payload.len() as u64;
                let seq = claimed_seq.expect("accepted frames decode");
                let (latency, intact) = match truth.get(&seq) {
                    Some((sent_header, sent_payload, at)) => (
                        Some(at.elapsed().as_secs_f64()),
                        *sent_header == header && *sent_payload == payload,
                    ),
                    // Claimed seq matches nothing we sent: only possible for
                    // unauthenticated backends under corruption.
                    None => (None, false),
                };
                let outcome = if intact {
                    if let Some(l) = latency {
                        latency_s.push(l);
                    }
                    "delivered"
                } else {
                    counts.delivered_corrupt += 1;
                    "delivered_corrupt"
                };
                emit(
                    trace,
                    &TraceEvent {
                        seq: Some(seq),
                        outcome,
                        latency_s: latency,
                        bytes: payload.len() as u64,
                    },
                )?;
            }
            Err(ReceiveError::Replayed) => {
                counts.replayed += 1;
                emit(
                    trace,
                    &TraceEvent {
                        seq: claimed_seq,
                        outcome: "replayed",
                        latency_s: None,
                        bytes: bytes.len() as u64,
                    },
                )?;
            }
            Err(ReceiveError::AuthFailed | ReceiveError::Malformed(_)) => {
                counts.auth_failed += 1;
                emit(
                    trace,
                    &TraceEvent {
                        seq: claimed_seq,
                        outcome: "auth_failed",
                        latency_s: None,
                        bytes: bytes.len() as u64,
                    },
                )?;
            }
        }
        Ok(())
    };

    for i in 0..config.packets {
        let len = payload_rng.random_range(config.payload_min..=config.payload_max);
        let payload: Vec<u8> = (0..len).map(|_| payload_rng.random()).collect();
        // Clear telemetry header: type byte plus a tick counter.
        let mut header = [0u8; 9];
        header[0] = (i % 4) as u8;
        header[1..].copy_from_slice(&i.to_be_bytes());

        let frame = sender.send(&header, &payload)?;
        let seq = frame.seq;
        truth.insert(seq, (header.to_vec(), payload, Instant::now()));
        counts.sent += 1;

        let (dropped, released) = channel.transmit(&frame.encode());
        if dropped {
            counts.lost += 1;
            emit(
                &mut trace,
                &TraceEvent {
                    seq: Some(seq),
                    outcome: "lost",
                    latency_s: None,
                    bytes: truth[&seq].1.len() as u64,
                },
            )?;
        }
        for bytes in released {
            deliver(
                &bytes,
                &mut receiver,
                &mut counts,
                &mut latency_s,
                &truth,
                &mut trace,
            )?;
        }
    }

    for bytes in channel.flush() {
        deliver(
            &bytes,
            &mut receiver,
            &mut counts,
            &mut latency_s,
            &truth,
            &mut trace,
        )?;
    }
    counts.in_flight = channel.in_flight();
    debug_assert!(counts.accounting_holds(), "{counts:?}");

    let elapsed_s = started.elapsed().as_secs_f64();
    let goodput_bps = if elapsed_s > 0.0 {
        counts.accepted_payload_bytes as f64 / elapsed_s
    } else {
        0.0
    };

    Ok(LinkStats {
        counts,
        latency_s,
        elapsed_s,
        goodput_bps,
        unauthenticated: !cipher.is_authenticated(),
    })
}
