//! The dataset-driven benchmark loop.
//!
//! For cipher targets each input is sealed and then opened (one combined
//! sample per input unless split timing is requested); hash targets are
//! hashed once per input — hashing has no decryption, so in split mode the
//! same measurement fills both phases. Timing uses the monotonic
//! high-resolution clock, the loop is single-threaded, and a warm-up pass
//! over the dataset is excluded from the samples.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::registry::{bench_target_names, BenchTarget, LinkCipher, Nonce, SecretKey};

use super::metrics::{average_time, peak_time, throughput, TimingSamples};
use super::report::{environment_note, AlgorithmReport, BenchReport, DatasetDescriptor};

/// Samples more than ten times the median are counted as outliers.
const OUTLIER_FACTOR: f64 = 10.0;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("unknown algorithm `{name}`; valid: {}", valid.join(", "))]
    UnknownAlgorithm {
        name: String,
        valid: Vec<&'static str>,
    },
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("iterations must be at least 1")]
    NoIterations,
    #[error("metric computation failed: {0}")]
    Metric(#[from] crate::error::ParamError),
}

/// Timing phases a cipher run can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TimingScope {
    /// One sample per input covering seal and open together.
    #[default]
    Combined,
    /// Separate seal/open samples; rows are suffixed `.enc` / `.dec`.
    Split,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub iterations: usize,
    pub scope: TimingScope,
    /// Seeds the fixed benchmark key and nonce salt.
    pub seed: u64,
    pub dataset_source: String,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            iterations: 1,
            scope: TimingScope::Combined,
            seed: 0,
            dataset_source: "<memory>".into(),
        }
    }
}

/// Resolve algorithm names against the registry, preserving order.
pub fn resolve_targets(names: &[String]) -> Result<Vec<BenchTarget>, BenchError> {
    names
        .iter()
        .map(|name| {
            crate::registry::bench_target_by_name(name).ok_or_else(|| {
                BenchError::UnknownAlgorithm {
                    name: name.clone(),
                    valid: bench_target_names(),
                }
            })
        })
        .collect()
}

struct CipherRun<'a> {
    cipher: &'a dyn LinkCipher,
    key: SecretKey,
    nonce_salt: [u8; 8],
    counter: u64,
}

impl CipherRun<'_> {
    fn next_nonce(&mut self) -> Nonce {
        let mut bytes = [0u8; 16];
        bytes[..8].copy_from_slice(&self.nonce_salt);
        // Keep the low 32 bits clear so counter-mode backends have block
        // counter space within a message.
        bytes[8..12].copy_from_slice(&(self.counter as u32).to_be_bytes());
        self.counter += 1;
        Nonce::new(bytes)
    }

    fn seal_open(&mut self, input: &[u8]) -> (f64, f64) {
        let nonce = self.next_nonce();
        let t0 = Instant::now();
        let (ct, tag) = self
            .cipher
            .seal(&self.key, &nonce, &[], input)
            .expect("benchmark nonces leave full counter space");
        let sealed_at = t0.elapsed().as_secs_f64();
        let t1 = Instant::now();
        let pt = self
            .cipher
            .open(&self.key, &nonce, &[], &ct, &tag)
            .expect("freshly sealed input verifies");
        let opened_at = t1.elapsed().as_secs_f64();
        debug_assert_eq!(pt, input);
        (sealed_at, opened_at)
    }
}

fn make_report_row(
    name: String,
    display: String,
    samples: &TimingSamples,
) -> Result<AlgorithmReport, BenchError> {
    let per_input_bps = samples
        .durations_s()
        .iter()
        .zip(samples.sizes())
        .map(|(&d, &b)| if d > 0.0 { b as f64 / d } else { f64::NAN })
        .collect();
    Ok(AlgorithmReport {
        algorithm: name,
        display_name: display,
        n: samples.n(),
        peak_s: peak_time(samples)?,
        avg_s: average_time(samples)?,
        throughput_bps: throughput(samples.total_bytes(), samples.total_time_s())?,
        total_bytes: samples.total_bytes(),
        outliers: samples.outlier_count(OUTLIER_FACTOR),
        per_input_bps,
    })
}

/// Run the comparison over `dataset` for every target, producing the report.
pub fn run_benchmark(
    dataset: &[Vec<u8>],
    targets: &[BenchTarget],
    config: &BenchConfig,
) -> Result<BenchReport, BenchError> {
    if dataset.is_empty() {
        return Err(BenchError::EmptyDataset);
    }
    if config.iterations == 0 {
        return Err(BenchError::NoIterations);
    }

    let mut seed_rng = ChaCha8Rng::seed_from_u64(config.seed);
    let key = SecretKey::new(seed_rng.random());
    let nonce_salt: [u8; 8] = seed_rng.random();

    let mut rows = Vec::new();
    let mut footnotes = vec![
        "throughput is total bytes / total seconds (B/s); the seconds-per-byte \
         orientation is not used"
            .to_string(),
        "AES-128 runs in counter mode without authentication, so its timings \
         cover confidentiality only while the sealed variants also authenticate"
            .to_string(),
    ];

    for target in targets {
        match target {
            BenchTarget::Cipher(cipher) => {
                let mut run = CipherRun {
                    cipher: *cipher,
                    key: key.clone(),
                    nonce_salt,
                    counter: 0,
                };
                // Warm-up pass, not sampled.
                for input in dataset {
                    run.seal_open(input);
                }
                let mut combined = TimingSamples::new();
                let mut enc = TimingSamples::new();
                let mut dec = TimingSamples::new();
                for _ in 0..config.iterations {
                    for input in dataset {
                        let (seal_s, open_s) = run.seal_open(input);
                        combined.push(seal_s + open_s, input.len() as u64);
                        enc.push(seal_s, input.len() as u64);
                        dec.push(open_s, input.len() as u64);
                    }
                }
                match config.scope {
                    TimingScope::Combined => rows.push(make_report_row(
                        cipher.name().to_string(),
                        cipher.display_name().to_string(),
                        &combined,
                    )?),
                    TimingScope::Split => {
                        rows.push(make_report_row(
                            format!("{}.enc", cipher.name()),
                            format!("{} (seal)", cipher.display_name()),
                            &enc,
                        )?);
                        rows.push(make_report_row(
                            format!("{}.dec", cipher.name()),
                            format!("{} (open)", cipher.display_name()),
                            &dec,
                        )?);
                    }
                }
            }
            BenchTarget::Hash(algo) => {
                for input in dataset {
                    std::hint::black_box(algo.digest(input));
                }
                let mut samples = TimingSamples::new();
                for _ in 0..config.iterations {
                    for input in dataset {
                        let t0 = Instant::now();
                        std::hint::black_box(algo.digest(input));
                        samples.push(t0.elapsed().as_secs_f64(), input.len() as u64);
                    }
                }
                match config.scope {
                    TimingScope::Combined => rows.push(make_report_row(
                        algo.name().to_string(),
                        algo.display_name().to_string(),
                        &samples,
                    )?),
                    TimingScope::Split => {
                        // Hashing has no decryption; the same measurement
                        // fills both phases.
                        rows.push(make_report_row(
                            format!("{}.enc", algo.name()),
                            format!("{} (hash)", algo.display_name()),
                            &samples,
                        )?);
                        rows.push(make_report_row(
                            format!("{}.dec", algo.name()),
                            format!("{} (hash)", algo.display_name()),
                            &samples,
                        )?);
                    }
                }
            }
        }
    }

    if config.scope == TimingScope::Split
        && targets.iter().any(|t| matches!(t, BenchTarget::Hash(_)))
    {
        footnotes.push(
            "hash variants have no decryption; their .enc and .dec rows repeat \
             the same hash timing"
                .to_string(),
        );
    }

    Ok(BenchReport {
        dataset: DatasetDescriptor {
            source: config.dataset_source.clone(),
            entries: dataset.len(),
            total_bytes: dataset.iter().map(|e| e.len() as u64).sum(),
        },
        iterations: config.iterations,
        environment: environment_note(),
        algorithms: rows,
        footnotes,
    })
}
