//! Dataset-driven benchmarking: metric definitions, dataset handling, the
//! timed comparison loop, and report rendering.

pub mod dataset;
pub mod metrics;
pub mod report;
pub mod runner;

pub use dataset::{generate_dataset, load_dataset, parse_dataset, render_dataset, DatasetError};
pub use metrics::{average_time, peak_time, throughput, TimingSamples};
pub use report::{AlgorithmReport, BenchReport, DatasetDescriptor};
pub use runner::{resolve_targets, run_benchmark, BenchConfig, BenchError, TimingScope};
