//! Command-line definitions.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "skyseal",
    version,
    about = "Lightweight authenticated encryption, hashing, benchmarks, and a lossy-link simulator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    /// Binary to files and pipes, hex on a terminal.
    Auto,
    Bin,
    Hex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Table,
    Csv,
    Jsonl,
}

#[derive(Subcommand)]
pub enum Command {
    /// Encrypt and authenticate a message.
    Seal(SealArgs),
    /// Verify and decrypt a sealed message.
    Open(SealArgs),
    /// Hash a message (fixed digest or extendable output).
    Hash(HashArgs),
    /// Replay a known-answer file and report per-record results.
    Kat(KatArgs),
    /// Run the dataset-driven algorithm comparison.
    Bench(BenchArgs),
    /// Drive the lossy-link scenario and print the statistics.
    Simulate(SimulateArgs),
    /// Generate a seeded random dataset of hex entries.
    GenDataset(GenDatasetArgs),
}

#[derive(clap::Args)]
pub struct SealArgs {
    /// Cipher: ascon128, ascon128a, or aes128ctr.
    #[arg(long)]
    pub algorithm: String,
    /// 16-byte key as hex, or `env:NAME` to read hex from the environment.
    #[arg(long)]
    pub key: String,
    /// 16-byte nonce as hex, or `env:NAME`. Never reuse a key/nonce pair.
    #[arg(long)]
    pub nonce: String,
    /// Associated data as hex (authenticated, not encrypted).
    #[arg(long, default_value = "")]
    pub ad: String,
    /// Input path; standard input when omitted.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Output path; standard output when omitted.
    #[arg(long = "out")]
    pub output: Option<PathBuf>,
    /// Stream encoding for the sealed bytes.
    #[arg(long, value_enum, default_value = "auto")]
    pub format: DataFormat,
}

#[derive(clap::Args)]
pub struct HashArgs {
    /// Variant: asconhash, asconhasha, asconxof, or asconxofa.
    #[arg(long)]
    pub algorithm: String,
    /// Output length in bytes (required for the xof variants).
    #[arg(long)]
    pub length: Option<usize>,
    /// Input path; standard input when omitted.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Output path; standard output when omitted.
    #[arg(long = "out")]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args)]
pub struct KatArgs {
    /// ascon128, ascon128a, a hash variant, or aes128 (block records).
    #[arg(long)]
    pub algorithm: String,
    /// Known-answer file.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Print only the summary line.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(clap::Args)]
pub struct BenchArgs {
    /// Dataset of newline-delimited hex plaintexts.
    #[arg(long)]
    pub dataset: PathBuf,
    /// Comma-separated algorithm list; all seven when omitted.
    #[arg(long, value_delimiter = ',')]
    pub algorithms: Vec<String>,
    #[arg(long, default_value_t = 1)]
    pub iterations: usize,
    /// Seeds the fixed benchmark key material.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "table")]
    pub format: ReportFormat,
    /// Report path; standard output when omitted.
    #[arg(long = "out")]
    pub output: Option<PathBuf>,
    /// Time seal and open separately instead of one combined sample.
    #[arg(long)]
    pub split: bool,
}

#[derive(clap::Args)]
pub struct SimulateArgs {
    /// Scenario config file (`key = value` lines).
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub cipher: Option<String>,
    #[arg(long)]
    pub packets: Option<u64>,
    #[arg(long)]
    pub payload_min: Option<usize>,
    #[arg(long)]
    pub payload_max: Option<usize>,
    #[arg(long)]
    pub loss_p: Option<f64>,
    #[arg(long)]
    pub corrupt_q: Option<f64>,
    #[arg(long)]
    pub reorder: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Session key as hex, or `env:NAME`.
    #[arg(long)]
    pub key: Option<String>,
    /// Write one JSON record per packet outcome to this path.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(clap::Args)]
pub struct GenDatasetArgs {
    #[arg(long)]
    pub count: usize,
    #[arg(long, default_value_t = 16)]
    pub min_size: usize,
    #[arg(long, default_value_t = 256)]
    pub max_size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path; standard output when omitted.
    #[arg(long = "out")]
    pub output: Option<PathBuf>,
}
