//! Benchmark report assembly and rendering (table, CSV, line-delimited JSON).

use serde::{Deserialize, Serialize};

/// Where the dataset came from and how big it is.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatasetDescriptor {
    pub source: String,
    pub entries: usize,
    pub total_bytes: u64,
}

/// Per-algorithm metrics over one timed run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgorithmReport {
    pub algorithm: String,
    pub display_name: String,
    /// Number of timed samples.
    pub n: usize,
    pub peak_s: f64,
    pub avg_s: f64,
    #[serde(rename = "throughput_Bps")]
    pub throughput_bps: f64,
    /// Bytes processed across all samples (dataset bytes x iterations).
    pub total_bytes: u64,
    /// Samples exceeding ten times the median duration (reported, never
    /// removed).
    pub outliers: usize,
    /// Per-input throughput trace, bytes per second, in dataset order.
    pub per_input_bps: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchReport {
    pub dataset: DatasetDescriptor,
    pub iterations: usize,
    pub environment: String,
    pub algorithms: Vec<AlgorithmReport>,
    /// Methodology notes rendered under the table.
    pub footnotes: Vec<String>,
}

impl BenchReport {
    /// CSV with the fixed column set.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("algorithm,n,peak_s,avg_s,throughput_Bps\n");
        for a in &self.algorithms {
            out.push_str(&format!(
                "{},{},{:.9},{:.9},{:.3}\n",
                a.algorithm, a.n, a.peak_s, a.avg_s, a.throughput_bps
            ));
        }
        out
    }

    /// Human-readable comparison table.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "dataset: {} ({} entries, {} bytes), iterations: {}\n",
            self.dataset.source, self.dataset.entries, self.dataset.total_bytes, self.iterations
        ));
        out.push_str(&format!("environment: {}\n\n", self.environment));
        out.push_str(&format!(
            "{:<14} {:>8} {:>14} {:>14} {:>16} {:>9}\n",
            "algorithm", "n", "peak_s", "avg_s", "throughput_B/s", "outliers"
        ));
        for a in &self.algorithms {
            out.push_str(&format!(
                "{:<14} {:>8} {:>14.9} {:>14.9} {:>16.1} {:>9}\n",
                a.display_name, a.n, a.peak_s, a.avg_s, a.throughput_bps, a.outliers
            ));
        }
        if !self.footnotes.is_empty() {
            out.push('\n');
            for note in &self.footnotes {
                out.push_str(&format!("note: {note}\n"));
            }
        }
        out
    }

    /// Line-delimited JSON: one `meta` record, then one record per algorithm.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        let meta = serde_json::json!({
            "record": "meta",
            "dataset": self.dataset,
            "iterations": self.iterations,
            "environment": self.environment,
            "footnotes": self.footnotes,
        });
        out.push_str(&meta.to_string());
        out.push('\n');
        for a in &self.algorithms {
            let mut value = serde_json::to_value(a).expect("report serializes");
            value["record"] = "algorithm".into();
            out.push_str(&value.to_string());
            out.push('\n');
        }
        out
    }
}

/// Build the environment note from what the standard library exposes.
pub fn environment_note() -> String {
    let cores = std::thread::available_parallelism()
        .map(|n| n.get().to_string())
        .unwrap_or_else(|_| "?".into());
    format!(
        "{} {} / {} logical cores",
        std::env::consts::OS,
        std::env::consts::ARCH,
        cores
    )
}
