//! The three report metrics: peak time, average time, and overall
//! throughput in bytes per second.
//!
//! The throughput orientation is bytes divided by time; the reports carry a
//! footnote documenting that choice (see [`super::report`]).

use crate::error::ParamError;

/// Wall-clock durations and input sizes collected over a benchmark run.
#[derive(Debug, Clone, Default)]
pub struct TimingSamples {
    durations_s: Vec<f64>,
    sizes: Vec<u64>,
}

impl TimingSamples {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, duration_s: f64, size_bytes: u64) {
        debug_assert!(duration_s >= 0.0);
        self.durations_s.push(duration_s);
        self.sizes.push(size_bytes);
    }

    pub fn n(&self) -> usize {
        self.durations_s.len()
    }

    pub fn durations_s(&self) -> &[f64] {
        &self.durations_s
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn total_bytes(&self) -> u64 {
        self.sizes.iter().sum()
    }

    pub fn total_time_s(&self) -> f64 {
        self.durations_s.iter().sum()
    }

    /// Samples exceeding `factor` times the median duration.
    pub fn outlier_count(&self, factor: f64) -> usize {
        if self.durations_s.is_empty() {
            return 0;
        }
        let mut sorted = self.durations_s.clone();
        sorted.sort_by(|a, b| a.total_cmp(b));
        let median = sorted[sorted.len() / 2];
        self.durations_s
            .iter()
            .filter(|&&d| d > factor * median)
            .count()
    }
}

/// Maximum execution time across all runs.
pub fn peak_time(samples: &TimingSamples) -> Result<f64, ParamError> {
    samples
        .durations_s
        .iter()
        .copied()
        .reduce(f64::max)
        .ok_or(ParamError::EmptySamples)
}

/// Arithmetic mean of the execution times.
pub fn average_time(samples: &TimingSamples) -> Result<f64, ParamError> {
    if samples.durations_s.is_empty() {
        return Err(ParamError::EmptySamples);
    }
    Ok(samples.total_time_s() / samples.n() as f64)
}

/// Total bytes processed divided by total processing time.
pub fn throughput(total_bytes: u64, total_time_s: f64) -> Result<f64, ParamError> {
    if total_time_s <= 0.0 {
        return Err(ParamError::NonPositiveTime(total_time_s));
    }
    Ok(total_bytes as f64 / total_time_s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn samples(durations: &[f64]) -> TimingSamples {
        let mut s = TimingSamples::new();
        for &d in durations {
            s.push(d, 100);
        }
        s
    }

    #[test]
    fn peak_is_the_maximum() {
        assert_eq!(peak_time(&samples(&[0.01, 0.03, 0.02])).unwrap(), 0.03);
        assert_eq!(peak_time(&samples(&[0.5])).unwrap(), 0.5);
    }

    #[test]
    fn average_is_the_mean() {
        assert_eq!(average_time(&samples(&[1.0, 2.0, 3.0])).unwrap(), 2.0);
        assert_eq!(average_time(&samples(&[0.25; 8])).unwrap(), 0.25);
    }

    #[test]
    fn empty_samples_are_rejected() {
        let empty = TimingSamples::new();
        assert_eq!(peak_time(&empty), Err(ParamError::EmptySamples));
        assert_eq!(average_time(&empty), Err(ParamError::EmptySamples));
    }

    #[test]
    fn throughput_is_bytes_per_second() {
        assert_eq!(throughput(100, 2.0).unwrap(), 50.0);
        assert_eq!(throughput(0, 2.0).unwrap(), 0.0);
        // Linear in the byte count at fixed time.
        assert_eq!(
            throughput(2 * 100, 2.0).unwrap(),
            2.0 * throughput(100, 2.0).unwrap()
        );
    }

    #[test]
    fn throughput_rejects_non_positive_time() {
        assert_eq!(throughput(1, 0.0), Err(ParamError::NonPositiveTime(0.0)));
        assert_eq!(throughput(1, -1.0), Err(ParamError::NonPositiveTime(-1.0)));
    }

    #[test]
    fn peak_never_falls_below_average() {
        // Identical samples can put the mean one ulp above the max (the sum
        // rounds upward), so the bound is checked to relative precision.
        let sets: &[&[f64]] = &[&[0.1], &[0.1, 0.9], &[0.2, 0.2, 0.2], &[1e-9, 5.0, 0.3]];
        for set in sets {
            let s = samples(set);
            let peak = peak_time(&s).unwrap();
            let avg = average_time(&s).unwrap();
            assert!(avg <= peak * (1.0 + 1e-12), "avg {avg} > peak {peak}");
        }
    }

    #[test]
    fn outliers_counted_against_median() {
        let s = samples(&[0.01, 0.011, 0.009, 0.5]);
        assert_eq!(s.outlier_count(10.0), 1);
        assert_eq!(samples(&[0.01; 5]).outlier_count(10.0), 0);
    }
}
