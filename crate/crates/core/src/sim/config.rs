//! Scenario configuration: `key = value` lines with `#` comments.

use std::path::Path;

use crate::registry::{cipher_by_name, cipher_names, SecretKey};

use super::{ChannelModel, SimError};

#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    pub cipher: String,
    pub packets: u64,
    pub payload_min: usize,
    pub payload_max: usize,
    pub loss_p: f64,
    pub corrupt_q: f64,
    pub reorder: usize,
    pub seed: u64,
    /// Session key, provisioned out of band.
    pub key: SecretKey,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            cipher: "ascon128a".into(),
            packets: 1000,
            payload_min: 16,
            payload_max: 64,
            loss_p: 0.0,
            corrupt_q: 0.0,
            reorder: 0,
            seed: 0,
            key: SecretKey::new(
                *b"\x00\x01\x02\x03\x04\x05\x06\x07\x08\x09\x0a\x0b\x0c\x0d\x0e\x0f",
            ),
        }
    }
}

impl ScenarioConfig {
    pub fn channel_model(&self) -> ChannelModel {
        ChannelModel {
            loss_probability: self.loss_p,
            bit_corruption_probability: self.corrupt_q,
            reorder_window: self.reorder,
            // Stream-separated from the payload generator inside the runner.
            seed: self.seed,
        }
    }

    pub fn validate(&self) -> Result<(), SimError> {
        if cipher_by_name(&self.cipher).is_none() {
            return Err(SimError::UnknownCipher {
                name: self.cipher.clone(),
                valid: cipher_names(),
            });
        }
        if self.packets == 0 {
            return Err(SimError::Invalid("packets must be at least 1".into()));
        }
        if self.payload_min > self.payload_max {
            return Err(SimError::Invalid(format!(
                "payload_min {} exceeds payload_max {}",
                self.payload_min, self.payload_max
            )));
        }
        self.channel_model().validate().map_err(SimError::Invalid)?;
        Ok(())
    }

    /// Parse a config file body. Unset keys keep their defaults.
    pub fn parse(text: &str) -> Result<Self, SimError> {
        let mut config = ScenarioConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(SimError::Config {
                    line: line_no,
                    msg: "expected `key = value`".into(),
                });
            };
            let key = key.trim();
            let value = value.trim();
            let bad = |msg: String| SimError::Config { line: line_no, msg };
            match key {
                "cipher" => config.cipher = value.to_string(),
                "packets" => {
                    config.packets = value
                        .parse()
                        .map_err(|_| bad(format!("invalid packet count `{value}`")))?
                }
                "payload_min" => {
                    config.payload_min = value
                        .parse()
                        .map_err(|_| bad(format!("invalid payload_min `{value}`")))?
                }
                "payload_max" => {
                    config.payload_max = value
                        .parse()
                        .map_err(|_| bad(format!("invalid payload_max `{value}`")))?
                }
                "loss_p" => {
                    config.loss_p = value
                        .parse()
                        .map_err(|_| bad(format!("invalid loss_p `{value}`")))?
                }
                "corrupt_q" => {
                    config.corrupt_q = value
                        .parse()
                        .map_err(|_| bad(format!("invalid corrupt_q `{value}`")))?
                }
                "reorder" => {
                    config.reorder = value
                        .parse()
                        .map_err(|_| bad(format!("invalid reorder window `{value}`")))?
                }
                "seed" => {
                    config.seed = value
                        .parse()
                        .map_err(|_| bad(format!("invalid seed `{value}`")))?
                }
                "key" => {
                    let bytes = hex::decode(value).map_err(|_| bad("key must be hex".into()))?;
                    config.key = SecretKey::from_slice(&bytes).map_err(|e| bad(e.to_string()))?;
                }
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        config.validate()?;
        Ok(config)
    }

    pub fn from_file(path: &Path) -> Result<Self, SimError> {
        Self::parse(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_config() {
        let text = "# scenario\n\
                    cipher = ascon128\n\
                    packets = 500\n\
                    payload_min = 8\n\
                    payload_max = 32\n\
                    loss_p = 0.25\n\
                    corrupt_q = 0.001\n\
                    reorder = 4\n\
                    seed = 99\n\
                    key = 00112233445566778899aabbccddeeff\n";
        let config = ScenarioConfig::parse(text).unwrap();
        assert_eq!(config.cipher, "ascon128");
        assert_eq!(config.packets, 500);
        assert_eq!(config.payload_min, 8);
        assert_eq!(config.payload_max, 32);
        assert_eq!(config.loss_p, 0.25);
        assert_eq!(config.corrupt_q, 0.001);
        assert_eq!(config.reorder, 4);
        assert_eq!(config.seed, 99);
    }

    #[test]
    fn defaults_fill_unset_keys() {
        let config = ScenarioConfig::parse("cipher = aes128ctr\npackets = 10\n").unwrap();
        assert_eq!(config.payload_min, 16);
        assert_eq!(config.loss_p, 0.0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = ScenarioConfig::parse("cipher = ascon128\npackets = many\n").unwrap_err();
        match err {
            SimError::Config { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            ScenarioConfig::parse("velocity = 9\n"),
            Err(SimError::Config { line: 1, .. })
        ));
    }

    #[test]
    fn validation_rejects_nonsense() {
        assert!(matches!(
            ScenarioConfig::parse("cipher = rot13\n"),
            Err(SimError::UnknownCipher { .. })
        ));
        assert!(ScenarioConfig::parse("packets = 0\n").is_err());
        assert!(ScenarioConfig::parse("loss_p = 1.25\n").is_err());
        assert!(ScenarioConfig::parse("payload_min = 90\npayload_max = 10\n").is_err());
    }
}
