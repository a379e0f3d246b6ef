//! Optional TOML configuration. Every value can be overridden by a flag.
//!
//! ```toml
//! max_part_limit = 64
//! threads = 4
//!
//! [verify]
//! p = 2
//! max_part = 6
//! extra = [[7, 6, 4, 3]]
//! budget_secs = 600
//!
//! [spectra]
//! samples = 10000
//! seed = 1
//! mode = "random"
//! ```

use std::path::Path;

use horn_core::spectral::SamplingMode;
use horn_core::Partition;
use serde::Deserialize;

pub const DEFAULT_MAX_PART_LIMIT: u32 = 64;

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    /// Largest part accepted in any partition argument (default 64).
    pub max_part_limit: Option<u32>,
    pub threads: Option<usize>,
    #[serde(default)]
    pub verify: VerifyConfig,
    #[serde(default)]
    pub spectra: SpectraConfig,
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyConfig {
    pub p: Option<usize>,
    pub max_part: Option<u32>,
    #[serde(default)]
    pub extra: Vec<Partition>,
    pub budget_secs: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectraConfig {
    pub samples: Option<usize>,
    pub seed: Option<u64>,
    pub mode: Option<SamplingMode>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn max_part_limit(&self) -> u32 {
        self.max_part_limit.unwrap_or(DEFAULT_MAX_PART_LIMIT)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_example() {
        let cfg: Config = toml::from_str(
            r#"
            max_part_limit = 32
            threads = 2
            [verify]
            p = 3
            max_part = 4
            extra = [[7, 6, 4, 3]]
            budget_secs = 1.5
            [spectra]
            samples = 10
            seed = 9
            mode = "block"
            "#,
        )
        .unwrap();
        assert_eq!(cfg.max_part_limit(), 32);
        assert_eq!(cfg.verify.extra, vec![Partition::new(vec![7, 6, 4, 3]).unwrap()]);
        assert_eq!(cfg.spectra.mode, Some(SamplingMode::Block));
    }

    #[test]
    fn defaults_and_rejections() {
        let cfg: Config = toml::from_str("").unwrap();
        assert_eq!(cfg, Config::default());
        assert_eq!(cfg.max_part_limit(), DEFAULT_MAX_PART_LIMIT);
        assert!(toml::from_str::<Config>("unknown = 1").is_err());
        assert!(toml::from_str::<Config>("[verify]\nextra = [[1, 2]]").is_err());
    }
}
