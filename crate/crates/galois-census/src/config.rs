//! Run configuration shared by the CLI and the census engine. Defaults can
//! be overridden by a `key=value` config file (path from `--config` or the
//! `GALOIS_CENSUS_CONFIG` environment variable) and then by flags.

use crate::error::{Error, Result};

pub const CONFIG_ENV_VAR: &str = "GALOIS_CENSUS_CONFIG";

#[derive(Clone, Debug, PartialEq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Working precision for certified root enclosures, in bits.
    pub precision: u32,
    /// Usable primes sampled per identification.
    pub prime_budget: usize,
    /// Minimum usable primes sampled for Dedekind cross-checks (degree >= 3).
    pub sample_floor: usize,
    /// Parameter resamplings per precision level in the resolvent search.
    pub retry_cap: u32,
    /// Worker threads for census enumeration (results are identical for any
    /// worker count).
    pub workers: usize,
    pub seed: u64,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision: 256,
            prime_budget: 100,
            sample_floor: 8,
            retry_cap: 16,
            workers: 1,
            seed: 1,
            format: OutputFormat::Csv,
        }
    }
}

impl RunConfig {
    pub fn identify_config(&self) -> crate::galois::IdentifyConfig {
        crate::galois::IdentifyConfig {
            min_prime: 11,
            prime_budget: self.prime_budget,
            sample_floor: self.sample_floor,
        }
    }

    pub fn resolvent_config(&self) -> crate::resolvent::ResolventConfig {
        crate::resolvent::ResolventConfig {
            precision: self.precision,
            retry_cap: self.retry_cap,
            seed: self.seed,
        }
    }

    /// Apply `key=value` lines; `#` starts a comment, blank lines ignored.
    pub fn apply_file(&mut self, content: &str) -> Result<()> {
        for (lineno, raw) in content.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("config line {}: expected key=value", lineno + 1))
            })?;
            self.apply_kv(key.trim(), value.trim())
                .map_err(|e| Error::Parse(format!("config line {}: {e}", lineno + 1)))?;
        }
        Ok(())
    }

    pub fn apply_kv(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| Error::Parse(format!("bad {what} value '{value}'"));
        match key {
            "precision" => {
                self.precision = value.parse().map_err(|_| bad("precision"))?;
                if self.precision == 0 {
                    return Err(Error::Parse("precision must be positive".into()));
                }
            }
            "prime_budget" => {
                self.prime_budget = value.parse().map_err(|_| bad("prime_budget"))?;
                if self.prime_budget == 0 {
                    return Err(Error::Parse("prime_budget must be positive".into()));
                }
            }
            "sample_floor" => {
                self.sample_floor = value.parse().map_err(|_| bad("sample_floor"))?;
            }
            "retry_cap" => {
                self.retry_cap = value.parse().map_err(|_| bad("retry_cap"))?;
                if self.retry_cap == 0 {
                    return Err(Error::Parse("retry_cap must be positive".into()));
                }
            }
            "workers" => {
                self.workers = value.parse().map_err(|_| bad("workers"))?;
                if self.workers == 0 {
                    return Err(Error::Parse("workers must be positive".into()));
                }
            }
            "seed" => self.seed = value.parse().map_err(|_| bad("seed"))?,
            "format" => {
                self.format = match value {
                    "csv" => OutputFormat::Csv,
                    "json" => OutputFormat::Json,
                    _ => return Err(bad("format")),
                }
            }
            other => return Err(Error::Parse(format!("unknown config key '{other}'"))),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_overrides() {
        let mut cfg = RunConfig::default();
        cfg.apply_file("precision = 128\n# comment\nformat=json\nseed=42\n")
            .unwrap();
        assert_eq!(cfg.precision, 128);
        assert_eq!(cfg.format, OutputFormat::Json);
        assert_eq!(cfg.seed, 42);
    }

    #[test]
    fn rejects_bad_lines() {
        let mut cfg = RunConfig::default();
        assert!(cfg.apply_file("precision").is_err());
        assert!(cfg.apply_file("precision=zero").is_err());
        assert!(cfg.apply_file("workers=0").is_err());
        assert!(cfg.apply_file("nope=1").is_err());
    }
}
