//! Run settings: defaults, an optional flat `key=value` config file, and
//! command-line flags, merged in that order (flags win).

use residues_core::{CountMode, Ring};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Strict,
    Weak,
}

impl Mode {
    pub fn count_mode(self) -> CountMode {
        match self {
            Mode::Strict => CountMode::Strict,
            Mode::Weak => CountMode::Weak,
        }
    }
}

/// Fully merged settings for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub prime_max: u64,
    pub k: Vec<u64>,
    pub rings: Vec<i64>,
    pub norm_bound: u64,
    pub a_max: u64,
    pub b_max: u64,
    pub n_max: u64,
    pub mode: Mode,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub workers: Option<usize>,
}

impl Default for Settings {
    fn default() -> Settings {
        Settings {
            prime_max: 1000,
            k: vec![2],
            rings: vec![-1, -2, -3, -7, -11],
            norm_bound: 1000,
            a_max: 10,
            b_max: 10,
            n_max: 10,
            mode: Mode::Strict,
            out: None,
            format: Format::Csv,
            workers: None,
        }
    }
}

/// Values read from a config file; every field optional.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FileConfig {
    pub prime_max: Option<u64>,
    pub k: Option<Vec<u64>>,
    pub rings: Option<Vec<i64>>,
    pub norm_bound: Option<u64>,
    pub a_max: Option<u64>,
    pub b_max: Option<u64>,
    pub n_max: Option<u64>,
    pub mode: Option<Mode>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub workers: Option<usize>,
}

fn parse_list<T: std::str::FromStr>(value: &str, key: &str) -> Result<Vec<T>, String> {
    value
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<T>()
                .map_err(|_| format!("config: bad value {part:?} for key {key:?}"))
        })
        .collect()
}

fn parse_scalar<T: std::str::FromStr>(value: &str, key: &str) -> Result<T, String> {
    value
        .trim()
        .parse::<T>()
        .map_err(|_| format!("config: bad value {value:?} for key {key:?}"))
}

/// Parse a flat `key=value` file. Blank lines and `#` comments are fine;
/// unknown keys are errors so typos cannot silently change a run.
pub fn parse_config(text: &str) -> Result<FileConfig, String> {
    let mut cfg = FileConfig::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("config line {}: expected key=value", idx + 1));
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "prime_max" => cfg.prime_max = Some(parse_scalar(value, key)?),
            "k" => cfg.k = Some(parse_list(value, key)?),
            "rings" => cfg.rings = Some(parse_list(value, key)?),
            "norm_bound" => cfg.norm_bound = Some(parse_scalar(value, key)?),
            "a_max" => cfg.a_max = Some(parse_scalar(value, key)?),
            "b_max" => cfg.b_max = Some(parse_scalar(value, key)?),
            "n_max" => cfg.n_max = Some(parse_scalar(value, key)?),
            "mode" => {
                cfg.mode = Some(match value {
                    "strict" => Mode::Strict,
                    "weak" => Mode::Weak,
                    other => return Err(format!("config: mode must be strict or weak, got {other:?}")),
                })
            }
            "out" => cfg.out = Some(PathBuf::from(value)),
            "format" => {
                cfg.format = Some(match value {
                    "csv" => Format::Csv,
                    "json" => Format::Json,
                    other => return Err(format!("config: format must be csv or json, got {other:?}")),
                })
            }
            "workers" => cfg.workers = Some(parse_scalar(value, key)?),
            other => return Err(format!("config: unknown key {other:?}")),
        }
    }
    Ok(cfg)
}

impl Settings {
    /// Validate ranges that the type system cannot: positive bounds, a
    /// positive worker count, and rings drawn from the supported five.
    pub fn validate(&self) -> Result<(), String> {
        if self.prime_max < 3 {
            return Err("prime_max must be at least 3".into());
        }
        if self.k.is_empty() || self.k.contains(&0) {
            return Err("k must be a non-empty list of positive integers".into());
        }
        if self.norm_bound < 2 {
            return Err("norm_bound must be at least 2".into());
        }
        if self.a_max < 1 || self.b_max < 1 || self.n_max < 1 {
            return Err("a_max, b_max, n_max must be positive".into());
        }
        if self.rings.is_empty() {
            return Err("rings must be non-empty".into());
        }
        for &d in &self.rings {
            Ring::new(d).map_err(|e| e.to_string())?;
        }
        if self.workers == Some(0) {
            return Err("workers must be positive".into());
        }
        Ok(())
    }

    pub fn ring_list(&self) -> Vec<Ring> {
        self.rings
            .iter()
            .map(|&d| Ring::new(d).expect("validated"))
            .collect()
    }
}
