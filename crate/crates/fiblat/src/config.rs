//! Run configuration shared by every subcommand.

use std::fmt;

/// Working precision, chosen from the requested mantissa bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    F64,
    DoubleDouble,
}

impl Backend {
    pub fn from_bits(bits: u32) -> Result<Self, UsageError> {
        match bits {
            53 => Ok(Backend::F64),
            54..=106 => Ok(Backend::DoubleDouble),
            _ => Err(UsageError(format!("precision must be between 53 and 106 bits, got {bits}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Backend::F64 => "f64",
            Backend::DoubleDouble => "double-double",
        }
    }

    /// Mantissa bits actually carried.
    pub fn bits(self) -> u32 {
        match self {
            Backend::F64 => 53,
            Backend::DoubleDouble => 106,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub precision_bits: u32,
    pub backend: Backend,
    pub threads: usize,
    pub format: Option<Format>,
    pub i_max: Option<u64>,
    pub k_max: Option<u64>,
    pub tolerance: Option<f64>,
}

impl RunConfig {
    pub fn new(
        precision_bits: u32,
        threads: Option<usize>,
        format: Option<Format>,
        i_max: Option<u64>,
        k_max: Option<u64>,
        tolerance: Option<f64>,
    ) -> Result<Self, UsageError> {
        let backend = Backend::from_bits(precision_bits)?;
        let threads = threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        if threads == 0 {
            return Err(UsageError("threads must be at least 1".into()));
        }
        if i_max == Some(0) || k_max == Some(0) {
            return Err(UsageError("truncations must be at least 1".into()));
        }
        if let Some(t) = tolerance {
            if !(t > 0.0 && t.is_finite()) {
                return Err(UsageError(format!("tolerance must be positive, got {t}")));
            }
        }
        Ok(RunConfig { precision_bits, backend, threads, format, i_max, k_max, tolerance })
    }

    pub fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig::new(53, Some(1), None, None, None, None).expect("valid defaults")
    }
}

/// Bad input from the command line; exits with status 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}
