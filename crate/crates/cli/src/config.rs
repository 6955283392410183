use std::path::PathBuf;

use octospin::Tolerance;
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub backend: Backend,
    /// Only consulted by the float backend.
    pub epsilon: f64,
    pub seed: u64,
    pub trials: usize,
    pub output_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            backend: Backend::Exact,
            epsilon: Tolerance::DEFAULT_EPSILON,
            seed: 42,
            trials: 100,
            output_path: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.trials == 0 {
            return Err(CliError::Config("trials must be at least 1".into()));
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(CliError::Config(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        Ok(())
    }

    pub fn tolerance(&self) -> Tolerance {
        Tolerance::new(self.epsilon)
    }
}
