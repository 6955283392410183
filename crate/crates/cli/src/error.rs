use thiserror::Error;

/// Errors that end a command with exit status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid {kind} {input:?}: {reason}")]
    Argument {
        kind: &'static str,
        input: String,
        reason: String,
    },
    #[error("{map} requires --{flag}")]
    Missing {
        map: &'static str,
        flag: &'static str,
    },
    #[error("{map} does not take --{flag}")]
    Unused {
        map: &'static str,
        flag: &'static str,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{map}: {source}")]
    Map {
        map: &'static str,
        source: octospin::Error,
    },
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}
