//! Verification suites, report files and the `octospin` command line.

pub mod args;
pub mod config;
pub mod error;
pub mod eval;
pub mod report;
pub mod suites;
pub mod text;

pub use config::{Backend, RunConfig};
pub use error::CliError;
pub use eval::{eval_and_export, frame_table_record, gen_frame, MapArgs, MapName, SubspaceArg};
pub use report::{Report, Suite};
pub use suites::run_verify_suite;
