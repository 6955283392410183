use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use octospin::Tolerance;
use octospin_cli::report::to_json;
use octospin_cli::{
    eval_and_export, frame_table_record, gen_frame, run_verify_suite, Backend, CliError, MapArgs,
    MapName, RunConfig, SubspaceArg, Suite,
};

/// Exact verification of the octonionic Spin(7) maps.
#[derive(Parser)]
#[command(name = "octospin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "exact")]
    backend: Backend,
    /// Relative tolerance for the float backend.
    #[arg(long, default_value_t = Tolerance::DEFAULT_EPSILON)]
    epsilon: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            backend: self.backend,
            epsilon: self.epsilon,
            seed: self.seed,
            trials: self.trials,
            output_path: self.out.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a report.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated suite names; all suites when omitted.
        #[arg(long, value_enum, value_delimiter = ',')]
        suites: Vec<Suite>,
    },
    /// Evaluate one map and write its matrix with membership checks.
    Eval {
        #[arg(value_enum)]
        map: MapName,
        #[command(flatten)]
        common: Common,
        /// `ei,ej` or two comma-separated 8-tuples joined by `;`.
        #[arg(long, allow_hyphen_values = true)]
        plane: Option<String>,
        /// `c,s` or `u=p/q`.
        #[arg(long, allow_hyphen_values = true)]
        angle: Option<String>,
        /// Complement vector for f7; chosen automatically when omitted.
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
        /// Plane in span{e1..e5} for the second factor.
        #[arg(long, allow_hyphen_values = true)]
        plane5: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        angle5: Option<String>,
        /// Unit vector passed through by spin8.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
    },
    /// Print the multiplication table of the frame built from a plane.
    Table {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        plane: String,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
    },
    /// Print a random exact orthonormal pair.
    GenFrame {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "r7")]
        subspace: SubspaceArg,
    },
}

fn emit(text: &str, config: &RunConfig) -> Result<(), CliError> {
    match &config.output_path {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

/// Exit status 0 or 1 on a completed run.
fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Verify { common, suites } => {
            let config = common.config();
            let report = run_verify_suite(&config, &suites)?;
            emit(&report.to_json(), &config)?;
            let failing: Vec<&str> = report.claims().filter(|c| !c.pass).map(|c| c.id).collect();
            let total = report.claims().count();
            if failing.is_empty() {
                eprintln!("verify: {total} claims pass");
                Ok(0)
            } else {
                eprintln!(
                    "verify: {} of {total} claims fail: {}",
                    failing.len(),
                    failing.join(", ")
                );
                Ok(1)
            }
        }
        Command::Eval {
            map,
            common,
            plane,
            angle,
            w,
            plane5,
            angle5,
            s,
        } => {
            let config = common.config();
            let args = MapArgs {
                plane,
                angle,
                w,
                plane5,
                angle5,
                s,
            };
            emit(&to_json(&eval_and_export(map, &args, &config)?), &config)?;
            Ok(0)
        }
        Command::Table { common, plane, w } => {
            let config = common.config();
            emit(
                &to_json(&frame_table_record(&plane, w.as_deref(), &config)?),
                &config,
            )?;
            Ok(0)
        }
        Command::GenFrame { common, subspace } => {
            let config = common.config();
            emit(&to_json(&gen_frame(subspace, &config)?), &config)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("octospin: {e}");
            ExitCode::from(2)
        }
    }
}
