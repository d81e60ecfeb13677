//! Command-line interface: exact verification of bimonad/Hopf-monad
//! structure over the vector and set backends.
//!
//! Exit codes: 0 all checks pass, 1 at least one check fails, 2 parse or
//! precondition errors.

use clap::{Args, Parser, Subcommand};
use hopf_forge::commands::{
    cmd_antipode, cmd_double, cmd_dualize, cmd_fundamental, cmd_group, cmd_mate, cmd_opposite,
    cmd_verify, CommandOutcome,
};
use hopf_forge::pipeline::Caps;
use hopf_forge::{CheckConfig, EngineError, Report};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hopf-forge",
    version,
    about = "Exact checker for bimonad and Hopf-monad structure on vector and set backends",
    after_help = "Instances are JSON files; a bare name resolves through \
$HOPF_FORGE_CATALOG_DIR and then the built-in catalog."
)]
struct Cli {
    /// Cap on tensor word arity in pipeline evaluation.
    #[arg(long, global = true, default_value_t = 8)]
    arity_cap: usize,
    /// Cap on the total dimension for dense materialization; larger words
    /// are evaluated lazily.
    #[arg(long, global = true, default_value_t = 4096)]
    dense_cap: usize,
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InArg {
    /// Instance file path or catalog name.
    #[arg(long = "in", value_name = "FILE")]
    input: String,
}

#[derive(Args)]
struct InOutArgs {
    /// Instance file path or catalog name.
    #[arg(long = "in", value_name = "FILE")]
    input: String,
    /// Where to write the derived instance file.
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a law suite against an instance and classify it.
    Verify {
        #[command(flatten)]
        io: InArg,
        /// Which laws to check: monad, comonad, bimonad, tau, or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Invert the canonical map and verify the resulting antipode, or
    /// report the kernel certificate showing none exists.
    Antipode {
        #[command(flatten)]
        io: InOutArgs,
    },
    /// Check the coinvariants equivalence on free modules and the regular
    /// module (requires a verified antipode).
    Fundamental {
        #[command(flatten)]
        io: InArg,
        /// Largest free-module carrier multiplier to test.
        #[arg(long = "max-dim", default_value_t = 3)]
        max_dim: usize,
    },
    /// Build and verify the doubled structure on pair words.
    Double {
        #[command(flatten)]
        io: InOutArgs,
    },
    /// Build and verify the opposite structure (requires an involutive
    /// braiding).
    Opposite {
        #[command(flatten)]
        io: InOutArgs,
    },
    /// Build and verify the dual structure constants (vector backend).
    Dualize {
        #[command(flatten)]
        io: InOutArgs,
    },
    /// Transfer the structure across the adjunction: full dual-side
    /// re-verification on the vector backend, pointwise probes on the set
    /// backend.
    Mate {
        #[command(flatten)]
        io: InOutArgs,
    },
    /// Decide whether a set instance is a group via the canonical map.
    Group {
        #[command(flatten)]
        io: InArg,
    },
}

/// Writes to stdout, treating a closed pipe (e.g. `hopf-forge ... | head`)
/// as a normal early exit rather than a panic.
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(2);
    }
}

fn print_report(report: &Report, json: bool) {
    if json {
        write_stdout(&format!("{}\n", report.to_json()));
    } else {
        write_stdout(&report.to_text());
    }
}

fn emit_outcome(
    outcome: CommandOutcome,
    output: Option<&PathBuf>,
    json: bool,
) -> Result<Report, EngineError> {
    if let Some(path) = output {
        match &outcome.derived {
            Some(text) => std::fs::write(path, text).map_err(|e| {
                EngineError::Parse(format!("cannot write {}: {e}", path.display()))
            })?,
            None => {
                return Err(EngineError::Precondition(
                    "this instance produces no derived file (set-backend structures are probed, \
not emitted)"
                        .to_string(),
                ))
            }
        }
        if !json {
            write_stdout(&format!("derived instance written to {}\n", path.display()));
        }
    }
    Ok(outcome.report)
}

fn run(cli: &Cli) -> Result<Report, EngineError> {
    let cfg = CheckConfig::with_caps(Caps { arity: cli.arity_cap, dense: cli.dense_cap });
    match &cli.command {
        Command::Verify { io, suite } => cmd_verify(&io.input, suite, &cfg),
        Command::Antipode { io } => {
            let outcome = cmd_antipode(&io.input, &cfg)?;
            emit_outcome(outcome, io.output.as_ref(), cli.json)
        }
        Command::Fundamental { io, max_dim } => cmd_fundamental(&io.input, *max_dim, &cfg),
        Command::Double { io } => {
            let outcome = cmd_double(&io.input, &cfg)?;
            emit_outcome(outcome, io.output.as_ref(), cli.json)
        }
        Command::Opposite { io } => {
            let outcome = cmd_opposite(&io.input, &cfg)?;
            emit_outcome(outcome, io.output.as_ref(), cli.json)
        }
        Command::Dualize { io } => {
            let outcome = cmd_dualize(&io.input, &cfg)?;
            emit_outcome(outcome, io.output.as_ref(), cli.json)
        }
        Command::Mate { io } => {
            let outcome = cmd_mate(&io.input, &cfg)?;
            emit_outcome(outcome, io.output.as_ref(), cli.json)
        }
        Command::Group { io } => cmd_group(&io.input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print_report(&report, cli.json);
            if report.all_ok() {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
